#include "qp/qcalculus.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

namespace qp::calculus {

namespace {

void accumulate(OpElement& acc, const OpWord& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc[w] = c;
        return;
    }
    QScalar s = it->second + c;
    if (s.is_zero())
        acc.erase(it);
    else
        it->second = s;
}

OpWord word_to_opword(const std::vector<Gen>& word) {
    OpWord w;
    for (Gen g : word) {
        switch (g) {
        case Gen::X: ++w.i; break;
        case Gen::P: ++w.j; break;
        case Gen::Dx: ++w.k; break;
        case Gen::Dp: ++w.l; break;
        }
    }
    return w;
}

/// Index of the first adjacent out-of-order pair, or -1 when sorted.
int first_descent(const std::vector<Gen>& word) {
    for (size_t n = 0; n + 1 < word.size(); ++n)
        if (static_cast<int>(word[n]) > static_cast<int>(word[n + 1]))
            return static_cast<int>(n);
    return -1;
}

std::vector<Gen> with_pair(const std::vector<Gen>& word, int at, Gen a, Gen b) {
    std::vector<Gen> w = word;
    w[at] = a;
    w[at + 1] = b;
    return w;
}

std::vector<Gen> without_pair(const std::vector<Gen>& word, int at) {
    std::vector<Gen> w;
    w.reserve(word.size() - 2);
    w.insert(w.end(), word.begin(), word.begin() + at);
    w.insert(w.end(), word.begin() + at + 2, word.end());
    return w;
}

} // namespace

OpElement rewrite(const std::vector<FreeTerm>& terms, const CalculusConfig& cfg) {
    const QScalar q = QScalar::q();
    const QScalar q2 = QScalar::q_power(2);
    const QScalar qinv = QScalar::q_power(-1);
    const QScalar mixed = QScalar::q_power(cfg.mixed_term_exponent) - QScalar::one();

    OpElement result;
    std::vector<FreeTerm> work = terms;
    while (!work.empty()) {
        FreeTerm t = std::move(work.back());
        work.pop_back();
        if (t.coeff.is_zero()) continue;
        int at = first_descent(t.word);
        if (at < 0) {
            accumulate(result, word_to_opword(t.word), t.coeff);
            continue;
        }
        Gen a = t.word[at], b = t.word[at + 1];
        if (a == Gen::P && b == Gen::X) {
            work.push_back({t.coeff * q, with_pair(t.word, at, Gen::X, Gen::P)});
        } else if (a == Gen::Dx && b == Gen::X) {
            work.push_back({t.coeff, without_pair(t.word, at)});
            work.push_back({t.coeff * q2, with_pair(t.word, at, Gen::X, Gen::Dx)});
            work.push_back({t.coeff * mixed, with_pair(t.word, at, Gen::P, Gen::Dp)});
        } else if (a == Gen::Dx && b == Gen::P) {
            work.push_back({t.coeff * q, with_pair(t.word, at, Gen::P, Gen::Dx)});
        } else if (a == Gen::Dp && b == Gen::X) {
            work.push_back({t.coeff * qinv, with_pair(t.word, at, Gen::X, Gen::Dp)});
        } else if (a == Gen::Dp && b == Gen::P) {
            work.push_back({t.coeff, without_pair(t.word, at)});
            work.push_back({t.coeff * q2, with_pair(t.word, at, Gen::P, Gen::Dp)});
        } else { // Dp Dx
            work.push_back({t.coeff * q, with_pair(t.word, at, Gen::Dx, Gen::Dp)});
        }
    }
    return result;
}

namespace {

std::vector<Gen> opword_letters(const OpWord& w) {
    if (w.i < 0 || w.j < 0)
        throw Error(ErrorKind::UnsupportedNegativePower,
                    "operator word mixes negative x/p powers with derivative generators");
    std::vector<Gen> letters;
    letters.insert(letters.end(), w.i, Gen::X);
    letters.insert(letters.end(), w.j, Gen::P);
    letters.insert(letters.end(), w.k, Gen::Dx);
    letters.insert(letters.end(), w.l, Gen::Dp);
    return letters;
}

} // namespace

OpElement rewrite_to_normal_form(const OpElement& e, const CalculusConfig& cfg) {
    OpElement result;
    std::vector<FreeTerm> work;
    for (const auto& [w, c] : e) {
        if (!w.has_derivatives()) {
            accumulate(result, w, c);
            continue;
        }
        work.push_back({c, opword_letters(w)});
    }
    OpElement rewritten = rewrite(work, cfg);
    for (const auto& [w, c] : rewritten) accumulate(result, w, c);
    return result;
}

OpElement compose(const OpElement& e1, const OpElement& e2, const CalculusConfig& cfg) {
    std::vector<FreeTerm> work;
    for (const auto& [w1, c1] : e1) {
        for (const auto& [w2, c2] : e2) {
            std::vector<Gen> word = opword_letters(w1);
            std::vector<Gen> tail = opword_letters(w2);
            word.insert(word.end(), tail.begin(), tail.end());
            work.push_back({c1 * c2, std::move(word)});
        }
    }
    return rewrite(work, cfg);
}

QElement apply_operator(const OpElement& e, const QElement& f, const CalculusConfig& cfg) {
    QElement result;
    for (const auto& [w, c] : e) {
        if (!w.has_derivatives()) {
            // pure multiplication operator, no rewriting needed
            result = result + (QElement::term(c, w.i, w.j) * f);
            continue;
        }
        if (!f.is_polynomial())
            throw Error(ErrorKind::UnsupportedNegativePower,
                        "derivative operators act only on the polynomial sector");
        std::vector<FreeTerm> work;
        for (const auto& [m, a] : f.terms()) {
            std::vector<Gen> word = opword_letters(w);
            word.insert(word.end(), m.i, Gen::X);
            word.insert(word.end(), m.j, Gen::P);
            work.push_back({c * a, std::move(word)});
        }
        OpElement nf = rewrite(work, cfg);
        for (const auto& [wr, cr] : nf)
            if (!wr.has_derivatives())
                result = result + QElement::term(cr, wr.i, wr.j);
    }
    return result;
}

QElement d_p(const QElement& f, const CalculusConfig&) {
    QElement r;
    for (const auto& [m, a] : f.terms()) {
        QScalar c = a * QScalar::q_power(-m.i) * QScalar::q_int(m.j);
        r = r + QElement::term(c, m.i, m.j - 1);
    }
    return r;
}

QElement d_x(const QElement& f, const CalculusConfig& cfg) {
    // prefactor 1 + (q^m - 1) [j]; equals q^{2j} at the default m = 2
    const QScalar mixed = QScalar::q_power(cfg.mixed_term_exponent) - QScalar::one();
    QElement r;
    for (const auto& [m, a] : f.terms()) {
        QScalar pre = QScalar::one() + mixed * QScalar::q_int(m.j);
        QScalar c = a * pre * QScalar::q_int(m.i);
        r = r + QElement::term(c, m.i - 1, m.j);
    }
    return r;
}

QElement mixed_commutator(const QElement& f, const CalculusConfig& cfg) {
    QScalar one_minus_q = QScalar::one() - QScalar::q();
    return d_x(d_p(f, cfg), cfg).scalar_mul(one_minus_q);
}

QElement paper_formula_3_14(const QElement& f) {
    // 1/((1+q)^2 (1-q)) sum_ij q^{ij+j-1} (1-q^{2j}) (1-q^{2i}) a_ij p^{j-1} x^{i-1}
    const QScalar one = QScalar::one();
    QScalar denom = (one + QScalar::q()) * (one + QScalar::q()) * (one - QScalar::q());
    QElement r;
    for (const auto& [m, a] : f.terms()) {
        QScalar c = QScalar::q_power(m.i * m.j + m.j - 1) *
                    (one - QScalar::q_power(2 * m.j)) * (one - QScalar::q_power(2 * m.i)) * a /
                    denom;
        // p^{j-1} x^{i-1} = q^{(j-1)(i-1)} x^{i-1} p^{j-1}
        c = c * QScalar::q_power((m.j - 1) * (m.i - 1));
        r = r + QElement::term(c, m.i - 1, m.j - 1);
    }
    return r;
}

ComparisonReport compare_3_14(const QElement& f, const CalculusConfig& cfg) {
    ComparisonReport rep;
    rep.config = cfg;
    QElement engine = mixed_commutator(f, cfg);
    QElement paper = paper_formula_3_14(f);

    std::set<Monomial> support;
    for (const auto& [m, c] : engine.terms()) support.insert(m);
    for (const auto& [m, c] : paper.terms()) support.insert(m);

    rep.supports_match = true;
    for (const Monomial& m : support) {
        ComparisonRow row;
        row.monomial = m;
        row.engine = engine.coeff(m);
        row.paper = paper.coeff(m);
        if (row.engine.is_zero() != row.paper.is_zero()) rep.supports_match = false;
        row.ratio = row.paper.is_zero() ? QScalar::zero() : row.engine / row.paper;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string ComparisonReport::to_table() const {
    std::ostringstream os;
    os << "mixed_term_exponent = " << config.mixed_term_exponent << "\n";
    os << "supports_match = " << (supports_match ? "yes" : "no") << "\n";
    size_t we = 8, wp = 8;
    for (const auto& r : rows) {
        we = std::max(we, r.engine.to_string().size() + 2);
        wp = std::max(wp, r.paper.to_string().size() + 2);
    }
    os << std::left << std::setw(12) << "monomial" << std::setw(static_cast<int>(we)) << "engine"
       << std::setw(static_cast<int>(wp)) << "paper" << "ratio" << "\n";
    for (const auto& r : rows) {
        std::string mono = "x^" + std::to_string(r.monomial.i) + " p^" + std::to_string(r.monomial.j);
        os << std::left << std::setw(12) << mono << std::setw(static_cast<int>(we))
           << r.engine.to_string() << std::setw(static_cast<int>(wp)) << r.paper.to_string()
           << r.ratio.to_string() << "\n";
    }
    return os.str();
}

} // namespace qp::calculus
