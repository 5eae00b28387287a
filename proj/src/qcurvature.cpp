#include "qp/qcurvature.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qp::curv {

CurvatureResult curvature(const QElement& f, const Hamiltonian& H, const CalculusConfig& cfg) {
    CurvatureResult r;
    r.config = cfg;
    r.commutator_part = calculus::mixed_commutator(f, cfg);
    try {
        r.connection_part = mech::cov_bracket(f, H);
        r.total = r.commutator_part - *r.connection_part;
    } catch (const Error& e) {
        r.connection_error = e.what();
    }
    return r;
}

QElement direct_commutator(const QElement& f, const Hamiltonian& H) {
    return mech::cov_x(mech::cov_p(f, H), H) - mech::cov_p(mech::cov_x(f, H), H);
}

QElement paper_final_formula(const QElement& f, const Hamiltonian& H, const CalculusConfig& cfg) {
    QElement sum_part = calculus::paper_formula_3_14(f);
    QElement gx = mech::cov_x(f, H);
    QElement gp = mech::cov_p(f, H);
    QElement assembled = QElement::x() * gp.invert() + gx.invert() * QElement::p();
    QScalar inv_one_minus_q = (QScalar::one() - QScalar::q()).inverse();
    return sum_part - assembled.invert().scalar_mul(inv_one_minus_q);
}

std::vector<mpq_class> default_samples() {
    return {mpq_class(1, 2), mpq_class(3, 4), mpq_class(9, 10), mpq_class(99, 100),
            mpq_class(999, 1000)};
}

mpq_class coeff_norm_at(const QElement& e, const mpq_class& q0) {
    mpq_class best = 0;
    for (const auto& [m, c] : e.terms()) {
        mpq_class v = abs(c.eval_at(q0));
        if (v > best) best = v;
    }
    return best;
}

namespace {

LimitOutcome symbolic_limit(const QElement& e) {
    LimitOutcome out;
    try {
        mpq_class best = 0;
        for (const auto& [m, c] : e.terms()) {
            mpq_class v = abs(c.limit_at_one());
            if (v > best) best = v;
        }
        out.value = best;
    } catch (const Error&) {
        out.pole = true;
    }
    return out;
}

} // namespace

FlatnessReport flatness_report(const QElement& f, const Hamiltonian& H, const CalculusConfig& cfg,
                               std::vector<mpq_class> samples) {
    for (const auto& s : samples)
        if (s == 1) throw std::invalid_argument("flatness_report: sample point q0 = 1");
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

    FlatnessReport rep;
    rep.curvature = curvature(f, H, cfg);
    rep.commutator_limit = symbolic_limit(rep.curvature.commutator_part);
    if (rep.curvature.connection_part) {
        rep.connection_limit = symbolic_limit(*rep.curvature.connection_part);
        rep.total_limit = symbolic_limit(*rep.curvature.total);
    }

    for (const auto& q0 : samples) {
        FlatnessRow row;
        row.q0 = q0;
        try {
            row.commutator_norm = coeff_norm_at(rep.curvature.commutator_part, q0);
            if (rep.curvature.connection_part) {
                row.connection_norm = coeff_norm_at(*rep.curvature.connection_part, q0);
                row.total_norm = coeff_norm_at(*rep.curvature.total, q0);
            }
        } catch (const Error&) {
            row.skipped = true;
            row.commutator_norm.reset();
            row.connection_norm.reset();
            row.total_norm.reset();
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

} // namespace qp::curv

namespace qp {

namespace {
std::string opt_str(const std::optional<mpq_class>& v) { return v ? v->get_str() : "-"; }
} // namespace

std::string CurvatureResult::to_table() const {
    std::ostringstream os;
    os << "mixed_term_exponent = " << config.mixed_term_exponent << "\n";
    os << "commutator_part = " << commutator_part.to_string() << "\n";
    if (connection_part) {
        os << "connection_part = " << connection_part->to_string() << "\n";
        os << "total           = " << total->to_string() << "\n";
    } else {
        os << "connection_part = undefined: " << connection_error << "\n";
    }
    return os.str();
}

std::string FlatnessReport::to_table() const {
    std::ostringstream os;
    os << curvature.to_table();
    os << "limit at q=1: commutator = " << commutator_limit.to_string();
    if (connection_limit)
        os << ", connection = " << connection_limit->to_string()
           << ", total = " << total_limit->to_string();
    os << "\n";
    os << std::left << std::setw(12) << "q0" << std::setw(20) << "commutator" << std::setw(20)
       << "connection" << "total" << "\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(12) << r.q0.get_str();
        if (r.skipped) {
            os << "skipped (pole at sample)\n";
            continue;
        }
        os << std::setw(20) << opt_str(r.commutator_norm) << std::setw(20)
           << opt_str(r.connection_norm) << opt_str(r.total_norm) << "\n";
    }
    return os.str();
}

std::string FlatnessReport::to_csv() const {
    std::ostringstream os;
    os << "q0,commutator_norm,connection_norm,total_norm\n";
    for (const auto& r : rows) {
        os << r.q0.get_str() << "," << opt_str(r.commutator_norm) << ","
           << opt_str(r.connection_norm) << "," << opt_str(r.total_norm) << "\n";
    }
    return os.str();
}

} // namespace qp
