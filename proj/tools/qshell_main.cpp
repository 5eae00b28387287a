#include "qp/serialize.hpp"
#include "qp/shell/parser.hpp"
#include "qp/shell/session.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace qp;
using namespace qp::shell;

mpq_class parse_rational(const std::string& s) {
    mpq_class r(s);
    r.canonicalize();
    return r;
}

Format resolve_format(const std::string& flag) {
    std::string name = flag;
    if (name.empty()) {
        const char* env = std::getenv("QSHELL_FORMAT");
        name = env ? env : "text";
    }
    auto f = format_from_name(name);
    if (!f) throw CLI::ValidationError("--format", "expected text|json|latex");
    return *f;
}

struct CommonOpts {
    std::string format;
    std::string h_expr;
    std::string q_str;
    int mixed_exponent = 2;
};

Session make_session(const CommonOpts& opts) {
    SessionConfig cfg;
    cfg.mixed_term_exponent = opts.mixed_exponent;
    cfg.output_format = resolve_format(opts.format);
    if (!opts.q_str.empty()) cfg.numeric_q = parse_rational(opts.q_str);
    Session s(cfg);
    if (!opts.h_expr.empty()) s.bind("H", s.eval_element(parse(opts.h_expr)));
    return s;
}

int run_repl(Session& session) {
    std::cout << session.config().header() << "\n";
    std::cout << "q-plane shell; `name = expr` binds, `quit` exits\n";
    std::string line;
    while (true) {
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line)) break;
        if (line.empty()) continue;
        if (line == "quit" || line == "exit") break;
        try {
            std::cout << session.repl_line(line) << "\n";
        } catch (const Error& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

std::vector<mpq_class> parse_samples(const std::string& csv) {
    if (csv.empty()) return curv::default_samples();
    std::vector<mpq_class> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

void write_report(const FlatnessReport& rep, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        os << to_json(rep).dump(2) << "\n";
    else
        os << rep.to_csv();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for the q-deformed quantum plane"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string expr, f_expr, samples_csv, out_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", opts.format, "output format: text|json|latex");
        cmd->add_option("--q", opts.q_str, "evaluate coefficients at this exact rational q");
        cmd->add_option("--mixed-exponent", opts.mixed_exponent,
                        "exponent m in the (q^m - 1) p dp term of the dx x relation");
        cmd->add_option("--H", opts.h_expr, "Hamiltonian expression bound as session variable H");
    };

    CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate an expression");
    cmd_eval->add_option("expr", expr, "expression to evaluate")->required();
    add_common(cmd_eval);

    CLI::App* cmd_repl = app.add_subcommand("repl", "interactive session");
    add_common(cmd_repl);

    CLI::App* cmd_curv = app.add_subcommand("curvature", "curvature parts and q->1 flatness report");
    cmd_curv->add_option("--f", f_expr, "element f")->required();
    cmd_curv->add_option("--samples", samples_csv, "comma-separated rational sample points");
    cmd_curv->add_option("--out", out_path, "write report to .csv or .json file");
    add_common(cmd_curv);

    CLI::App* cmd_cmp = app.add_subcommand("compare314", "engine vs printed closed form");
    cmd_cmp->add_option("--f", f_expr, "element f")->required();
    add_common(cmd_cmp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_repl->parsed()) {
            Session session = make_session(opts);
            return run_repl(session);
        }
        Session session = make_session(opts);
        std::cout << session.config().header() << "\n";
        if (cmd_eval->parsed()) {
            std::cout << session.render(session.eval(qp::shell::parse(expr))) << "\n";
        } else if (cmd_curv->parsed()) {
            if (opts.h_expr.empty())
                throw qp::Error(qp::ErrorKind::ParseError, "curvature requires --H");
            QElement f = session.eval_element(qp::shell::parse(f_expr));
            Hamiltonian H{session.eval_element(qp::shell::parse(opts.h_expr))};
            FlatnessReport rep = curv::flatness_report(f, H, session.config().calculus(),
                                                       parse_samples(samples_csv));
            if (session.config().output_format == Format::Json)
                std::cout << to_json(rep).dump(2) << "\n";
            else
                std::cout << rep.to_table();
            if (!out_path.empty()) write_report(rep, out_path);
        } else if (cmd_cmp->parsed()) {
            QElement f = session.eval_element(qp::shell::parse(f_expr));
            auto rep = calculus::compare_3_14(f, session.config().calculus());
            if (session.config().output_format == Format::Json)
                std::cout << to_json(rep).dump(2) << "\n";
            else
                std::cout << rep.to_table();
        }
    } catch (const qp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == qp::ErrorKind::ParseError ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
