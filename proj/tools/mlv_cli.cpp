// mlv: command-line front end for the twisted multiple-sum kernel.
//
// Subcommands:
//   product --op stuffle|shuffle|stuffleN|shuffleN  A B
//   map     --which I|Iinv|J|Jinv|reg-star|reg-shuffle  EXPR
//   eval    EXPR
//   verify  --suite algebra|lemmas|theorems|corollaries|all
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 domain error, 4 divergent expression.

#include <complex>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mlv/evaluator.hpp"
#include "mlv/formulas.hpp"
#include "mlv/leveln_algebra.hpp"
#include "mlv/mlv_algebra.hpp"
#include "mlv/textio.hpp"

namespace {

struct CliConfig {
    int level = 0; // 0 = infer / all levels
    long trunc = 20000;
    long zeta_trunc = 1000000;
    double tol = 0.0; // 0 = per-instance default
    std::string format = "text";
    int jobs = 1;
    int kmax = 8;
    std::string suite = "all";
};

void add_common(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--level", cfg.level, "Level N (inferred from the expression when omitted)")
        ->envname("MLV_LEVEL");
    cmd->add_option("--trunc", cfg.trunc, "Direct-summation truncation point")
        ->envname("MLV_TRUNC");
    cmd->add_option("--tol", cfg.tol, "Override the per-instance tolerance")
        ->envname("MLV_TOL");
    cmd->add_option("--format", cfg.format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("MLV_FORMAT");
}

int infer_level(const CliConfig& cfg, const std::string& expr) {
    if (cfg.level > 0) return cfg.level;
    mlv::ExprProbe probe = mlv::probe_expression(expr);
    if (probe.unambiguous) return 1;
    throw mlv::DomainError("cannot infer the level of \"" + expr +
                           "\"; pass --level >= " + std::to_string(probe.min_level));
}

void print_parse_error(const std::string& text, const mlv::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << text << "\n  "
              << std::string(e.position, ' ') << "^\n";
}

mlv::NCPoly parse_or_die(const std::string& text, mlv::Alphabet fam, int level) {
    try {
        return mlv::parse_poly(text, fam, level);
    } catch (const mlv::ParseError& e) {
        print_parse_error(text, e);
        std::exit(2);
    }
}

void emit_poly(const CliConfig& cfg, const mlv::NCPoly& p) {
    if (cfg.format == "json") {
        nlohmann::json j;
        j["level"] = p.level();
        j["family"] = p.family() == mlv::Alphabet::Mlv ? "harmonic" : "levelN";
        j["poly"] = mlv::to_string(p);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << mlv::to_string(p) << "\n";
    }
}

int cmd_product(const CliConfig& cfg, const std::string& op,
                const std::string& lhs, const std::string& rhs) {
    const bool levelN = op == "stuffleN" || op == "shuffleN";
    const mlv::Alphabet fam = levelN ? mlv::Alphabet::LevelN : mlv::Alphabet::Mlv;
    const int N = levelN && cfg.level == 0
                      ? std::max(std::max(mlv::probe_expression(lhs).min_level,
                                          mlv::probe_expression(rhs).min_level), 1)
                      : (cfg.level > 0 ? cfg.level
                                       : std::max(infer_level(cfg, lhs), infer_level(cfg, rhs)));
    mlv::NCPoly a = parse_or_die(lhs, fam, N);
    mlv::NCPoly b = parse_or_die(rhs, fam, N);
    mlv::NCPoly r = mlv::NCPoly::zero(fam, N);
    if (op == "stuffle") r = mlv::stuffle(a, b);
    else if (op == "shuffle") r = mlv::shuffle(a, b);
    else if (op == "stuffleN") r = mlv::stuffle_N(a, b);
    else if (op == "shuffleN") r = mlv::shuffle_N(a, b);
    emit_poly(cfg, r);
    return 0;
}

int cmd_map(const CliConfig& cfg, const std::string& which, const std::string& expr) {
    const bool levelN = which == "J" || which == "Jinv";
    const mlv::Alphabet fam = levelN ? mlv::Alphabet::LevelN : mlv::Alphabet::Mlv;
    const int N = cfg.level > 0 ? cfg.level
                                : (levelN ? std::max(mlv::probe_expression(expr).min_level, 1)
                                          : infer_level(cfg, expr));
    mlv::NCPoly p = parse_or_die(expr, fam, N);
    if (which == "I") { emit_poly(cfg, mlv::map_I(p)); return 0; }
    if (which == "Iinv") { emit_poly(cfg, mlv::map_I_inv(p)); return 0; }
    if (which == "J") { emit_poly(cfg, mlv::map_J(p)); return 0; }
    if (which == "Jinv") { emit_poly(cfg, mlv::map_J_inv(p)); return 0; }
    const mlv::Product side =
        which == "reg-star" ? mlv::Product::Stuffle : mlv::Product::Shuffle;
    mlv::RegularizedPoly r = mlv::regularize(p, side);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["level"] = N;
        nlohmann::json degs = nlohmann::json::array();
        for (const auto& c : r.coeffs) degs.push_back(mlv::to_string(c));
        j["coeffs"] = degs;
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            std::cout << (i ? ", " : "") << "deg" << i << ": "
                      << mlv::to_string(r.coeffs[i]);
        std::cout << "\n";
    }
    return 0;
}

int cmd_eval(const CliConfig& cfg, const std::string& expr) {
    const int N = infer_level(cfg, expr);
    mlv::NCPoly p = parse_or_die(expr, mlv::Alphabet::Mlv, N);
    mlv::EvalConfig ec;
    ec.trunc = cfg.trunc;
    ec.zeta_trunc = cfg.zeta_trunc;
    mlv::ComplexApprox v = mlv::eval_poly(p, ec);
    if (cfg.format == "json") {
        nlohmann::json j;
        j["value"] = {{"re", v.value.real()}, {"im", v.value.imag()}};
        j["err"] = v.err;
        j["trunc"] = cfg.trunc;
        j["level"] = N;
        std::cout << j.dump() << "\n";
    } else {
        std::cout.precision(15);
        std::cout << "re = " << v.value.real() << "\nim = " << v.value.imag()
                  << "\nerr <= " << v.err << "\n";
    }
    return 0;
}

int cmd_verify(const CliConfig& cfg) {
    mlv::SuiteConfig sc;
    sc.level = cfg.level;
    sc.kmax = cfg.kmax;
    sc.jobs = cfg.jobs;
    sc.tol = cfg.tol;
    sc.eval.trunc = cfg.trunc;
    sc.eval.zeta_trunc = cfg.zeta_trunc;
    std::vector<mlv::VerificationReport> reps = mlv::run_suite(cfg.suite, sc);
    int failed = 0, passed = 0, info = 0;
    for (const auto& r : reps) {
        if (cfg.format == "json")
            std::cout << mlv::report_json(r) << "\n";
        else
            std::cout << mlv::report_line(r) << "\n";
        if (r.informational) ++info;
        else if (r.pass) ++passed;
        else ++failed;
    }
    if (cfg.format != "json")
        std::cout << "summary: " << passed << " passed, " << failed << " failed"
                  << (info ? ", " + std::to_string(info) + " informational" : "")
                  << "\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact algebra and numerical verification of twisted multiple sums"};
    app.require_subcommand(1);
    CliConfig cfg;

    std::string op, which, lhs, rhs, expr;

    CLI::App* prod = app.add_subcommand("product", "Multiply two word polynomials");
    prod->add_option("--op", op, "stuffle | shuffle | stuffleN | shuffleN")
        ->required()
        ->check(CLI::IsMember({"stuffle", "shuffle", "stuffleN", "shuffleN"}));
    prod->add_option("lhs", lhs)->required();
    prod->add_option("rhs", rhs)->required();
    add_common(prod, cfg);

    CLI::App* mapc = app.add_subcommand("map", "Apply a linear map or regularization");
    mapc->add_option("--which", which, "I | Iinv | J | Jinv | reg-star | reg-shuffle")
        ->required()
        ->check(CLI::IsMember({"I", "Iinv", "J", "Jinv", "reg-star", "reg-shuffle"}));
    mapc->add_option("expr", expr)->required();
    add_common(mapc, cfg);

    CLI::App* evalc = app.add_subcommand("eval", "Evaluate a word polynomial numerically");
    evalc->add_option("expr", expr)->required();
    add_common(evalc, cfg);

    CLI::App* verc = app.add_subcommand("verify", "Run a verification suite");
    verc->add_option("--suite", cfg.suite, "algebra | lemmas | theorems | corollaries | all")
        ->check(CLI::IsMember({"algebra", "lemmas", "theorems", "corollaries", "all"}))
        ->envname("MLV_SUITE");
    verc->add_option("--kmax", cfg.kmax, "Largest weight in the identity grids")
        ->envname("MLV_KMAX");
    verc->add_option("--jobs", cfg.jobs, "Parallel verification threads")
        ->envname("MLV_JOBS");
    add_common(verc, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (prod->parsed()) return cmd_product(cfg, op, lhs, rhs);
        if (mapc->parsed()) return cmd_map(cfg, which, expr);
        if (evalc->parsed()) return cmd_eval(cfg, expr);
        if (verc->parsed()) return cmd_verify(cfg);
    } catch (const mlv::ParseError& e) {
        std::cerr << "error: " << e.what() << " (position " << e.position << ")\n";
        return 2;
    } catch (const mlv::DivergenceError& e) {
        std::cerr << "error: divergent: " << e.what() << "\n";
        return 4;
    } catch (const mlv::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const mlv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
