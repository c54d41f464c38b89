// Command-line front end: evaluate individual formulas and run the
// registered verification suites with machine-readable reports.
//
// Exit codes: 0 success, 1 runtime failure (a suite failed, a sampler
// exhausted its budget, or an eval input was rejected by a genericity
// margin), 2 usage error (unknown command/suite/formula, malformed input,
// field/suite mismatch).

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sl2k/sl2k.hpp"

namespace {

using sl2k::cplx;
using sl2k::real;

// ---------------------------------------------------------------- parsing

std::optional<double> parse_real_token(const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || errno == ERANGE || !std::isfinite(v))
        return std::nullopt;
    return v;
}

// Complex scalar token: "a", "bj", "a+bj", "a-bj"; exponents allowed in
// both parts ("1e-3+2.5e2j").
std::optional<cplx> parse_complex_token(const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    if (tok.back() != 'j') {
        const auto re = parse_real_token(tok);
        if (!re) return std::nullopt;
        return cplx(*re, 0.0);
    }
    const std::string body = tok.substr(0, tok.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string re_tok, im_tok;
    if (split == std::string::npos) {
        re_tok = "0";
        im_tok = body;
    } else {
        re_tok = body.substr(0, split);
        im_tok = body.substr(split);
    }
    if (im_tok.empty() || im_tok == "+") im_tok = "1";
    if (im_tok == "-") im_tok = "-1";
    const auto re = parse_real_token(re_tok);
    const auto im = parse_real_token(im_tok);
    if (!re || !im) return std::nullopt;
    return cplx(*re, *im);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::optional<double> parse_scalar(const std::string& tok, real) { return parse_real_token(tok); }
std::optional<cplx> parse_scalar(const std::string& tok, cplx) {
    return parse_complex_token(tok);
}

template <sl2k::Field K>
std::optional<sl2k::Vec2<K>> parse_vec2(const std::string& s) {
    const auto parts = split_commas(s);
    if (parts.size() != 2) return std::nullopt;
    const auto x = parse_scalar(parts[0], K{});
    const auto y = parse_scalar(parts[1], K{});
    if (!x || !y) return std::nullopt;
    return sl2k::Vec2<K>(*x, *y);
}

template <sl2k::Field K>
std::optional<sl2k::Mat2<K>> parse_mat2(const std::string& s) {
    const auto parts = split_commas(s);
    if (parts.size() != 4) return std::nullopt;
    std::array<K, 4> e;
    for (int i = 0; i < 4; ++i) {
        const auto v = parse_scalar(parts[i], K{});
        if (!v) return std::nullopt;
        e[i] = *v;
    }
    return sl2k::Mat2<K>(e[0], e[1], e[2], e[3]);
}

std::optional<sl2k::ProjPoint> parse_point(const std::string& tok) {
    if (tok == "inf") return sl2k::ProjPoint::infinity();
    const auto v = parse_real_token(tok);
    if (!v) return std::nullopt;
    return sl2k::ProjPoint::chart(*v);
}

std::optional<sl2k::PairGA> parse_pair(const std::string& s, double margin) {
    const auto parts = split_commas(s);
    if (parts.size() != 2) return std::nullopt;
    const auto p = parse_point(parts[0]);
    const auto q = parse_point(parts[1]);
    if (!p || !q) return std::nullopt;
    return sl2k::PairGA(*p, *q, margin);
}

// --------------------------------------------------------------- printing

std::string value_token(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string value_token(const cplx& z) {
    return value_token(z.real()) + (z.imag() < 0 ? "" : "+") + value_token(z.imag()) + "j";
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 2;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::string suite = "all";
    std::string field = "real";
    long trials = 10000;
    std::uint64_t seed = 42;
    std::optional<double> tol;
    double margin = 1e-4;
    std::string mutation = "none";
    std::string format = "text";
    std::string out_path;
};

int run_verify(const VerifyArgs& a) {
    std::vector<std::string> names;
    if (a.suite == "all") {
        for (const sl2k::SuiteDef& d : sl2k::suite_registry())
            if (!(a.field == "complex" && d.real_only)) names.push_back(d.name);
    } else {
        names.push_back(a.suite);
    }

    sl2k::SamplerConfig cfg;
    cfg.seed = a.seed;
    cfg.trials = a.trials;
    cfg.margin = a.margin;
    cfg.tol_override = a.tol;
    if (a.mutation == "bias")
        cfg.mutation = sl2k::Mutation::bias;
    else if (a.mutation == "flip_dright_sign")
        cfg.mutation = sl2k::Mutation::flip_dright_sign;
    else if (a.mutation == "beta_a_half")
        cfg.mutation = sl2k::Mutation::beta_a_half;

    std::vector<sl2k::VerificationReport> reports;
    reports.reserve(names.size());
    for (const std::string& name : names) reports.push_back(sl2k::run_suite(name, a.field, cfg));

    std::string text;
    if (a.format == "json")
        text = sl2k::to_json(reports);
    else if (a.format == "csv")
        text = sl2k::to_csv(reports);
    else
        text = sl2k::to_text(reports);

    if (a.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.out_path);
        if (!out) {
            std::cerr << "error: cannot open output file '" << a.out_path << "'\n";
            return 1;
        }
        out << text;
    }

    for (const sl2k::VerificationReport& r : reports)
        if (!r.passed()) return 1;
    return 0;
}

// -------------------------------------------------------------------- eval

struct EvalArgs {
    std::string formula;
    std::string field = "real";
    std::vector<double> alpha;
    std::string g, v0, v1, v2, x, y, z;
    std::vector<std::string> points;
    double margin = 1e-6;
    std::string format = "text";
};

int print_value(const EvalArgs& a, const std::string& token) {
    if (a.format == "json")
        std::cout << "{\"formula\": \"" << a.formula << "\", \"value\": \"" << token << "\"}\n";
    else if (a.format == "csv")
        std::cout << "formula,value\n" << a.formula << "," << token << "\n";
    else
        std::cout << token << "\n";
    return 0;
}

template <sl2k::Field K>
int eval_field_generic(const EvalArgs& a) {
    const sl2k::GenericityConfig gc{a.margin, a.margin, sl2k::tol::log_guard};
    sl2k::NFunctional phi{1.0, 0.0};
    if (!a.alpha.empty()) phi = {a.alpha[0], a.alpha.size() > 1 ? a.alpha[1] : 0.0};

    if (a.formula == "project_N") {
        if (a.g.empty()) return usage_error("project_N requires --g a11,a12,a21,a22");
        const auto m = parse_mat2<K>(a.g);
        if (!m) return usage_error("cannot parse --g as a 2x2 matrix over " +
                                   std::string(sl2k::field_name<K>()));
        return print_value(a, value_token(sl2k::project_N(*m)));
    }
    if (a.formula == "beta_N") {
        if (a.v0.empty() || a.v1.empty()) return usage_error("beta_N requires --v0 and --v1");
        const auto u = parse_vec2<K>(a.v0);
        const auto v = parse_vec2<K>(a.v1);
        if (!u || !v) return usage_error("cannot parse --v0/--v1 as vectors");
        return print_value(a, value_token(sl2k::beta_N_closed(phi, *u, *v, gc)));
    }
    if (a.formula == "omega_N") {
        if (a.v0.empty() || a.v1.empty() || a.v2.empty())
            return usage_error("omega_N requires --v0, --v1 and --v2");
        const auto u = parse_vec2<K>(a.v0);
        const auto v = parse_vec2<K>(a.v1);
        const auto w = parse_vec2<K>(a.v2);
        if (!u || !v || !w) return usage_error("cannot parse --v0/--v1/--v2 as vectors");
        return print_value(a, value_token(sl2k::omega_N(phi, *u, *v, *w, gc)));
    }
    return usage_error("formula '" + a.formula + "' is not defined over the complex field");
}

int run_eval(const EvalArgs& a) {
    if (a.field == "complex") return eval_field_generic<cplx>(a);

    const sl2k::GenericityConfig gc{a.margin, a.margin, sl2k::tol::log_guard};
    const sl2k::AFunctional psi{a.alpha.empty() ? 1.0 : a.alpha[0]};

    if (a.formula == "project_N" || a.formula == "beta_N" || a.formula == "omega_N")
        return eval_field_generic<real>(a);

    if (a.formula == "project_A") {
        if (a.g.empty()) return usage_error("project_A requires --g a11,a12,a21,a22");
        const auto m = parse_mat2<real>(a.g);
        if (!m) return usage_error("cannot parse --g as a real 2x2 matrix");
        return print_value(a, value_token(sl2k::project_A(*m)));
    }
    if (a.formula == "cross_ratio") {
        if (a.points.size() != 4)
            return usage_error("cross_ratio requires --points P0 P1 P2 P3");
        std::array<sl2k::ProjPoint, 4> p = {sl2k::ProjPoint::infinity(),
                                            sl2k::ProjPoint::infinity(),
                                            sl2k::ProjPoint::infinity(),
                                            sl2k::ProjPoint::infinity()};
        for (int i = 0; i < 4; ++i) {
            const auto q = parse_point(a.points[i]);
            if (!q) return usage_error("cannot parse point token '" + a.points[i] + "'");
            p[i] = *q;
        }
        return print_value(a, value_token(sl2k::cross_ratio(p[0], p[1], p[2], p[3])));
    }
    if (a.formula == "beta_A") {
        if (a.x.empty() || a.y.empty()) return usage_error("beta_A requires --x and --y");
        const auto px = parse_pair(a.x, a.margin);
        const auto py = parse_pair(a.y, a.margin);
        if (!px || !py) return usage_error("cannot parse --x/--y as point pairs");
        return print_value(a, value_token(sl2k::beta_A_closed(psi, *px, *py, a.margin)));
    }
    if (a.formula == "omega_A") {
        if (a.x.empty() || a.y.empty() || a.z.empty())
            return usage_error("omega_A requires --x, --y and --z");
        const auto px = parse_pair(a.x, a.margin);
        const auto py = parse_pair(a.y, a.margin);
        const auto pz = parse_pair(a.z, a.margin);
        if (!px || !py || !pz) return usage_error("cannot parse --x/--y/--z as point pairs");
        return print_value(a, value_token(sl2k::omega_A(psi, *px, *py, *pz, gc)));
    }
    return usage_error("unknown formula '" + a.formula + "'");
}

// ------------------------------------------------------------- list-suites

int run_list() {
    for (const sl2k::SuiteDef& d : sl2k::suite_registry()) {
        std::printf("%-26s %-13s tol=%-7g %-9s %s\n", d.name,
                    d.real_only ? "real" : "real,complex", d.tol, d.residual, d.checks);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL(2) Iwasawa projections, boundary cocycles, and their verification suites"};
    app.require_subcommand(1);

    VerifyArgs va;
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", va.suite, "suite name or 'all'")->capture_default_str();
    verify->add_option("--field", va.field, "scalar field")
        ->check(CLI::IsMember({"real", "complex"}))
        ->capture_default_str();
    verify->add_option("--trials", va.trials, "trials per suite")
        ->envname("COCYCLE_TRIALS")
        ->capture_default_str();
    verify->add_option("--seed", va.seed, "base PRNG seed")
        ->envname("COCYCLE_SEED")
        ->capture_default_str();
    verify->add_option("--tol", va.tol, "override the suite tolerance");
    verify->add_option("--margin", va.margin, "genericity margin for sampled configurations")
        ->capture_default_str();
    verify->add_option("--mutation", va.mutation,
                       "inject a deliberate defect to demonstrate suite sensitivity")
        ->check(CLI::IsMember({"none", "bias", "flip_dright_sign", "beta_a_half"}))
        ->capture_default_str();
    verify->add_option("--format", va.format, "report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    verify->add_option("--out", va.out_path, "write the report to a file instead of stdout");

    EvalArgs ea;
    CLI::App* eval = app.add_subcommand("eval", "evaluate one formula on explicit inputs");
    eval->add_option("formula", ea.formula, "one of: project_N, project_A, cross_ratio, "
                                           "beta_N, beta_A, omega_N, omega_A")
        ->required()
        ->check(CLI::IsMember({"project_N", "project_A", "cross_ratio", "beta_N", "beta_A",
                               "omega_N", "omega_A"}));
    eval->add_option("--field", ea.field, "scalar field")
        ->check(CLI::IsMember({"real", "complex"}))
        ->capture_default_str();
    eval->add_option("--alpha", ea.alpha,
                     "functional coefficients (one value, or two over the complex field)")
        ->expected(1, 2);
    eval->add_option("--g", ea.g, "2x2 matrix, row-major comma-separated entries");
    eval->add_option("--v0", ea.v0, "vector, comma-separated components");
    eval->add_option("--v1", ea.v1, "vector, comma-separated components");
    eval->add_option("--v2", ea.v2, "vector, comma-separated components");
    eval->add_option("--x", ea.x, "boundary pair 'p,q' ('inf' allowed)");
    eval->add_option("--y", ea.y, "boundary pair 'p,q' ('inf' allowed)");
    eval->add_option("--z", ea.z, "boundary pair 'p,q' ('inf' allowed)");
    eval->add_option("--points", ea.points, "four boundary points ('inf' allowed)")
        ->expected(4);
    eval->add_option("--margin", ea.margin, "genericity margin for the inputs")
        ->capture_default_str();
    eval->add_option("--format", ea.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    CLI::App* list = app.add_subcommand("list-suites", "list the registered suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return run_verify(va);
        if (eval->parsed()) return run_eval(ea);
        if (list->parsed()) return run_list();
    } catch (const sl2k::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case sl2k::ErrorKind::unknown_suite:
            case sl2k::ErrorKind::field_mismatch:
                return 2;
            default:
                return 1;  // genericity rejection or runtime defect
        }
    }
    return 2;
}
