// lensinv: command-line front end for the lens space invariant library.
//
// Exit codes: 0 success, 1 invalid input, 2 verification failure.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lensinv/lensinv.hpp"
#include "lensinv/serialize.hpp"

namespace {

using namespace lensinv;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_mismatch = 2;

// to_complex error is bounded by accumulated rounding over at most phi(N) terms.
constexpr double embedding_tolerance = 1e-12;

std::string fmt_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_complex(Complex z)
{
    return fmt_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt_double(std::abs(z.imag())) + "i";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

BracketConvention parse_convention(const std::string& name)
{
    if (name == "conjugated_proof")
        return BracketConvention::conjugated_proof;
    if (name == "theorem_literal")
        return BracketConvention::theorem_literal;
    if (name == "proof_literal")
        return BracketConvention::proof_literal;
    throw Error(ErrorKind::invalid_argument, "unknown convention " + name);
}

struct Options {
    std::string format = "plain";
    std::int64_t p = 1, q = 0, r = 3;
    std::int64_t a = 0, n = 1, c = 1;
    std::int64_t root_index = 1;
    std::size_t terms = default_series_terms;
    std::string convention = "conjugated_proof";
    bool su2 = false;
    std::int64_t max_p = 1;
    std::vector<std::int64_t> levels;
    double tolerance = 1e-8;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

int cmd_tau_prime(const Options& o)
{
    const LensSpace l = make_lens_space(o.p, o.q);
    const TauPrimeResult res = tau_prime(l, o.r, {parse_convention(o.convention), 0});
    const Complex z = to_complex(res.value);
    if (o.format == "json") {
        Json j = to_json(res);
        j["p"] = l.p;
        j["q"] = l.q;
        j["numeric"] = to_json(z);
        j["tolerance"] = embedding_tolerance;
        print_json(j);
        return exit_ok;
    }
    std::cout << "tau'_" << o.r << "(L(" << l.p << "," << l.q << "))\n"
              << "branch:  " << branch_label(res.branch, res.eta) << "\n"
              << "c:       " << res.c << "\n"
              << "value:   " << res.value.str("z") << "   (z = exp(2 pi i/" << res.value.order() << "))\n"
              << "numeric: " << fmt_complex(z) << "\n";
    return exit_ok;
}

int cmd_xi(const Options& o)
{
    const LensSpace l = make_lens_space(o.p, o.q);
    const Cyclotomic xi = xi_r(l, o.r, {parse_convention(o.convention), 0});
    const Complex z = to_complex(xi);
    if (o.format == "json") {
        print_json({{"p", l.p}, {"q", l.q}, {"r", o.r}, {"value", to_json(xi)}, {"numeric", to_json(z)},
                    {"tolerance", embedding_tolerance}});
        return exit_ok;
    }
    std::cout << "xi_" << o.r << "(L(" << l.p << "," << l.q << "), e_" << o.r << ")\n"
              << "value:   " << xi.str("z") << "   (z = exp(2 pi i/" << xi.order() << "))\n"
              << "numeric: " << fmt_complex(z) << "\n";
    return exit_ok;
}

int cmd_ohtsuki(const Options& o)
{
    if (o.terms < 1)
        throw Error(ErrorKind::invalid_argument, "--terms must be at least 1");
    const LensSpace l = make_lens_space(o.p, o.q);
    const FormalSeries s = ohtsuki_tau(l, o.terms);
    if (o.format == "json") {
        print_json({{"p", l.p}, {"q", l.q}, {"lambda", to_json(s)}});
        return exit_ok;
    }
    std::cout << "tau(L(" << l.p << "," << l.q << ")) = sum lambda_n (t-1)^n\n";
    for (std::size_t i = 0; i < s.truncation_order(); ++i)
        std::cout << "lambda_" << i << " = " << s[i] << "\n";
    return exit_ok;
}

int cmd_dedekind(const Options& o)
{
    const Rational s = dedekind_sum(o.q, o.p);
    if (o.format == "json")
        print_json({{"q", o.q}, {"p", o.p}, {"value", to_json(s)}});
    else
        std::cout << "s(" << o.q << "," << o.p << ") = " << s << "\n";
    return exit_ok;
}

int cmd_jacobi(const Options& o)
{
    const int j = jacobi_symbol(o.a, o.n);
    if (o.format == "json")
        print_json({{"a", o.a}, {"n", o.n}, {"value", j}});
    else
        std::cout << "(" << o.a << "|" << o.n << ") = " << j << "\n";
    return exit_ok;
}

int cmd_gauss(const Options& o)
{
    const Cyclotomic g = gauss_sum(o.c);
    const Complex z = to_complex(g);
    if (o.format == "json") {
        print_json({{"c", o.c}, {"value", to_json(g)}, {"numeric", to_json(z)}, {"tolerance", embedding_tolerance}});
        return exit_ok;
    }
    std::cout << "G(" << o.c << ") = " << g.str("z") << "   (z = exp(2 pi i/" << g.order() << "))\n"
              << "numeric: " << fmt_complex(z) << "\n";
    return exit_ok;
}

int cmd_cf(const Options& o)
{
    const SurgeryPresentation pres = continued_fraction(o.p, floor_mod(o.q, o.p == 1 ? 1 : o.p));
    if (o.format == "json") {
        print_json({{"p", o.p}, {"q", o.q}, {"framings", pres.framings}});
        return exit_ok;
    }
    std::cout << o.p << "/" << o.q << " = [";
    for (std::size_t i = 0; i < pres.framings.size(); ++i)
        std::cout << (i ? ", " : "") << pres.framings[i];
    std::cout << "]\n";
    return exit_ok;
}

int cmd_oracle(const Options& o)
{
    const LensSpace l = make_lens_space(o.p, o.q);
    const SurgeryPresentation pres = continued_fraction(l.p, l.q);
    const Complex z = o.su2 ? rt_invariant(pres, o.r) : so3_invariant(pres, o.r, o.root_index);
    const char* name = o.su2 ? "tau" : "tau'";
    if (o.format == "json") {
        print_json({{"p", l.p}, {"q", l.q}, {"r", o.r}, {"invariant", o.su2 ? "su2" : "so3"},
                    {"root_index", o.root_index}, {"framings", pres.framings}, {"value", to_json(z)}});
        return exit_ok;
    }
    std::cout << name << "_" << o.r << "(L(" << l.p << "," << l.q << ")) from surgery on [";
    for (std::size_t i = 0; i < pres.framings.size(); ++i)
        std::cout << (i ? ", " : "") << pres.framings[i];
    std::cout << "]: " << fmt_complex(z) << "\n";
    return exit_ok;
}

int cmd_verify(const Options& o)
{
    if (o.max_p < 1)
        throw Error(ErrorKind::invalid_argument, "--max-p must be at least 1");
    if (!(o.tolerance > 0))
        throw Error(ErrorKind::invalid_argument, "--tolerance must be positive");
    for (auto r : o.levels) {
        if (r < 3 || r % 2 == 0)
            throw Error(ErrorKind::even_order, "r must be odd and at least 3, got " + std::to_string(r));
    }
    const SweepSummary s = verify_sweep(o.max_p, o.levels, o.tolerance, o.jobs);

    if (o.format == "json") {
        Json reports = Json::array();
        for (const auto& rep : s.reports)
            reports.push_back(to_json(rep));
        Json conv = Json::object();
        for (const auto& [name, tally] : s.convention_tally)
            conv[name] = {{"integral", tally.first}, {"matched", tally.second}};
        print_json({{"oracle_convention",
                     "tau' = F'(L) F'(U+)^-b+ F'(U-)^-b-, odd colors, q = exp(2 pi i/r), chain from p/q"},
                    {"tolerance", o.tolerance},
                    {"instances", s.reports.size()},
                    {"mismatches", s.mismatches},
                    {"match_kind", s.match_kind()},
                    {"worst_error", s.worst_error},
                    {"branches", s.branch_counts},
                    {"case_two_conventions", conv},
                    {"reports", reports},
                    {"passed", s.passed()}});
    } else {
        std::cout << "oracle: tau' = F'(L) F'(U+)^-b+ F'(U-)^-b-, odd colors, q = exp(2 pi i/r)\n"
                  << "instances:   " << s.reports.size() << "\n"
                  << "tolerance:   " << fmt_double(o.tolerance) << "\n"
                  << "match kind:  " << s.match_kind() << "\n"
                  << "mismatches:  " << s.mismatches << "\n"
                  << "worst error: " << fmt_double(s.worst_error) << "\n";
        for (const auto& [label, count] : s.branch_counts)
            std::cout << "  " << label << ": " << count << "\n";
        if (!s.convention_tally.empty()) {
            std::cout << "Case 2 bracket conventions (integral / matched):\n";
            for (const auto& [name, tally] : s.convention_tally)
                std::cout << "  " << name << ": " << tally.first << " / " << tally.second << "\n";
        }
        for (const auto& rep : s.reports) {
            if (rep.match == MatchKind::none)
                std::cout << "MISMATCH L(" << rep.p << "," << rep.q << ") r=" << rep.r << " formula "
                          << fmt_complex(rep.formula_value) << " oracle " << fmt_complex(rep.oracle_value) << "\n";
        }
        std::cout << (s.passed() ? "PASS" : "FAIL") << "\n";
    }
    return s.passed() ? exit_ok : exit_mismatch;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact quantum invariants of lens spaces"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    };
    auto add_lens = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "Lens space order p")->required();
        sub->add_option("--q", o.q, "Lens space parameter q")->required();
    };

    auto* tau = app.add_subcommand("tau-prime", "tau'_r(L(p,q)) by the closed formula");
    add_lens(tau);
    tau->add_option("--r", o.r, "Odd level r > 1")->required();
    tau->add_option("--convention", o.convention, "Case 2 bracket convention")
        ->check(CLI::IsMember({"conjugated_proof", "theorem_literal", "proof_literal"}));
    add_format(tau);

    auto* xi = app.add_subcommand("xi", "xi_r(L(p,q), e_r)");
    add_lens(xi);
    xi->add_option("--r", o.r, "Odd level r > 1")->required();
    xi->add_option("--convention", o.convention, "Case 2 bracket convention")
        ->check(CLI::IsMember({"conjugated_proof", "theorem_literal", "proof_literal"}));
    add_format(xi);

    auto* oht = app.add_subcommand("ohtsuki", "Ohtsuki series coefficients lambda_n");
    add_lens(oht);
    oht->add_option("--terms", o.terms, "Number of coefficients");
    add_format(oht);

    auto* ded = app.add_subcommand("dedekind", "Dedekind sum s(q,p)");
    ded->add_option("--q", o.q)->required();
    ded->add_option("--p", o.p)->required();
    add_format(ded);

    auto* jac = app.add_subcommand("jacobi", "Jacobi symbol (a|n)");
    jac->add_option("--a", o.a)->required();
    jac->add_option("--n", o.n)->required();
    add_format(jac);

    auto* gauss = app.add_subcommand("gauss", "Quadratic Gauss sum over Z/c");
    gauss->add_option("--c", o.c)->required();
    add_format(gauss);

    auto* cf = app.add_subcommand("cf", "Negative continued fraction of p/q");
    add_lens(cf);
    add_format(cf);

    auto* orc = app.add_subcommand("oracle", "Numeric surgery invariant of L(p,q)");
    add_lens(orc);
    orc->add_option("--r", o.r, "Level r >= 3")->required();
    orc->add_flag("--su2", o.su2, "SU(2) invariant tau_r instead of SO(3) tau'_r");
    orc->add_option("--root-index", o.root_index, "Evaluate at q = exp(2 pi i g/r) (SO(3) only)");
    add_format(orc);

    auto* ver = app.add_subcommand("verify", "Compare closed formulas against the surgery oracle");
    ver->add_option("--max-p", o.max_p, "Largest p in the sweep")->required();
    ver->add_option("--r", o.levels, "Comma-separated odd levels")->required()->delimiter(',');
    ver->add_option("--tolerance", o.tolerance, "Absolute tolerance");
    ver->add_option("--jobs", o.jobs, "Worker threads");
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*tau) return cmd_tau_prime(o);
        if (*xi) return cmd_xi(o);
        if (*oht) return cmd_ohtsuki(o);
        if (*ded) return cmd_dedekind(o);
        if (*jac) return cmd_jacobi(o);
        if (*gauss) return cmd_gauss(o);
        if (*cf) return cmd_cf(o);
        if (*orc) return cmd_oracle(o);
        if (*ver) return cmd_verify(o);
    } catch (const lensinv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
