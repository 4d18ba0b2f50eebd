#include "superspherical/cli.hpp"

#include "superspherical/expression.hpp"
#include "superspherical/gl12.hpp"
#include "superspherical/json_io.hpp"
#include "superspherical/sequences.hpp"
#include "superspherical/suites.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace superspherical {

namespace {

constexpr const char *degree_env = "SUPERSPHERICAL_DEGREE";
constexpr unsigned fallback_degree = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

unsigned default_degree()
{
    const char *env = std::getenv(degree_env);
    if (env == nullptr || *env == '\0') {
        return fallback_degree;
    }
    const std::string text(env);
    if (!std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }) || text.size() > 3) {
        throw UsageError(std::string(degree_env) + " must be a small nonnegative integer, got '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(text));
}

std::string join(const std::vector<std::string> &parts, char sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? std::string(1, sep) : std::string()) + parts[i];
    }
    return out;
}

std::pair<UniPoly, UniPoly> alpha_beta(unsigned n, const std::string &method)
{
    if (method == "closed") {
        return {alpha_closed(n), beta_closed(n)};
    }
    if (method == "pbw") {
        return alpha_beta_from_pbw(gl12(), n);
    }
    return alpha_beta_recursive(n);
}

void emit_terms(std::ostream &out, const Enveloping &u, const UElement &x, const std::string &format,
                const std::string &expr, const std::string &key)
{
    if (format == "tsv") {
        out << "monomial\tcoeff\n";
        for (const auto &[m, c] : x.terms()) {
            out << u.format(m) << '\t' << to_string(c) << '\n';
        }
        return;
    }
    Json j{{"schema", schema_version}, {"expr", expr}, {key, u.format(x)}, {"terms", to_json(x)}};
    out << j.dump() << '\n';
}

void emit_report_tsv(std::ostream &out, const CheckReport &r, bool timing)
{
    for (const auto &item : r.items) {
        out << r.suite << '\t' << item.name << '\t' << (item.pass ? "pass" : "FAIL") << '\t' << item.witness << '\n';
    }
    if (timing) {
        out << r.suite << "\tseconds\t" << r.seconds << "\t\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact computations in enveloping algebras of Lie superalgebras", "superspherical"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    bool timing = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    app.add_flag("--timing", timing, "Include wall time in check reports");

    unsigned n = 0;
    std::string method = "recursive";
    auto *alpha = app.add_subcommand("alpha", "Coefficients of alpha_n");
    auto *beta = app.add_subcommand("beta", "Coefficients of beta_{n-1}");
    for (auto *sub : {alpha, beta}) {
        sub->add_option("--n", n, "Index n")->required()->check(CLI::Range(0u, 500u));
        sub->add_option("--method", method, "recursive, closed or pbw")
            ->check(CLI::IsMember({"recursive", "closed", "pbw"}));
    }
    auto *zig = app.add_subcommand("zigzag", "Euler zigzag numbers A_0..A_n");
    auto *bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_n");
    for (auto *sub : {zig, bern}) {
        sub->add_option("--n", n, "Largest index")->required()->check(CLI::Range(0u, 2000u));
    }

    std::string expr;
    auto *nf = app.add_subcommand("nf", "PBW normal form of an expression over z k k1 k2 e' f' p e f");
    auto *quotient = app.add_subcommand("quotient", "Canonical representative modulo I");
    for (auto *sub : {nf, quotient}) {
        sub->add_option("--expr", expr, "Expression")->required();
    }

    std::optional<unsigned> degree;
    auto *radial = app.add_subcommand("radial", "Images of z^a p^b modulo I and the radial checks");
    radial->add_option("--degree", degree, "Degree bound")->check(CLI::Range(0u, 12u));

    std::string suite;
    std::string algebra;
    auto *check = app.add_subcommand("check", "Run a check suite");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    check->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(choices));
    check->add_option("--degree", degree, "Degree bound")->check(CLI::Range(0u, 12u));
    check->add_option("--algebra", algebra, "Extra algebra for the jacobi suite: JSON file or gl(m|n)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*alpha || *beta) {
            const bool want_alpha = static_cast<bool>(*alpha);
            if (method == "pbw" && n > 60) {
                throw UsageError("--method pbw supports n <= 60");
            }
            const auto [a, b] = alpha_beta(n, method);
            const UniPoly &poly = want_alpha ? a : b;
            const std::string key = want_alpha ? "alpha" : "beta";
            if (format == "tsv") {
                out << "n\t" << key << '\n' << n << '\t' << join(poly.coefficient_strings(), ',') << '\n';
            } else {
                out << Json{{"schema", schema_version}, {"n", n}, {key, to_json(poly)}}.dump() << '\n';
            }
            return 0;
        }
        if (*zig || *bern) {
            std::vector<std::string> values;
            if (*zig) {
                for (const auto &v : zigzag_table(n)) {
                    values.push_back(v.get_str());
                }
            } else {
                for (const auto &v : bernoulli_table(n)) {
                    values.push_back(to_string(v));
                }
            }
            const std::string key = *zig ? "zigzag" : "bernoulli";
            if (format == "tsv") {
                out << "n\t" << key << '\n';
                for (std::size_t i = 0; i < values.size(); ++i) {
                    out << i << '\t' << values[i] << '\n';
                }
            } else {
                out << Json{{"schema", schema_version}, {"n", n}, {key, values}}.dump() << '\n';
            }
            return 0;
        }
        if (*nf || *quotient) {
            const Gl12 &g = gl12();
            const Expr parsed = parse(expr);
            UElement value = elaborate(parsed, *g.u);
            if (*quotient) {
                value = quotient_reduce(g, value);
            }
            emit_terms(out, *g.u, value, format, print(parsed), *nf ? "normal_form" : "representative");
            return 0;
        }
        const unsigned d = degree ? *degree : default_degree();
        if (*radial) {
            const Gl12 &g = gl12();
            const auto start = std::chrono::steady_clock::now();
            CheckReport report = radial_restriction_check(g, d);
            report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const UElement z = g.gen(Gl12::z);
            const UElement p = g.gen(Gl12::p);
            if (format == "tsv") {
                out << "a\tb\timage\n";
            }
            Json images = Json::array();
            for (unsigned total = 0; total <= d; ++total) {
                for (unsigned a = 0; a <= total; ++a) {
                    const unsigned b = total - a;
                    const UElement image = quotient_reduce(g, g.u->multiply(g.u->power(z, a), g.u->power(p, b)));
                    if (format == "tsv") {
                        out << a << '\t' << b << '\t' << g.u->format(image) << '\n';
                    } else {
                        images.push_back(Json{{"a", a}, {"b", b}, {"image", g.u->format(image)}, {"terms", to_json(image)}});
                    }
                }
            }
            if (format == "tsv") {
                emit_report_tsv(out, report, timing);
            } else {
                out << Json{{"schema", schema_version}, {"degree", d}, {"images", std::move(images)},
                            {"report", to_json(report, timing)}}
                           .dump(2)
                    << '\n';
            }
            return report.pass() ? 0 : 1;
        }
        if (*check) {
            std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
            std::vector<CheckReport> reports;
            for (const auto &name : names) {
                reports.push_back(run_suite(name, d));
                if (name == "jacobi" && !algebra.empty()) {
                    LieSuperalgebra extra = [&] {
                        if (algebra.rfind("gl(", 0) == 0 || algebra == "gl12-osp12") {
                            return builtin_algebra(algebra);
                        }
                        std::ifstream in(algebra);
                        if (!in) {
                            throw UsageError("cannot open algebra file '" + algebra + "'");
                        }
                        return algebra_from_json(Json::parse(in));
                    }();
                    const JacobiReport r = check_jacobi(extra);
                    std::string witness;
                    if (!r.pass) {
                        const auto &t = r.failures.front();
                        witness = "(" + extra.generator(t[0]).name + "," + extra.generator(t[1]).name + "," +
                                  extra.generator(t[2]).name + ")";
                    }
                    reports.back().add("jacobi " + algebra, r.pass, witness);
                }
            }
            const bool pass = std::all_of(reports.begin(), reports.end(), [](const CheckReport &r) { return r.pass(); });
            if (format == "tsv") {
                out << "suite\tcheck\tresult\twitness\n";
                for (const auto &r : reports) {
                    emit_report_tsv(out, r, timing);
                }
            } else {
                Json list = Json::array();
                for (const auto &r : reports) {
                    list.push_back(to_json(r, timing));
                }
                out << Json{{"schema", schema_version}, {"degree", d}, {"pass", pass}, {"reports", std::move(list)}}
                           .dump(2)
                    << '\n';
            }
            return pass ? 0 : 1;
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace superspherical
