#include "doctest.h"

#include "superspherical/cli.hpp"
#include "superspherical/expression.hpp"
#include "superspherical/gl12.hpp"
#include "superspherical/json_io.hpp"

#include <cstdlib>
#include <sstream>

using namespace superspherical;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("parser precedence")
{
    const Expr e = parse("p*e' + 2*f");
    REQUIRE(e.kind == Expr::Kind::add);
    CHECK(e.args.size() == 2);
    CHECK(e.args[0].kind == Expr::Kind::mul);
    CHECK(e.args[0].args[1].name == "e'");

    const Expr g = parse("p^3*e*f - (1/2)*z");
    CHECK(g.kind == Expr::Kind::sub);

    // ^ binds tighter than unary minus
    const Expr n = parse("-p^2");
    REQUIRE(n.kind == Expr::Kind::neg);
    CHECK(n.args[0].kind == Expr::Kind::pow);

    // unary minus binds tighter than *
    const Expr m = parse("-p*e");
    REQUIRE(m.kind == Expr::Kind::mul);
    CHECK(m.args[0].kind == Expr::Kind::neg);

    CHECK(parse("3/4").kind == Expr::Kind::scalar);
    CHECK(parse("3/4").value == Scalar(3, 4));
}

TEST_CASE("parser errors carry positions")
{
    try {
        parse("p**e");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.position() == 2);
    }
    try {
        parse("p + q");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.position() == 4);
        CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("(p + e"), ParseError);
    CHECK_THROWS_AS(parse("p^-1"), ParseError);
    CHECK_THROWS_AS(parse("p^e"), ParseError);
    CHECK_THROWS_AS(parse("1/0"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("p $ e"), ParseError);
}

TEST_CASE("print and parse round trip")
{
    for (const char *src : {"p*e' + 2*f", "p^3*e*f - (1/2)*z", "-(p + e)^2", "-p^2", "(-p)^2", "k1*k2 - k2*k1",
                            "(1/3)^2*f'", "-(-e)", "z - (p - e)", "(p*e)*f", "p*(e*f)", "2 + -3"}) {
        CAPTURE(src);
        const Expr once = parse(src);
        const std::string text = print(once);
        CHECK(parse(text) == once);
        CHECK(print(parse(text)) == text);
    }
}

TEST_CASE("elaboration into U(g)")
{
    const Gl12 &g = gl12();
    const auto &u = *g.u;
    CHECK(elaborate(parse("e*p"), u) == u.multiply(g.gen(Gl12::e), g.gen(Gl12::p)));
    CHECK(elaborate(parse("e^2"), u) == -g.gen(Gl12::k2));
    CHECK_THROWS_AS(parse("z/2"), ParseError);
    CHECK(elaborate(parse("(1/2)*z - (1/2)*z"), u).is_zero());
    CHECK(elaborate(parse("p^0"), u) == u.one());
}

TEST_CASE("JSON round trips")
{
    const Gl12 &g = gl12();
    const UElement x = elaborate(parse("p^2*e*f - (3/7)*k + z"), *g.u);
    CHECK(uelement_from_json(to_json(x), Gl12::dim) == x);
    CHECK_THROWS_AS(uelement_from_json(Json::object(), Gl12::dim), std::invalid_argument);

    for (const LieSuperalgebra &a : {*g.algebra, gl_superalgebra(2, 1)}) {
        const LieSuperalgebra back = algebra_from_json(algebra_to_json(a));
        REQUIRE(back.dim() == a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            CHECK(back.generator(i).name == a.generator(i).name);
            CHECK(back.parity(i) == a.parity(i));
            for (std::size_t j = 0; j < a.dim(); ++j) {
                CHECK(back.bracket_basis(i, j) == a.bracket_basis(i, j));
            }
        }
    }
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"generators":[{"name":"x","parity":"sideways"}]})")),
                    std::invalid_argument);
    CHECK(builtin_algebra("gl(2|2)").dim() == 16);
    CHECK_THROWS_AS(builtin_algebra("gl(9|0)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_algebra("sl2"), std::invalid_argument);
}

TEST_CASE("alpha and beta commands")
{
    const Run a = run({"alpha", "--n", "3"});
    CHECK(a.code == 0);
    const Json j = Json::parse(a.out);
    CHECK(j["schema"] == "1");
    CHECK(j["n"] == 3);
    CHECK(j["alpha"] == Json::array({"0", "-3", "0", "1"}));
    for (const char *method : {"recursive", "closed", "pbw"}) {
        const Run b = run({"beta", "--n", "3", "--method", method});
        CHECK(Json::parse(b.out)["beta"] == Json::array({"-2", "0", "3"}));
    }
    const Run t = run({"--format", "tsv", "alpha", "--n", "4"});
    CHECK(t.out == "n\talpha\n4\t5,0,-6,0,1\n");
    CHECK(run({"alpha", "--n", "4", "--format", "tsv"}).out == t.out);
}

TEST_CASE("sequence commands")
{
    CHECK(Json::parse(run({"zigzag", "--n", "6"}).out)["zigzag"] ==
          Json::array({"1", "1", "1", "2", "5", "16", "61"}));
    CHECK(Json::parse(run({"bernoulli", "--n", "4"}).out)["bernoulli"] ==
          Json::array({"1", "-1/2", "1/6", "0", "-1/30"}));
}

TEST_CASE("nf and quotient commands")
{
    const Run nf = run({"nf", "--expr", "e*p"});
    CHECK(nf.code == 0);
    CHECK(Json::parse(nf.out)["normal_form"] == "-e' + p*e");
    const Run q = run({"quotient", "--expr", "p^3 + z"});
    CHECK(Json::parse(q.out)["representative"] == "z + 2*p*e*f");
    const Run tsv = run({"nf", "--expr", "f*e", "--format", "tsv"});
    CHECK(tsv.out == "monomial\tcoeff\nk\t1\ne*f\t-1\n");
    const Run bad = run({"nf", "--expr", "p**e"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position 2") != std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"alpha"}).code == 2);
    CHECK(run({"alpha", "--n", "x"}).code == 2);
    CHECK(run({"alpha", "--n", "3", "--method", "magic"}).code == 2);
    CHECK(run({"check", "--suite", "nope"}).code == 2);
    CHECK(run({"--format", "xml", "alpha", "--n", "2"}).code == 2);
    CHECK(run({"check", "--suite", "jacobi", "--algebra", "/nonexistent.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check command and degree precedence")
{
    ::setenv("SUPERSPHERICAL_DEGREE", "2", 1);
    const Run env = run({"check", "--suite", "ideal"});
    CHECK(env.code == 0);
    CHECK(Json::parse(env.out)["degree"] == 2);
    const Run flag = run({"check", "--suite", "ideal", "--degree", "3"});
    CHECK(Json::parse(flag.out)["degree"] == 3);
    ::setenv("SUPERSPHERICAL_DEGREE", "lots", 1);
    CHECK(run({"check", "--suite", "ideal"}).code == 2);
    ::unsetenv("SUPERSPHERICAL_DEGREE");

    const Run j = run({"check", "--suite", "jacobi", "--algebra", "gl(2|1)"});
    CHECK(j.code == 0);
    CHECK(j.out.find("jacobi gl(2|1)") != std::string::npos);

    const Run radial = run({"radial", "--degree", "3", "--format", "tsv"});
    CHECK(radial.code == 0);
    CHECK(radial.out.find("0\t2\te*f\n") != std::string::npos);
    CHECK(radial.out.find("1\t1\t0\n") != std::string::npos);
}

TEST_CASE("output is deterministic")
{
    const std::vector<std::string> args{"check", "--suite", "symmetrization", "--degree", "2"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("seconds") == std::string::npos);
    CHECK(run({"check", "--suite", "alpha", "--timing"}).out.find("seconds") != std::string::npos);
}
