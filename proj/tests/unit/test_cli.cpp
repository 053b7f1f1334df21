#include "bargheat/cli.hpp"
#include "bargheat/errors.hpp"
#include "testing.hpp"

#include <json.hpp>

#include <sstream>

using namespace bargheat;
using namespace bargheat::cli;

namespace {

const cplx I{0.0, 1.0};

struct Outcome {
    int status;
    std::string out, err;
};

Outcome run_with(const std::string& config_text) {
    RunConfig c;
    apply_config_text(config_text, c);
    std::ostringstream out, err;
    const int status = run(c, out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<std::string> fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) out.push_back(f);
    return out;
}

} // namespace

TEST_CASE("init grammar") {
    CHECK(parse_init("1") == PolyGauss::constant(Side::Real, 1.0));
    CHECK(parse_init("1", Side::Complex) == PolyGauss::constant(Side::Complex, 1.0));
    CHECK(parse_init("x^2") == PolyGauss::monomial(Side::Real, 2));
    CHECK(parse_init("z^3").side() == Side::Complex);
    CHECK(parse_init("(1+2i) z - 3") == PolyGauss(Side::Complex, {-3.0, {1.0, 2.0}}));
    CHECK(parse_init("2x - x^2/4") == PolyGauss(Side::Real, {0.0, 2.0, -0.25}));
    CHECK(parse_init("(x+1)^2") == PolyGauss(Side::Real, {1.0, 2.0, 1.0}));
    CHECK(parse_init("exp(-x^2)") == PolyGauss::gaussian(Side::Real, 1.0, -1.0));
    CHECK(parse_init("x*exp(-0.5*x^2 + 2i*x)") == PolyGauss(Side::Real, {0.0, 1.0}, -0.5, 2.0 * I));
    CHECK(distance(parse_init("3 exp(1 - x^2)"), PolyGauss::gaussian(Side::Real, 3.0 * std::exp(1.0), -1.0)) <= 1e-15);
    CHECK(parse_init("1e-3 x") == PolyGauss(Side::Real, {0.0, 1e-3}));
    CHECK(parse_init("2.5i") == PolyGauss::constant(Side::Real, 2.5 * I));
    CHECK(parse_init("i z") == PolyGauss(Side::Complex, {0.0, I}));
    CHECK(parse_init("x - x").is_zero());
    CHECK(parse_init("exp(-x^2) - exp(-x^2)").is_zero());
}

TEST_CASE("init grammar accepts records") {
    const PolyGauss g(Side::Complex, {1.0, {0.1, -0.2}}, 0.25, -0.5);
    CHECK(parse_init(to_record(g)) == g);
}

TEST_CASE("init grammar rejects everything else") {
    for (const char* bad : {"", "x + z", "sin(x)", "1/x", "x^", "x^-1", "exp(x^3)", "exp(exp(x))", "2 +", "(x",
                            "x + exp(-x^2)", "y", "1..2", "x^100", "1/0"}) {
        INFO("'" << bad << "'");
        CHECK_THROWS_AS(parse_init(bad), ParseError);
    }
}

TEST_CASE("numbers") {
    CHECK(parse_complex("1-2i") == cplx(1.0, -2.0));
    CHECK(parse_complex(" 0.5 ") == cplx(0.5));
    CHECK(parse_complex("-i") == -I);
    CHECK_THROWS_AS(parse_complex("z"), ParseError);
    CHECK(parse_double("0.10000000000000001") == 0.1);
    CHECK(parse_double("-2.5e-3") == -2.5e-3);
    CHECK_THROWS_AS(parse_double("1.5x"), ParseError);
    CHECK_THROWS_AS(parse_double(""), ParseError);
}

TEST_CASE("config files") {
    RunConfig c;
    apply_config_text("# comment\nsubcommand = solve\nop = euler-real  # trailing\n\na = 0.5\nt = 0, 0.25\n"
                      "x = 1,2\nquad-order = 32\ntolerance = 1e-10\nformat = json\nalt-constants = true\n",
                      c);
    CHECK(c.subcommand == "solve");
    CHECK(c.op == "euler-real");
    CHECK(c.a == 0.5);
    CHECK(c.times == std::vector<double>{0.0, 0.25});
    CHECK(c.xs == std::vector<std::string>{"1", "2"});
    CHECK(c.order == 32);
    CHECK(c.tolerance == 1e-10);
    CHECK(c.format == Format::Json);
    CHECK(c.alt_constants);
    CHECK_THROWS_AS(apply_config_text("colour = red\n", c), ParseError);
    CHECK_THROWS_AS(apply_config_text("op\n", c), ParseError);
    CHECK_THROWS_AS(apply_config_text("a = one\n", c), ParseError);
    CHECK_THROWS_AS(apply_config_text("format = xml\n", c), ParseError);
    CHECK_THROWS_AS(apply_config_text("quad-order = 2.5\n", c), ParseError);
    CHECK_THROWS_AS(apply_config_text("t = 1,,2\n", c), ParseError);
}

TEST_CASE("solve examples") {
    auto r = run_with("subcommand = solve\nop = dirac-real\na = 1\nt = 1\nx = 0\ninit = 1\n");
    CHECK(r.status == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "t,x,value_re,value_im,check_re,check_im,defect,ok");
    CHECK(parse_double(fields(ls[1])[2]) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));

    r = run_with("subcommand = solve\nop = euler-real\na = 1\nt = 0\nx = 0.7\ninit = x^2\n");
    CHECK(r.status == 0);
    ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(parse_double(fields(ls[1])[2]) == doctest::Approx(0.49).epsilon(1e-15));
}

TEST_CASE("solve grids and the complex side") {
    const auto r = run_with("subcommand = solve\nop = harmonic-complex\nt = 0.1, 0.5\nz = 1+0.5i, -0.3\ninit = z^2 + 1\n");
    CHECK(r.status == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 5);
    CHECK(ls[0] == "t,z_re,z_im,value_re,value_im,check_re,check_im,defect,ok");
    CHECK(fields(ls[1])[0] == "0.10000000000000001");
    CHECK(fields(ls[3])[0] == "0.5");
    for (std::size_t k = 1; k < ls.size(); ++k) CHECK(fields(ls[k]).back() == "true");
}

TEST_CASE("output is deterministic") {
    const std::string cfg = "subcommand = solve\nop = harmonic-real\na = 2\nt = 0.3\nx = -1, 0, 1\ninit = x exp(-x^2)\n";
    CHECK(run_with(cfg).out == run_with(cfg).out);
    CHECK(run_with(cfg).out.find('\r') == std::string::npos);
}

TEST_CASE("json output") {
    const auto r = run_with("subcommand = solve\nop = euler-complex\nt = 1\nz = 1\ninit = z\nformat = json\n");
    CHECK(r.status == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["subcommand"] == "solve");
    REQUIRE(doc["rows"].size() == 1);
    CHECK(doc["rows"][0]["value_re"].get<double>() == doctest::Approx(std::exp(-3.0)).epsilon(1e-15));
    CHECK(doc["rows"][0]["ok"] == true);
}

TEST_CASE("transform rows") {
    auto r = run_with("subcommand = transform\na = 0.5\ninit = exp(-0.5 x^2)\nz = 0, 1+i\n");
    CHECK(r.status == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(fields(ls[1])[0] == "forward");
    CHECK(parse_double(fields(ls[1])[3]) == doctest::Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-14));

    r = run_with("subcommand = transform\na = 1\ninit = 1\nz = 0\n");
    CHECK(r.status == 2); // the constant is not square integrable
    r = run_with("subcommand = transform\na = 1\ninit = z + 1\nx = 0.2\n");
    CHECK(r.status == 0);
    CHECK(fields(lines(r.out)[1])[0] == "inverse");
}

TEST_CASE("kernel rows") {
    auto r = run_with("subcommand = kernel\na = 1\nt = 0.25\nx = 0\ns = 0\n");
    CHECK(r.status == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(parse_double(fields(ls[1])[3]) == doctest::Approx(0.55265166844956).epsilon(1e-12));
    r = run_with("subcommand = kernel\nkernel = complex-harmonic\nalt-constants = true\nt = 0\nz = 0\n");
    CHECK(r.status == 0);
    CHECK(parse_double(fields(lines(r.out)[1])[6]) == doctest::Approx(2.0));
    CHECK(run_with("subcommand = kernel\nt = 0\nx = 0\n").status == 2);
    CHECK(run_with("subcommand = kernel\nkernel = other\nt = 1\nx = 0\n").status == 2);
}

TEST_CASE("verify and errors") {
    auto r = run_with("subcommand = verify\nsuite = intertwine\na = 1\n");
    CHECK(r.status == 0);
    auto ls = lines(r.out);
    CHECK(ls[0] == "check,params,defect,tolerance,pass");
    CHECK(ls.size() > 6);
    for (std::size_t k = 1; k < ls.size(); ++k) CHECK(parse_double(fields(ls[k])[2]) <= 1e-12);

    // an impossible tolerance turns the same checks into failures
    CHECK(run_with("subcommand = verify\nsuite = isometry\na = 1\ntolerance = 1e-30\n").status == 1);
    CHECK(run_with("subcommand = verify\nsuite = unknown\n").status == 2);
    CHECK(run_with("subcommand = solve\nop = dirac-real\nt = 1\nx = 0\ninit = z\n").status == 2);
    CHECK(run_with("subcommand = solve\nop = nope\nt = 1\nx = 0\ninit = 1\n").status == 2);
    CHECK(run_with("subcommand = solve\nop = dirac-real\nt = 1\ninit = 1\n").status == 2);
    CHECK(run_with("subcommand = launch\n").status == 2);
    r = run_with("subcommand = solve\nop = dirac-real\nt = 1\nx = 0\ninit = sin(x)\n");
    CHECK(r.status == 2);
    CHECK(r.err.find("sin") != std::string::npos);
}
