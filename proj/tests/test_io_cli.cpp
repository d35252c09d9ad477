#include "arboreal/io.hpp"
#include "arboreal/json_io.hpp"
#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace arboreal;

namespace {

IntPolynomial P(std::initializer_list<long> desc) { return IntPolynomial::descending(desc); }

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "arboreal");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(ParsePolynomial, Expressions) {
    EXPECT_EQ(parse_polynomial("x^2 - 3x + 1"), P({1, -3, 1}));
    EXPECT_EQ(parse_polynomial("x^8-44x^6+567x^4-2660x^2+3564"), P({1, 0, -44, 0, 567, 0, -2660, 0, 3564}));
    EXPECT_EQ(parse_polynomial("  -x^3 + 2*x  "), P({-1, 0, 2, 0}));
    EXPECT_EQ(parse_polynomial("x + x"), P({2, 0}));
    EXPECT_EQ(parse_polynomial("7"), P({7}));
}

TEST(ParsePolynomial, CoefficientLists) {
    EXPECT_EQ(parse_polynomial("3564,0,-2660,0,567,0,-44,0,1"), P({1, 0, -44, 0, 567, 0, -2660, 0, 3564}));
    EXPECT_EQ(parse_polynomial("1, -3, 1"), P({1, -3, 1}));
    EXPECT_EQ(parse_polynomial("123456789012345678901234567890,1").coeff(0), Integer("123456789012345678901234567890"));
}

TEST(ParsePolynomial, Errors) {
    EXPECT_THROW(parse_polynomial("x^2 - 0.5"), ParseError);
    EXPECT_THROW(parse_polynomial("x^2 - 1/2"), ParseError);
    EXPECT_THROW(parse_polynomial("x^^2"), ParseError);
    EXPECT_THROW(parse_polynomial(""), ParseError);
    EXPECT_THROW(parse_polynomial("1,,2"), ParseError);
    EXPECT_THROW(parse_polynomial("y^2"), ParseError);
    try {
        parse_polynomial("x^2 + 3q");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 7u);
    }
}

TEST(FormatPolynomial, RoundTrips) {
    const IntPolynomial ps[] = {P({1, -49, 632, -777, 1}), P({1}), P({-1, 0, 0}), P({1, 0, -1}), P({3, -2, 0, 5})};
    for (const auto& p : ps) {
        EXPECT_EQ(parse_polynomial(format_polynomial(p)), p);
        EXPECT_EQ(parse_polynomial(format_coefficient_list(p)), p);
    }
    EXPECT_EQ(format_polynomial(P({1, -49, 632, -777, 1})), "x^4 - 49x^3 + 632x^2 - 777x + 1");
}

TEST(CoefficientMapText, RoundTrip) {
    const auto a = parse_coefficient_map("0:2,4:4,8:2");
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(parse_coefficient_map(format_coefficient_map(a)), a);
    EXPECT_EQ(format_tree_name(parse_coefficient_map("1:8,3:4,8:1,10:1,18:3")), "<1^8 3^4 8 10 18^3>");
    EXPECT_THROW(parse_coefficient_map("0:2,x:1"), std::invalid_argument);
    EXPECT_THROW(parse_coefficient_map("-1:2"), std::invalid_argument);
}

TEST(Json, BigIntegersBecomeStrings) {
    EXPECT_TRUE(to_json(Integer(5)).is_number_integer());
    EXPECT_TRUE(to_json(Integer("1576803712000000000000")).is_string());
    EXPECT_EQ(integer_from_json(to_json(Integer("1576803712000000000000"))), Integer("1576803712000000000000"));
    EXPECT_EQ(to_json(Rational(1, 6)), "1/6");
}

TEST(Cli, AnalyzeOctic) {
    const auto r = run({"analyze", "--poly", "x^8-44x^6+567x^4-2660x^2+3564", "--kind", "lambda", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "in_a2");
    EXPECT_EQ(j["certificate"]["a"]["26"], 166);
    EXPECT_EQ(j["certificate"]["vertex_count"], 68231);
    EXPECT_FALSE(j["diagnostics"].contains("elapsed"));
}

TEST(Cli, CycloFortyEight) {
    const auto r = run({"cyclo", "--m", "48", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["analysis"]["verdict"], "not_in_a2");
    EXPECT_EQ(j["analysis"]["obstructions"][0]["kind"], "zeta48_three_adic");
    EXPECT_EQ(j["analysis"]["obstructions"][0]["y0"], "1/6");
    EXPECT_EQ(j["analysis"]["obstructions"][0]["detM"], 3);
}

TEST(Cli, AnalyzeCrossSetQuartic) {
    const auto r = run({"analyze", "--poly", "x^4-49x^3+632x^2-777x+1", "--kind", "lambda-squared", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "in_a2");
    EXPECT_TRUE(j["certificate"]["verified"].get<bool>());
    EXPECT_GT(j["diagnostics"]["combinations_added"].get<int>(), 0);
}

TEST(Cli, CertifyOutputRoundTripsThroughVerify) {
    for (const char* poly : {"x^4-44x^3+567x^2-2660x+3564", "x^2-3x+1", "x^3-20x^2+96x-64", "x^4-49x^3+632x^2-777x+1"}) {
        const auto c = run({"certify", "--poly", poly, "--json"});
        ASSERT_EQ(c.code, 0) << poly << c.err;
        const auto v = run({"verify-cert", "--cert", c.out, "--json"});
        ASSERT_EQ(v.code, 0) << v.err;
        EXPECT_TRUE(Json::parse(v.out)["verified"].get<bool>()) << poly;
        const auto v2 = run({"verify-cert", "--poly", poly, "--cert", c.out});
        EXPECT_EQ(v2.out, "verified: true\n");
    }
}

TEST(Cli, VerifyRejectsWrongMap) {
    const auto v = run({"verify-cert", "--poly", "x^2-3x+1", "--cert", "0:1,1:2"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "verified: false\n");
}

TEST(Cli, DeterministicOutput) {
    const std::vector<std::string> args{"analyze", "--poly", "x^4-49x^3+632x^2-777x+1", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> cyc{"cyclo", "--range", "1-30"};
    EXPECT_EQ(run(cyc).out, run(cyc).out);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"analyze", "--poly", "x^2 - 0.5"}).code, 1);
    EXPECT_EQ(run({"analyze", "--poly", "x^2-3x+2"}).code, 1);        // integer root
    EXPECT_EQ(run({"analyze", "--poly", "x^2+1"}).code, 1);           // not totally real
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"analyze", "--poly", "x^3-5x^2+6x-1"}).code, 0);
    // A degree-4 input with an interlacing set and tiny budget stays undecided.
    const auto u = run({"analyze", "--poly", "x^4-49x^3+632x^2-777x+1", "--max-sets", "1", "--max-mult", "1"});
    EXPECT_EQ(u.code, 2) << u.out;
}

TEST(Cli, TreeCommands) {
    EXPECT_EQ(run({"tree", "export", "--branches", "1:1"}).out, "0 1\n1 2\n");
    EXPECT_EQ(run({"tree", "charpoly", "--branches", "0:1,1:1"}).out, "x^4 - 3x^2 + 1\n");
    EXPECT_EQ(run({"tree", "charpoly", "--branches", "0:1,1:1", "--bruteforce"}).out, "x^4 - 3x^2 + 1\n");
    const auto b = run({"tree", "build", "--branches", "0:2,4:4,8:2", "--json"});
    EXPECT_EQ(Json::parse(b.out)["vertex_count"], 41);
    EXPECT_EQ(run({"tree", "export", "--branches", "0:1000", "--cap", "10"}).code, 1);
    const auto s = run({"tree", "search", "--poly", "x^2-3x+1", "--max-vertices", "10", "--max-k", "5", "--excess", "0"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("0:1,1:1"), std::string::npos) << s.out;
}

TEST(Cli, ScaleAndZeta) {
    const auto s = run({"scale", "--poly", "x^3-5x^2+6x-1", "--json"});
    ASSERT_EQ(s.code, 0) << s.err;
    const auto j = Json::parse(s.out);
    EXPECT_EQ(j["D"], 2);
    EXPECT_EQ(j["scaled_F"], "x^3 - 20x^2 + 96x - 64");
    EXPECT_EQ(j["certificate"]["vertex_count"], 41);
    const auto z = run({"zeta48", "--k-max", "100", "--json"});
    EXPECT_EQ(Json::parse(z.out)["all_three_integral"], true);
}
