#include <gtest/gtest.h>

#include "prony/io.hpp"
#include "support/gen.hpp"

using namespace prony;
using io::Json;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return Errc::InvalidInput;
}

}  // namespace

TEST(Json, ExponentKeys) {
  EXPECT_EQ(io::parse_exponent_key("(2,0)"), (Exponent{2, 0}));
  EXPECT_EQ(io::exponent_key({1, 3}), "(1,3)");
  EXPECT_EQ(code_of([] { io::parse_exponent_key("2,0"); }), Errc::InvalidInput);
  EXPECT_EQ(code_of([] { io::parse_exponent_key("(2,-1)"); }), Errc::InvalidInput);
}

TEST(Json, RationalsAreCanonicalStrings) {
  EXPECT_EQ(io::to_json(Rational(mpz_class(6), mpz_class(-4))), "-3/2");
  EXPECT_EQ(io::rational_from_json("4/2"), Rational(2));
  EXPECT_EQ(io::rational_from_json(7), Rational(7));
  EXPECT_EQ(code_of([] { io::rational_from_json("1/0"); }), Errc::ZeroDenominator);
}

TEST(Json, OutcomeRoundTrip) {
  check::Gen g(71);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t r = static_cast<std::size_t>(g.integer(0, 4));
    PronyOutcome o;
    o.support = PointSet(n, g.distinct_points(r, n, [&] { return g.rational(); }));
    for (std::size_t k = 0; k < r; ++k) o.coefficients.push_back(g.nonzero_rational());
    o.degree_used = static_cast<std::size_t>(g.integer(0, 9));
    o.mode.kind = static_cast<ModeKind>(g.integer(0, 2));
    o.evaluations = static_cast<std::size_t>(g.integer(0, 99));
    for (std::size_t k = 0; k < r; ++k) o.normal_set.push_back(g.exponent(n, 3));
    Json j = io::to_json(o);
    j["n"] = n;
    const PronyOutcome back = io::outcome_from_json(Json::parse(io::dump(j)));
    EXPECT_EQ(back.support, o.support);
    EXPECT_EQ(back.coefficients, o.coefficients);
    EXPECT_EQ(back.degree_used, o.degree_used);
    EXPECT_EQ(back.mode.kind, o.mode.kind);
    EXPECT_EQ(back.exact, o.exact);
    EXPECT_EQ(back.evaluations, o.evaluations);
    EXPECT_EQ(back.normal_set, o.normal_set);
    EXPECT_EQ(io::to_json(back), io::to_json(o));
  }
}

TEST(Json, SampleTableRoundTrip) {
  check::Gen g(72);
  for (int trial = 0; trial < 20; ++trial) {
    io::SampleTable t;
    t.n = static_cast<std::size_t>(g.integer(1, 3));
    t.domain = trial % 2 ? Domain::integer : Domain::nat;
    for (int k = 0; k < 8; ++k) {
      LatticeIndex a(t.n);
      for (auto& v : a) v = static_cast<int>(g.integer(t.domain == Domain::nat ? 0 : -4, 4));
      t.values[a] = g.rational();
    }
    const io::SampleTable back = io::sample_table_from_json(Json::parse(io::dump(io::to_json(t))));
    EXPECT_EQ(back.n, t.n);
    EXPECT_EQ(back.domain, t.domain);
    EXPECT_EQ(back.values, t.values);
  }
}

TEST(Json, SampleFileValidation) {
  EXPECT_EQ(code_of([] {
              io::sample_table_from_json(Json::parse(
                  R"js({"n":1,"domain":"nat","samples":[{"index":[-1],"value":"1"}]})js"));
            }),
            Errc::InvalidInput);
  EXPECT_EQ(code_of([] {
              io::sample_table_from_json(Json::parse(
                  R"js({"n":2,"samples":[{"index":[1],"value":"1"}]})js"));
            }),
            Errc::InvalidInput);
  EXPECT_EQ(code_of([] {
              io::sample_table_from_json(Json::parse(
                  R"js({"n":1,"samples":[{"index":[1],"value":"1"},{"index":[1],"value":"2"}]})js"));
            }),
            Errc::InvalidInput);
}

TEST(Json, GeneratorRoundTrip) {
  const char* docs[] = {
      R"js({"kind":"expsum","n":1,"domain":"int","terms":[{"coeff":"1","base":["2"]},{"coeff":"1","base":["3"]}]})js",
      R"js({"kind":"chebpoly","coeffs":{"3":"1"},"base":"2"})js",
      R"js({"kind":"chebsum","terms":[{"coeff":"2","base":"3"}]})js",
      R"js({"kind":"polynomial","n":2,"terms":{"(3,0)":"1","(0,1)":"-2"},"bases":["2","3"]})js",
      R"js({"kind":"polynomial","n":2,"terms":{"(1,2)":"1"},"kronecker":4})js",
      R"js({"kind":"gaussian","n":1,"A":[["1"]],"terms":[{"coeff":1.0,"center":[1.0]}]})js",
      R"js({"kind":"operator","phi":[[["2","0"],["0","3"]]],"delta":["1","1"],"f":["1","1"]})js",
  };
  for (const char* d : docs) {
    const GeneratorSpec g = io::generator_from_json(Json::parse(d));
    const Json j = io::generator_to_json(g);
    EXPECT_EQ(io::generator_to_json(io::generator_from_json(j)), j) << d;
  }
  EXPECT_EQ(code_of([] { io::generator_from_json(Json::parse(R"js({"kind":"nope"})js")); }),
            Errc::InvalidInput);
  EXPECT_EQ(code_of([] {
              io::generator_from_json(Json::parse(
                  R"js({"kind":"operator","phi":[[["1","1"],["0","1"]],[["1","0"],["1","1"]]],"delta":["1","0"],"f":["1","0"]})js"));
            }),
            Errc::NonCommuting);
}

TEST(Json, AlgebraicSetAndPointSet) {
  const Json y = Json::parse(
      R"js({"n":2,"order":"degrevlex","generators":[{"terms":{"(2,0)":"1","(0,2)":"1","(0,0)":"-1"}}]})js");
  const AlgebraicSet set = io::algebraic_set_from_json(y);
  EXPECT_EQ(set.generators().size(), 1u);
  EXPECT_EQ(io::algebraic_set_from_json(io::to_json(set)).generators(), set.generators());

  const Json p = Json::parse(R"js({"n": 2, "points": [["0","0"],["1","0"],["0","1"]]})js");
  const PointSet x = io::point_set_from_json(p);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(io::point_set_from_json(io::to_json(x)), x);
}

TEST(ExitCodes, Classes) {
  EXPECT_EQ(io::exit_code(Errc::InvalidInput), 1);
  EXPECT_EQ(io::exit_code(Errc::MissingSample), 1);
  EXPECT_EQ(io::exit_code(Errc::ZeroDirection), 1);
  EXPECT_EQ(io::exit_code(Errc::DegreeExhausted), 2);
  EXPECT_EQ(io::exit_code(Errc::VerificationFailed), 2);
  EXPECT_EQ(io::exit_code(Errc::NotDistinguished), 2);
}
