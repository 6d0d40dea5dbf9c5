#include <catch2/catch_amalgamated.hpp>

#include "ordlab/ordinal.hpp"
#include "ordlab/universe.hpp"

using namespace ordlab;

TEST_CASE("parse and format round trip") {
  for (const char* text : {"0", "1", "42", "w", "w*3", "w+1", "w^2",
                           "w^2*2+w", "w^w", "w^(w+1)*3+w*2+5",
                           "w^(w^w)", "w^(w^2*2+1)*7+w^3+2"}) {
    const Ordinal a = parse_ordinal(text);
    CHECK(format_ordinal(a) == text);
    CHECK(parse_ordinal(format_ordinal(a)) == a);
  }
}

TEST_CASE("format normalizes redundant notation") {
  CHECK(format_ordinal(parse_ordinal("w^1*1")) == "w");
  CHECK(format_ordinal(parse_ordinal("w^0*5")) == "5");
  CHECK(format_ordinal(parse_ordinal("w^(0)")) == "1");
  CHECK(format_ordinal(parse_ordinal("w^(w)")) == "w^w");
}

TEST_CASE("parser rejects bad syntax with a position") {
  const struct {
    const char* text;
  } bad[] = {{""},    {"w^"},   {"+w"},  {"w**2"}, {"w^w^w"},
             {"(w)"}, {"w^()"}, {"3w"},  {"w^2*"}, {"99999999999999999999"}};
  for (const auto& t : bad) {
    INFO(t.text);
    CHECK_THROWS_AS(parse_ordinal(t.text), ParseError);
  }
  try {
    parse_ordinal("w^2 + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("parser rejects non-canonical input") {
  // ascending or repeated exponents, zero coefficients, zero terms
  for (const char* text : {"w+w^2", "w+w", "1+1", "w*0", "w^2+w^3", "5+3", "w+0"}) {
    INFO(text);
    CHECK_THROWS_AS(parse_ordinal(text), ParseError);
  }
}

TEST_CASE("parser depth bound") {
  std::string deep;
  for (int i = 0; i < 40; ++i) deep += "w^(";
  deep += "w";
  for (int i = 0; i < 40; ++i) deep += ")";
  CHECK_THROWS_AS(parse_ordinal(deep), ParseError);
  CHECK_NOTHROW(parse_ordinal(deep, 64));
}

TEST_CASE("term construction validates canonical form") {
  CHECK_THROWS_AS(Ordinal::from_terms({{Ordinal(1), 0}}), DomainError);
  CHECK_THROWS_AS(Ordinal::from_terms({{Ordinal(1), 1}, {Ordinal(2), 1}}),
                  DomainError);
  CHECK_THROWS_AS(Ordinal::from_terms({{Ordinal(1), 1}, {Ordinal(1), 1}}),
                  DomainError);
  const Ordinal a = Ordinal::from_terms({{Ordinal(2), 3}, {Ordinal(0), 4}});
  CHECK(format_ordinal(a) == "w^2*3+4");
}

TEST_CASE("classification predicates") {
  CHECK(Ordinal().is_zero());
  CHECK(Ordinal(7).is_finite());
  CHECK(Ordinal(7).finite_value() == 7);
  CHECK(Ordinal(7).is_successor());
  CHECK(!Ordinal(7).is_limit());
  CHECK(Ordinal::omega().is_limit());
  CHECK(parse_ordinal("w+1").is_successor());
  CHECK(parse_ordinal("w^2+w").is_limit());
  CHECK(!parse_ordinal("w").is_finite());
  CHECK_THROWS_AS(parse_ordinal("w").finite_value(), DomainError);
}

TEST_CASE("comparison basics") {
  CHECK(compare(parse_ordinal("w^w"), parse_ordinal("w*5+3")) == Order::greater);
  CHECK(compare(parse_ordinal("w^2*2+w"), parse_ordinal("w^2*2+1")) ==
        Order::greater);
  CHECK(compare(parse_ordinal("w^2"), parse_ordinal("w^2+1")) == Order::less);
  CHECK(compare(parse_ordinal("w*2"), parse_ordinal("w*2")) == Order::equal);
  CHECK(parse_ordinal("w") < parse_ordinal("w+1"));
  CHECK(parse_ordinal("w^w") >= parse_ordinal("w^3*9+w"));
  CHECK(Ordinal(3) < Ordinal::omega());
}

TEST_CASE("comparison agrees with the enumeration order") {
  // enumerate_ordinals_below yields increasing ordinals by construction,
  // giving an order oracle independent of compare()
  const auto U = enumerate_ordinals_below({1, 2, 2, 0});
  REQUIRE(U.size() > 20);
  for (std::size_t i = 0; i < U.size(); ++i)
    for (std::size_t j = 0; j < U.size(); ++j) {
      const Order o = compare(U[i], U[j]);
      CHECK(o == (i < j ? Order::less
                        : (i == j ? Order::equal : Order::greater)));
    }
}

TEST_CASE("comparison data on known pairs") {
  const auto cd1 =
      comparison_data(parse_ordinal("w^2*2+w"), parse_ordinal("w^2*2+1"));
  CHECK(cd1.cp == 2);
  CHECK(cd1.cc == 1);
  CHECK(cd1.ce == Ordinal(1));

  // equal ordinals: all zero
  const auto cd2 = comparison_data(parse_ordinal("w*4"), parse_ordinal("w*4"));
  CHECK(cd2.cp == 0);
  CHECK(cd2.cc == 0);
  CHECK(cd2.ce == Ordinal(0));

  // first operand runs out of terms: position past its length, zero data
  const auto cd3 = comparison_data(parse_ordinal("w"), parse_ordinal("w+1"));
  CHECK(cd3.cp == 2);
  CHECK(cd3.cc == 0);
  CHECK(cd3.ce == Ordinal(0));

  // second operand runs out: data read from the first
  const auto cd4 = comparison_data(parse_ordinal("w+1"), parse_ordinal("w"));
  CHECK(cd4.cp == 2);
  CHECK(cd4.cc == 1);
  CHECK(cd4.ce == Ordinal(0));

  // disagreement in the leading exponent
  const auto cd5 = comparison_data(parse_ordinal("w^3"), parse_ordinal("w^2"));
  CHECK(cd5.cp == 1);
  CHECK(cd5.cc == 1);
  CHECK(cd5.ce == Ordinal(3));
}

TEST_CASE("maximal data") {
  const auto m0 = max_data(Ordinal(0));
  CHECK(m0.mp == 1);
  CHECK(m0.mc == 0);

  const auto m1 = max_data(Ordinal(5));
  CHECK(m1.mp == 1);
  CHECK(m1.mc == 5);

  const auto m2 = max_data(parse_ordinal("w^3*2+5"));
  CHECK(m2.mp == 2);
  CHECK(m2.mc == 5);

  const auto m3 = max_data(parse_ordinal("w^(w^2*3)"));
  CHECK(m3.mp == 1);
  CHECK(m3.mc == 3);

  const auto m4 = max_data(parse_ordinal("w^(w+1)*2+w^2+1"));
  CHECK(m4.mp == 3);  // three terms at the top level
  CHECK(m4.mc == 2);
}

TEST_CASE("omega towers") {
  CHECK(omega_tower(0, 7) == Ordinal(7));
  CHECK(omega_tower(1, 1) == Ordinal::omega());
  CHECK(omega_tower(2, 1) == parse_ordinal("w^w"));
  CHECK(omega_tower(3, 1) == parse_ordinal("w^(w^w)"));
  CHECK(omega_tower(1, 2) == parse_ordinal("w^2"));
  CHECK(omega_tower(2, 2) == parse_ordinal("w^(w^2)"));
  CHECK(omega_tower(0, 0).is_zero());
  CHECK_THROWS_AS(omega_tower(40, 1), DomainError);
}

TEST_CASE("universe enumeration is increasing and bounded") {
  const OrdinalUniverseSpec spec{2, 1, 2, 2};
  const auto U = enumerate_ordinals_below(spec);
  REQUIRE(!U.empty());
  CHECK(U.front().is_zero());
  for (std::size_t i = 1; i < U.size(); ++i) CHECK(U[i - 1] < U[i]);
  const Ordinal bound = universe_bound(spec);
  for (const auto& a : U) CHECK(a < bound);
}

TEST_CASE("random ordinals stay below the universe bound") {
  std::mt19937_64 rng(123);
  const OrdinalUniverseSpec spec{2, 1, 3, 3};
  const Ordinal bound = universe_bound(spec);
  for (int i = 0; i < 500; ++i) {
    const Ordinal a = random_ordinal(rng, spec);
    CHECK(a < bound);
    CHECK(parse_ordinal(format_ordinal(a)) == a);
  }
}
