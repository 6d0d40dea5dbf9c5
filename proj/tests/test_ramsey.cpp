#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "ordlab/ramsey.hpp"

using namespace ordlab;

TEST_CASE("coloring layout matches the reference lex order") {
  const SubsetColoring C(2, 3, 1, 4, {0, 1, 2, 0, 1, 2});
  const auto subs = C.subsets();
  const auto ref = oracle::combos(4, 2);  // over indices 0..3, then shift by a
  REQUIRE(subs.size() == ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    std::vector<Nat> shifted;
    for (const Nat v : ref[i]) shifted.push_back(v + 1);
    CHECK(subs[i] == shifted);
    CHECK(C.color_at(shifted) == C.colors()[i]);
  }
}

TEST_CASE("coloring construction and lookup validation") {
  CHECK_THROWS_AS(SubsetColoring(2, 2, 0, 3, {0, 0, 0}), DomainError);  // wants 6
  CHECK_THROWS_AS(SubsetColoring(2, 2, 0, 3, {0, 0, 0, 0, 0, 2}),
                  DomainError);  // color out of range
  CHECK_THROWS_AS(SubsetColoring(2, 2, 3, 1, {}), DomainError);  // a > R
  const SubsetColoring C(2, 2, 0, 3, {0, 0, 0, 0, 0, 1});
  CHECK(C.color_at(std::vector<Nat>{2, 3}) == 1);
  CHECK_THROWS_AS(C.color_at(std::vector<Nat>{3, 2}), DomainError);
  CHECK_THROWS_AS(C.color_at(std::vector<Nat>{0, 4}), DomainError);
  CHECK_THROWS_AS(C.color_at(std::vector<Nat>{1}), DomainError);
}

TEST_CASE("homogeneity agrees with a direct scan") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Nat d = 1 + rng() % 3;
    const Nat k = 2 + rng() % 2;
    const Nat R = d + rng() % 4;
    const auto subs = oracle::combos(R + 1, d);
    std::vector<std::uint32_t> colors(subs.size());
    for (auto& c : colors) c = rng() % k;
    const SubsetColoring C(d, k, 0, R, colors);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (R + 1)); ++mask) {
      std::vector<Nat> H;
      for (Nat b = 0; b <= R; ++b)
        if (mask >> b & 1) H.push_back(b);
      // reference: every d-subset of H carries one color
      bool expect = true;
      std::optional<std::uint32_t> seen;
      for (const auto& t : oracle::combos(H.size(), d)) {
        std::vector<Nat> sub;
        for (const Nat i : t) sub.push_back(H[i]);
        const auto c = C.color_at(sub);
        if (seen && *seen != c) expect = false;
        seen = c;
      }
      CHECK(is_homogeneous(C, FiniteSet(H)) == expect);
    }
  }
}

TEST_CASE("size function evaluation") {
  const FiniteSet H({3, 5, 9});
  CHECK(SizeFunction::cf(2).eval(H) == 2);
  CHECK(SizeFunction::ui(1).eval(H) == 3);   // max(min H, m)
  CHECK(SizeFunction::ui(7).eval(H) == 7);
  CHECK(SizeFunction::md(EvalFn::parse("x+1")).eval(H) == 4);
  CHECK(SizeFunction::ph(EvalFn::parse("x+1")).eval(H) == 3);  // f(min) - 1
  CHECK(SizeFunction::ph(EvalFn::affine(0, 0)).eval(H) == 0);  // saturates

  CHECK(set_code(H) == (Nat{1} << 3 | Nat{1} << 5 | Nat{1} << 9));
  const SizeFunction T =
      SizeFunction::table({{set_code(H), 7}, {set_code(FiniteSet({0})), 2}}, 1);
  CHECK(T.eval(H) == 7);
  CHECK(T.eval(FiniteSet({0})) == 2);
  CHECK(T.eval(FiniteSet({1, 2})) == 1);  // default
  CHECK(eval_size_fn(T, H) == 7);
}

TEST_CASE("search verdicts match the exhaustive oracle") {
  const struct {
    SizeFunction F;
    Nat d, k, a, R;
  } instances[] = {
      {SizeFunction::cf(1), 1, 2, 0, 0},
      {SizeFunction::cf(1), 1, 2, 0, 1},
      {SizeFunction::cf(1), 1, 2, 0, 2},
      {SizeFunction::cf(1), 1, 3, 0, 4},
      {SizeFunction::cf(2), 1, 2, 0, 3},
      {SizeFunction::cf(2), 1, 2, 0, 4},
      {SizeFunction::cf(2), 1, 2, 2, 6},
      {SizeFunction::cf(2), 2, 2, 0, 4},
      {SizeFunction::cf(2), 2, 2, 0, 5},
      {SizeFunction::cf(1), 2, 2, 0, 1},
      {SizeFunction::cf(1), 3, 2, 0, 4},
      {SizeFunction::ui(2), 1, 2, 0, 5},
      {SizeFunction::ui(1), 1, 2, 1, 4},
      {SizeFunction::md(EvalFn::parse("x+1")), 1, 2, 0, 4},
      {SizeFunction::md(EvalFn::parse("x+1")), 1, 2, 1, 5},
      {SizeFunction::ph(EvalFn::identity()), 1, 2, 3, 7},
      {SizeFunction::ph(EvalFn::identity()), 1, 2, 3, 8},
      {SizeFunction::ph(EvalFn::identity()), 1, 2, 3, 9},
      {SizeFunction::table({}, 1), 1, 2, 0, 2},
      {SizeFunction::table({{set_code(FiniteSet({0, 1})), 9}}, 1), 2, 2, 0, 3},
  };
  for (const auto& inst : instances) {
    INFO("d=" << inst.d << " k=" << inst.k << " a=" << inst.a
              << " R=" << inst.R);
    const auto expected = oracle::first_bad_coloring(
        inst.d, inst.k, oracle::interval(inst.a, inst.R),
        oracle::frt_good(inst.F));
    const SearchVerdict got =
        frt_holds_at(inst.F, inst.d, inst.k, inst.a, inst.R);
    if (expected) {
      REQUIRE(got.kind == VerdictKind::bad_coloring);
      REQUIRE(got.witness.has_value());
      // the searcher promises the lexicographically first bad coloring
      CHECK(got.witness->colors() == *expected);
      CHECK(coloring_admits_no_good_set(*got.witness, frt_good_set(inst.F)));
    } else {
      CHECK(got.kind == VerdictKind::all_good);
    }
  }
}

TEST_CASE("parallel search returns the sequential answer") {
  const struct {
    SizeFunction F;
    Nat d, k, a, R;
  } instances[] = {
      {SizeFunction::cf(2), 2, 2, 0, 4},
      {SizeFunction::cf(2), 2, 2, 0, 5},
      {SizeFunction::cf(1), 1, 3, 0, 4},
      {SizeFunction::cf(2), 1, 2, 0, 4},
      {SizeFunction::ui(2), 1, 2, 0, 5},
      {SizeFunction::ph(EvalFn::identity()), 1, 2, 3, 8},
  };
  for (const auto& inst : instances) {
    SearchBudget par;
    par.threads = 4;
    const SearchVerdict seq = frt_holds_at(inst.F, inst.d, inst.k, inst.a, inst.R);
    const SearchVerdict got =
        frt_holds_at(inst.F, inst.d, inst.k, inst.a, inst.R, par);
    CHECK(seq.kind == got.kind);
    CHECK(seq.witness.has_value() == got.witness.has_value());
    if (seq.witness && got.witness)
      CHECK(seq.witness->colors() == got.witness->colors());
  }
}

TEST_CASE("witness scan matches the oracle") {
  const auto check = [](const SizeFunction& F, Nat d, Nat k, Nat a, Nat R_max) {
    const auto expect = oracle::min_witness(F, d, k, a, R_max);
    const auto got = min_frt_witness(F, d, k, a, R_max);
    CHECK(got.R == expect);
  };
  check(SizeFunction::cf(1), 1, 2, 0, 6);   // 2
  check(SizeFunction::cf(2), 1, 2, 0, 6);   // 4
  check(SizeFunction::cf(1), 1, 3, 0, 8);   // 3 colors need one more point
  check(SizeFunction::cf(1), 2, 2, 0, 4);   // 1
  check(SizeFunction::cf(2), 2, 2, 0, 5);   // 5
  check(SizeFunction::ui(1), 1, 2, 0, 8);
  check(SizeFunction::md(EvalFn::parse("x+1")), 1, 2, 0, 8);
  check(SizeFunction::ph(EvalFn::identity()), 1, 2, 3, 9);  // 9

  CHECK(min_frt_witness(SizeFunction::cf(2), 2, 2, 0, 10).R == 5);
  CHECK(!min_frt_witness(SizeFunction::cf(3), 2, 2, 0, 6).R.has_value());
}

TEST_CASE("budget trips are reported, not silently truncated") {
  SearchBudget tiny;
  tiny.steps = 3;
  const SearchVerdict v = frt_holds_at(SizeFunction::cf(2), 2, 2, 0, 5, tiny);
  CHECK(v.kind == VerdictKind::not_found);
  CHECK(!v.witness.has_value());
  CHECK_THROWS_AS(min_frt_witness(SizeFunction::cf(2), 2, 2, 0, 5, tiny),
                  BudgetError);
}

TEST_CASE("defeating size function admits no good set") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Nat d = 1 + rng() % 2;
    const Nat k = 2 + rng() % 2;
    const Nat R = d + rng() % 5;
    const auto subs = oracle::combos(R + 1, d);
    std::vector<std::uint32_t> colors(subs.size());
    for (auto& c : colors) c = rng() % k;
    const SubsetColoring C(d, k, 0, R, colors);
    const SizeFunction F = counterexample_size_fn(C);
    CHECK(coloring_admits_no_good_set(C, frt_good_set(F)));
    CHECK(!oracle::coloring_good(d, oracle::interval(0, R), colors,
                                 oracle::frt_good(F)));
  }
  // the empty set maps to 1 so that vacuous homogeneity cannot be good
  const SubsetColoring C(1, 2, 0, 1, {0, 1});
  const SizeFunction F = counterexample_size_fn(C);
  CHECK(F.eval(FiniteSet()) == 1);
}

TEST_CASE("tree levels are exactly the bad colorings, in lex order") {
  const SizeFunction F = SizeFunction::cf(2);
  const CompactnessTree tree = build_compactness_tree(F, 2, 2, 4);
  REQUIRE(tree.levels.size() == 5);
  for (Nat R = 0; R <= 4; ++R) {
    std::vector<std::vector<std::uint32_t>> expect;
    const std::size_t M = oracle::combos(R + 1, 2).size();
    oracle::for_each_coloring(M, 2, [&](const std::vector<std::uint32_t>& c) {
      if (!oracle::coloring_good(2, oracle::interval(0, R), c,
                                 oracle::frt_good(F)))
        expect.push_back(c);
      return true;
    });
    CHECK(tree.levels[R].colorings == expect);  // both in lex order
  }
}

TEST_CASE("representative chains restrict level by level") {
  const CompactnessTree tree = build_compactness_tree(SizeFunction::cf(2), 2, 2, 4);
  const auto chain = tree.representative_chain(4);
  REQUIRE(chain.size() == 5);
  CHECK(chain.back() == tree.levels[4].colorings.front());
  for (Nat r = 0; r <= 4; ++r) {
    CHECK(chain[r] == restrict_coloring(chain.back(), 2, 4, r));
    // every prefix is itself a stored node of its level
    const auto& level = tree.levels[r].colorings;
    CHECK(std::find(level.begin(), level.end(), chain[r]) != level.end());
  }
  CHECK_THROWS_AS(tree.representative_chain(9), DomainError);
}

TEST_CASE("restriction keeps exactly the low subsets") {
  // colors indexed by lex order over [0, 3], d = 2
  const std::vector<std::uint32_t> colors{0, 1, 2, 3, 4, 5};
  // pairs: 01 02 03 12 13 23 -> restrict to [0, 2]: 01 02 12
  CHECK(restrict_coloring(colors, 2, 3, 2) ==
        std::vector<std::uint32_t>{0, 1, 3});
  CHECK(restrict_coloring(colors, 2, 3, 0).empty());
  CHECK_THROWS_AS(restrict_coloring(colors, 2, 2, 1), DomainError);
}

TEST_CASE("relative-largeness instances match the oracle") {
  const oracle::GoodSet good = [](const FiniteSet& X) {
    return X.size() >= X.min();
  };
  const struct {
    std::vector<Nat> ground;
    Nat d, c;
  } instances[] = {
      {{2, 3, 4}, 2, 2},   {{3, 4, 5}, 2, 2},    {{1, 7, 9}, 2, 2},
      {{3, 4, 5, 6}, 2, 2}, {{2, 3, 4, 5}, 2, 3}, {{4, 5, 6}, 1, 2},
      {{}, 2, 2},
  };
  for (const auto& inst : instances) {
    INFO("|A|=" << inst.ground.size() << " d=" << inst.d << " c=" << inst.c);
    const KsVerdict got =
        check_ks_instance(FiniteSet(inst.ground), inst.d, inst.c);
    if (inst.ground.empty()) {
      CHECK(got.kind == VerdictKind::all_good);
      continue;
    }
    const auto expected =
        oracle::first_bad_coloring(inst.d, inst.c, inst.ground, good);
    if (expected) {
      REQUIRE(got.kind == VerdictKind::bad_coloring);
      REQUIRE(got.witness.has_value());
      CHECK(got.witness->colors == *expected);
      CHECK(got.witness->ground.elements() == inst.ground);
    } else {
      CHECK(got.kind == VerdictKind::all_good);
    }
  }
}
