#pragma once

// Enumeration and sampling of bounded pools of ordinals, used by the
// verification suites and tests.
//
// A pool is described by the tower height and base (all members lie below
// w-tower(height, base + 1)) together with caps on coefficients and on the
// number of terms per nesting level. Enumeration yields the pool in strictly
// increasing order.

#include <algorithm>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "ordlab/errors.hpp"
#include "ordlab/ordinal.hpp"

namespace ordlab {

struct OrdinalUniverseSpec {
  Nat height = 1;     // members lie below w-tower(height, base + 1)
  Nat base = 1;
  Nat max_coeff = 2;  // coefficients range over 1..max_coeff
  Nat max_terms = 0;  // per-level term cap; 0 = no cap
};

inline Ordinal universe_bound(const OrdinalUniverseSpec& spec) {
  return omega_tower(spec.height, spec.base + 1);
}

// All pool members in increasing order. Throws DomainError if the pool would
// exceed size_cap.
inline std::vector<Ordinal> enumerate_ordinals_below(
    const OrdinalUniverseSpec& spec, std::size_t size_cap = std::size_t{1} << 21) {
  std::vector<Ordinal> level;
  level.reserve(spec.base + 1);
  for (Nat v = 0; v <= spec.base; ++v) level.emplace_back(v);
  for (Nat h = 1; h <= spec.height; ++h) {
    const std::vector<Ordinal> exps = std::move(level);
    const std::size_t t_cap = spec.max_terms
                                  ? static_cast<std::size_t>(spec.max_terms)
                                  : exps.size();
    // by_terms[t] lists, in increasing order, the ordinals whose exponents
    // come from the prefix of `exps` processed so far, with at most t terms.
    std::vector<std::vector<Ordinal>> by_terms(t_cap + 1);
    for (auto& v : by_terms) v = {Ordinal()};
    for (std::size_t j = 0; j < exps.size(); ++j) {
      std::vector<std::vector<Ordinal>> next(t_cap + 1);
      next[0] = {Ordinal()};
      for (std::size_t t = 1; t <= t_cap; ++t) {
        next[t] = by_terms[t];
        for (Nat c = 1; c <= spec.max_coeff; ++c) {
          for (const Ordinal& tail : by_terms[t - 1]) {
            std::vector<Ordinal::Term> terms;
            terms.reserve(tail.terms().size() + 1);
            terms.push_back({exps[j], c});
            for (const auto& tt : tail.terms()) terms.push_back(tt);
            next[t].push_back(Ordinal::from_terms(std::move(terms)));
            if (next[t].size() > size_cap)
              throw DomainError("enumerate_ordinals_below: pool exceeds size cap");
          }
        }
      }
      by_terms = std::move(next);
    }
    level = std::move(by_terms[t_cap]);
  }
  return level;
}

namespace detail {

inline Ordinal random_ordinal_level(std::mt19937_64& rng,
                                    const OrdinalUniverseSpec& spec, Nat h) {
  if (h == 0) return Ordinal(rng() % (spec.base + 1));
  const Nat t_cap = spec.max_terms ? spec.max_terms : 3;
  const Nat want = rng() % (t_cap + 1);
  std::vector<Ordinal> exps;
  for (Nat attempt = 0; exps.size() < want && attempt < 16 * (want + 1);
       ++attempt) {
    Ordinal e = random_ordinal_level(rng, spec, h - 1);
    bool dup = false;
    for (const auto& x : exps)
      if (x == e) {
        dup = true;
        break;
      }
    if (!dup) exps.push_back(std::move(e));
  }
  std::sort(exps.begin(), exps.end(),
            [](const Ordinal& x, const Ordinal& y) { return x > y; });
  std::vector<Ordinal::Term> terms;
  terms.reserve(exps.size());
  for (auto& e : exps)
    terms.push_back({std::move(e), 1 + rng() % spec.max_coeff});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace detail

// A pseudo-random pool member. Deterministic for a given rng state.
inline Ordinal random_ordinal(std::mt19937_64& rng,
                              const OrdinalUniverseSpec& spec) {
  return detail::random_ordinal_level(rng, spec, spec.height);
}

}  // namespace ordlab
