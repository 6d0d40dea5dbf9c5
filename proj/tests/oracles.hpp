#pragma once

// Independent reference implementations used to cross-check search results.
// Favors obviousness over cleverness: combinations are built recursively,
// colorings are enumerated as plain base-k odometers, and good sets are found
// by scanning every subset of the ground set. The only concession to speed is
// GroundScan, which precomputes the subset structure once per ground set so
// full 2^15-coloring sweeps stay well under a second.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "ordlab/fundamental.hpp"
#include "ordlab/ramsey.hpp"

namespace oracle {

using ordlab::FiniteSet;
using ordlab::Nat;

inline void build_combos(Nat n, Nat d, Nat lo, std::vector<Nat>& cur,
                         std::vector<std::vector<Nat>>& out) {
  if (cur.size() == d) {
    out.push_back(cur);
    return;
  }
  for (Nat v = lo; v < n; ++v) {
    cur.push_back(v);
    build_combos(n, d, v + 1, cur, out);
    cur.pop_back();
  }
}

// d-subsets of {0, ..., n-1} in lexicographic order
inline std::vector<std::vector<Nat>> combos(Nat n, Nat d) {
  std::vector<std::vector<Nat>> out;
  std::vector<Nat> cur;
  build_combos(n, d, 0, cur, out);
  return out;
}

using GoodSet = std::function<bool(const FiniteSet&)>;

// Subset structure of one ground set: for every candidate H, the positions in
// the color vector of the d-subsets homogeneity must agree on.
struct GroundScan {
  Nat d;
  std::size_t num_subsets;
  struct Candidate {
    FiniteSet H;                       // actual ground values
    std::vector<std::size_t> sub_idx;  // positions of H's d-subsets
  };
  std::vector<Candidate> candidates;   // every nonempty subset of the ground

  GroundScan(Nat d_in, const std::vector<Nat>& ground) : d(d_in) {
    const Nat n = ground.size();
    const auto subs = combos(n, d);
    num_subsets = subs.size();
    std::map<std::vector<Nat>, std::size_t> index_of;
    for (std::size_t i = 0; i < subs.size(); ++i) index_of[subs[i]] = i;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Nat> H;
      for (Nat b = 0; b < n; ++b)
        if (mask >> b & 1) H.push_back(b);
      Candidate cand;
      if (H.size() >= d)
        for (const auto& t : combos(H.size(), d)) {
          std::vector<Nat> sub;
          for (const Nat i : t) sub.push_back(H[i]);
          cand.sub_idx.push_back(index_of.at(sub));
        }
      std::vector<Nat> values;
      for (const Nat h : H) values.push_back(ground[h]);
      cand.H = FiniteSet(std::move(values));
      candidates.push_back(std::move(cand));
    }
  }

  // Does the coloring admit a homogeneous H with good(H)?
  bool admits_good(const std::vector<std::uint32_t>& colors,
                   const GoodSet& good) const {
    for (const auto& cand : candidates) {
      bool homogeneous = true;
      for (std::size_t i = 1; i < cand.sub_idx.size(); ++i)
        if (colors[cand.sub_idx[i]] != colors[cand.sub_idx[0]]) {
          homogeneous = false;
          break;
        }
      if (homogeneous && good(cand.H)) return true;
    }
    return false;
  }
};

// One-shot form of GroundScan::admits_good.
inline bool coloring_good(Nat d, const std::vector<Nat>& ground,
                          const std::vector<std::uint32_t>& colors,
                          const GoodSet& good) {
  return GroundScan(d, ground).admits_good(colors, good);
}

inline std::vector<Nat> interval(Nat a, Nat R) {
  std::vector<Nat> out;
  for (Nat x = a; x <= R; ++x) out.push_back(x);
  return out;
}

// Visits every k-coloring of M subsets in lexicographic order of the color
// tuple; stops early when fn returns false.
inline void for_each_coloring(
    std::size_t M, Nat k,
    const std::function<bool(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> digits(M, 0);
  for (;;) {
    if (!fn(digits)) return;
    std::size_t i = M;
    while (i > 0) {
      --i;
      if (++digits[i] < k) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (M == 0) return;
  }
}

// Lexicographically first bad coloring of d-subsets of `ground`, if any.
inline std::optional<std::vector<std::uint32_t>> first_bad_coloring(
    Nat d, Nat k, const std::vector<Nat>& ground, const GoodSet& good) {
  const GroundScan scan(d, ground);
  std::optional<std::vector<std::uint32_t>> found;
  for_each_coloring(scan.num_subsets, k,
                    [&](const std::vector<std::uint32_t>& colors) {
                      if (!scan.admits_good(colors, good)) {
                        found = colors;
                        return false;
                      }
                      return true;
                    });
  return found;
}

inline GoodSet frt_good(const ordlab::SizeFunction& F) {
  return [F](const FiniteSet& H) { return H.size() > F.eval(H); };
}

// Least R in [a, R_max] at which every coloring is good.
inline std::optional<Nat> min_witness(const ordlab::SizeFunction& F, Nat d,
                                      Nat k, Nat a, Nat R_max) {
  for (Nat R = a; R <= R_max; ++R)
    if (!first_bad_coloring(d, k, interval(a, R), frt_good(F))) return R;
  return std::nullopt;
}

}  // namespace oracle
