#pragma once

// Adjacent Ramsey colorings: maps from d-tuples of [0, N] into N^r, searched
// for a (d+1)-tuple x_1 < ... < x_{d+1} whose two adjacent windows satisfy
// C(x_1..x_d) <= C(x_2..x_{d+1}) coordinatewise.
//
// Ordinal-derived colorings feed the tuple codes from encoding.hpp into this
// machinery: a strictly descending ordinal sequence yields a coloring with no
// such pair, and conversely any witness pins two comparable windows.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordlab/encoding.hpp"
#include "ordlab/errors.hpp"
#include "ordlab/ramsey.hpp"

namespace ordlab {

class AdjacentColoring {
 public:
  // `values` holds one length-r vector per d-subset of [0, N], in
  // lexicographic order of the sorted tuples.
  AdjacentColoring(Nat d, Nat r, Nat N, std::vector<std::vector<Nat>> values)
      : d_(d), r_(r), N_(N), values_(std::move(values)) {
    if (d_ == 0) throw DomainError("AdjacentColoring: d must be >= 1");
    const Nat expect = detail::binomial(N_ + 1, d_);
    if (values_.size() != expect)
      throw DomainError("AdjacentColoring: expected " +
                        std::to_string(expect) + " tuples, got " +
                        std::to_string(values_.size()));
    for (const auto& v : values_)
      if (v.size() != r_)
        throw DomainError("AdjacentColoring: every value must have length " +
                          std::to_string(r_));
  }

  Nat d() const noexcept { return d_; }
  Nat r() const noexcept { return r_; }
  Nat N() const noexcept { return N_; }
  const std::vector<std::vector<Nat>>& values() const noexcept {
    return values_;
  }

  // `tuple` holds strictly increasing values in [0, N].
  const std::vector<Nat>& value_at(std::span<const Nat> tuple) const {
    if (tuple.size() != d_)
      throw DomainError("value_at: expected a " + std::to_string(d_) +
                        "-tuple");
    std::vector<std::uint32_t> idx(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] > N_) throw DomainError("value_at: element outside [0, N]");
      if (i > 0 && tuple[i - 1] >= tuple[i])
        throw DomainError("value_at: elements must strictly increase");
      idx[i] = static_cast<std::uint32_t>(tuple[i]);
    }
    return values_[detail::lex_rank(idx, static_cast<std::uint32_t>(N_ + 1))];
  }

 private:
  Nat d_, r_, N_;
  std::vector<std::vector<Nat>> values_;
};

struct AdjacentWitness {
  std::vector<Nat> xs;  // d+1 strictly increasing points
};

// First (in lex order of the (d+1)-tuples) witness of two coordinatewise
// comparable adjacent windows, if any.
inline std::optional<AdjacentWitness> ar_search(const AdjacentColoring& C) {
  const Nat d = C.d();
  const Nat n = C.N() + 1;
  if (n < d + 1) return std::nullopt;
  for (const auto& combo : detail::lex_combinations(
           static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(d + 1))) {
    std::vector<Nat> xs(combo.begin(), combo.end());
    const std::span<const Nat> all(xs);
    const auto& u = C.value_at(all.subspan(0, d));
    const auto& v = C.value_at(all.subspan(1, d));
    bool leq = true;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] > v[i]) {
        leq = false;
        break;
      }
    if (leq) return AdjacentWitness{std::move(xs)};
  }
  return std::nullopt;
}

// The coloring x_1 < ... < x_d  |->  code of (seq[x_1], ..., seq[x_d]),
// with r = 2d + l - 1. Every member of seq must lie below w-tower(d, l+1).
inline AdjacentColoring ordinal_coloring(Nat l, Nat d,
                                         std::span<const Ordinal> seq) {
  if (d == 0) throw DomainError("ordinal_coloring: d must be >= 1");
  if (seq.empty()) throw DomainError("ordinal_coloring: empty sequence");
  const Ordinal bound = omega_tower(d, l + 1);
  for (const Ordinal& a : seq)
    if (compare(a, bound) != Order::less)
      throw DomainError("ordinal_coloring: " + format_ordinal(a) +
                        " is not below " + format_ordinal(bound));
  const Nat N = seq.size() - 1;
  std::vector<std::vector<Nat>> values;
  std::vector<Ordinal> picked(d);
  for (const auto& combo : detail::lex_combinations(
           static_cast<std::uint32_t>(N + 1), static_cast<std::uint32_t>(d))) {
    for (std::size_t i = 0; i < combo.size(); ++i) picked[i] = seq[combo[i]];
    values.push_back(encode(l, d, picked).entries());
  }
  return AdjacentColoring(d, 2 * d + l - 1, N, std::move(values));
}

// Colors each (d+1)-subset of [0, R] by comparing the codes of its two
// adjacent windows through seq: color 0 when the first code is
// coordinatewise <= the second, else the least 1-based coordinate where it
// exceeds. Uses k = 2d + l + 1 colors (code length plus one).
inline SubsetColoring lower_bound_coloring(Nat l, Nat d,
                                           std::span<const Ordinal> seq,
                                           Nat R) {
  if (d == 0) throw DomainError("lower_bound_coloring: d must be >= 1");
  if (seq.size() < R + 1)
    throw DomainError("lower_bound_coloring: sequence shorter than R + 1");
  const Ordinal bound = omega_tower(d, l + 1);
  for (std::size_t i = 0; i <= R; ++i)
    if (compare(seq[i], bound) != Order::less)
      throw DomainError("lower_bound_coloring: " + format_ordinal(seq[i]) +
                        " is not below " + format_ordinal(bound));
  std::vector<std::uint32_t> colors;
  std::vector<Ordinal> w1(d), w2(d);
  for (const auto& combo : detail::lex_combinations(
           static_cast<std::uint32_t>(R + 1), static_cast<std::uint32_t>(d + 1))) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
      w1[i] = seq[combo[i]];
      w2[i] = seq[combo[i + 1]];
    }
    const CodeVector u = encode(l, d, w1);
    const CodeVector v = encode(l, d, w2);
    std::uint32_t color = 0;
    for (std::size_t i = 0; i < u.entries().size(); ++i)
      if (u.entries()[i] > v.entries()[i]) {
        color = static_cast<std::uint32_t>(i + 1);
        break;
      }
    colors.push_back(color);
  }
  return SubsetColoring(d + 1, 2 * d + l + 1, 0, R, std::move(colors));
}

// max over all d-tuples inside [0, x] of the largest code coordinate; 0 when
// [0, x] holds no d-tuple. Nondecreasing in x.
inline Nat derive_bound_fn(const AdjacentColoring& C, Nat x) {
  if (x > C.N()) throw DomainError("derive_bound_fn: x outside [0, N]");
  if (x + 1 < C.d()) return 0;
  Nat best = 0;
  std::vector<Nat> tuple(C.d());
  for (const auto& combo : detail::lex_combinations(
           static_cast<std::uint32_t>(x + 1), static_cast<std::uint32_t>(C.d()))) {
    for (std::size_t i = 0; i < combo.size(); ++i) tuple[i] = combo[i];
    for (const Nat v : C.value_at(tuple)) best = std::max(best, v);
  }
  return best;
}

struct SaphResult {
  std::optional<Nat> R;
  SearchStats stats;
};

// Least R >= m such that every (c+1)-coloring of d-subsets of [m, R] admits a
// homogeneous H = {h_1 < ... } with |H| >= k and |H| >= f(h_k). Throws
// BudgetError when a single check trips the step budget.
inline SaphResult saph_search(Nat d, Nat c, Nat k, Nat m, const EvalFn& f,
                              Nat R_max, const SearchBudget& budget = {}) {
  if (d == 0) throw DomainError("saph_search: d must be >= 1");
  if (k == 0) throw DomainError("saph_search: k must be >= 1");
  SaphResult out;
  for (Nat R = m; R <= R_max; ++R) {
    const Nat n = R - m + 1;
    if (n > 63) throw DomainError("saph_search: interval larger than 63 points");
    std::vector<Nat> ground(n);
    for (Nat i = 0; i < n; ++i) ground[i] = m + i;
    const detail::GoodPredicate good = [k, &f, &ground](std::uint64_t mask) {
      const Nat size = static_cast<Nat>(std::popcount(mask));
      if (size < k) return false;
      // h_k: the k-th smallest member
      std::uint64_t rest = mask;
      for (Nat skip = 1; skip < k; ++skip) rest &= rest - 1;
      const Nat hk = ground[static_cast<std::size_t>(std::countr_zero(rest))];
      return size >= f(hk);
    };
    const auto res = detail::search_bad_coloring(
        static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(d),
        static_cast<std::uint32_t>(c + 1), good, budget);
    out.stats.steps += res.steps;
    if (res.kind == detail::BadSearchResult::Kind::exhausted) {
      out.R = R;
      return out;
    }
    if (res.kind == detail::BadSearchResult::Kind::budget)
      throw BudgetError("saph_search: step budget exceeded", out.stats.steps);
  }
  return out;
}

}  // namespace ordlab
