#pragma once

// Colorings of d-element subsets and exhaustive witness searches.
//
// A SubsetColoring assigns one of k colors to every d-element subset of the
// interval [a, R], stored in lexicographic order of the sorted subsets. A set
// H is "good" for a size function F when |H| > F(H); a coloring is "bad" when
// no homogeneous good set exists. The searches below enumerate candidate bad
// colorings depth-first in lexicographic order, pruning a partial coloring as
// soon as it completes a good homogeneous set, so the first hit is the
// lexicographically least bad coloring.
//
// Multi-threaded runs (budget.threads > 1) split the enumeration into blocks
// by the color prefix of the first few subsets and return the answer of the
// lexicographically earliest deciding block, which is exactly the sequential
// answer. Near the step budget the trip point depends on scheduling; verdicts
// reached below the budget do not.

#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "ordlab/errors.hpp"
#include "ordlab/fundamental.hpp"

namespace ordlab {

namespace detail {

inline Nat binomial(Nat n, Nat k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Nat out = 1;
  for (Nat i = 1; i <= k; ++i) {
    const Nat num = n - k + i;
    if (out > std::numeric_limits<Nat>::max() / num)
      throw DomainError("binomial: overflow");
    out = out * num / i;  // exact at every step
  }
  return out;
}

// Advances a strictly increasing index tuple over {0..n-1} to its
// lexicographic successor; false when already at the last tuple.
inline bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
  const std::uint32_t d = static_cast<std::uint32_t>(c.size());
  for (std::uint32_t i = d; i-- > 0;) {
    if (c[i] + 1 <= n - d + i) {
      ++c[i];
      for (std::uint32_t j = i + 1; j < d; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::vector<std::uint32_t>> lex_combinations(
    std::uint32_t n, std::uint32_t d) {
  std::vector<std::vector<std::uint32_t>> out;
  if (d > n) return out;
  std::vector<std::uint32_t> c(d);
  for (std::uint32_t i = 0; i < d; ++i) c[i] = i;
  do {
    out.push_back(c);
  } while (d > 0 && next_combination(c, n));
  return out;
}

// Rank of a strictly increasing index tuple among all d-subsets of {0..n-1}
// in lexicographic order.
inline Nat lex_rank(std::span<const std::uint32_t> tuple, std::uint32_t n) {
  const std::uint32_t d = static_cast<std::uint32_t>(tuple.size());
  Nat rank = 0;
  std::uint32_t prev = 0;
  for (std::uint32_t t = 0; t < d; ++t) {
    for (std::uint32_t v = prev; v < tuple[t]; ++v)
      rank += binomial(n - 1 - v, d - 1 - t);
    prev = tuple[t] + 1;
  }
  return rank;
}

}  // namespace detail

class SubsetColoring {
 public:
  SubsetColoring(Nat d, Nat k, Nat a, Nat R, std::vector<std::uint32_t> colors)
      : d_(d), k_(k), a_(a), R_(R), colors_(std::move(colors)) {
    if (d_ == 0 || k_ == 0)
      throw DomainError("SubsetColoring: d and k must be >= 1");
    if (a_ > R_) throw DomainError("SubsetColoring: need a <= R");
    const Nat expect = detail::binomial(R_ - a_ + 1, d_);
    if (colors_.size() != expect)
      throw DomainError("SubsetColoring: expected " + std::to_string(expect) +
                        " colors, got " + std::to_string(colors_.size()));
    for (const auto c : colors_)
      if (c >= k_) throw DomainError("SubsetColoring: color out of range");
  }

  Nat d() const noexcept { return d_; }
  Nat k() const noexcept { return k_; }
  Nat a() const noexcept { return a_; }
  Nat R() const noexcept { return R_; }
  Nat domain_size() const noexcept { return R_ - a_ + 1; }
  const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

  // `subset` holds strictly increasing values in [a, R].
  std::uint32_t color_at(std::span<const Nat> subset) const {
    if (subset.size() != d_)
      throw DomainError("color_at: expected a " + std::to_string(d_) +
                        "-element subset");
    std::vector<std::uint32_t> idx(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < a_ || subset[i] > R_)
        throw DomainError("color_at: element outside [a, R]");
      if (i > 0 && subset[i - 1] >= subset[i])
        throw DomainError("color_at: elements must strictly increase");
      idx[i] = static_cast<std::uint32_t>(subset[i] - a_);
    }
    return colors_[detail::lex_rank(idx, static_cast<std::uint32_t>(domain_size()))];
  }

  // All d-subsets of [a, R] as value tuples, lexicographically; parallel to
  // colors().
  std::vector<std::vector<Nat>> subsets() const {
    std::vector<std::vector<Nat>> out;
    for (const auto& c : detail::lex_combinations(
             static_cast<std::uint32_t>(domain_size()),
             static_cast<std::uint32_t>(d_))) {
      std::vector<Nat> tuple(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) tuple[i] = a_ + c[i];
      out.push_back(std::move(tuple));
    }
    return out;
  }

  friend bool operator==(const SubsetColoring& x, const SubsetColoring& y) {
    return x.d_ == y.d_ && x.k_ == y.k_ && x.a_ == y.a_ && x.R_ == y.R_ &&
           x.colors_ == y.colors_;
  }

 private:
  Nat d_, k_, a_, R_;
  std::vector<std::uint32_t> colors_;
};

// True iff every d-subset of H gets the same color (vacuously true when
// |H| < d). H must lie inside the coloring's domain.
inline bool is_homogeneous(const SubsetColoring& C, const FiniteSet& H) {
  for (const Nat x : H)
    if (x < C.a() || x > C.R())
      throw DomainError("is_homogeneous: element outside the coloring domain");
  const std::size_t d = static_cast<std::size_t>(C.d());
  if (H.size() < d) return true;
  std::vector<std::uint32_t> combo(d);
  for (std::size_t i = 0; i < d; ++i) combo[i] = static_cast<std::uint32_t>(i);
  std::vector<Nat> tuple(d);
  bool first = true;
  std::uint32_t color = 0;
  do {
    for (std::size_t i = 0; i < d; ++i) tuple[i] = H.elements()[combo[i]];
    const std::uint32_t c = C.color_at(tuple);
    if (first) {
      color = c;
      first = false;
    } else if (c != color) {
      return false;
    }
  } while (detail::next_combination(combo, static_cast<std::uint32_t>(H.size())));
  return true;
}

// Bitmask code of a set: sum of 2^x over members. Members must be below 64.
inline Nat set_code(const FiniteSet& X) {
  Nat code = 0;
  for (const Nat x : X) {
    if (x >= 64) throw DomainError("set_code: element must be below 64");
    code |= Nat{1} << x;
  }
  return code;
}

// Size thresholds for "good" sets. Four shapes:
//   cf(m)          constant m
//   ui(m)          max(min X, m)
//   md(f)          f(min X)
//   ph(f)          f(min X) - 1, floored at 0
//   table(...)     explicit values keyed by set_code, with a default
class SizeFunction {
 public:
  struct Cf {
    Nat m;
  };
  struct Ui {
    Nat m;
  };
  struct Md {
    EvalFn f;
    bool minus_one;
  };
  struct Table {
    std::map<Nat, Nat> entries;  // set_code -> value
    Nat default_value;
  };

  static SizeFunction cf(Nat m) { return SizeFunction(Cf{m}); }
  static SizeFunction ui(Nat m) { return SizeFunction(Ui{m}); }
  static SizeFunction md(EvalFn f) { return SizeFunction(Md{std::move(f), false}); }
  static SizeFunction ph(EvalFn f) { return SizeFunction(Md{std::move(f), true}); }
  static SizeFunction table(std::map<Nat, Nat> entries, Nat default_value) {
    return SizeFunction(Table{std::move(entries), default_value});
  }

  Nat eval(const FiniteSet& X) const {
    if (const auto* c = std::get_if<Cf>(&v_)) return c->m;
    if (const auto* u = std::get_if<Ui>(&v_)) return std::max(X.min(), u->m);
    if (const auto* m = std::get_if<Md>(&v_)) {
      const Nat v = m->f(X.min());
      if (!m->minus_one) return v;
      return v > 0 ? v - 1 : 0;
    }
    const auto& t = std::get<Table>(v_);
    const auto it = t.entries.find(set_code(X));
    return it != t.entries.end() ? it->second : t.default_value;
  }

  const std::variant<Cf, Ui, Md, Table>& value() const noexcept { return v_; }

 private:
  explicit SizeFunction(std::variant<Cf, Ui, Md, Table> v) : v_(std::move(v)) {}
  std::variant<Cf, Ui, Md, Table> v_;
};

inline Nat eval_size_fn(const SizeFunction& F, const FiniteSet& X) {
  return F.eval(X);
}

struct SearchBudget {
  std::uint64_t steps = 10'000'000;
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t steps = 0;
};

enum class VerdictKind { all_good, bad_coloring, not_found };

struct SearchVerdict {
  VerdictKind kind = VerdictKind::all_good;
  std::optional<SubsetColoring> witness;  // present iff kind == bad_coloring
  SearchStats stats;
};

namespace detail {

// Predicate over nonzero bitmasks of ground-set indices.
using GoodPredicate = std::function<bool(std::uint64_t)>;

struct SubsetTables {
  std::uint32_t n, d, k;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> masks;  // d-subsets in lex order
  std::unordered_map<std::uint64_t, std::uint32_t> rank;

  SubsetTables(std::uint32_t n_, std::uint32_t d_, std::uint32_t k_)
      : n(n_), d(d_), k(k_) {
    if (d == 0 || k == 0) throw DomainError("search: d and k must be >= 1");
    if (n > 63) throw DomainError("search: ground set larger than 63 points");
    if (k > (1u << 20)) throw DomainError("search: too many colors");
    if (n > 0) full = (~std::uint64_t{0}) >> (64 - n);
    for (const auto& combo : lex_combinations(n, d)) {
      std::uint64_t m = 0;
      for (const auto i : combo) m |= std::uint64_t{1} << i;
      rank.emplace(m, static_cast<std::uint32_t>(masks.size()));
      masks.push_back(m);
    }
  }
};

// Is some set smaller than d good? If so every coloring is vacuously good.
inline bool has_small_good(const SubsetTables& t, const GoodPredicate& good) {
  for (std::uint32_t s = 1; s < t.d && s <= t.n; ++s) {
    for (const auto& combo : lex_combinations(t.n, s)) {
      std::uint64_t m = 0;
      for (const auto i : combo) m |= std::uint64_t{1} << i;
      if (good(m)) return true;
    }
  }
  return false;
}

struct BadSearchOutcome {
  enum class Kind { exhausted, found, budget, aborted } kind = Kind::exhausted;
  std::vector<std::uint32_t> colors;
};

class BadColoringSearcher {
 public:
  BadColoringSearcher(const SubsetTables& tables, const GoodPredicate& good,
                      std::atomic<std::uint64_t>& steps, std::uint64_t step_limit,
                      const std::atomic<std::uint64_t>* best_block = nullptr,
                      std::uint64_t my_block = 0)
      : t_(tables),
        good_(good),
        steps_(steps),
        limit_(step_limit),
        best_block_(best_block),
        my_block_(my_block) {
    colors_.resize(t_.masks.size());
    hbits_.reserve(t_.n);
    combo_.reserve(t_.d);
  }

  // Explores all colorings extending `prefix` (colors of the first subsets in
  // lex order) and reports the lexicographically first bad one, if any.
  BadSearchOutcome run(const std::vector<std::uint32_t>& prefix) {
    for (std::size_t t = 0; t < prefix.size(); ++t) {
      colors_[t] = prefix[t];
      if (!count_step()) return {BadSearchOutcome::Kind::budget, {}};
      if (creates_good(t, prefix[t]))
        return {BadSearchOutcome::Kind::exhausted, {}};
    }
    switch (dfs(prefix.size())) {
      case kFound:
        return {BadSearchOutcome::Kind::found, colors_};
      case kBudget:
        return {BadSearchOutcome::Kind::budget, {}};
      case kAborted:
        return {BadSearchOutcome::Kind::aborted, {}};
      default:
        return {BadSearchOutcome::Kind::exhausted, {}};
    }
  }

 private:
  static constexpr int kNone = 0, kFound = 1, kBudget = 2, kAborted = 3;

  bool count_step() {
    return steps_.fetch_add(1, std::memory_order_relaxed) + 1 <= limit_;
  }

  int dfs(std::size_t t) {
    if (best_block_ &&
        best_block_->load(std::memory_order_relaxed) < my_block_)
      return kAborted;  // an earlier block already found a witness
    if (t == colors_.size()) return kFound;
    for (std::uint32_t c = 0; c < t_.k; ++c) {
      if (!count_step()) return kBudget;
      colors_[t] = c;
      if (creates_good(t, c)) continue;
      const int r = dfs(t + 1);
      if (r != kNone) return r;
    }
    return kNone;
  }

  // Would coloring subset index t with c complete a good set that is
  // homogeneous within the assigned prefix [0, t]?
  bool creates_good(std::size_t t, std::uint32_t c) {
    const std::uint64_t s = t_.masks[t];
    const std::uint64_t comp = t_.full & ~s;
    for (std::uint64_t x = comp;; x = (x - 1) & comp) {
      const std::uint64_t h = s | x;
      if (good_(h) && assigned_mono(h, t, c)) return true;
      if (x == 0) break;
    }
    return false;
  }

  bool assigned_mono(std::uint64_t h, std::size_t t, std::uint32_t c) {
    hbits_.clear();
    for (std::uint64_t m = h; m != 0; m &= m - 1)
      hbits_.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    const auto hs = static_cast<std::uint32_t>(hbits_.size());
    combo_.resize(t_.d);
    for (std::uint32_t i = 0; i < t_.d; ++i) combo_[i] = i;
    do {
      std::uint64_t sub = 0;
      for (std::uint32_t i = 0; i < t_.d; ++i)
        sub |= std::uint64_t{1} << hbits_[combo_[i]];
      const std::uint32_t r = t_.rank.find(sub)->second;
      if (r > t || colors_[r] != c) return false;
    } while (next_combination(combo_, hs));
    return true;
  }

  const SubsetTables& t_;
  const GoodPredicate& good_;
  std::atomic<std::uint64_t>& steps_;
  std::uint64_t limit_;
  const std::atomic<std::uint64_t>* best_block_;
  std::uint64_t my_block_;
  std::vector<std::uint32_t> colors_;
  std::vector<std::uint32_t> hbits_;
  std::vector<std::uint32_t> combo_;
};

struct BadSearchResult {
  enum class Kind { exhausted, found, budget } kind = Kind::exhausted;
  std::vector<std::uint32_t> colors;
  std::uint64_t steps = 0;
};

inline BadSearchResult search_bad_coloring(std::uint32_t n, std::uint32_t d,
                                           std::uint32_t k,
                                           const GoodPredicate& good,
                                           const SearchBudget& budget) {
  const SubsetTables tables(n, d, k);
  std::atomic<std::uint64_t> steps{0};
  const auto finish = [&steps](BadSearchResult r) {
    r.steps = steps.load();
    return r;
  };
  if (has_small_good(tables, good))
    return finish({BadSearchResult::Kind::exhausted, {}, 0});
  const std::size_t M = tables.masks.size();
  if (M == 0)  // the empty coloring is the only one, and nothing prunes it
    return finish({BadSearchResult::Kind::found, {}, 0});

  const unsigned threads = std::max(1u, budget.threads);
  if (threads == 1) {
    BadColoringSearcher searcher(tables, good, steps, budget.steps);
    const auto out = searcher.run({});
    if (out.kind == BadSearchOutcome::Kind::found)
      return finish({BadSearchResult::Kind::found, out.colors, 0});
    if (out.kind == BadSearchOutcome::Kind::budget)
      return finish({BadSearchResult::Kind::budget, {}, 0});
    return finish({BadSearchResult::Kind::exhausted, {}, 0});
  }

  // Block decomposition by the color prefix of the first t0 subsets.
  std::size_t t0 = 0;
  std::uint64_t blocks = 1;
  while (t0 < M && blocks * k <= 4096 && blocks < 8ull * threads) {
    blocks *= k;
    ++t0;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::vector<std::vector<std::uint32_t>> found_colors(blocks);
  std::vector<std::uint8_t> found(blocks, 0);
  std::vector<std::uint8_t> tripped(blocks, 0);
  const auto worker = [&]() {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      if (best.load() < b) continue;  // an earlier block already decided
      std::vector<std::uint32_t> prefix(t0);
      std::uint64_t rem = b;
      for (std::size_t i = t0; i-- > 0;) {
        prefix[i] = static_cast<std::uint32_t>(rem % k);
        rem /= k;
      }
      BadColoringSearcher searcher(tables, good, steps, budget.steps, &best, b);
      auto out = searcher.run(prefix);
      if (out.kind == BadSearchOutcome::Kind::found) {
        found_colors[b] = std::move(out.colors);
        found[b] = 1;
        std::uint64_t cur = best.load();
        while (b < cur && !best.compare_exchange_weak(cur, b)) {
        }
      } else if (out.kind == BadSearchOutcome::Kind::budget) {
        tripped[b] = 1;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  // Decide in block order: the first block that tripped or found wins, which
  // reproduces the sequential enumeration order.
  for (std::uint64_t b = 0; b < blocks; ++b) {
    if (tripped[b]) return finish({BadSearchResult::Kind::budget, {}, 0});
    if (found[b])
      return finish(
          {BadSearchResult::Kind::found, std::move(found_colors[b]), 0});
  }
  return finish({BadSearchResult::Kind::exhausted, {}, 0});
}

// Fast mask-level specializations of "H is good for F" over a ground vector.
inline GoodPredicate make_frt_good(const SizeFunction& F,
                                   std::vector<Nat> ground) {
  using Cf = SizeFunction::Cf;
  using Ui = SizeFunction::Ui;
  using Md = SizeFunction::Md;
  using Table = SizeFunction::Table;
  const auto& v = F.value();
  if (const auto* c = std::get_if<Cf>(&v)) {
    const Nat m = c->m;
    return [m](std::uint64_t mask) {
      return static_cast<Nat>(std::popcount(mask)) > m;
    };
  }
  if (const auto* u = std::get_if<Ui>(&v)) {
    const Nat m = u->m;
    return [m, g = std::move(ground)](std::uint64_t mask) {
      const Nat lo = g[static_cast<std::size_t>(std::countr_zero(mask))];
      return static_cast<Nat>(std::popcount(mask)) > std::max(lo, m);
    };
  }
  if (const auto* md = std::get_if<Md>(&v)) {
    const EvalFn f = md->f;
    const bool minus_one = md->minus_one;
    return [f, minus_one, g = std::move(ground)](std::uint64_t mask) {
      Nat val = f(g[static_cast<std::size_t>(std::countr_zero(mask))]);
      if (minus_one) val = val > 0 ? val - 1 : 0;
      return static_cast<Nat>(std::popcount(mask)) > val;
    };
  }
  const auto& t = std::get<Table>(v);
  std::vector<Nat> bits(ground.size());
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (ground[i] >= 64)
      throw DomainError("table size function: ground element must be below 64");
    bits[i] = Nat{1} << ground[i];
  }
  return [entries = t.entries, def = t.default_value,
          bits = std::move(bits)](std::uint64_t mask) {
    Nat code = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
      code |= bits[static_cast<std::size_t>(std::countr_zero(m))];
    const auto it = entries.find(code);
    const Nat val = it != entries.end() ? it->second : def;
    return static_cast<Nat>(std::popcount(mask)) > val;
  };
}

}  // namespace detail

// Does every k-coloring of d-subsets of [a, R] admit a homogeneous H with
// |H| > F(H)? Answers all_good / bad_coloring (with the lexicographically
// first bad coloring as witness) / not_found when the step budget trips.
inline SearchVerdict frt_holds_at(const SizeFunction& F, Nat d, Nat k, Nat a,
                                  Nat R, const SearchBudget& budget = {}) {
  if (d == 0 || k == 0) throw DomainError("frt_holds_at: d and k must be >= 1");
  if (a > R) throw DomainError("frt_holds_at: need a <= R");
  const Nat n = R - a + 1;
  if (n > 63) throw DomainError("frt_holds_at: interval larger than 63 points");
  std::vector<Nat> ground(n);
  for (Nat i = 0; i < n; ++i) ground[i] = a + i;
  const auto good = detail::make_frt_good(F, std::move(ground));
  auto res = detail::search_bad_coloring(static_cast<std::uint32_t>(n),
                                         static_cast<std::uint32_t>(d),
                                         static_cast<std::uint32_t>(k), good,
                                         budget);
  SearchVerdict v;
  v.stats.steps = res.steps;
  switch (res.kind) {
    case detail::BadSearchResult::Kind::exhausted:
      v.kind = VerdictKind::all_good;
      break;
    case detail::BadSearchResult::Kind::found:
      v.kind = VerdictKind::bad_coloring;
      v.witness.emplace(d, k, a, R, std::move(res.colors));
      break;
    case detail::BadSearchResult::Kind::budget:
      v.kind = VerdictKind::not_found;
      break;
  }
  return v;
}

struct WitnessResult {
  std::optional<Nat> R;  // least R in [a, R_max] with frt_holds_at all_good
  SearchStats stats;
};

// Scans R = a, a+1, ..., R_max and returns the first R at which every
// coloring is good. Throws BudgetError if a single check trips the budget.
inline WitnessResult min_frt_witness(const SizeFunction& F, Nat d, Nat k, Nat a,
                                     Nat R_max, const SearchBudget& budget = {}) {
  WitnessResult out;
  for (Nat r = a; r <= R_max; ++r) {
    const SearchVerdict v = frt_holds_at(F, d, k, a, r, budget);
    out.stats.steps += v.stats.steps;
    if (v.kind == VerdictKind::all_good) {
      out.R = r;
      return out;
    }
    if (v.kind == VerdictKind::not_found)
      throw BudgetError("min_frt_witness: step budget exceeded",
                        out.stats.steps);
  }
  return out;
}

// Full-scan re-verification that no nonempty H in the coloring's domain is
// both good and homogeneous. Intentionally independent of the pruned search.
inline bool coloring_admits_no_good_set(
    const SubsetColoring& C,
    const std::function<bool(const FiniteSet&)>& good) {
  const Nat n = C.domain_size();
  if (n > 25)
    throw DomainError("coloring_admits_no_good_set: domain too large to scan");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Nat> vals;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
      vals.push_back(C.a() + static_cast<Nat>(std::countr_zero(m)));
    const FiniteSet H(std::move(vals));
    if (good(H) && is_homogeneous(C, H)) return false;
  }
  return true;
}

// The good-set predicate |H| > F(H) in FiniteSet form.
inline std::function<bool(const FiniteSet&)> frt_good_set(const SizeFunction& F) {
  return [F](const FiniteSet& H) { return Nat{H.size()} > F.eval(H); };
}

// Reads off a table size function from a bad coloring: homogeneous sets map
// to |X| + 1, everything else to 0. The resulting F makes C's every
// homogeneous set fail |H| > F(H), so C stays bad for F.
inline SizeFunction counterexample_size_fn(const SubsetColoring& C,
                                           Nat max_domain_points = 16) {
  const Nat n = C.domain_size();
  if (n > max_domain_points)
    throw BudgetError("counterexample_size_fn: domain too large to materialize",
                      n);
  if (C.R() >= 64)
    throw DomainError("counterexample_size_fn: set codes need elements below 64");
  std::map<Nat, Nat> entries;
  entries[0] = 1;  // the empty set is vacuously homogeneous
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Nat> vals;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
      vals.push_back(C.a() + static_cast<Nat>(std::countr_zero(m)));
    FiniteSet H(std::move(vals));
    if (is_homogeneous(C, H)) entries[set_code(H)] = H.size() + 1;
  }
  return SizeFunction::table(std::move(entries), 0);
}

// ---------------------------------------------------------------------------
// Tree of bad colorings under restriction.

struct CompactnessLevel {
  Nat R = 0;
  // Bad colorings of d-subsets of [0, R], full color vectors in lex order.
  std::vector<std::vector<std::uint32_t>> colorings;
};

struct CompactnessTree {
  Nat d = 0;
  Nat k = 0;
  std::vector<CompactnessLevel> levels;  // levels[R] covers [0, R]

  // Restrictions of the lex-least level-R coloring to [0, 0], ..., [0, R].
  std::vector<std::vector<std::uint32_t>> representative_chain(Nat R) const;
};

// Colors of the d-subsets of [0, r_to], read out of a coloring of [0, R_from].
inline std::vector<std::uint32_t> restrict_coloring(
    const std::vector<std::uint32_t>& colors, Nat d, Nat R_from, Nat r_to) {
  if (r_to > R_from) throw DomainError("restrict_coloring: r_to > R_from");
  std::vector<std::uint32_t> out;
  const auto combos = detail::lex_combinations(
      static_cast<std::uint32_t>(R_from + 1), static_cast<std::uint32_t>(d));
  if (colors.size() != combos.size())
    throw DomainError("restrict_coloring: color vector has the wrong length");
  for (std::size_t i = 0; i < combos.size(); ++i)
    if (combos[i].empty() || combos[i].back() <= r_to)
      out.push_back(colors[i]);
  return out;
}

inline std::vector<std::vector<std::uint32_t>>
CompactnessTree::representative_chain(Nat R) const {
  if (R >= levels.size() || levels[R].colorings.empty())
    throw DomainError("representative_chain: level is absent or empty");
  const auto& rep = levels[R].colorings.front();
  std::vector<std::vector<std::uint32_t>> chain;
  for (Nat r = 0; r <= R; ++r)
    chain.push_back(restrict_coloring(rep, d, R, r));
  return chain;
}

// Builds, level by level, every bad coloring of [0, R] for R = 0..R_max.
// Children extend a parent by coloring the subsets that contain the new
// point R; a child is kept iff no good homogeneous set containing R appears
// (sets avoiding R were already ruled out in the parent). Throws BudgetError
// when the total number of stored nodes would exceed node_budget.
inline CompactnessTree build_compactness_tree(const SizeFunction& F, Nat d,
                                              Nat k, Nat R_max,
                                              Nat node_budget = Nat{1} << 20) {
  if (d == 0 || k == 0)
    throw DomainError("build_compactness_tree: d and k must be >= 1");
  if (R_max > 16)
    throw DomainError("build_compactness_tree: R_max larger than 16");
  CompactnessTree tree;
  tree.d = d;
  tree.k = k;
  Nat total = 0;
  std::vector<std::vector<std::uint32_t>> parents{{}};  // over the empty domain
  for (Nat R = 0; R <= R_max; ++R) {
    const auto n = static_cast<std::uint32_t>(R + 1);
    const detail::SubsetTables tables(n, static_cast<std::uint32_t>(d),
                                      static_cast<std::uint32_t>(k));
    std::vector<Nat> ground(n);
    for (Nat i = 0; i < n; ++i) ground[i] = i;
    const auto good = detail::make_frt_good(F, std::move(ground));
    // positions of subsets avoiding R (in parent lex order) / containing R
    std::vector<std::size_t> old_pos, new_pos;
    for (std::size_t i = 0; i < tables.masks.size(); ++i) {
      if (tables.masks[i] & (std::uint64_t{1} << R))
        new_pos.push_back(i);
      else
        old_pos.push_back(i);
    }
    const std::uint64_t rbit = std::uint64_t{1} << R;
    const std::uint64_t below = rbit - 1;
    // homogeneity of h under a full color vector
    const auto mono = [&tables](const std::vector<std::uint32_t>& colors,
                                std::uint64_t h) {
      if (static_cast<std::uint32_t>(std::popcount(h)) < tables.d) return true;
      std::vector<std::uint32_t> hbits;
      for (std::uint64_t m = h; m != 0; m &= m - 1)
        hbits.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
      std::vector<std::uint32_t> combo(tables.d);
      for (std::uint32_t i = 0; i < tables.d; ++i) combo[i] = i;
      bool first = true;
      std::uint32_t color = 0;
      do {
        std::uint64_t sub = 0;
        for (std::uint32_t i = 0; i < tables.d; ++i)
          sub |= std::uint64_t{1} << hbits[combo[i]];
        const std::uint32_t c = colors[tables.rank.find(sub)->second];
        if (first) {
          color = c;
          first = false;
        } else if (c != color) {
          return false;
        }
      } while (detail::next_combination(
          combo, static_cast<std::uint32_t>(hbits.size())));
      return true;
    };
    std::vector<std::vector<std::uint32_t>> children;
    std::vector<std::uint32_t> child(tables.masks.size());
    for (const auto& parent : parents) {
      for (std::size_t i = 0; i < old_pos.size(); ++i)
        child[old_pos[i]] = parent[i];
      std::vector<std::uint32_t> digits(new_pos.size(), 0);
      for (;;) {
        for (std::size_t j = 0; j < new_pos.size(); ++j)
          child[new_pos[j]] = digits[j];
        bool bad = true;
        for (std::uint64_t x = below;; x = (x - 1) & below) {
          const std::uint64_t h = x | rbit;
          if (good(h) && mono(child, h)) {
            bad = false;
            break;
          }
          if (x == 0) break;
        }
        if (bad) {
          if (++total > node_budget)
            throw BudgetError("build_compactness_tree: node budget exceeded",
                              total);
          children.push_back(child);
        }
        std::size_t i = digits.size();
        while (i > 0 && ++digits[i - 1] == k) {
          digits[i - 1] = 0;
          --i;
        }
        if (i == 0) break;
      }
    }
    std::sort(children.begin(), children.end());
    tree.levels.push_back({R, children});
    parents = tree.levels.back().colorings;
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Colorings over an arbitrary ground set, good = |X| >= min X.

struct KsWitness {
  FiniteSet ground;
  Nat d = 0;
  Nat c = 0;
  std::vector<std::uint32_t> colors;  // lex order of d-subsets of ground
};

struct KsVerdict {
  VerdictKind kind = VerdictKind::all_good;
  std::optional<KsWitness> witness;
  SearchStats stats;
};

// Does every c-coloring of d-subsets of A admit a homogeneous X with
// |X| >= min X? The empty A holds vacuously.
inline KsVerdict check_ks_instance(const FiniteSet& A, Nat d, Nat c,
                                   const SearchBudget& budget = {}) {
  if (d == 0 || c == 0)
    throw DomainError("check_ks_instance: d and c must be >= 1");
  if (A.empty()) return {};
  if (A.size() > 63)
    throw DomainError("check_ks_instance: ground set larger than 63 points");
  const std::vector<Nat>& g = A.elements();
  const detail::GoodPredicate good = [&g](std::uint64_t mask) {
    const Nat lo = g[static_cast<std::size_t>(std::countr_zero(mask))];
    return static_cast<Nat>(std::popcount(mask)) >= lo;
  };
  auto res = detail::search_bad_coloring(static_cast<std::uint32_t>(g.size()),
                                         static_cast<std::uint32_t>(d),
                                         static_cast<std::uint32_t>(c), good,
                                         budget);
  KsVerdict v;
  v.stats.steps = res.steps;
  switch (res.kind) {
    case detail::BadSearchResult::Kind::exhausted:
      v.kind = VerdictKind::all_good;
      break;
    case detail::BadSearchResult::Kind::found:
      v.kind = VerdictKind::bad_coloring;
      v.witness = KsWitness{A, d, c, std::move(res.colors)};
      break;
    case detail::BadSearchResult::Kind::budget:
      v.kind = VerdictKind::not_found;
      break;
  }
  return v;
}

}  // namespace ordlab
