#pragma once

// Fundamental sequences and alpha-largeness.
//
// fund_step(a, n) is a[n], the n-th member of the standard fundamental
// sequence assignment:
//
//   (g + w^0 * c)[n] = g + (c - 1)
//   (g + w^b * c)[n] = g + w^b * (c - 1) + (w^b)[n]        for b > 0
//   (w^(b+1))[n]     = w^b * n                             (0 when n = 0)
//   (w^l)[n]         = w^(l[n])                            for limit l
//
// A finite set A = {a_0 < a_1 < ...} is a-large when folding a through its
// elements in increasing order reaches 0: a, a[a_0], a[a_0][a_1], ...
// Once the fold hits 0 it stays there (0[m] = 0), so supersets keep largeness.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordlab/errors.hpp"
#include "ordlab/ordinal.hpp"

namespace ordlab {

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

// An immutable strictly increasing set of naturals.
class FiniteSet {
 public:
  FiniteSet() = default;

  // `elements` must be strictly increasing.
  explicit FiniteSet(std::vector<Nat> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 1; i < elements_.size(); ++i)
      if (elements_[i - 1] >= elements_[i])
        throw DomainError("FiniteSet: elements must be strictly increasing");
  }

  // Sorts and deduplicates.
  static FiniteSet from_values(std::vector<Nat> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    FiniteSet out;
    out.elements_ = std::move(values);
    return out;
  }

  const std::vector<Nat>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  Nat min() const {
    if (empty()) throw DomainError("FiniteSet::min: empty set");
    return elements_.front();
  }
  Nat max() const {
    if (empty()) throw DomainError("FiniteSet::max: empty set");
    return elements_.back();
  }

  bool contains(Nat x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
  }

  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator!=(const FiniteSet& a, const FiniteSet& b) {
    return !(a == b);
  }

 private:
  std::vector<Nat> elements_;
};

inline Ordinal fund_step(const Ordinal& a, Nat n) {
  if (a.is_zero())
    throw DomainError("fund_step: 0 has no fundamental sequence");
  std::vector<Ordinal::Term> terms = a.terms();
  Ordinal::Term last = std::move(terms.back());
  terms.pop_back();
  if (last.exponent.is_zero()) {
    // g + c  ->  g + (c - 1)
    if (last.coefficient > 1)
      terms.push_back({Ordinal(), last.coefficient - 1});
    return Ordinal::from_terms(std::move(terms));
  }
  if (last.coefficient > 1)
    terms.push_back({last.exponent, last.coefficient - 1});
  if (last.exponent.is_successor()) {
    // (w^(b+1))[n] = w^b * n
    if (n > 0) {
      std::vector<Ordinal::Term> bt = last.exponent.terms();
      if (bt.back().coefficient > 1)
        --bt.back().coefficient;
      else
        bt.pop_back();
      terms.push_back({Ordinal::from_terms(std::move(bt)), n});
    }
  } else {
    // (w^l)[n] = w^(l[n]); l[n] may be 0, giving w^0 = 1
    terms.push_back({fund_step(last.exponent, n), 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

// Evaluable functions on the naturals: identity, affine k*x + m, or an
// explicit lookup table indexed by the argument. The textual forms accepted
// by parse() are "id", "x+K", "K*x+M" and "K*x".
class EvalFn {
 public:
  EvalFn() = default;  // identity

  static EvalFn identity() { return EvalFn(); }

  static EvalFn affine(Nat k, Nat m) {
    EvalFn out;
    out.k_ = k;
    out.m_ = m;
    return out;
  }

  static EvalFn table(std::vector<Nat> values) {
    EvalFn out;
    out.is_table_ = true;
    out.table_ = std::move(values);
    return out;
  }

  static EvalFn parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s += c;
    if (s == "id" || s == "x") return identity();
    const auto star = s.find('*');
    const auto plus = s.find('+');
    try {
      if (star != std::string::npos) {
        // K*x or K*x+M
        const Nat k = parse_component(s.substr(0, star));
        std::string rest = s.substr(star + 1);
        if (rest.rfind("x", 0) != 0)
          throw DomainError("expected x after *");
        rest = rest.substr(1);
        Nat m = 0;
        if (!rest.empty()) {
          if (rest[0] != '+') throw DomainError("expected + after x");
          m = parse_component(rest.substr(1));
        }
        return affine(k, m);
      }
      if (plus != std::string::npos && s.rfind("x+", 0) == 0)
        return affine(1, parse_component(s.substr(2)));
    } catch (const DomainError&) {
      // fall through to the generic error below
    }
    throw ParseError("unrecognized function (expected id, x+K, K*x+M or K*x): " +
                         std::string(text),
                     0);
  }

  Nat operator()(Nat x) const {
    if (is_table_) {
      if (x >= table_.size())
        throw DomainError("table function: argument " + std::to_string(x) +
                          " outside table of size " +
                          std::to_string(table_.size()));
      return table_[x];
    }
    if (x != 0 && k_ != 0 && k_ > (std::numeric_limits<Nat>::max() - m_) / x)
      throw DomainError("function value overflows");
    return k_ * x + m_;
  }

  bool is_table() const noexcept { return is_table_; }
  const std::vector<Nat>& table_values() const noexcept { return table_; }

  // Canonical textual form (tables print as "table[N]").
  std::string describe() const {
    if (is_table_) return "table[" + std::to_string(table_.size()) + "]";
    if (k_ == 1 && m_ == 0) return "id";
    if (k_ == 1) return "x+" + std::to_string(m_);
    if (m_ == 0) return std::to_string(k_) + "*x";
    return std::to_string(k_) + "*x+" + std::to_string(m_);
  }

 private:
  static Nat parse_component(const std::string& s) {
    if (s.empty()) throw DomainError("empty number");
    Nat out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw DomainError("expected a number");
      const Nat digit = static_cast<Nat>(c - '0');
      if (out > (std::numeric_limits<Nat>::max() - digit) / 10)
        throw DomainError("number too large");
      out = out * 10 + digit;
    }
    return out;
  }

  bool is_table_ = false;
  Nat k_ = 1;
  Nat m_ = 0;
  std::vector<Nat> table_;
};

// Folds a through A's elements in increasing order; true iff the fold
// reaches 0. Uses the convention 0[m] = 0.
inline bool is_alpha_large(const Ordinal& a, const FiniteSet& A) {
  Ordinal cur = a;
  for (Nat x : A) {
    if (cur.is_zero()) break;
    cur = fund_step(cur, x);
  }
  return cur.is_zero();
}

// Greedily builds the a-large set {f(start), f(start+1), ...} by stepping
// until the fold reaches 0. Requires f strictly increasing on the probed
// range (checked as it goes). Throws BudgetError after step_budget steps.
inline FiniteSet find_alpha_large(const Ordinal& a, const EvalFn& f, Nat start,
                                  std::uint64_t step_budget = kDefaultStepBudget) {
  if (a.is_zero()) return FiniteSet();
  std::vector<Nat> elems;
  Ordinal cur = a;
  Nat prev = 0;
  bool have_prev = false;
  for (std::uint64_t steps = 0;; ++steps) {
    if (steps >= step_budget)
      throw BudgetError("find_alpha_large: step budget exceeded", steps);
    const Nat fi = f(start + steps);
    if (have_prev && fi <= prev)
      throw DomainError(
          "find_alpha_large: f must be strictly increasing on the probed range");
    prev = fi;
    have_prev = true;
    cur = fund_step(cur, fi);
    elems.push_back(fi);
    if (cur.is_zero()) return FiniteSet(std::move(elems));
  }
}

// The descending sequence a, a[g(0)], a[g(0)][g(1)], ... truncated at
// `length` entries or at the first 0, whichever comes first.
inline std::vector<Ordinal> descending_seq(const Ordinal& a, std::size_t length,
                                           const EvalFn& index_fn) {
  if (a.is_zero())
    throw DomainError("descending_seq: start ordinal must be positive");
  if (length == 0) throw DomainError("descending_seq: length must be >= 1");
  std::vector<Ordinal> out{a};
  for (std::size_t i = 0; out.size() < length && !out.back().is_zero(); ++i)
    out.push_back(fund_step(out.back(), index_fn(i)));
  return out;
}

}  // namespace ordlab
