#pragma once

// Fixed-length codes for descending tuples of small ordinals.
//
// A d-tuple of ordinals below w-tower(d, l+1) is encoded into 2d + l - 1
// naturals:
//   d = 1:  the coefficient vector (n_l, ..., n_0) of a = w^l*n_l + ... + n_0
//   d > 1:  (cp, cc) of the first pair, followed by the (d-1)-code of the
//           ce-values of all adjacent pairs.
//
// For tuples sorted in weakly descending order, coordinatewise <= of adjacent
// codes certifies the order (window_lemma_check), and every coordinate is
// bounded by max(mp, mc) of the first tuple entry.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ordlab/errors.hpp"
#include "ordlab/ordinal.hpp"

namespace ordlab {

class CodeVector {
 public:
  CodeVector(Nat d, Nat l, std::vector<Nat> entries)
      : d_(d), l_(l), entries_(std::move(entries)) {
    if (d_ == 0) throw DomainError("CodeVector: d must be >= 1");
    if (entries_.size() != length(d_, l_))
      throw DomainError("CodeVector: expected " +
                        std::to_string(length(d_, l_)) + " entries, got " +
                        std::to_string(entries_.size()));
  }

  static std::size_t length(Nat d, Nat l) {
    return static_cast<std::size_t>(2 * d + l - 1);
  }

  Nat d() const noexcept { return d_; }
  Nat l() const noexcept { return l_; }
  const std::vector<Nat>& entries() const noexcept { return entries_; }

  friend bool operator==(const CodeVector& a, const CodeVector& b) {
    return a.d_ == b.d_ && a.l_ == b.l_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const CodeVector& a, const CodeVector& b) {
    return !(a == b);
  }

 private:
  Nat d_;
  Nat l_;
  std::vector<Nat> entries_;
};

namespace detail {

inline void encode_into(Nat l, Nat d, std::span<const Ordinal> alphas,
                        std::vector<Nat>& out) {
  if (d == 1) {
    const Ordinal& alpha = alphas[0];
    const std::size_t base = out.size();
    out.resize(base + l + 1, 0);
    for (const auto& t : alpha.terms()) {
      // exponents here are finite since alpha < w^(l+1)
      const Nat e = t.exponent.finite_value();
      out[base + (l - e)] = t.coefficient;
    }
    return;
  }
  std::vector<Ordinal> exps;
  exps.reserve(alphas.size() - 1);
  for (std::size_t i = 0; i + 1 < alphas.size(); ++i) {
    const ComparisonData cd = comparison_data(alphas[i], alphas[i + 1]);
    if (i == 0) {
      out.push_back(cd.cp);
      out.push_back(cd.cc);
    }
    exps.push_back(cd.ce);
  }
  encode_into(l, d - 1, exps, out);
}

}  // namespace detail

// Encodes a d-tuple of ordinals below w-tower(d, l+1). Throws DomainError on
// arity mismatch or out-of-domain entries.
inline CodeVector encode(Nat l, Nat d, std::span<const Ordinal> alphas) {
  if (d == 0) throw DomainError("encode: d must be >= 1");
  if (alphas.size() != d)
    throw DomainError("encode: expected " + std::to_string(d) +
                      " ordinals, got " + std::to_string(alphas.size()));
  const Ordinal bound = omega_tower(d, l + 1);
  for (const Ordinal& a : alphas)
    if (compare(a, bound) != Order::less)
      throw DomainError("encode: " + format_ordinal(a) +
                        " is not below the domain bound " +
                        format_ordinal(bound));
  std::vector<Nat> entries;
  entries.reserve(CodeVector::length(d, l));
  detail::encode_into(l, d, alphas, entries);
  return CodeVector(d, l, std::move(entries));
}

// Coordinatewise <=. Both codes must have the same shape.
inline bool code_leq(const CodeVector& a, const CodeVector& b) {
  if (a.d() != b.d() || a.l() != b.l())
    throw DomainError("code_leq: mismatched code shapes");
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (a.entries()[i] > b.entries()[i]) return false;
  return true;
}

// For a (d+1)-tuple: checks that coordinatewise <= of the two length-d window
// codes only happens when the tuple does not strictly descend at the front,
// i.e. code_leq(code(a_1..a_d), code(a_2..a_d+1)) implies a_1 <= a_2.
inline bool window_lemma_check(Nat l, Nat d, std::span<const Ordinal> alphas) {
  if (alphas.size() != d + 1)
    throw DomainError("window_lemma_check: expected a (d+1)-tuple");
  const CodeVector u = encode(l, d, alphas.subspan(0, d));
  const CodeVector v = encode(l, d, alphas.subspan(1, d));
  if (!code_leq(u, v)) return true;
  return compare(alphas[0], alphas[1]) != Order::greater;
}

}  // namespace ordlab
