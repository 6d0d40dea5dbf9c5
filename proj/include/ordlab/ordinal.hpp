#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// An Ordinal is a finite sequence of terms w^e * c with strictly decreasing
// ordinal exponents e and coefficients c >= 1; the empty sequence is 0.
// Values are immutable after construction and safe to share across threads.
//
// Besides ordering, this header exposes the first-difference comparison data
// (cp, cc, ce) and the recursive maxima (mp, mc) of an ordinal, the w-tower
// builders, and a parser/printer for a small textual syntax:
//
//   ordinal := term ("+" term)* | "0"
//   term    := "w" ["^" factor] ["*" nat] | nat        (nat >= 1 inside terms)
//   factor  := nat | "w" | "(" ordinal ")"
//
// The printer emits canonical text: no "^1", "*1" or "+0", single-level
// exponents unparenthesized ("w^w", "w^2"), deeper ones parenthesized.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordlab/errors.hpp"

namespace ordlab {

using Nat = std::uint64_t;

enum class Order { less, equal, greater };

// Guards recursion while parsing and tower height while building.
inline constexpr std::size_t kDefaultDepthBound = 32;

class Ordinal {
 public:
  struct Term;

  Ordinal();                 // zero
  explicit Ordinal(Nat n);   // the finite ordinal n
  Ordinal(const Ordinal& other);
  Ordinal(Ordinal&& other) noexcept;
  Ordinal& operator=(const Ordinal& other);
  Ordinal& operator=(Ordinal&& other) noexcept;
  ~Ordinal();

  static Ordinal omega();

  // Builds an ordinal from CNF terms. Throws DomainError unless exponents
  // strictly decrease and every coefficient is >= 1.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept;
  // True for 0 and for w^0 * n, i.e. the ordinal is a natural number.
  bool is_finite() const noexcept;
  // The natural number this ordinal denotes; DomainError if not finite.
  Nat finite_value() const;
  bool is_successor() const noexcept;  // > 0 with a trailing finite part
  bool is_limit() const noexcept;      // > 0 and not a successor
  // Exponent nesting depth: 0 for 0, 1 for finite ordinals, 1 + max over
  // exponent depths otherwise.
  std::size_t depth() const noexcept;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend bool operator!=(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Nat coefficient = 0;

  friend bool operator==(const Term& a, const Term& b) {
    return a.coefficient == b.coefficient && a.exponent == b.exponent;
  }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
};

inline Ordinal::Ordinal() = default;
inline Ordinal::Ordinal(const Ordinal&) = default;
inline Ordinal::Ordinal(Ordinal&&) noexcept = default;
inline Ordinal& Ordinal::operator=(const Ordinal&) = default;
inline Ordinal& Ordinal::operator=(Ordinal&&) noexcept = default;
inline Ordinal::~Ordinal() = default;

inline Ordinal::Ordinal(Nat n) {
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

inline bool Ordinal::is_zero() const noexcept { return terms_.empty(); }

inline bool Ordinal::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

inline Nat Ordinal::finite_value() const {
  if (terms_.empty()) return 0;
  if (!is_finite()) throw DomainError("finite_value: ordinal is not finite");
  return terms_[0].coefficient;
}

inline bool Ordinal::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

inline bool Ordinal::is_limit() const noexcept {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

inline std::size_t Ordinal::depth() const noexcept {
  std::size_t out = 0;
  for (const Term& t : terms_) out = std::max(out, 1 + t.exponent.depth());
  return out;
}

inline bool operator==(const Ordinal& a, const Ordinal& b) {
  return a.terms_ == b.terms_;
}
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return !(a == b); }

inline Order compare(const Ordinal& a, const Ordinal& b) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const std::size_t n = std::min(at.size(), bt.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Order e = compare(at[i].exponent, bt[i].exponent);
    if (e != Order::equal) return e;
    if (at[i].coefficient != bt[i].coefficient)
      return at[i].coefficient < bt[i].coefficient ? Order::less
                                                   : Order::greater;
  }
  if (at.size() == bt.size()) return Order::equal;
  return at.size() < bt.size() ? Order::less : Order::greater;
}

inline bool operator<(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Order::less;
}
inline bool operator>(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) == Order::greater;
}
inline bool operator<=(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != Order::greater;
}
inline bool operator>=(const Ordinal& a, const Ordinal& b) {
  return compare(a, b) != Order::less;
}

inline Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0)
      throw DomainError("from_terms: coefficients must be >= 1");
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != Order::greater)
      throw DomainError("from_terms: exponents must strictly decrease");
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

inline Ordinal Ordinal::omega() {
  return from_terms({Term{Ordinal(1), 1}});
}

// First-difference data of an ordered pair (a, b): cp is the 1-based index of
// the first position where the term lists differ (0 if a == b), and cc/ce are
// a's coefficient/exponent there. When a's list ends first, the first missing
// position counts as the difference and a contributes cc = 0, ce = 0.
struct ComparisonData {
  Nat cp = 0;
  Nat cc = 0;
  Ordinal ce;
};

inline ComparisonData comparison_data(const Ordinal& a, const Ordinal& b) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  const std::size_t n = std::max(at.size(), bt.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < at.size() && i < bt.size() && at[i] == bt[i]) continue;
    ComparisonData out;
    out.cp = i + 1;
    if (i < at.size()) {
      out.cc = at[i].coefficient;
      out.ce = at[i].exponent;
    }
    return out;
  }
  return {};
}

// Recursive maxima over the whole term tree: mp bounds the number of terms at
// any nesting level, mc the coefficients. By convention mp(0) = 1, mc(0) = 0.
struct MaxData {
  Nat mp = 1;
  Nat mc = 0;
};

inline MaxData max_data(const Ordinal& a) {
  if (a.is_zero()) return {};
  MaxData out{a.terms().size(), 0};
  for (const auto& t : a.terms()) {
    out.mc = std::max(out.mc, t.coefficient);
    const MaxData sub = max_data(t.exponent);
    out.mp = std::max(out.mp, sub.mp);
    out.mc = std::max(out.mc, sub.mc);
  }
  return out;
}

// w-towers: omega_tower(0, l) = l and omega_tower(n + 1, l) = w^omega_tower(n, l).
// Throws DomainError once the nesting depth would exceed depth_bound.
inline Ordinal omega_tower(Nat n, Nat l,
                           std::size_t depth_bound = kDefaultDepthBound) {
  const Nat base_depth = l > 0 ? 1 : 0;
  if (n > depth_bound || n + base_depth > depth_bound)
    throw DomainError("omega_tower: depth bound exceeded");
  Ordinal cur(l);
  for (Nat i = 0; i < n; ++i)
    cur = Ordinal::from_terms({Ordinal::Term{std::move(cur), 1}});
  return cur;
}

namespace detail {

class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t depth_bound)
      : text_(text), depth_bound_(depth_bound) {}

  Ordinal parse() {
    Ordinal out = parse_ordinal();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("syntax error: unexpected trailing input", pos_);
    return out;
  }

 private:
  Ordinal parse_ordinal() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      return Ordinal();
    }
    std::vector<Ordinal::Term> terms;
    std::vector<std::size_t> starts;
    starts.push_back(pos_);
    terms.push_back(parse_term());
    skip_ws();
    while (eat('+')) {
      skip_ws();
      starts.push_back(pos_);
      terms.push_back(parse_term());
      skip_ws();
    }
    for (std::size_t i = 1; i < terms.size(); ++i) {
      if (compare(terms[i - 1].exponent, terms[i].exponent) != Order::greater)
        throw ParseError(
            "canonicity error: exponents must strictly decrease left to right",
            starts[i]);
    }
    return Ordinal::from_terms(std::move(terms));
  }

  Ordinal::Term parse_term() {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      Ordinal exp(1);
      skip_ws();
      if (eat('^')) exp = parse_factor();
      Nat coeff = 1;
      skip_ws();
      if (eat('*')) {
        skip_ws();
        const std::size_t cpos = pos_;
        coeff = parse_nat();
        if (coeff == 0)
          throw ParseError("canonicity error: coefficient must be >= 1", cpos);
      }
      return {std::move(exp), coeff};
    }
    if (is_digit(peek())) {
      const std::size_t npos = pos_;
      const Nat n = parse_nat();
      if (n == 0)
        throw ParseError("canonicity error: zero term (write the whole ordinal as \"0\")",
                         npos);
      return {Ordinal(), n};
    }
    throw ParseError("syntax error: expected a term", pos_);
  }

  Ordinal parse_factor() {
    skip_ws();
    if (depth_ >= depth_bound_)
      throw ParseError("nesting depth bound exceeded", pos_);
    ++depth_;
    Ordinal out;
    if (is_digit(peek())) {
      out = Ordinal(parse_nat());  // exponent 0 is fine here: w^0 == 1
    } else if (peek() == 'w') {
      ++pos_;
      out = Ordinal::omega();
    } else if (eat('(')) {
      out = parse_ordinal();
      skip_ws();
      if (!eat(')')) throw ParseError("syntax error: expected ')'", pos_);
    } else {
      throw ParseError("syntax error: expected an exponent", pos_);
    }
    --depth_;
    return out;
  }

  Nat parse_nat() {
    skip_ws();
    if (!is_digit(peek()))
      throw ParseError("syntax error: expected a number", pos_);
    Nat out = 0;
    while (is_digit(peek())) {
      const Nat digit = static_cast<Nat>(peek() - '0');
      if (out > (std::numeric_limits<Nat>::max() - digit) / 10)
        throw ParseError("number too large", pos_);
      out = out * 10 + digit;
      ++pos_;
    }
    return out;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  std::size_t depth_bound_;
};

}  // namespace detail

inline Ordinal parse_ordinal(std::string_view text,
                             std::size_t depth_bound = kDefaultDepthBound) {
  return detail::OrdinalParser(text, depth_bound).parse();
}

inline std::string format_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) {
      out += '^';
      if (t.exponent.is_finite())
        out += std::to_string(t.exponent.finite_value());
      else if (t.exponent == Ordinal::omega())
        out += 'w';
      else
        out += '(' + format_ordinal(t.exponent) + ')';
    }
    if (t.coefficient != 1) {
      out += '*';
      out += std::to_string(t.coefficient);
    }
  }
  return out;
}

}  // namespace ordlab
