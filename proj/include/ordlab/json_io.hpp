#pragma once

// JSON readers/writers for the CLI payloads. Writers produce plain nlohmann
// values (dump() then gives key-sorted, deterministic text); readers validate
// shape and throw DomainError with a usable message.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordlab/adjacent.hpp"
#include "ordlab/ordinal.hpp"
#include "ordlab/ramsey.hpp"
#include "ordlab/verify.hpp"

namespace ordlab::json_io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw DomainError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline Nat nat_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned())
    throw DomainError(std::string("field \"") + key +
                      "\" must be a nonnegative integer");
  return v.get<Nat>();
}

inline std::vector<std::uint32_t> color_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array())
    throw DomainError(std::string("field \"") + key + "\" must be an array");
  std::vector<std::uint32_t> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number_unsigned())
      throw DomainError(std::string("field \"") + key +
                        "\" must hold nonnegative integers");
    out.push_back(e.get<std::uint32_t>());
  }
  return out;
}

}  // namespace detail

inline json to_json(const FiniteSet& s) { return json(s.elements()); }

inline json to_json(const SubsetColoring& c) {
  return json{{"d", c.d()},
              {"k", c.k()},
              {"a", c.a()},
              {"R", c.R()},
              {"colors", c.colors()}};
}

inline SubsetColoring subset_coloring_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("coloring must be a JSON object");
  return SubsetColoring(detail::nat_field(j, "d"), detail::nat_field(j, "k"),
                        detail::nat_field(j, "a"), detail::nat_field(j, "R"),
                        detail::color_list(j, "colors"));
}

inline json to_json(const AdjacentColoring& c) {
  json values = json::array();
  for (std::size_t i = 0; i < c.values().size(); ++i)
    values.push_back(c.values()[i]);
  return json{{"d", c.d()}, {"r", c.r()}, {"N", c.N()}, {"values", values}};
}

inline AdjacentColoring adjacent_coloring_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("coloring must be a JSON object");
  const json& vals = detail::field(j, "values");
  if (!vals.is_array())
    throw DomainError("field \"values\" must be an array of arrays");
  std::vector<std::vector<Nat>> values;
  values.reserve(vals.size());
  for (const auto& row : vals) {
    if (!row.is_array())
      throw DomainError("field \"values\" must be an array of arrays");
    std::vector<Nat> v;
    v.reserve(row.size());
    for (const auto& e : row) {
      if (!e.is_number_unsigned())
        throw DomainError("coloring values must be nonnegative integers");
      v.push_back(e.get<Nat>());
    }
    values.push_back(std::move(v));
  }
  return AdjacentColoring(detail::nat_field(j, "d"), detail::nat_field(j, "r"),
                          detail::nat_field(j, "N"), std::move(values));
}

inline const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::all_good:
      return "ALL_GOOD";
    case VerdictKind::bad_coloring:
      return "BAD_COLORING";
    case VerdictKind::not_found:
      return "NOT_FOUND";
  }
  return "?";
}

// Step counts are deliberately absent from payloads: under multi-threaded
// search they depend on cancellation timing, and payload bytes must not.
inline json to_json(const SearchVerdict& v) {
  json j{{"verdict", verdict_name(v.kind)}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

inline json to_json(const KsWitness& w) {
  return json{{"ground", w.ground.elements()},
              {"d", w.d},
              {"c", w.c},
              {"colors", w.colors}};
}

inline json to_json(const KsVerdict& v) {
  json j{{"verdict", verdict_name(v.kind)}};
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

inline json to_json(const SizeFunction& F) {
  struct Visitor {
    json operator()(const SizeFunction::Cf& c) const {
      return json{{"kind", "cf"}, {"m", c.m}};
    }
    json operator()(const SizeFunction::Ui& u) const {
      return json{{"kind", "ui"}, {"m", u.m}};
    }
    json operator()(const SizeFunction::Md& m) const {
      return json{{"kind", "md"},
                  {"f", m.f.describe()},
                  {"minus_one", m.minus_one}};
    }
    json operator()(const SizeFunction::Table& t) const {
      json entries = json::array();
      for (const auto& [code, value] : t.entries) {
        std::vector<Nat> set;
        for (Nat b = 0; b < 64; ++b)
          if (code >> b & 1) set.push_back(b);
        entries.push_back(json{{"set", set}, {"value", value}});
      }
      return json{{"kind", "table"},
                  {"default", t.default_value},
                  {"entries", entries}};
    }
  };
  return std::visit(Visitor{}, F.value());
}

inline SizeFunction size_fn_from_json(const json& j) {
  if (!j.is_object()) throw DomainError("size function must be a JSON object");
  const json& kind = detail::field(j, "kind");
  if (!kind.is_string())
    throw DomainError("field \"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "cf") return SizeFunction::cf(detail::nat_field(j, "m"));
  if (k == "ui") return SizeFunction::ui(detail::nat_field(j, "m"));
  if (k == "md") {
    const json& f = detail::field(j, "f");
    if (!f.is_string()) throw DomainError("field \"f\" must be a string");
    const EvalFn fn = EvalFn::parse(f.get<std::string>());
    const auto it = j.find("minus_one");
    const bool minus_one =
        it != j.end() && it->is_boolean() && it->get<bool>();
    return minus_one ? SizeFunction::ph(fn) : SizeFunction::md(fn);
  }
  if (k == "table") {
    const json& entries = detail::field(j, "entries");
    if (!entries.is_array())
      throw DomainError("field \"entries\" must be an array");
    std::map<Nat, Nat> table;
    for (const auto& e : entries) {
      if (!e.is_object())
        throw DomainError("table entries must be objects with set and value");
      const json& set = detail::field(e, "set");
      if (!set.is_array())
        throw DomainError("table entry field \"set\" must be an array");
      Nat code = 0;
      for (const auto& x : set) {
        if (!x.is_number_unsigned() || x.get<Nat>() >= 64)
          throw DomainError("table entry sets must hold integers below 64");
        code |= Nat{1} << x.get<Nat>();
      }
      table[code] = detail::nat_field(e, "value");
    }
    return SizeFunction::table(std::move(table),
                               detail::nat_field(j, "default"));
  }
  throw DomainError("unknown size function kind: " + k);
}

inline json to_json(const SuiteReport& r) {
  return json{{"suite", r.suite},
              {"universe", r.universe},
              {"seed", r.seed},
              {"cases", r.cases},
              {"violations", r.violations},
              {"violation_details", r.violation_details},
              {"notes", r.exploratory_notes}};
}

inline json to_json(const CompactnessTree& t) {
  json levels = json::array();
  for (const auto& level : t.levels) {
    json entry{{"R", level.R},
               {"count", level.colorings.size()}};
    if (level.colorings.empty()) {
      entry["chain"] = nullptr;
    } else {
      json chain = json::array();
      for (const auto& colors : t.representative_chain(level.R))
        chain.push_back(colors);
      entry["chain"] = chain;
    }
    levels.push_back(std::move(entry));
  }
  return json{{"d", t.d}, {"k", t.k}, {"levels", levels}};
}

}  // namespace ordlab::json_io
