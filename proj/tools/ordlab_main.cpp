// ordlab: ordinal calculator, largeness tools, window encoders, Ramsey-style
// witness searches, and the property-suite runner.
//
// Contract: stdout carries exactly one JSON payload per invocation (plus a
// trailing newline). Human-readable tables and timing go to stderr, behind
// --table. Exit codes: 0 ok, 1 no witness / violations found, 2 input error,
// 3 budget exceeded. Payload bytes are deterministic for fixed argv + files.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordlab/adjacent.hpp"
#include "ordlab/encoding.hpp"
#include "ordlab/errors.hpp"
#include "ordlab/fundamental.hpp"
#include "ordlab/json_io.hpp"
#include "ordlab/ordinal.hpp"
#include "ordlab/ramsey.hpp"
#include "ordlab/universe.hpp"
#include "ordlab/verify.hpp"

namespace {

using nlohmann::json;
using namespace ordlab;

constexpr int kExitOk = 0;
constexpr int kExitNoWitness = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

struct Outcome {
  json payload;
  int exit_code = kExitOk;
};

struct CommonFlags {
  bool table = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
  std::string json_out;
};

SearchBudget search_budget(const CommonFlags& common) {
  SearchBudget b;
  if (common.budget) b.steps = *common.budget;
  b.threads = common.threads;
  return b;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  return json::parse(in);  // json::parse_error reported as input error
}

// cf:M | ui:M | md:F | ph:F | table:FILE
SizeFunction parse_size_fn_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw DomainError(
        "size function spec must look like cf:M, ui:M, md:F, ph:F or "
        "table:FILE, got: " +
        spec);
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  const auto as_nat = [&](const std::string& s) -> Nat {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw DomainError("expected a natural number in size function spec: " +
                        spec);
    }
  };
  if (kind == "cf") return SizeFunction::cf(as_nat(arg));
  if (kind == "ui") return SizeFunction::ui(as_nat(arg));
  if (kind == "md") return SizeFunction::md(EvalFn::parse(arg));
  if (kind == "ph") return SizeFunction::ph(EvalFn::parse(arg));
  if (kind == "table") return json_io::size_fn_from_json(load_json_file(arg));
  throw DomainError("unknown size function kind: " + kind);
}

std::vector<Ordinal> parse_ordinal_args(const std::vector<std::string>& texts) {
  std::vector<Ordinal> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_ordinal(t));
  return out;
}

std::string compact_value(const json& v) {
  std::string s = v.dump();
  if (s.size() > 64) s = s.substr(0, 61) + "...";
  return s;
}

void render_table(const json& payload, double elapsed_ms, int exit_code,
                  std::ostream& os) {
  os << "+--------------------------------------\n";
  if (payload.is_object()) {
    for (const auto& [key, value] : payload.items())
      os << "| " << key << ": " << compact_value(value) << "\n";
  } else {
    os << "| " << compact_value(payload) << "\n";
  }
  os << "| exit: " << exit_code << ", elapsed: " << elapsed_ms << " ms\n";
  os << "+--------------------------------------\n";
}

int run(int argc, char** argv) {
  CLI::App app{"ordinal toolbox: calculator, largeness, window encodings, "
               "Ramsey witness searches, property suites"};
  app.require_subcommand(1);

  CommonFlags common;
  app.add_flag("--table", common.table,
               "render the payload as a table on stderr");
  app.add_option("--seed", common.seed,
                 "seed for randomized suites (default 0, echoed in payload)");
  app.add_option("--budget", common.budget,
                 "step/node budget override for searches");
  app.add_option("--threads", common.threads,
                 "worker threads for exhaustive searches (default 1)");
  app.add_option("--json-out", common.json_out,
                 "also write the JSON payload to this file");

  std::function<Outcome()> action;

  // ---- ord: calculator ----------------------------------------------------
  auto* ord = app.add_subcommand("ord", "ordinal calculator");
  ord->require_subcommand(1);
  ord->fallthrough();
  {
    auto* cmp = ord->add_subcommand("cmp", "compare two ordinals");
    cmp->fallthrough();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cmp->add_option("a", *a, "left ordinal")->required();
    cmp->add_option("b", *b, "right ordinal")->required();
    cmp->callback([&action, a, b] {
      action = [a, b]() -> Outcome {
        const Order o = compare(parse_ordinal(*a), parse_ordinal(*b));
        const char* name =
            o == Order::less ? "LT" : (o == Order::equal ? "EQ" : "GT");
        return {json{{"order", name}}};
      };
    });
  }
  {
    auto* mp = ord->add_subcommand("mp", "maximal data (mp, mc)");
    mp->fallthrough();
    auto a = std::make_shared<std::string>();
    mp->add_option("a", *a, "ordinal")->required();
    mp->callback([&action, a] {
      action = [a]() -> Outcome {
        const MaxData m = max_data(parse_ordinal(*a));
        return {json{{"mp", m.mp}, {"mc", m.mc}}};
      };
    });
  }
  {
    auto* cp = ord->add_subcommand("cp", "comparison data (cp, cc, ce)");
    cp->fallthrough();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    cp->add_option("a", *a, "left ordinal")->required();
    cp->add_option("b", *b, "right ordinal")->required();
    cp->callback([&action, a, b] {
      action = [a, b]() -> Outcome {
        const ComparisonData c =
            comparison_data(parse_ordinal(*a), parse_ordinal(*b));
        return {json{{"cp", c.cp},
                     {"cc", c.cc},
                     {"ce", format_ordinal(c.ce)}}};
      };
    });
  }
  {
    auto* fmt = ord->add_subcommand("fmt", "parse and reprint canonically");
    fmt->fallthrough();
    auto a = std::make_shared<std::string>();
    fmt->add_option("a", *a, "ordinal")->required();
    fmt->callback([&action, a] {
      action = [a]() -> Outcome {
        return {json{{"canonical", format_ordinal(parse_ordinal(*a))}}};
      };
    });
  }

  // ---- fs: one fundamental-sequence step ----------------------------------
  {
    auto* fs = app.add_subcommand("fs", "fundamental sequence step a[n]");
    fs->fallthrough();
    auto a = std::make_shared<std::string>();
    auto n = std::make_shared<Nat>(0);
    fs->add_option("a", *a, "ordinal (must be positive)")->required();
    fs->add_option("n", *n, "index")->required();
    fs->callback([&action, a, n] {
      action = [a, n]() -> Outcome {
        return {json{{"result", format_ordinal(fund_step(parse_ordinal(*a), *n))}}};
      };
    });
  }

  // ---- large: alpha-largeness ----------------------------------------------
  auto* large = app.add_subcommand("large", "alpha-largeness of finite sets");
  large->require_subcommand(1);
  large->fallthrough();
  {
    auto* check = large->add_subcommand("check", "is the given set alpha-large?");
    check->fallthrough();
    auto alpha = std::make_shared<std::string>();
    auto elems = std::make_shared<std::vector<Nat>>();
    check->add_option("--alpha", *alpha, "ordinal")->required();
    check->add_option("elements", *elems, "set elements");
    check->callback([&action, alpha, elems] {
      action = [alpha, elems]() -> Outcome {
        const Ordinal a = parse_ordinal(*alpha);
        const FiniteSet A = FiniteSet::from_values(*elems);
        return {json{{"alpha", format_ordinal(a)},
                     {"set", A.elements()},
                     {"large", is_alpha_large(a, A)}}};
      };
    });
  }
  {
    auto* find = large->add_subcommand(
        "find", "build an alpha-large set from f-images of start, start+1, ...");
    find->fallthrough();
    auto alpha = std::make_shared<std::string>();
    auto fn = std::make_shared<std::string>();
    auto start = std::make_shared<Nat>(0);
    find->add_option("--alpha", *alpha, "ordinal")->required();
    find->add_option("--f", *fn, "function: id, x+K, K*x or K*x+M")->required();
    find->add_option("--start", *start, "first argument fed to f");
    find->callback([&action, &common, alpha, fn, start] {
      action = [&common, alpha, fn, start]() -> Outcome {
        const FiniteSet A =
            find_alpha_large(parse_ordinal(*alpha), EvalFn::parse(*fn), *start,
                             common.budget.value_or(kDefaultStepBudget));
        return {json{{"set", A.elements()}}};
      };
    });
  }

  // ---- desc: descending sequences ------------------------------------------
  {
    auto* desc = app.add_subcommand(
        "desc", "descending sequence via fundamental-sequence steps");
    desc->fallthrough();
    auto alpha = std::make_shared<std::string>();
    auto length = std::make_shared<Nat>(10);
    auto index_fn = std::make_shared<std::string>("id");
    desc->add_option("--alpha", *alpha, "start ordinal")->required();
    desc->add_option("--length", *length, "maximum length (default 10)");
    desc->add_option("--index-fn", *index_fn,
                     "index function g for a[g(0)][g(1)]... (default id)");
    desc->callback([&action, alpha, length, index_fn] {
      action = [alpha, length, index_fn]() -> Outcome {
        const auto seq = descending_seq(parse_ordinal(*alpha), *length,
                                        EvalFn::parse(*index_fn));
        json out = json::array();
        for (const auto& a : seq) out.push_back(format_ordinal(a));
        return {json{{"seq", out}}};
      };
    });
  }

  // ---- encode: window code vectors ------------------------------------------
  {
    auto* enc = app.add_subcommand(
        "encode", "encode a tuple of ordinals as a code vector");
    enc->fallthrough();
    auto l = std::make_shared<Nat>(0);
    auto d = std::make_shared<Nat>(1);
    auto texts = std::make_shared<std::vector<std::string>>();
    enc->add_option("--l", *l, "level parameter");
    enc->add_option("--d", *d, "tuple arity")->required();
    enc->add_option("ordinals", *texts, "exactly d ordinals")->required();
    enc->callback([&action, l, d, texts] {
      action = [l, d, texts]() -> Outcome {
        const auto tuple = parse_ordinal_args(*texts);
        return {json(encode(*l, *d, tuple).entries())};
      };
    });
  }

  // ---- frt: Ramsey-style searches -------------------------------------------
  auto* frt = app.add_subcommand("frt", "finite Ramsey searches");
  frt->require_subcommand(1);
  frt->fallthrough();
  {
    auto* holds = frt->add_subcommand(
        "holds", "do all colorings of [a,R] admit a good homogeneous set?");
    holds->fallthrough();
    auto spec = std::make_shared<std::string>();
    auto d = std::make_shared<Nat>(1);
    auto k = std::make_shared<Nat>(2);
    auto a = std::make_shared<Nat>(0);
    auto R = std::make_shared<Nat>(0);
    holds->add_option("--size-fn", *spec, "cf:M | ui:M | md:F | ph:F | table:FILE")
        ->required();
    holds->add_option("--d", *d, "subset arity")->required();
    holds->add_option("--k", *k, "number of colors")->required();
    holds->add_option("--a", *a, "interval start");
    holds->add_option("--r", *R, "interval end")->required();
    holds->callback([&action, &common, spec, d, k, a, R] {
      action = [&common, spec, d, k, a, R]() -> Outcome {
        const SearchVerdict v = frt_holds_at(parse_size_fn_spec(*spec), *d, *k,
                                             *a, *R, search_budget(common));
        return {json_io::to_json(v),
                v.kind == VerdictKind::not_found ? kExitBudget : kExitOk};
      };
    });
  }
  {
    auto* minr = frt->add_subcommand(
        "min-r", "least R in [a, rmax] at which every coloring is good");
    minr->fallthrough();
    auto spec = std::make_shared<std::string>();
    auto d = std::make_shared<Nat>(1);
    auto k = std::make_shared<Nat>(2);
    auto a = std::make_shared<Nat>(0);
    auto rmax = std::make_shared<Nat>(10);
    minr->add_option("--size-fn", *spec, "cf:M | ui:M | md:F | ph:F | table:FILE")
        ->required();
    minr->add_option("--d", *d, "subset arity")->required();
    minr->add_option("--k", *k, "number of colors")->required();
    minr->add_option("--a", *a, "interval start");
    minr->add_option("--rmax", *rmax, "scan limit")->required();
    minr->callback([&action, &common, spec, d, k, a, rmax] {
      action = [&common, spec, d, k, a, rmax]() -> Outcome {
        const WitnessResult w = min_frt_witness(
            parse_size_fn_spec(*spec), *d, *k, *a, *rmax, search_budget(common));
        json payload{{"R", w.R ? json(*w.R) : json(nullptr)}};
        return {std::move(payload), w.R ? kExitOk : kExitNoWitness};
      };
    });
  }
  {
    auto* tree = frt->add_subcommand(
        "tree", "levels of bad colorings of [0,R], R = 0..rmax");
    tree->fallthrough();
    auto spec = std::make_shared<std::string>();
    auto d = std::make_shared<Nat>(1);
    auto k = std::make_shared<Nat>(2);
    auto rmax = std::make_shared<Nat>(4);
    tree->add_option("--size-fn", *spec, "cf:M | ui:M | md:F | ph:F | table:FILE")
        ->required();
    tree->add_option("--d", *d, "subset arity")->required();
    tree->add_option("--k", *k, "number of colors")->required();
    tree->add_option("--rmax", *rmax, "deepest level")->required();
    tree->callback([&action, &common, spec, d, k, rmax] {
      action = [&common, spec, d, k, rmax]() -> Outcome {
        const CompactnessTree t = build_compactness_tree(
            parse_size_fn_spec(*spec), *d, *k, *rmax,
            common.budget.value_or(std::uint64_t{1} << 20));
        return {json_io::to_json(t)};
      };
    });
  }
  {
    auto* cf = frt->add_subcommand(
        "counterexample-f",
        "size function defeated by exactly the given coloring");
    cf->fallthrough();
    auto file = std::make_shared<std::string>();
    cf->add_option("--coloring", *file, "subset coloring JSON file")->required();
    cf->callback([&action, file] {
      action = [file]() -> Outcome {
        const SubsetColoring C =
            json_io::subset_coloring_from_json(load_json_file(*file));
        return {json_io::to_json(counterexample_size_fn(C))};
      };
    });
  }
  {
    auto* ks = frt->add_subcommand(
        "ks", "relative largeness: homogeneous X with |X| >= min X");
    ks->fallthrough();
    auto d = std::make_shared<Nat>(2);
    auto c = std::make_shared<Nat>(2);
    auto elems = std::make_shared<std::vector<Nat>>();
    ks->add_option("--d", *d, "subset arity")->required();
    ks->add_option("--c", *c, "number of colors")->required();
    ks->add_option("elements", *elems, "ground set elements");
    ks->callback([&action, &common, d, c, elems] {
      action = [&common, d, c, elems]() -> Outcome {
        const KsVerdict v = check_ks_instance(FiniteSet::from_values(*elems),
                                              *d, *c, search_budget(common));
        return {json_io::to_json(v),
                v.kind == VerdictKind::not_found ? kExitBudget : kExitOk};
      };
    });
  }

  // ---- ar: adjacent Ramsey ---------------------------------------------------
  auto* ar = app.add_subcommand("ar", "adjacent Ramsey tools");
  ar->require_subcommand(1);
  ar->fallthrough();
  {
    auto* search = ar->add_subcommand(
        "search", "first adjacent witness of a vector-valued coloring");
    search->fallthrough();
    auto file = std::make_shared<std::string>();
    search->add_option("--coloring", *file, "adjacent coloring JSON file")
        ->required();
    search->callback([&action, file] {
      action = [file]() -> Outcome {
        const AdjacentColoring C =
            json_io::adjacent_coloring_from_json(load_json_file(*file));
        const auto w = ar_search(C);
        json payload{{"witness", w ? json(w->xs) : json(nullptr)}};
        return {std::move(payload), w ? kExitOk : kExitNoWitness};
      };
    });
  }
  {
    auto* from = ar->add_subcommand(
        "from-ordinals", "window-code coloring of an ordinal sequence");
    from->fallthrough();
    auto l = std::make_shared<Nat>(0);
    auto d = std::make_shared<Nat>(1);
    auto texts = std::make_shared<std::vector<std::string>>();
    from->add_option("--l", *l, "level parameter");
    from->add_option("--d", *d, "window arity")->required();
    from->add_option("ordinals", *texts, "the sequence")->required();
    from->callback([&action, l, d, texts] {
      action = [l, d, texts]() -> Outcome {
        return {json_io::to_json(
            ordinal_coloring(*l, *d, parse_ordinal_args(*texts)))};
      };
    });
  }
  {
    auto* lower = ar->add_subcommand(
        "lower-bound", "interval coloring whose good sets replay the windows");
    lower->fallthrough();
    auto l = std::make_shared<Nat>(0);
    auto d = std::make_shared<Nat>(1);
    auto R = std::make_shared<Nat>(0);
    auto texts = std::make_shared<std::vector<std::string>>();
    lower->add_option("--l", *l, "level parameter");
    lower->add_option("--d", *d, "window arity")->required();
    lower->add_option("--r", *R, "interval end (needs R+1 sequence entries)")
        ->required();
    lower->add_option("ordinals", *texts, "the sequence")->required();
    lower->callback([&action, l, d, R, texts] {
      action = [l, d, R, texts]() -> Outcome {
        return {json_io::to_json(
            lower_bound_coloring(*l, *d, parse_ordinal_args(*texts), *R))};
      };
    });
  }
  {
    auto* saph = ar->add_subcommand(
        "saph", "least R making every coloring admit a large-enough set");
    saph->fallthrough();
    auto d = std::make_shared<Nat>(1);
    auto c = std::make_shared<Nat>(1);
    auto k = std::make_shared<Nat>(1);
    auto m = std::make_shared<Nat>(0);
    auto fn = std::make_shared<std::string>("id");
    auto rmax = std::make_shared<Nat>(10);
    saph->add_option("--d", *d, "subset arity")->required();
    saph->add_option("--c", *c, "colors are 0..c")->required();
    saph->add_option("--k", *k, "minimum size and rank of the probe element")
        ->required();
    saph->add_option("--m", *m, "interval start");
    saph->add_option("--f", *fn, "threshold function of the k-th element");
    saph->add_option("--rmax", *rmax, "scan limit")->required();
    saph->callback([&action, &common, d, c, k, m, fn, rmax] {
      action = [&common, d, c, k, m, fn, rmax]() -> Outcome {
        const SaphResult r = saph_search(*d, *c, *k, *m, EvalFn::parse(*fn),
                                         *rmax, search_budget(common));
        json payload{{"R", r.R ? json(*r.R) : json(nullptr)}};
        return {std::move(payload), r.R ? kExitOk : kExitNoWitness};
      };
    });
  }
  {
    auto* bound = ar->add_subcommand(
        "bound-fn", "pointwise bound function derived from a coloring");
    bound->fallthrough();
    auto file = std::make_shared<std::string>();
    auto x = std::make_shared<Nat>(0);
    bound->add_option("--coloring", *file, "adjacent coloring JSON file")
        ->required();
    bound->add_option("--x", *x, "argument")->required();
    bound->callback([&action, file, x] {
      action = [file, x]() -> Outcome {
        const AdjacentColoring C =
            json_io::adjacent_coloring_from_json(load_json_file(*file));
        return {json{{"x", *x}, {"value", derive_bound_fn(C, *x)}}};
      };
    });
  }

  // ---- verify: property suites ------------------------------------------------
  {
    auto* verify = app.add_subcommand("verify", "run a property suite");
    verify->fallthrough();
    auto suite = std::make_shared<std::string>();
    auto universe = std::make_shared<std::string>("small");
    verify->add_option("--suite", *suite,
                       "ordinal-order | comparison-lemma | encoding-lemmas | "
                       "largeness | frt-consistency | ar-transfer")
        ->required();
    verify->add_option("--universe", *universe, "tiny | small (default small)");
    verify->callback([&action, &common, suite, universe] {
      action = [&common, suite, universe]() -> Outcome {
        const auto s = suite_from_name(*suite);
        if (!s) throw DomainError("unknown suite: " + *suite);
        const SuiteReport r = run_suite(*s, *universe, common.seed);
        return {json_io::to_json(r),
                r.violations == 0 ? kExitOk : kExitNoWitness};
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text on stdout, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << json{{"error", {{"kind", "usage"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitInputError;
  }

  Outcome outcome;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    outcome = action();
  } catch (const ParseError& e) {
    outcome.payload = json{{"error",
                            {{"kind", "parse"},
                             {"message", e.what()},
                             {"position", e.position()}}}};
    outcome.exit_code = kExitInputError;
  } catch (const BudgetError& e) {
    outcome.payload = json{
        {"error",
         {{"kind", "budget"}, {"message", e.what()}, {"steps_spent", e.spent()}}}};
    outcome.exit_code = kExitBudget;
  } catch (const json::parse_error& e) {
    outcome.payload =
        json{{"error", {{"kind", "parse"}, {"message", e.what()}}}};
    outcome.exit_code = kExitInputError;
  } catch (const DomainError& e) {
    outcome.payload =
        json{{"error", {{"kind", "domain"}, {"message", e.what()}}}};
    outcome.exit_code = kExitInputError;
  } catch (const Error& e) {
    outcome.payload =
        json{{"error", {{"kind", "domain"}, {"message", e.what()}}}};
    outcome.exit_code = kExitInputError;
  }
  const double elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - t0)
                                .count();

  const std::string text = outcome.payload.dump();
  std::cout << text << "\n";
  if (!common.json_out.empty()) {
    std::ofstream out(common.json_out);
    if (!out) {
      std::cerr << "cannot write " << common.json_out << "\n";
      return kExitInputError;
    }
    out << text << "\n";
  }
  if (common.table) render_table(outcome.payload, elapsed_ms, outcome.exit_code,
                                 std::cerr);
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
