// Command-line front end: verify, sweep, ct, tournaments, lemma.
//
// Exit codes: 0 when nothing mismatched, 1 on any MISMATCH, 2 on invalid input.

#include "ctw/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ctw;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

enum class Format { Json, Tsv, Pretty };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"tsv", Format::Tsv}, {"pretty", Format::Pretty}};

struct Common {
  Format format = Format::Json;
  std::optional<std::uint64_t> ceiling;
  int jobs = 1;

  std::uint64_t resolved_ceiling() const {
    if (ceiling) return *ceiling;
    if (const char* env = std::getenv("CT_WORKBENCH_CEILING")) {
      const auto value = io::parse_int_list(env);
      if (value.size() != 1 || value[0] < 1) throw io::InputError("CT_WORKBENCH_CEILING must be a positive integer");
      return static_cast<std::uint64_t>(value[0]);
    }
    return kDefaultTermCeiling;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_jobs) {
  cmd->add_option("--format", c.format, "Output format")->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_option("--ceiling", c.ceiling, "Term-count ceiling (overrides CT_WORKBENCH_CEILING)")
      ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
  if (with_jobs) cmd->add_option("--jobs,-j", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io::InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Inline JSON when the text looks like JSON, otherwise a file path.
std::string json_or_file(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  return read_file(arg);
}

/// Invalid instances count as invalid input only for `verify`; a sweep never generates them.
int emit_reports(const std::vector<VerificationReport>& reports, const Format format, bool with_summary,
                 const SweepSummary& summary, bool invalid_is_error) {
  if (format == Format::Tsv) std::cout << io::tsv_header() << '\n';
  for (const auto& r : reports) {
    switch (format) {
      case Format::Json: std::cout << io::to_json(r).dump() << '\n'; break;
      case Format::Tsv: std::cout << io::to_tsv(r) << '\n'; break;
      case Format::Pretty: std::cout << io::to_pretty(r) << '\n'; break;
    }
  }
  if (with_summary) {
    if (format == Format::Json) {
      std::cout << io::to_json(summary).dump() << '\n';
    } else {
      std::cout << (format == Format::Tsv ? "# " : "") << io::to_pretty(summary) << '\n';
    }
  }
  if (summary.mismatch > 0) return kExitMismatch;
  if (invalid_is_error)
    for (const auto& r : reports)
      if (r.instance.invalid_reason()) return kExitInvalid;
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string theorem;
  std::string a;
  std::optional<int> n;
  std::string q;
  std::string sigma;
  std::string instances;
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<IdentityInstance> instances;
  const bool inline_given = !args.a.empty() || !args.theorem.empty();
  if (!args.instances.empty()) {
    if (inline_given) throw io::InputError("--instances cannot be combined with --theorem/--a");
    instances = io::instances_from_text(json_or_file(args.instances));
  } else {
    if (args.theorem.empty()) throw io::InputError("--theorem is required (or use --instances)");
    json j{{"theorem", args.theorem}, {"a", io::parse_int_list(args.a)}};
    if (args.n) j["n"] = *args.n;
    if (!args.q.empty()) j["Q"] = io::parse_json(args.q);
    if (!args.sigma.empty()) j["sigma"] = io::parse_int_list(args.sigma);
    instances.push_back(io::instance_from_json(j));
  }
  const auto reports = verify_all(instances, args.common.jobs, args.common.resolved_ceiling());
  return emit_reports(reports, args.common.format, instances.size() > 1, summarize(reports), true);
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  Common common;
  std::string theorem;
  std::string n = "1";
  std::optional<int> amin;
  int amax = 2;
  std::string a0 = "0";
  std::optional<int> sum_max;
  std::string q_policy = "all";
  std::string q_list;
};

int cmd_sweep(const SweepArgs& args) {
  SweepSpec spec;
  const auto theorem = parse_theorem(args.theorem);
  if (!theorem) throw io::InputError("unknown theorem \"" + args.theorem + "\"");
  spec.theorem = *theorem;
  std::tie(spec.n_min, spec.n_max) = io::parse_range(args.n);
  spec.a_min = args.amin;
  spec.a_max = args.amax;
  std::tie(spec.a0_min, spec.a0_max) = io::parse_range(args.a0);
  spec.sum_max = args.sum_max;
  if (args.q_policy == "all") {
    spec.q_policy = QPolicy::AllSubsets;
  } else if (args.q_policy == "empty") {
    spec.q_policy = QPolicy::EmptyOnly;
  } else {
    spec.q_policy = QPolicy::List;
  }
  if (!args.q_list.empty()) {
    if (spec.q_policy != QPolicy::List) throw io::InputError("--Q-list requires --q-policy list");
    const json list = io::parse_json(json_or_file(args.q_list));
    if (!list.is_array()) throw io::InputError("--Q-list must be an array of Q sets");
    for (const auto& q : list) spec.q_list.push_back(io::pairs_from_json(q));
  }
  spec.jobs = args.common.jobs;
  spec.ceiling = args.common.resolved_ceiling();
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw io::InputError(e.what());
  }
  const auto result = sweep(spec);
  return emit_reports(result.reports, args.common.format, true, result.summary, false);
}

// --- ct ---------------------------------------------------------------------

struct CtArgs {
  Common common;
  std::string spec;
  bool expand = false;
};

int cmd_ct(const CtArgs& args) {
  const ProductSpec spec = io::product_spec_from_json(io::parse_json(json_or_file(args.spec)));
  LaurentPoly product;
  try {
    product = build_product(spec, args.common.resolved_ceiling());
  } catch (const CeilingExceeded& e) {
    throw io::InputError(e.what());
  }
  const QPoly ct = ct_all(product);
  switch (args.common.format) {
    case Format::Json: {
      json out{{"ct", ct.str()}, {"terms", product.size()}};
      if (args.expand) out["expansion"] = io::to_json(product);
      std::cout << out.dump() << '\n';
      break;
    }
    case Format::Tsv:
    case Format::Pretty:
      std::cout << ct.str() << '\n';
      if (args.expand) std::cout << product.str() << '\n';
      break;
  }
  return kExitOk;
}

// --- tournaments ------------------------------------------------------------

struct TournamentArgs {
  Common common;
  int n = 3;
  std::string family = "dominant";
  std::string q;
};

int cmd_tournaments(const TournamentArgs& args) {
  if (args.n < 1 || args.n > 7) throw io::InputError("--n must be in 1..7");
  const Ground ground = args.family == "r1" ? Ground::FromTwo : args.family == "r2" ? Ground::FromThree : Ground::E;
  std::vector<QSet> qsets;
  if (!args.q.empty()) {
    QSet q{args.n, ground, io::pairs_from_json(io::parse_json(args.q))};
    try {
      q.normalize();
    } catch (const std::invalid_argument& e) {
      throw io::InputError(e.what());
    }
    qsets.push_back(std::move(q));
  } else {
    qsets = all_qsets(args.n, ground);
  }

  if (args.common.format == Format::Tsv) std::cout << "Q\ttransitive\tsigma\tdominant\tfamily\n";
  std::size_t nontransitive = 0;
  for (const auto& q : qsets) {
    const Tournament t = e_bar(q);
    const bool transitive = is_transitive(t);
    if (!transitive) ++nontransitive;
    const auto dom = dominant_sets(t);
    std::vector<VertexSet> family = dom;
    std::optional<bool> consistent;
    if (args.family == "r1") {
      family = r1_family(t);
    } else if (args.family == "r2") {
      const R2Family r2 = r2_family(t);
      family = r2.family;
      consistent = r2.consistent();
    }
    const std::optional<Permutation> sigma = transitive ? std::optional(winner_permutation(t)) : std::nullopt;

    switch (args.common.format) {
      case Format::Json: {
        json row = io::to_json(q);
        row["edges"] = t.edges();
        row["transitive"] = transitive;
        row["sigma"] = sigma ? json(*sigma) : json(nullptr);
        row["dominant"] = json::array();
        for (VertexSet s : dom) row["dominant"].push_back(members(s));
        row["family"] = json::array();
        for (VertexSet s : family) row["family"].push_back(members(s));
        if (consistent) row["shortcut_consistent"] = *consistent;
        std::cout << row.dump() << '\n';
        break;
      }
      case Format::Tsv:
      case Format::Pretty: {
        std::string sig;
        if (sigma)
          for (std::size_t k = 0; k < sigma->size(); ++k) sig += (k ? "," : "") + std::to_string((*sigma)[k]);
        const char sep = args.common.format == Format::Tsv ? '\t' : ' ';
        std::cout << json(q.pairs).dump() << sep << (transitive ? "transitive" : "nontransitive") << sep
                  << (sigma ? sig : "-") << sep << format_family(dom) << sep << format_family(family) << '\n';
        break;
      }
    }
  }
  if (args.common.format == Format::Pretty) {
    std::cout << qsets.size() << " orientations, " << nontransitive << " nontransitive\n";
  }
  return kExitOk;
}

// --- lemma ------------------------------------------------------------------

struct LemmaArgs {
  Common common;
  std::string which;
  int n = 2;
  std::string a;
  int k = 0;
  std::string q0 = "7/5";
  int s_max = 4;
  int a_max = 3;
};

int cmd_lemma(const LemmaArgs& args) {
  json out{{"check", args.which}};
  bool ok = true;
  if (args.which == "degree") {
    mpq_class q0;
    if (q0.set_str(args.q0, 10) != 0) throw io::InputError("bad --q0 \"" + args.q0 + "\"");
    q0.canonicalize();
    const auto a = io::parse_int_list(args.a);
    DegreeBoundReport rep;
    try {
      rep = check_degree_bound(a, args.k, q0, 1, args.common.resolved_ceiling());
    } catch (const std::invalid_argument& e) {
      throw io::InputError(e.what());
    }
    ok = rep.ok;
    out["bound"] = rep.bound;
    out["a0"] = rep.a0_points;
    out["values"] = json::array();
    for (const auto& v : rep.values) out["values"].push_back(v.get_str());
    out["detail"] = rep.detail;
  } else if (args.which == "import1") {
    const auto rep = check_lemma_import1(args.s_max, args.a_max);
    ok = rep.ok();
    out["vectors_checked"] = rep.vectors_checked;
    out["counterexample"] = rep.counterexample ? json(*rep.counterexample) : json(nullptr);
  } else if (args.which == "reflection") {
    const auto rep = check_reflection(args.n, args.a_max);
    ok = rep.ok();
    out["cases"] = rep.cases;
    out["failures"] = rep.failures;
  } else if (args.which == "census") {
    const auto c = tournament_census(args.n);
    ok = c.dominant_bound_violations == 0 && c.transitive_shape_violations == 0;
    out["n"] = c.n;
    out["tournaments"] = c.tournaments;
    out["transitive"] = c.transitive;
    out["nontransitive"] = c.nontransitive;
    out["dominant_bound_violations"] = c.dominant_bound_violations;
    out["transitive_shape_violations"] = c.transitive_shape_violations;
  } else {
    const auto rep = args.which == "r1" ? check_r1_bound(args.n) : check_r2_bound(args.n);
    ok = rep.violations == 0 && rep.inconsistent == 0;
    out["n"] = rep.n;
    out["qsets"] = rep.qsets;
    out["nontransitive"] = rep.nontransitive;
    out["violations"] = rep.violations;
    out["inconsistent"] = rep.inconsistent;
  }
  out["ok"] = ok;
  if (args.common.format == Format::Json) {
    std::cout << out.dump() << '\n';
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-term workbench: expand q-Dyson style products and check their closed forms"};
  app.require_subcommand(1);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check one identity instance (or a batch file)");
  add_common(verify, verify_args.common, true);
  verify->add_option("--theorem,-t", verify_args.theorem, "DIXON, DYSON, QDYSON, BG, MAIN1, MAIN2, COR_I, COR_II, X1, X2");
  verify->add_option("--a", verify_args.a, "Comma-separated exponents, e.g. 1,2,1");
  verify->add_option("--n", verify_args.n, "Size (required for DIXON)");
  verify->add_option("--Q", verify_args.q, "JSON list of reversed pairs, e.g. [[1,3]]");
  verify->add_option("--sigma", verify_args.sigma, "Comma-separated permutation (COR_I, COR_II)");
  verify->add_option("--instances", verify_args.instances, "File (or inline JSON) with one or more instances");

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Check every instance within bounds");
  add_common(sweep_cmd, sweep_args.common, true);
  sweep_cmd->add_option("--theorem,-t", sweep_args.theorem)->required();
  sweep_cmd->add_option("--n", sweep_args.n, "n or lo..hi");
  sweep_cmd->add_option("--amin", sweep_args.amin, "Lower bound on each a_i");
  sweep_cmd->add_option("--amax", sweep_args.amax, "Upper bound on each a_i");
  sweep_cmd->add_option("--a0", sweep_args.a0, "a_0 or lo..hi (MAIN1, MAIN2)");
  sweep_cmd->add_option("--sum-max", sweep_args.sum_max, "Upper bound on the sum of all exponents");
  sweep_cmd->add_option("--q-policy", sweep_args.q_policy)->check(CLI::IsMember({"all", "empty", "list"}));
  sweep_cmd->add_option("--Q-list", sweep_args.q_list, "JSON array of Q sets (with --q-policy list)");

  CtArgs ct_args;
  auto* ct = app.add_subcommand("ct", "Constant term of a product spec");
  add_common(ct, ct_args.common, false);
  ct->add_option("--spec", ct_args.spec, "Product spec JSON or a file containing it")->required();
  ct->add_flag("--expand", ct_args.expand, "Also print the full expansion");

  TournamentArgs tour_args;
  auto* tour = app.add_subcommand("tournaments", "List orientations with dominant-set families");
  add_common(tour, tour_args.common, false);
  tour->add_option("--n", tour_args.n, "Vertex count");
  tour->add_option("--family", tour_args.family)->check(CLI::IsMember({"dominant", "r1", "r2"}));
  tour->add_option("--Q", tour_args.q, "Single Q as JSON; omit to list every Q of the ground set");

  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand("lemma", "Run one supporting-lemma check");
  add_common(lemma, lemma_args.common, false);
  lemma->add_option("check", lemma_args.which)
      ->required()
      ->check(CLI::IsMember({"degree", "import1", "reflection", "census", "r1", "r2"}));
  lemma->add_option("--n", lemma_args.n);
  lemma->add_option("--a", lemma_args.a, "a_1..a_n for the degree check");
  lemma->add_option("--k", lemma_args.k, "x_0-degree of the prefactor");
  lemma->add_option("--q0", lemma_args.q0, "Exact rational evaluation point");
  lemma->add_option("--s-max", lemma_args.s_max);
  lemma->add_option("--amax", lemma_args.a_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*verify) return cmd_verify(verify_args);
    if (*sweep_cmd) return cmd_sweep(sweep_args);
    if (*ct) return cmd_ct(ct_args);
    if (*tour) return cmd_tournaments(tour_args);
    if (*lemma) return cmd_lemma(lemma_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
