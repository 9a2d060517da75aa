#include "unavoidable/cli.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "unavoidable/certify.hpp"
#include "unavoidable/errors.hpp"
#include "unavoidable/generators.hpp"
#include "unavoidable/json_io.hpp"
#include "unavoidable/partition.hpp"
#include "unavoidable/realizability.hpp"
#include "unavoidable/schema.hpp"
#include "unavoidable/scx_io.hpp"

namespace unav::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string blocks_text(std::span<const Subset> blocks) {
  std::string out;
  for (Subset b : blocks) out += (out.empty() ? "" : " ") + b.to_string();
  return out.empty() ? "(none)" : out;
}

/// Shared state of one invocation.
class Session {
 public:
  Session(std::ostream& err) : err_(err) {}

  bool json = false;
  bool verbose = false;
  unsigned threads = 1;

  SimplicialComplex load_complex(const std::string& path) {
    const auto text = load_text(path);
    const auto start = Clock::now();
    auto k = parse_scx(text);
    parse_ms_ += elapsed_ms(start);
    if (verbose && k.dropped_facets() > 0) {
      err_ << "warning: " << path << ": dropped " << k.dropped_facets()
           << " duplicate or non-maximal facet(s)\n";
    }
    return k;
  }

  std::string load_text(const std::string& path) {
    const auto start = Clock::now();
    auto text = read_text_file(path);
    inputs_.push_back(Json{{"path", path}, {"sha256", sha256_hex(text)}});
    parse_ms_ += elapsed_ms(start);
    return text;
  }

  const Json& inputs() const { return inputs_; }
  double parse_ms() const { return parse_ms_; }

  static double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }

 private:
  std::ostream& err_;
  Json inputs_ = Json::array();
  double parse_ms_ = 0;
};

struct Outcome {
  Json results = Json::object();
  std::string text;
  int exit_code = kOk;
};

// ---------------------------------------------------------------------------
// Commands

struct AnalyzeArgs {
  std::string file;
  std::vector<int> r;
  int s = 1;
};

Outcome analyze(Session& session, const AnalyzeArgs& a) {
  const auto k = session.load_complex(a.file);
  for (int r : a.r) {
    if (r < 2) throw std::invalid_argument("--r must be at least 2");
    if (a.s >= r) throw std::invalid_argument("--s must be smaller than every --r");
  }
  const auto packing = max_disjoint_min_nonfaces(k);
  const bool self_dual = is_self_dual(k);
  Outcome o;
  auto& res = o.results;
  res["m"] = k.ground_size();
  res["facets"] = subsets_json(k.facets());
  res["min_nonfaces"] = subsets_json(k.min_nonfaces());
  res["self_dual"] = self_dual;
  res["pi"] = packing.size + 1;
  res["D"] = packing.size;
  res["witness_blocks"] = subsets_json(packing.witness.nonfaces);
  std::ostringstream text;
  text << "m = " << k.ground_size() << "\n"
       << "facets = " << k.facets().size() << "\n"
       << "min_nonfaces = " << k.min_nonfaces().size() << "\n"
       << "self_dual = " << bool_text(self_dual) << "\n"
       << "pi = " << packing.size + 1 << "\n"
       << "D = " << packing.size << "\n"
       << "packing = " << blocks_text(packing.witness.nonfaces) << "\n";
  Json checks = Json::array();
  for (int r : a.r) {
    const auto verdict = is_rs_unavoidable(k, r, a.s);
    Json check{{"r", r},
               {"s", a.s},
               {"verdict", verdict.unavoidable},
               {"witness", verdict.witness ? to_json(*verdict.witness) : Json(nullptr)}};
    text << "r = " << r;
    if (a.s != 1) text << ", s = " << a.s;
    text << ": unavoidable = " << bool_text(verdict.unavoidable);
    if (a.s == 1) {
      const bool minimal = verdict.unavoidable && is_minimally_r_unavoidable(k, r);
      check["minimal"] = minimal;
      text << ", minimal = " << bool_text(minimal);
    } else {
      check["minimal"] = nullptr;
    }
    if (verdict.witness) text << ", witness = " << blocks_text(verdict.witness->blocks);
    text << "\n";
    checks.push_back(std::move(check));
  }
  res["r_checks"] = std::move(checks);
  o.text = text.str();
  return o;
}

Outcome pi(Session& session, const std::string& file, bool oracle) {
  const auto k = session.load_complex(file);
  Outcome o;
  const int value = partition_number(k);
  o.results["pi"] = value;
  o.text = "pi = " + std::to_string(value) + "\n";
  if (oracle) {
    const int check = partition_number_oracle(k);
    o.results["oracle"] = check;
    o.text += "oracle = " + std::to_string(check) + "\n";
  } else {
    o.results["oracle"] = nullptr;
  }
  return o;
}

Outcome dual(Session& session, const std::string& file) {
  const auto k = session.load_complex(file);
  Outcome o;
  const auto d = alexander_dual(k);
  o.results["void"] = !d.has_value();
  o.results["self_dual"] = is_self_dual(k);
  if (d) {
    o.results["scx"] = format_scx(*d);
    o.results["facets"] = subsets_json(d->facets());
    o.text = format_scx(*d);
  } else {
    o.results["scx"] = nullptr;
    o.results["facets"] = nullptr;
    o.text = "void\n";
  }
  return o;
}

struct RealizeArgs {
  std::string file;
  int r = 2;
  bool relaxed = false;
  std::size_t max_constraints = LpOptions{}.max_constraints;
};

Outcome realize(Session& session, const RealizeArgs& a) {
  const auto k = session.load_complex(a.file);
  const LpOptions options{a.max_constraints};
  const auto verdict = a.relaxed ? linear_subcomplex_witness(k, a.r, options)
                                 : is_linearly_realizable(k, a.r, options);
  Outcome o;
  o.results = to_json(verdict);
  o.results["r"] = a.r;
  o.results["mode"] = a.relaxed ? "relaxed" : "exact";
  std::ostringstream text;
  text << "feasible = " << bool_text(verdict.feasible) << "\n"
       << "margin = " << (verdict.margin ? to_string(*verdict.margin) : "none") << "\n";
  if (verdict.witness) {
    text << "witness =";
    for (const auto& w : verdict.witness->weights()) text << " " << to_string(w);
    text << "\n";
  } else {
    text << "note = " << verdict.infeasibility_note << "\n";
  }
  o.text = text.str();
  return o;
}

struct WhArgs {
  std::string file;
  int r = 2;
  std::string weights;
  bool selfdual = false;
  bool prune = false;
  bool emit_family = false;
};

Outcome wh(Session& session, const WhArgs& a) {
  const auto k = session.load_complex(a.file);
  if (a.weights.empty() == !a.selfdual) {
    throw std::invalid_argument("give exactly one of --weights FILE and --selfdual");
  }
  WeightedHypergraph family = a.selfdual ? selfdual_wh_realization(k)
                                         : parse_weights_json(session.load_text(a.weights));
  if (a.prune) family = prune_zero_weights(family);
  const bool ok = wh_realization_check(k, a.r, family);
  const Rational alpha = wh_measure(family, Subset::range(family.ground_size()));
  Outcome o;
  o.results["r"] = a.r;
  o.results["alpha"] = rational_json(alpha);
  o.results["threshold"] = rational_json(alpha / a.r);
  o.results["members"] = family.members().size();
  o.results["wh_realizable"] = ok;
  o.results["family"] = to_json(family);
  std::ostringstream text;
  text << "alpha = " << to_string(alpha) << "\n"
       << "threshold = " << to_string(alpha / a.r) << "\n"
       << "members = " << family.members().size() << "\n"
       << "wh_realizable = " << bool_text(ok) << "\n";
  if (a.emit_family) text << "family = " << to_json(family).dump() << "\n";
  o.text = text.str();
  return o;
}

Json complex_results(const SimplicialComplex& k) {
  return Json{{"m", k.ground_size()},
              {"facets", subsets_json(k.facets())},
              {"scx", format_scx(k)}};
}

Outcome emit_complex(const SimplicialComplex& k, const std::string& header = {}) {
  Outcome o;
  o.results = complex_results(k);
  o.text = header + format_scx(k);
  return o;
}

struct RamseyArgs {
  int n = 6;
  int clique = 3;
  int r = 2;
  bool check_admissible = false;
  bool disallow_empty = false;
  std::uint64_t budget = ScanOptions{}.budget;
};

Outcome gen_ramsey(Session& session, const RamseyArgs& a) {
  const auto property = GraphProperty::contains_clique(a.clique);
  const auto rc = ramsey_complex(a.n, property);
  std::string header = "# Ramsey complex: n = " + std::to_string(a.n) + ", property " +
                       property.name() + "\n";
  Json edges = Json::array();
  for (std::size_t e = 0; e < rc.edges.size(); ++e) {
    header += "# vertex " + std::to_string(e + 1) + " = edge (" +
              std::to_string(rc.edges[e].first) + "," + std::to_string(rc.edges[e].second) +
              ")\n";
    edges.push_back(Json{rc.edges[e].first, rc.edges[e].second});
  }
  Json admissibility = nullptr;
  if (a.check_admissible) {
    const auto result = is_admissible(a.n, property, a.r, !a.disallow_empty,
                                      ScanOptions{a.budget, session.threads});
    const bool unavoidable = is_r_unavoidable(rc.complex, a.r).unavoidable;
    header += "# admissible(r = " + std::to_string(a.r) + ") = " + bool_text(result.admissible) +
              "\n# unavoidable(r = " + std::to_string(a.r) + ") = " + bool_text(unavoidable) +
              "\n";
    admissibility = Json{{"r", a.r},
                         {"allow_empty_classes", !a.disallow_empty},
                         {"admissible", result.admissible},
                         {"counterexample", result.counterexample ? Json(*result.counterexample)
                                                                  : Json(nullptr)},
                         {"unavoidable", unavoidable}};
  }
  auto o = emit_complex(rc.complex, header);
  o.results["edges"] = std::move(edges);
  o.results["admissibility"] = std::move(admissibility);
  return o;
}

Outcome gen_selfdual(int m, std::uint64_t seed) {
  const auto weights = random_odd_weights(m, seed);
  std::string header = "# weighted majority, weights";
  for (auto w : weights) header += " " + std::to_string(w);
  header += "\n";
  auto o = emit_complex(weighted_majority_complex(weights), header);
  o.results["weights"] = weights;
  o.results["seed"] = seed;
  return o;
}

Outcome join_files(Session& session, const std::vector<std::string>& files) {
  auto k = session.load_complex(files.front());
  for (std::size_t i = 1; i < files.size(); ++i) k = join(k, session.load_complex(files[i]));
  return emit_complex(k);
}

Outcome deljoin(Session& session, const std::string& file, int r, std::uint64_t budget) {
  const auto k = session.load_complex(file);
  const auto f = deleted_join_faces(k, r, DeletedJoinOptions{budget, session.threads});
  std::uint64_t total = 0;
  std::string list;
  for (auto x : f) {
    total += x;
    list += (list.empty() ? "" : " ") + std::to_string(x);
  }
  Outcome o;
  o.results["r"] = r;
  o.results["f_vector"] = f;
  o.results["total"] = total;
  o.text = "f = " + list + "\ntotal = " + std::to_string(total) + "\n";
  return o;
}

struct CertifyArgs {
  std::vector<std::string> files;
  int r = 2;
  int d = 0;
  bool single = false;
};

Outcome certify(Session& session, const CertifyArgs& a) {
  if (a.single && a.files.size() != 1) {
    throw std::invalid_argument("--single takes exactly one complex");
  }
  std::vector<SimplicialComplex> factors;
  for (const auto& f : a.files) factors.push_back(session.load_complex(f));
  const auto c = a.single ? certify_single_nonembeddable(factors.front(), a.r, a.d)
                          : certify_join_nonembeddable(factors, a.r, a.d);
  Outcome o;
  o.results = to_json(c);
  o.text = o.results.dump(2) + "\n";
  switch (c.verdict) {
    case Verdict::kCertified: o.exit_code = kOk; break;
    case Verdict::kNotCertified: o.exit_code = kNotCertified; break;
    case Verdict::kAbstained: o.exit_code = kAbstained; break;
  }
  return o;
}

}  // namespace

const char* report_schema() { return kReportSchema; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for r-unavoidable simplicial complexes", "unav"};
  app.set_version_flag("--version", kVersion);
  app.fallthrough();
  app.require_subcommand(0, 1);

  Session session(err);
  bool schema = false;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  app.add_flag("--json", session.json, "Print a JSON report instead of text");
  app.add_flag("--schema", schema, "Print the JSON schema of reports and exit");
  app.add_flag("--verbose", session.verbose, "Report input clean-up on stderr");
  app.add_option("--threads", threads, "Worker threads for exhaustive scans")
      ->check(CLI::PositiveNumber);

  std::function<Outcome()> action;
  std::string command;

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "pi, duality and unavoidability checks");
  analyze_cmd->add_option("file", analyze_args.file, "Complex (.scx)")->required();
  analyze_cmd->add_option("--r", analyze_args.r, "Check r-unavoidability (repeatable)");
  analyze_cmd->add_option("--s", analyze_args.s, "Require s face blocks (default 1)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->callback([&] { action = [&] { return analyze(session, analyze_args); }; });

  std::string pi_file;
  bool pi_oracle = false;
  auto* pi_cmd = app.add_subcommand("pi", "Partition number");
  pi_cmd->add_option("file", pi_file, "Complex (.scx)")->required();
  pi_cmd->add_flag("--oracle", pi_oracle, "Cross-check by set-partition enumeration (m <= 12)");
  pi_cmd->callback([&] { action = [&] { return pi(session, pi_file, pi_oracle); }; });

  std::string dual_file;
  auto* dual_cmd = app.add_subcommand("dual", "Alexander dual");
  dual_cmd->add_option("file", dual_file, "Complex (.scx)")->required();
  dual_cmd->callback([&] { action = [&] { return dual(session, dual_file); }; });

  RealizeArgs realize_args;
  auto* realize_cmd = app.add_subcommand("realize", "Linear realizability by exact LP");
  realize_cmd->add_option("file", realize_args.file, "Complex (.scx)")->required();
  realize_cmd->add_option("--r", realize_args.r, "Threshold 1/r")->required()->check(
      CLI::Range(2, 1 << 20));
  realize_cmd->add_flag("--relaxed", realize_args.relaxed,
                        "Only look for a realizable r-unavoidable subcomplex");
  realize_cmd->add_option("--max-constraints", realize_args.max_constraints, "LP size budget");
  realize_cmd->callback([&] { action = [&] { return realize(session, realize_args); }; });

  WhArgs wh_args;
  auto* wh_cmd = app.add_subcommand("wh", "Check a weighted-hypergraph realization");
  wh_cmd->add_option("file", wh_args.file, "Complex (.scx)")->required();
  wh_cmd->add_option("--r", wh_args.r, "Threshold alpha/r")->check(CLI::Range(2, 1 << 20));
  wh_cmd->add_option("--weights", wh_args.weights, "Weighted family (JSON)");
  wh_cmd->add_flag("--selfdual", wh_args.selfdual, "Use the canonical self-dual family");
  wh_cmd->add_flag("--prune", wh_args.prune, "Drop zero-weight members first");
  wh_cmd->add_flag("--emit-family", wh_args.emit_family, "Print the family used");
  wh_cmd->callback([&] { action = [&] { return wh(session, wh_args); }; });

  auto* gen_cmd = app.add_subcommand("gen", "Generate example complexes");
  gen_cmd->require_subcommand(1);
  int skeleton_k = 0;
  int skeleton_m = 1;
  auto* skeleton_cmd = gen_cmd->add_subcommand("skeleton", "All subsets of size <= k+1");
  skeleton_cmd->add_option("--k", skeleton_k, "Dimension")->required();
  skeleton_cmd->add_option("--m", skeleton_m, "Ground-set size")->required();
  skeleton_cmd->callback(
      [&] { action = [&] { return emit_complex(skeleton(skeleton_k, skeleton_m)); }; });
  int points_m = 1;
  auto* points_cmd = gen_cmd->add_subcommand("points", "m isolated vertices");
  points_cmd->add_option("--m", points_m, "Ground-set size")->required();
  points_cmd->callback([&] { action = [&] { return emit_complex(points(points_m)); }; });
  RamseyArgs ramsey_args;
  auto* ramsey_cmd = gen_cmd->add_subcommand("ramsey", "Ramsey complex of K_n");
  ramsey_cmd->add_option("--n", ramsey_args.n, "Vertices of K_n")->required();
  ramsey_cmd->add_option("--clique", ramsey_args.clique, "Clique size k")->required();
  ramsey_cmd->add_option("--r", ramsey_args.r, "Colours for --check-admissible")
      ->check(CLI::Range(2, 64));
  ramsey_cmd->add_flag("--check-admissible", ramsey_args.check_admissible,
                       "Scan all colorings and compare with unavoidability");
  ramsey_cmd->add_flag("--disallow-empty", ramsey_args.disallow_empty,
                       "Skip colorings with an empty colour class");
  ramsey_cmd->add_option("--budget", ramsey_args.budget, "Coloring budget");
  ramsey_cmd->callback([&] { action = [&] { return gen_ramsey(session, ramsey_args); }; });
  int selfdual_m = 1;
  std::uint64_t selfdual_seed = 0;
  auto* selfdual_cmd = gen_cmd->add_subcommand("selfdual", "Random weighted-majority complex");
  selfdual_cmd->add_option("--m", selfdual_m, "Ground-set size")->required();
  selfdual_cmd->add_option("--seed", selfdual_seed, "Random seed");
  selfdual_cmd->callback(
      [&] { action = [&] { return gen_selfdual(selfdual_m, selfdual_seed); }; });

  std::vector<std::string> join_files_args;
  auto* join_cmd = app.add_subcommand("join", "Join of complexes");
  join_cmd->add_option("files", join_files_args, "Complexes (.scx)")->required();
  join_cmd->callback([&] { action = [&] { return join_files(session, join_files_args); }; });

  std::string deljoin_file;
  int deljoin_r = 2;
  std::uint64_t deljoin_budget = DeletedJoinOptions{}.budget;
  auto* deljoin_cmd = app.add_subcommand("deljoin", "f-vector of the r-fold deleted join");
  deljoin_cmd->add_option("file", deljoin_file, "Complex (.scx)")->required();
  deljoin_cmd->add_option("--r", deljoin_r, "Number of factors")->required()->check(
      CLI::Range(1, 64));
  deljoin_cmd->add_option("--budget", deljoin_budget, "Labelling budget");
  deljoin_cmd->callback([&] {
    action = [&] { return deljoin(session, deljoin_file, deljoin_r, deljoin_budget); };
  });

  CertifyArgs certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "Non-embeddability certificates");
  certify_cmd->add_option("files", certify_args.files, "Factors (.scx)")->required();
  certify_cmd->add_option("--r", certify_args.r, "Multiplicity r")->required()->check(
      CLI::Range(2, 1 << 30));
  certify_cmd->add_option("--d", certify_args.d, "Target dimension")->required()->check(
      CLI::NonNegativeNumber);
  certify_cmd->add_flag("--single", certify_args.single, "Single-complex criterion");
  certify_cmd->callback([&] { action = [&] { return certify(session, certify_args); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (schema) {
    out << kReportSchema;
    return kOk;
  }
  if (!action) {
    err << app.help();
    return kUsage;
  }
  session.threads = threads;
  for (const auto* sub : app.get_subcommands()) {
    command = sub->get_name();
    for (const auto* nested : sub->get_subcommands()) command += " " + nested->get_name();
  }

  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputParse;
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double total_ms = Session::elapsed_ms(start);

  if (session.json) {
    Json report{{"command", command},
                {"inputs", session.inputs()},
                {"results", std::move(outcome.results)},
                {"timings", Json{{"parse_ms", session.parse_ms()},
                                 {"compute_ms", std::max(0.0, total_ms - session.parse_ms())},
                                 {"total_ms", total_ms}}},
                {"version", kVersion}};
    out << report.dump(2) << "\n";
  } else {
    out << outcome.text;
  }
  return outcome.exit_code;
}

}  // namespace unav::cli
