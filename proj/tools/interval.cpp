// interval: intermediate subgroups from the command line.
//
//   interval compute --group g.txt [--subgroup sylow:2] [--method all] [--emit json]
//   interval bench   --corpus pairs.txt [--method maximal,block]
//   interval oracle  --group g.txt [--subgroup RULE]
//   interval embed   --group g.txt --a RULE --b RULE
//
// Exit codes: 0 ok, 1 other failure, 2 bad input, 3 cap or missing data, 4 methods disagree.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ivl/embedding.hpp"
#include "ivl/group_spec.hpp"
#include "ivl/intermediate.hpp"
#include "ivl/interval_block.hpp"
#include "ivl/report.hpp"

using namespace ivl;

namespace {

constexpr int kInput = 2;
constexpr int kCap = 3;
constexpr int kMismatch = 4;

struct Common {
  std::string group_file;
  std::string subgroup_rule;
  std::string emit = "json";
  std::string maximal_data_file;
  std::size_t cap_index = Caps{}.coset_index;
  std::uint64_t cap_order = Caps{}.oracle_order;
  std::uint64_t seed = 1;
  std::string fallback = "auto";
  bool no_orbit_filter = false;
  bool verbose = false;
};

struct MismatchError : Error {
  using Error::Error;
};

void add_common(CLI::App* cmd, Common& c, bool needs_group = true) {
  auto* g = cmd->add_option("--group", c.group_file, "group spec file");
  if (needs_group) g->required()->check(CLI::ExistingFile);
  cmd->add_option("--subgroup", c.subgroup_rule, "trivial | sylow:P | derived-of-sylow:P | gens:(..);(..)");
  cmd->add_option("--emit", c.emit, "output format")->check(CLI::IsMember({"json", "dot", "table"}));
  cmd->add_option("--maximal-data", c.maximal_data_file, "maximal-subgroup data file")->check(CLI::ExistingFile);
  cmd->add_option("--cap-index", c.cap_index, "largest coset action degree");
  cmd->add_option("--cap-order", c.cap_order, "largest group handed to the subgroup oracle");
  cmd->add_option("--seed", c.seed, "seed for Sylow construction");
  cmd->add_option("--fallback", c.fallback, "small-C fallback")->check(CLI::IsMember({"auto", "on", "off"}));
  cmd->add_flag("--no-orbit-filter", c.no_orbit_filter, "keep maximal classes the orbit test would drop");
  cmd->add_flag("-v,--verbose", c.verbose, "statistics on stderr");
}

Caps caps_of(const Common& c) {
  Caps caps;
  caps.coset_index = c.cap_index;
  caps.oracle_order = c.cap_order;
  return caps;
}

struct Loaded {
  GroupSpec spec;
  PermGroup g;
  PermGroup u;
};

Loaded load(const Common& c, const GroupSpec& spec) {
  Loaded out{spec, spec.group(), {}};
  SubgroupRule rule;
  if (!c.subgroup_rule.empty())
    rule = parse_subgroup_rule(c.subgroup_rule);
  else if (spec.subgroup)
    rule = *spec.subgroup;
  out.u = resolve_subgroup(out.g, rule, c.seed);
  return out;
}

std::string render(const LatticeInterval& iv, const std::string& emit, const std::string& label) {
  if (emit == "dot") return emit_dot(iv, label);
  if (emit == "table") return emit_table(iv);
  return emit_json(iv);
}

IntervalReport run_method(const std::string& method, const PermGroup& g, const PermGroup& u,
                          const IntervalOptions& opts, IntervalStats* stats) {
  const auto start = std::chrono::steady_clock::now();
  IntervalReport r{method, {}, 0};
  if (method == "maximal")
    r.interval = intermediate_subgroups(g, u, opts, stats);
  else if (method == "block")
    r.interval = intermediate_by_blocks(g, u, opts.caps);
  else
    r.interval = intermediate_oracle(g, u, opts.caps);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<std::string> expand_methods(const std::string& m) {
  if (m == "all") return {"maximal", "block", "oracle"};
  std::vector<std::string> out;
  std::stringstream in(m);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item != "maximal" && item != "block" && item != "oracle") throw ParseError("unknown method '" + item + "'");
    out.push_back(item);
  }
  return out;
}

std::optional<std::string> disagreement(const std::vector<IntervalReport>& reports) {
  for (std::size_t i = 1; i < reports.size(); ++i)
    if (auto d = compare_intervals(reports[0].interval, reports[i].interval))
      return reports[0].method + " vs " + reports[i].method + ": " + *d;
  return std::nullopt;
}

struct Session {
  Common common;
  std::optional<MaximalData> data;

  IntervalOptions options() {
    IntervalOptions opts;
    opts.caps = caps_of(common);
    opts.orbit_filter = !common.no_orbit_filter;
    opts.fallback = common.fallback == "on" ? Toggle::on : common.fallback == "off" ? Toggle::off : Toggle::automatic;
    if (!common.maximal_data_file.empty()) {
      if (!data) data = MaximalData::load(common.maximal_data_file);
      opts.maximal_data = &*data;
    }
    return opts;
  }
};

void print_stats(const IntervalStats& st) {
  std::cerr << "processed " << st.processed << ", prime index " << st.prime_index << ", embedding calls "
            << st.embedding_calls << ", cache hits " << st.cache_hits << ", transfers " << st.cache_transfers
            << ", datafile " << st.datafile_lookups << ", oracle " << st.oracle_lookups << "\n";
}

int compute(Session& s, const std::string& method) {
  const Loaded in = load(s.common, load_group_spec(s.common.group_file));
  const IntervalOptions opts = s.options();
  std::vector<IntervalReport> reports;
  IntervalStats stats;
  for (const auto& m : expand_methods(method)) {
    reports.push_back(run_method(m, in.g, in.u, opts, &stats));
    if (s.common.verbose)
      std::cerr << m << ": " << reports.back().count() << " intermediates in " << reports.back().wall_time << " s\n";
  }
  if (s.common.verbose) print_stats(stats);
  if (auto d = disagreement(reports)) throw MismatchError(*d);
  std::cout << render(reports.front().interval, s.common.emit, in.spec.label);
  return 0;
}

int oracle(Session& s) {
  const GroupSpec spec = load_group_spec(s.common.group_file);
  if (!s.common.subgroup_rule.empty() || spec.subgroup) {
    const Loaded in = load(s.common, spec);
    std::cout << render(intermediate_oracle(in.g, in.u, caps_of(s.common)), s.common.emit, spec.label);
    return 0;
  }
  // no bottom group: list the conjugacy classes of subgroups
  const PermGroup g = spec.group();
  auto lattice = all_subgroups(g, caps_of(s.common));
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["total"] = lattice->total();
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : lattice->classes()) {
    nlohmann::ordered_json e;
    e["order"] = c.representative.order();
    e["conjugates"] = c.orbit_size;
    e["maximal"] = c.maximal;
    std::vector<std::string> gens;
    for (const auto& x : c.representative.generators()) gens.push_back(x.to_cycles());
    e["generators"] = gens;
    j["classes"].push_back(std::move(e));
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int embed(Session& s, const std::string& a_rule, const std::string& b_rule) {
  const GroupSpec spec = load_group_spec(s.common.group_file);
  const PermGroup g = spec.group();
  const PermGroup a = resolve_subgroup(g, parse_subgroup_rule(a_rule), s.common.seed);
  const PermGroup b = resolve_subgroup(g, parse_subgroup_rule(b_rule), s.common.seed);
  const IntervalOptions opts = s.options();
  auto found = embedding_conjugates(g, a, b, SearchOptions{opts.caps, opts.fallback});
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& [x, h] : found) {
    nlohmann::ordered_json e;
    e["conjugator"] = h.to_cycles();
    std::vector<std::string> gens;
    for (const auto& y : x.generators()) gens.push_back(y.to_cycles());
    e["generators"] = gens;
    j.push_back(std::move(e));
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int bench(Session& s, const std::string& corpus_file, const std::string& method) {
  const auto specs = load_group_specs(corpus_file);
  const auto default_methods = expand_methods(method);
  std::vector<std::string> columns = default_methods;
  for (const auto& spec : specs)
    for (const auto& m : spec.methods)
      if (std::find(columns.begin(), columns.end(), m) == columns.end()) columns.push_back(m);
  std::vector<BenchRow> rows;
  bool failed = false, mismatch = false;
  for (const auto& spec : specs) {
    BenchRow row;
    row.label = spec.label;
    try {
      const Loaded in = load(s.common, spec);
      row.index = in.g.order() / in.u.order();
      const IntervalOptions opts = s.options();
      for (const auto& m : spec.methods.empty() ? default_methods : spec.methods) {
        try {
          row.reports.push_back(run_method(m, in.g, in.u, opts, nullptr));
        } catch (const Error& e) {
          row.errors.emplace_back(m, e.what());
          failed = true;
        }
      }
      row.mismatch = disagreement(row.reports);
      if (row.mismatch) mismatch = true;
    } catch (const Error& e) {
      row.errors.emplace_back(columns.front(), e.what());
      failed = true;
    }
    rows.push_back(std::move(row));
  }
  print_bench_table(std::cout, rows, columns);
  if (mismatch) return kMismatch;
  return failed ? kCap : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intermediate subgroups of permutation groups"};
  app.require_subcommand(1);
  Session session;
  std::string method = "maximal";
  std::string corpus, a_rule, b_rule;

  auto* compute_cmd = app.add_subcommand("compute", "every subgroup between U and G");
  add_common(compute_cmd, session.common);
  compute_cmd->add_option("--method", method, "maximal | block | oracle | all | comma list");

  auto* bench_cmd = app.add_subcommand("bench", "compare the methods over a corpus of pairs");
  add_common(bench_cmd, session.common, false);
  bench_cmd->add_option("--corpus", corpus, "corpus of group specs")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--method", method, "methods for rows that name none");

  auto* oracle_cmd = app.add_subcommand("oracle", "full subgroup lattice of a small group");
  add_common(oracle_cmd, session.common);

  auto* embed_cmd = app.add_subcommand("embed", "conjugates of A strictly containing B");
  add_common(embed_cmd, session.common);
  embed_cmd->add_option("--a", a_rule, "subgroup rule for A")->required();
  embed_cmd->add_option("--b", b_rule, "subgroup rule for B")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  try {
    if (*compute_cmd) return compute(session, method);
    if (*bench_cmd) return bench(session, corpus, bench_cmd->count("--method") ? method : "all");
    if (*oracle_cmd) return oracle(session);
    if (*embed_cmd) return embed(session, a_rule, b_rule);
  } catch (const MismatchError& e) {
    std::cerr << "methods disagree: " << e.what() << "\n";
    return kMismatch;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const NotSubgroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const MaximalUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const DatafileMiss& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
