#include "ivl/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ivl/config.hpp"
#include "ivl/group_spec.hpp"

namespace ivl {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> generator_text(const PermGroup& g) {
  std::vector<std::string> out;
  for (const auto& x : g.generators()) out.push_back(x.to_cycles());
  return out;
}

template <class T>
T field(const ordered_json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("interval json: missing '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("interval json: bad '") + name + "'");
  }
}

PermGroup build(std::size_t degree, const std::vector<std::string>& gens, std::uint64_t order) {
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(parse_permutation(g, degree));
  PermGroup out(degree, std::move(perms));
  if (out.order() != order)
    throw ParseError("interval json: generators give order " + std::to_string(out.order()) + ", expected " +
                     std::to_string(order));
  return out;
}

std::string format_seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(s < 10 ? 3 : 1) << s;
  return o.str();
}

}  // namespace

std::string emit_json(const LatticeInterval& in, int indent) {
  ordered_json j;
  j["bottom_order"] = in.bottom.order();
  j["top_order"] = in.top.order();
  j["degree"] = in.top.degree();
  j["bottom_generators"] = generator_text(in.bottom);
  j["top_generators"] = generator_text(in.top);
  j["subgroups"] = ordered_json::array();
  for (std::size_t i = 0; i < in.subgroups.size(); ++i) {
    ordered_json s;
    s["index"] = i + 1;
    s["order"] = in.subgroups[i].order();
    s["generators"] = generator_text(in.subgroups[i]);
    j["subgroups"].push_back(std::move(s));
  }
  j["inclusions"] = ordered_json::array();
  for (const auto& [a, b] : in.inclusions) j["inclusions"].push_back({a, b});
  return j.dump(indent) + "\n";
}

ParsedInterval parse_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("interval json: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("interval json: expected an object");
  ParsedInterval out;
  out.bottom_order = field<std::uint64_t>(j, "bottom_order");
  out.top_order = field<std::uint64_t>(j, "top_order");
  if (j.contains("degree")) out.degree = field<std::size_t>(j, "degree");
  if (j.contains("bottom_generators")) out.bottom_generators = field<std::vector<std::string>>(j, "bottom_generators");
  if (j.contains("top_generators")) out.top_generators = field<std::vector<std::string>>(j, "top_generators");
  const auto subs = field<ordered_json>(j, "subgroups");
  if (!subs.is_array()) throw ParseError("interval json: 'subgroups' is not an array");
  for (const auto& s : subs) {
    ParsedInterval::Entry e;
    e.index = field<std::size_t>(s, "index");
    e.order = field<std::uint64_t>(s, "order");
    if (s.contains("generators")) e.generators = field<std::vector<std::string>>(s, "generators");
    if (e.index != out.subgroups.size() + 1) throw ParseError("interval json: subgroup indices must run 1..N");
    if (e.order == 0 || e.order % out.bottom_order != 0 || out.top_order % e.order != 0)
      throw ParseError("interval json: subgroup " + std::to_string(e.index) + " has an impossible order");
    if (!out.subgroups.empty() && e.order < out.subgroups.back().order)
      throw ParseError("interval json: subgroups not sorted by order");
    out.subgroups.push_back(std::move(e));
  }
  const std::size_t top = out.subgroups.size() + 1;
  auto order_of = [&](std::size_t i) {
    return i == 0 ? out.bottom_order : i == top ? out.top_order : out.subgroups[i - 1].order;
  };
  for (const auto& edge : field<ordered_json>(j, "inclusions")) {
    if (!edge.is_array() || edge.size() != 2) throw ParseError("interval json: inclusion must be a pair");
    Edge e{edge[0].get<std::size_t>(), edge[1].get<std::size_t>()};
    if (e.first > top || e.second > top || e.first == e.second)
      throw ParseError("interval json: inclusion [" + std::to_string(e.first) + "," + std::to_string(e.second) +
                       "] out of range");
    if (order_of(e.first) >= order_of(e.second) || order_of(e.second) % order_of(e.first) != 0)
      throw ParseError("interval json: inclusion [" + std::to_string(e.first) + "," + std::to_string(e.second) +
                       "] contradicts the orders");
    out.inclusions.push_back(e);
  }
  return out;
}

LatticeInterval to_interval(const ParsedInterval& p) {
  if (!p.degree) throw ParseError("interval json: no degree, cannot rebuild groups");
  const std::size_t n = *p.degree;
  LatticeInterval out{build(n, p.bottom_generators, p.bottom_order), build(n, p.top_generators, p.top_order), {}, {}};
  for (const auto& e : p.subgroups) out.subgroups.push_back(build(n, e.generators, e.order));
  out.inclusions = p.inclusions;
  std::sort(out.inclusions.begin(), out.inclusions.end());
  return out;
}

std::string emit_dot(const LatticeInterval& in, const std::string& name) {
  std::ostringstream o;
  o << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  std::map<std::uint64_t, std::vector<std::size_t>> ranks;
  const std::size_t top = in.top_index();
  for (std::size_t i = 0; i <= top; ++i) {
    const PermGroup& g = in.at(i);
    ranks[g.order()].push_back(i);
    o << "  n" << i << " [label=\"" << i << ": " << g.order() << "\"";
    if (i == 0 || i == top) o << ", style=bold";
    o << "];\n";
  }
  for (const auto& [order, nodes] : ranks) {
    o << "  { rank=same;";
    for (std::size_t i : nodes) o << " n" << i << ";";
    o << " }\n";
  }
  for (const auto& [a, b] : in.inclusions) o << "  n" << a << " -> n" << b << ";\n";
  o << "}\n";
  return o.str();
}

std::string emit_table(const LatticeInterval& in) {
  std::ostringstream o;
  const std::size_t top = in.top_index();
  o << "proper intermediates: " << in.subgroups.size() << "\n";
  for (std::size_t i = 0; i <= top; ++i) {
    const PermGroup& g = in.at(i);
    o << std::setw(5) << i << std::setw(12) << g.order() << "  ";
    const auto gens = generator_text(g);
    for (std::size_t k = 0; k < gens.size(); ++k) o << (k ? ", " : "") << gens[k];
    if (gens.empty()) o << "()";
    o << "\n";
  }
  o << "inclusions:";
  for (const auto& [a, b] : in.inclusions) o << " [" << a << "," << b << "]";
  o << "\n";
  return o.str();
}

void print_bench_table(std::ostream& out, const std::vector<BenchRow>& rows, const std::vector<std::string>& methods) {
  std::vector<std::string> header = {"label", "index", "count", "agree"};
  for (const auto& m : methods) header.push_back("t_" + m);
  std::vector<std::vector<std::string>> cells = {header};
  std::vector<std::string> notes;
  for (const auto& r : rows) {
    std::vector<std::string> line = {r.label, factorization(r.index)};
    std::set<std::size_t> counts;
    for (const auto& rep : r.reports) counts.insert(rep.count());
    line.push_back(counts.empty() ? "-" : std::to_string(*counts.begin()));
    line.push_back(r.mismatch ? "NO" : r.reports.size() > 1 ? "yes" : "-");
    for (const auto& m : methods) {
      std::string cell = "-";
      for (const auto& rep : r.reports)
        if (rep.method == m) cell = format_seconds(rep.wall_time);
      for (const auto& [em, msg] : r.errors)
        if (em == m) {
          cell = "error";
          notes.push_back(r.label + " (" + m + "): " + msg);
        }
      line.push_back(cell);
    }
    if (r.mismatch) notes.push_back(r.label + ": " + *r.mismatch);
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c == 0)
        out << std::left << std::setw(static_cast<int>(width[c])) << line[c];
      else
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << line[c];
    }
    out << "\n";
  }
  for (const auto& n : notes) out << "# " << n << "\n";
}

}  // namespace ivl
