#include "ivl/maximal_data.hpp"

#include <fstream>
#include <sstream>

#include "ivl/config.hpp"

namespace ivl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_perms(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t parse_number(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("maximal data line " + std::to_string(line) + ": bad number '" + s + "'");
  }
}

std::string join_perms(const std::vector<std::string>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ";" : "") + gens[i];
  return out;
}

}  // namespace

MaximalData MaximalData::parse(const std::string& text) {
  std::vector<MaximalRecord> records;
  std::stringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::stringstream words(line);
    std::string head;
    words >> head;
    if (head == "group") {
      MaximalRecord r;
      std::string order_field, degree_field;
      words >> r.label >> order_field >> degree_field;
      if (r.label.empty() || order_field.rfind("order=", 0) != 0 || degree_field.rfind("degree=", 0) != 0)
        throw ParseError("maximal data line " + std::to_string(lineno) + ": expected 'group <label> order=<n> degree=<d>'");
      r.order = parse_number(order_field.substr(6), lineno);
      r.degree = parse_number(degree_field.substr(7), lineno);
      records.push_back(std::move(r));
    } else if (head == "gens" || head == "maximal") {
      if (records.empty()) throw ParseError("maximal data line " + std::to_string(lineno) + ": no group header");
      std::string rest;
      std::getline(words, rest);
      auto& r = records.back();
      if (head == "gens") {
        r.gens = split_perms(rest);
        for (const auto& g : r.gens) parse_permutation(g, r.degree);
      } else {
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
          throw ParseError("maximal data line " + std::to_string(lineno) + ": expected 'maximal <order>: ...'");
        MaximalRecord::Entry e;
        e.order = parse_number(trim(rest.substr(0, colon)), lineno);
        e.gens = split_perms(rest.substr(colon + 1));
        for (const auto& g : e.gens) parse_permutation(g, r.degree);
        r.maximals.push_back(std::move(e));
      }
    } else {
      throw ParseError("maximal data line " + std::to_string(lineno) + ": unknown keyword '" + head + "'");
    }
  }
  return MaximalData(std::move(records));
}

MaximalData MaximalData::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open maximal data file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string MaximalData::emit() const {
  std::string out;
  for (const auto& r : records_) {
    out += "group " + r.label + " order=" + std::to_string(r.order) + " degree=" + std::to_string(r.degree) + "\n";
    if (!r.gens.empty()) out += "gens " + join_perms(r.gens) + "\n";
    for (const auto& e : r.maximals) out += "maximal " + std::to_string(e.order) + ": " + join_perms(e.gens) + "\n";
  }
  return out;
}

std::optional<MaximalClasses> MaximalData::try_record(const MaximalRecord& r, const PermGroup& t) const {
  if (r.degree != t.degree() || r.order != t.order()) return std::nullopt;
  if (!r.gens.empty()) {
    std::vector<Permutation> gens;
    for (const auto& g : r.gens) gens.push_back(parse_permutation(g, r.degree));
    for (const auto& g : gens)
      if (!t.contains(g)) return std::nullopt;
  }
  MaximalClasses out{t, {}, MaximalSource::datafile};
  for (const auto& e : r.maximals) {
    std::vector<Permutation> gens;
    for (const auto& g : e.gens) {
      gens.push_back(parse_permutation(g, r.degree));
      if (!t.contains(gens.back())) return std::nullopt;
    }
    PermGroup m(r.degree, std::move(gens));
    if (m.order() != e.order)
      throw Error("maximal data for " + r.label + ": subgroup stated as order " + std::to_string(e.order) +
                  " has order " + std::to_string(m.order()));
    out.reps.push_back(std::move(m));
  }
  return out;
}

MaximalClasses MaximalData::lookup(const PermGroup& t) const {
  for (const auto& r : records_)
    if (auto m = try_record(r, t)) return std::move(*m);
  throw DatafileMiss("no maximal subgroup data for a group of order " + std::to_string(t.order()) + " and degree " +
                     std::to_string(t.degree()));
}

bool MaximalData::has(const PermGroup& t) const {
  for (const auto& r : records_)
    if (try_record(r, t)) return true;
  return false;
}

}  // namespace ivl
