#include "ivl/group_spec.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "ivl/config.hpp"
#include "ivl/conjugacy.hpp"

namespace ivl {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_perms(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto end = s.find(';', start);
    if (end == std::string_view::npos) end = s.size();
    auto item = trim(s.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    start = end + 1;
  }
  return out;
}

std::uint64_t parse_prime(std::string_view s) {
  std::uint64_t p = 0;
  const std::string t = trim(s);
  if (t.empty()) throw ParseError("expected a prime");
  for (char c : t) {
    if (c < '0' || c > '9') throw ParseError("bad prime '" + t + "'");
    p = p * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (p < 2) throw ParseError("bad prime '" + t + "'");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw ParseError(t + " is not prime");
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The p-part of x, or the identity.
Permutation p_part(const Permutation& x, std::uint64_t p) {
  std::uint64_t o = x.order();
  while (o % p == 0) o /= p;
  return x.pow(static_cast<std::int64_t>(o));
}

}  // namespace

PermGroup GroupSpec::group() const {
  if (degree == 0) throw ParseError("group spec '" + label + "': missing degree");
  std::vector<Permutation> gens;
  for (const auto& g : generators) gens.push_back(parse_permutation(g, degree));
  return PermGroup(degree, std::move(gens));
}

SubgroupRule parse_subgroup_rule(std::string_view text) {
  const std::string t = trim(text);
  SubgroupRule r;
  if (t == "trivial") return r;
  if (t.rfind("sylow:", 0) == 0) {
    r.kind = SubgroupRuleKind::sylow;
    r.prime = parse_prime(std::string_view(t).substr(6));
    return r;
  }
  if (t.rfind("derived-of-sylow:", 0) == 0) {
    r.kind = SubgroupRuleKind::derived_of_sylow;
    r.prime = parse_prime(std::string_view(t).substr(17));
    return r;
  }
  if (t.rfind("gens:", 0) == 0 || t == "generators") {
    r.kind = SubgroupRuleKind::generators;
    if (t != "generators") r.gens = split_perms(std::string_view(t).substr(5));
    return r;
  }
  throw ParseError("unknown subgroup rule '" + t + "'");
}

std::vector<GroupSpec> parse_group_specs(const std::string& text) {
  std::vector<GroupSpec> specs;
  std::stringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool in_subgroup = false;
  auto fail = [&](const std::string& what) {
    throw ParseError("group spec line " + std::to_string(lineno) + ": " + what);
  };
  auto current = [&]() -> GroupSpec& {
    if (specs.empty()) specs.emplace_back();
    return specs.back();
  };
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto space = line.find_first_of(" \t");
    const std::string head = line.substr(0, space);
    const std::string rest = space == std::string::npos ? "" : trim(std::string_view(line).substr(space));
    if (head == "label") {
      if (rest.empty()) fail("empty label");
      if (!specs.empty() && specs.back().label.empty())
        specs.back().label = rest;
      else
        specs.push_back(GroupSpec{rest, 0, {}, std::nullopt, {}});
      in_subgroup = false;
    } else if (head == "degree") {
      try {
        std::size_t used = 0;
        const long long d = std::stoll(rest, &used);
        if (used != rest.size() || d <= 0) throw std::invalid_argument(rest);
        current().degree = static_cast<std::size_t>(d);
      } catch (const std::logic_error&) {
        fail("bad degree '" + rest + "'");
      }
    } else if (head == "gen") {
      GroupSpec& s = current();
      if (s.degree == 0) fail("gen before degree");
      try {
        parse_permutation(rest, s.degree);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      if (in_subgroup)
        s.subgroup->gens.push_back(rest);
      else
        s.generators.push_back(rest);
    } else if (head == "subgroup") {
      GroupSpec& s = current();
      // "subgroup sylow 5" and "subgroup sylow:5" are both accepted
      std::string rule = rest;
      if (const auto sp = rule.find(' '); sp != std::string::npos && rule.rfind("gens:", 0) != 0)
        rule = rule.substr(0, sp) + ":" + trim(std::string_view(rule).substr(sp));
      try {
        s.subgroup = parse_subgroup_rule(rule);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      for (const auto& g : s.subgroup->gens) {
        if (s.degree == 0) fail("subgroup generators before degree");
        parse_permutation(g, s.degree);
      }
      in_subgroup = s.subgroup->kind == SubgroupRuleKind::generators && rule == "generators";
    } else if (head == "methods") {
      GroupSpec& s = current();
      s.methods.clear();
      std::stringstream words(rest);
      std::string m;
      while (std::getline(words, m, ',')) {
        m = trim(m);
        if (m != "maximal" && m != "block" && m != "oracle") fail("unknown method '" + m + "'");
        s.methods.push_back(m);
      }
    } else {
      fail("unknown keyword '" + head + "'");
    }
  }
  for (const auto& s : specs)
    if (s.degree == 0) throw ParseError("group spec '" + s.label + "': missing degree");
  return specs;
}

GroupSpec parse_group_spec(const std::string& text) {
  auto specs = parse_group_specs(text);
  if (specs.size() != 1) throw ParseError("expected exactly one group spec, found " + std::to_string(specs.size()));
  return std::move(specs.front());
}

GroupSpec load_group_spec(const std::string& path) { return parse_group_spec(read_file(path)); }

std::vector<GroupSpec> load_group_specs(const std::string& path) { return parse_group_specs(read_file(path)); }

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::uint64_t seed) {
  std::uint64_t target = 1;
  for (std::uint64_t n = g.order(); n % p == 0; n /= p) target *= p;
  if (target == 1) throw Error("sylow: " + std::to_string(p) + " does not divide the group order");
  std::mt19937_64 rng(seed);
  PermGroup sub = PermGroup::trivial(g.degree());
  while (sub.order() < target) {
    // sub is normal in its normalizer and p divides the index until sub is Sylow, so the
    // p-part of a random normalizer element eventually falls outside sub
    const PermGroup norm = sub.is_trivial() ? g : normalizer(g, sub);
    for (;;) {
      const Permutation y = p_part(norm.random_element(rng), p);
      if (sub.contains(y)) continue;
      std::vector<Permutation> gens = sub.generators();
      gens.push_back(y);
      sub = PermGroup(g.degree(), std::move(gens));
      break;
    }
  }
  return sub;
}

PermGroup derived_subgroup(const PermGroup& g) {
  const std::size_t n = g.degree();
  const auto& gens = g.generators();
  PermGroup d = PermGroup::trivial(n);
  auto adjoin = [&](const Permutation& x) {
    if (d.contains(x)) return false;
    std::vector<Permutation> next = d.generators();
    next.push_back(x);
    d = PermGroup(n, std::move(next));
    return true;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      adjoin(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  // normal closure
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Permutation> current = d.generators();
    for (const auto& x : current)
      for (const auto& s : gens)
        if (adjoin(conj_elem(x, s))) grew = true;
  }
  return d;
}

PermGroup resolve_subgroup(const PermGroup& g, const SubgroupRule& rule, std::uint64_t seed) {
  switch (rule.kind) {
    case SubgroupRuleKind::trivial:
      return PermGroup::trivial(g.degree());
    case SubgroupRuleKind::sylow:
      return sylow_subgroup(g, rule.prime, seed);
    case SubgroupRuleKind::derived_of_sylow:
      return derived_subgroup(sylow_subgroup(g, rule.prime, seed));
    case SubgroupRuleKind::generators: {
      std::vector<Permutation> gens;
      for (const auto& s : rule.gens) {
        Permutation x = parse_permutation(s, g.degree());
        if (!g.contains(x)) throw NotSubgroup("subgroup generator " + s + " is not in the group");
        gens.push_back(std::move(x));
      }
      return PermGroup(g.degree(), std::move(gens));
    }
  }
  throw Error("unknown subgroup rule");
}

std::string factorization(std::uint64_t n) {
  if (n == 1) return "1";
  std::string out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += std::to_string(p);
    if (e > 1) out += "^" + std::to_string(e);
  }
  if (n > 1) out += (out.empty() ? "" : "*") + std::to_string(n);
  return out;
}

}  // namespace ivl
