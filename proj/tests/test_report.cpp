#include <doctest.h>

#include <fstream>
#include <sstream>

#include "brute.hpp"
#include "groups.hpp"
#include "ivl/group_spec.hpp"
#include "ivl/intermediate.hpp"
#include "ivl/report.hpp"

using namespace ivl;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kWreath =
    "label S5wrS2\n"
    "degree 10\n"
    "gen (1,2,3,4,5)\n"
    "gen (1,2)\n"
    "gen (1,6)(2,7)(3,8)(4,9)(5,10)\n"
    "subgroup sylow 5\n";

}  // namespace

TEST_CASE("group spec files") {
  auto spec = parse_group_spec(kWreath);
  CHECK(spec.label == "S5wrS2");
  CHECK(spec.degree == 10);
  CHECK(spec.generators.size() == 3);
  REQUIRE(spec.subgroup);
  CHECK(spec.subgroup->kind == SubgroupRuleKind::sylow);
  CHECK(spec.subgroup->prime == 5);
  auto g = spec.group();
  CHECK(g.order() == 28800);
  CHECK(resolve_subgroup(g, *spec.subgroup, 7).order() == 25);

  auto listed = parse_group_spec(
      "# comment\n"
      "label S4\n"
      "degree 4\n"
      "gen (1,2)\n"
      "gen (1,2,3,4)\n"
      "subgroup generators\n"
      "gen (1,2,3,4)\n");
  REQUIRE(listed.subgroup);
  CHECK(listed.generators.size() == 2);
  CHECK(listed.subgroup->gens == std::vector<std::string>{"(1,2,3,4)"});
  CHECK(resolve_subgroup(listed.group(), *listed.subgroup).order() == 4);

  CHECK_THROWS_AS(parse_group_spec("label X\ngen (1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("label X\ndegree 3\ngen (1,4)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("label X\ndegree 3\nsubgroup sylow 4\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("label X\ndegree 3\nfrobnicate\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("label X\ndegree -3\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);

  auto many = parse_group_specs(
      "label A\ndegree 3\ngen (1,2,3)\nmethods maximal,oracle\n"
      "label B\ndegree 4\ngen (1,2)\ngen (3,4)\nsubgroup trivial\n");
  REQUIRE(many.size() == 2);
  CHECK(many[0].methods == std::vector<std::string>{"maximal", "oracle"});
  CHECK(many[1].group().order() == 4);
  CHECK(parse_group_specs("# nothing\n").empty());
}

TEST_CASE("subgroup rules") {
  CHECK(parse_subgroup_rule("trivial").kind == SubgroupRuleKind::trivial);
  auto d = parse_subgroup_rule("derived-of-sylow:2");
  CHECK(d.kind == SubgroupRuleKind::derived_of_sylow);
  CHECK(d.prime == 2);
  auto gens = parse_subgroup_rule("gens:(1,2);(3,4)");
  CHECK(gens.gens == std::vector<std::string>{"(1,2)", "(3,4)"});
  CHECK_THROWS_AS(parse_subgroup_rule("sylow:6"), ParseError);
  CHECK_THROWS_AS(parse_subgroup_rule("sylow:"), ParseError);
  CHECK_THROWS_AS(parse_subgroup_rule("random"), ParseError);
  CHECK_THROWS_AS(resolve_subgroup(groups::alternating(4), parse_subgroup_rule("gens:(1,2)")), NotSubgroup);
}

TEST_CASE("sylow and derived subgroups") {
  CHECK(sylow_subgroup(groups::cyclic(6), 3).order() == 3);
  CHECK(sylow_subgroup(groups::symmetric(4), 2).order() == 8);
  CHECK_THROWS_AS(sylow_subgroup(groups::symmetric(4), 5), Error);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto p = sylow_subgroup(groups::symmetric(8), 2, seed);
    CHECK(p.order() == 128);
    CHECK(p.is_subgroup_of(groups::symmetric(8)));
  }
  // fixed seed, fixed answer
  CHECK(sylow_subgroup(groups::symmetric(6), 3, 11) == sylow_subgroup(groups::symmetric(6), 3, 11));

  CHECK(derived_subgroup(groups::symmetric(4)).order() == 12);
  CHECK(derived_subgroup(groups::alternating(4)).order() == 4);
  CHECK(derived_subgroup(groups::alternating(5)).order() == 60);
  CHECK(derived_subgroup(groups::cyclic(12)).is_trivial());
  // against commutators of all element pairs
  for (const auto& [name, g] : groups::corpus()) {
    if (g.order() > 120) continue;
    INFO(name);
    auto elts = brute::elements(g);
    std::vector<Permutation> comms;
    for (const auto& a : elts)
      for (const auto& b : elts) comms.push_back(a.inverse() * b.inverse() * a * b);
    const auto closed = brute::closure(g.degree(), comms);
    CHECK(brute::as_set(derived_subgroup(g)) == std::set<Permutation>(closed.begin(), closed.end()));
  }
  CHECK(derived_subgroup(sylow_subgroup(groups::symmetric(4), 2)).order() == 2);
}

TEST_CASE("factorization") {
  CHECK(factorization(1) == "1");
  CHECK(factorization(720) == "2^4*3^2*5");
  CHECK(factorization(13) == "13");
  CHECK(factorization(495766656000ULL) == "2^10*3^7*5^3*7*11*23");
}

TEST_CASE("json output and round trip") {
  auto s4 = groups::symmetric(4);
  auto iv = intermediate_subgroups(s4, brute::group(4, {"(1,2,3,4)"}));
  auto text = emit_json(iv);
  auto parsed = parse_json(text);
  CHECK(parsed.bottom_order == 4);
  CHECK(parsed.top_order == 24);
  REQUIRE(parsed.subgroups.size() == 1);
  CHECK(parsed.subgroups[0].order == 8);
  CHECK(parsed.inclusions == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(text.find("\"bottom_order\"") < text.find("\"top_order\""));
  CHECK(text.find("\"subgroups\"") < text.find("\"inclusions\""));
  auto back = to_interval(parsed);
  CHECK(!compare_intervals(back, iv));

  // empty interval: U maximal in G
  auto maximal = intermediate_subgroups(s4, brute::group(4, {"(1,2)", "(1,2,3)"}));
  auto mp = parse_json(emit_json(maximal));
  CHECK(mp.subgroups.empty());
  CHECK(mp.inclusions == std::vector<Edge>{{0, 1}});

  for (const auto& [name, g] : groups::corpus()) {
    if (g.order() > 120) continue;
    INFO(name);
    auto whole = intermediate_subgroups(g, PermGroup::trivial(g.degree()));
    auto again = to_interval(parse_json(emit_json(whole, -1)));
    CHECK(!compare_intervals(whole, again));
  }

  CHECK_THROWS_AS(parse_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_json("{\"top_order\": 2}"), ParseError);
  CHECK_THROWS_AS(parse_json(R"({"bottom_order":1,"top_order":6,"subgroups":[{"index":2,"order":2}],"inclusions":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_json(R"({"bottom_order":1,"top_order":6,"subgroups":[{"index":1,"order":4}],"inclusions":[]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_json(R"({"bottom_order":1,"top_order":6,"subgroups":[{"index":1,"order":2}],"inclusions":[[1,0]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_json(R"({"bottom_order":1,"top_order":6,"subgroups":[],"inclusions":[[0,2]]})"), ParseError);
}

TEST_CASE("reference fixture parses") {
  auto parsed = parse_json(slurp(std::string(IVL_TEST_DATA) + "/co3_sylow2.json"));
  CHECK(parsed.bottom_order == 1024);
  CHECK(parsed.top_order == 495766656000ULL);
  std::vector<std::uint64_t> orders;
  for (const auto& s : parsed.subgroups) orders.push_back(s.order);
  CHECK(orders == std::vector<std::uint64_t>{3072, 3072, 3072, 3072, 9216, 9216, 21504, 21504, 27648, 46080, 322560,
                                             2903040});
  CHECK(parsed.inclusions.size() == 25);
  CHECK(parsed.inclusions.front() == Edge{0, 1});
  CHECK(parsed.inclusions.back() == Edge{12, 13});
  CHECK_THROWS_AS(to_interval(parsed), ParseError);
}

TEST_CASE("dot and table output") {
  auto s4 = groups::symmetric(4);
  auto iv = intermediate_subgroups(s4, brute::group(4, {"(1,2)"}));
  auto dot = emit_dot(iv, "S4");
  CHECK(dot.rfind("digraph \"S4\" {", 0) == 0);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
  CHECK(arrows == iv.inclusions.size());
  std::size_t ranks = 0;
  for (std::size_t p = dot.find("rank=same"); p != std::string::npos; p = dot.find("rank=same", p + 1)) ++ranks;
  std::set<std::uint64_t> orders = {2, 24};
  for (const auto& v : iv.subgroups) orders.insert(v.order());
  CHECK(ranks == orders.size());

  auto table = emit_table(iv);
  CHECK(table.rfind("proper intermediates: " + std::to_string(iv.subgroups.size()), 0) == 0);
}

TEST_CASE("bench table") {
  std::ostringstream empty;
  print_bench_table(empty, {}, {"maximal", "block"});
  CHECK(empty.str() == "label  index  count  agree  t_maximal  t_block\n");

  auto s4 = groups::symmetric(4);
  auto iv = intermediate_subgroups(s4, brute::group(4, {"(1,2,3,4)"}));
  BenchRow row{"S4/C4", 6, {{"maximal", iv, 0.5}, {"oracle", iv, 0.25}}, {{"block", "cap exceeded"}}, std::nullopt};
  std::ostringstream out;
  print_bench_table(out, {row}, {"maximal", "block", "oracle"});
  const std::string text = out.str();
  CHECK(text.find("S4/C4") != std::string::npos);
  CHECK(text.find("2*3") != std::string::npos);
  CHECK(text.find("error") != std::string::npos);
  CHECK(text.find("# S4/C4 (block): cap exceeded") != std::string::npos);
}
