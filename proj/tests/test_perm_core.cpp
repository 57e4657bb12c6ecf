#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "brute.hpp"
#include "ivl/config.hpp"
#include "ivl/perm_group.hpp"
#include "ivl/perm_store.hpp"

using namespace ivl;
using brute::P;

TEST_CASE("parse and print cycles") {
  CHECK(P("()", 4).is_identity());
  CHECK(P("()", 4).to_cycles() == "()");
  auto a = P("(1,2,3)", 3);
  CHECK(std::vector<Point>(a.images().begin(), a.images().end()) == std::vector<Point>{1, 2, 0});
  CHECK(P("(3,1)(2,5,4)", 6).to_cycles() == "(1,3)(2,5,4)");
  CHECK(P(" ( 1 , 2 ) ", 3) == P("(1,2)", 3));
  CHECK_THROWS_AS(P("", 3), ParseError);
  CHECK_THROWS_AS(P("(1,2", 3), ParseError);
  CHECK_THROWS_AS(P("(0,1)", 3), ParseError);
  CHECK_THROWS_AS(P("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(P("(1,2,1)", 3), ParseError);
  CHECK_THROWS_AS(P("(1,2)(2,3)", 3), ParseError);
  CHECK_THROWS_AS(P("(a,b)", 3), ParseError);
}

TEST_CASE("element arithmetic") {
  auto x = P("(1,2)(3,4,5)", 5);
  Permutation y(5);
  std::uint64_t k = 0;
  do {
    y = y * x;
    ++k;
  } while (!y.is_identity());
  CHECK(k == 6);
  CHECK(x.order() == 6);
  CHECK(x.cycle_type() == std::vector<std::size_t>{2, 3});
  CHECK(conj_elem(P("(1,2)", 3), P("(2,3)", 3)) == P("(1,3)", 3));
  CHECK(P("(1,2)", 3) * P("(2,3)", 3) == P("(1,3,2)", 3));
  CHECK(x * x.inverse() == Permutation(5));
  CHECK(x.pow(-1) == x.inverse());
  CHECK(x.pow(7) == x);
  CHECK(x.smallest_moved_point() == 0);
  CHECK(Permutation(4).smallest_moved_point() == 4);
  for (const auto& g : brute::all_permutations(4))
    for (const auto& h : brute::all_permutations(4)) {
      CHECK(conj_elem(g, h) == h.inverse() * g * h);
      CHECK(g * h == compose(g, h));
      CHECK((g * h)[0] == h[g[0]]);
    }
  CHECK_THROWS_AS(P("(1,2)", 3) * P("(1,2)", 4), DegreeMismatch);
}

TEST_CASE("permutation store") {
  for (std::size_t n : {4u, 300u, 70000u}) {
    PermStore s(n);
    std::mt19937_64 rng(n);
    std::vector<Permutation> added;
    for (int i = 0; i < 200; ++i) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      Permutation p(img);
      auto [idx, fresh] = s.insert(p);
      if (fresh) added.push_back(p);
      CHECK(s.at(idx) == p);
    }
    CHECK(s.size() == added.size());
    for (std::size_t i = 0; i < added.size(); ++i) CHECK(*s.find(added[i]) == i);
    CHECK(s.find(Permutation(n)).has_value() == (std::find(added.begin(), added.end(), Permutation(n)) != added.end()));
  }
}

TEST_CASE("orders and membership") {
  auto s4 = brute::group(4, {"(1,2)", "(1,2,3,4)"});
  CHECK(s4.order() == 24);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK(PermGroup(5, {}).order() == 1);
  auto s6 = brute::group(6, {"(1,2)", "(1,2,3,4,5,6)"});
  CHECK(s6.order() == 720);
  CHECK(brute::elements(s6).size() == 720);
  CHECK(s6.contains(P("(1,3,5)", 6)));
  auto a4 = brute::group(4, {"(1,2,3)", "(2,3,4)"});
  CHECK(a4.order() == 12);
  CHECK(brute::elements(a4).size() == 12);
  CHECK(!a4.contains(P("(1,2)", 4)));
  CHECK(a4.contains(P("(1,2)(3,4)", 4)));
  CHECK_THROWS_AS(a4.contains(P("(1,2)", 5)), DegreeMismatch);
  CHECK(a4.is_subgroup_of(s4));
  CHECK(!s4.is_subgroup_of(a4));
  CHECK(a4.orbit_lengths() == std::vector<std::size_t>{4});
  CHECK(brute::group(6, {"(1,2)", "(4,5,6)"}).orbit_lengths() == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("membership agrees with closure") {
  const std::vector<std::pair<std::size_t, std::vector<const char*>>> cases = {
      {5, {"(1,2,3,4,5)", "(2,5)(3,4)"}},
      {6, {"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"}},
      {6, {"(1,2,3,4)", "(1,3)", "(5,6)"}},
      {6, {"(1,2)(3,4)", "(1,3)(2,4)", "(1,2,3)(4,5,6)"}},
      {7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}},
      {6, {"(1,2,3,4,5)", "(1,2,3)"}},
  };
  for (const auto& [n, gens] : cases) {
    std::vector<Permutation> g;
    for (auto c : gens) g.push_back(P(c, n));
    PermGroup G(n, g);
    auto elts = brute::element_set(G);
    CHECK(G.order() == elts.size());
    for (const auto& x : brute::all_permutations(n)) CHECK(G.contains(x) == (elts.count(x) > 0));
  }
}

TEST_CASE("chain is deterministic and canonical") {
  auto g1 = brute::group(5, {"(1,2,3,4,5)", "(1,2)"});
  auto g2 = brute::group(5, {"(1,2,3,4,5)", "(1,2)"});
  CHECK(g1.chain().base() == g2.chain().base());
  CHECK(g1.chain().base() == std::vector<Point>{0, 1, 2, 3});
  CHECK(g1.key() == g2.key());
  auto g3 = brute::group(5, {"(1,2)", "(2,3)", "(3,4)", "(4,5)"});
  CHECK(g1.key() == g3.key());
  CHECK(g1 == g3);
  // same group from random generating sets
  std::mt19937_64 rng(7);
  auto a5 = brute::group(5, {"(1,2,3)", "(3,4,5)"});
  for (int t = 0; t < 20; ++t) {
    std::vector<Permutation> gens;
    while (true) {
      gens.push_back(a5.random_element(rng));
      PermGroup h(5, gens);
      if (h.order() == 60) {
        CHECK(h.key() == a5.key());
        CHECK(h.chain().canonical_data() == a5.chain().canonical_data());
        break;
      }
    }
  }
  // conjugate subgroups of equal order get different keys
  auto h = brute::group(4, {"(1,2)"});
  auto k = brute::group(4, {"(3,4)"});
  CHECK(h.key() != k.key());
  CHECK(!(h == k));
}

TEST_CASE("element and index access") {
  auto d8 = brute::group(4, {"(1,2,3,4)", "(1,3)"});
  std::set<Permutation> seen;
  for (std::uint64_t i = 0; i < d8.order(); ++i) seen.insert(d8.chain().element(i));
  CHECK(seen == brute::element_set(d8));
}

TEST_CASE("random elements are uniform") {
  auto a5 = brute::group(5, {"(1,2,3)", "(3,4,5)"});
  std::mt19937_64 rng(12345);
  std::map<Permutation, int> counts;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    auto x = a5.random_element(rng);
    REQUIRE(a5.contains(x));
    ++counts[x];
  }
  CHECK(counts.size() == 60);
  const double p = 1.0 / 60, mean = draws * p, sd = std::sqrt(draws * p * (1 - p));
  for (const auto& [x, c] : counts) CHECK(std::abs(c - mean) <= 5 * sd);
}

TEST_CASE("least coset representative") {
  auto s5 = brute::group(5, {"(1,2,3,4,5)", "(1,2)"});
  auto u = brute::group(5, {"(1,2,3)", "(1,2)", "(4,5)"});
  auto uel = brute::elements(u);
  for (const auto& g : brute::elements(s5)) {
    Permutation best = u.chain().min_coset_rep(g);
    Permutation ref = uel[0] * g;
    for (const auto& x : uel) ref = std::min(ref, x * g);
    CHECK(best == ref);
  }
}

TEST_CASE("order overflow is reported") {
  // S_25 has order above 2^64
  std::vector<Permutation> gens{P("(1,2)", 25)};
  std::string cyc = "(";
  for (int i = 1; i <= 25; ++i) cyc += std::to_string(i) + (i < 25 ? "," : ")");
  gens.push_back(P(cyc, 25));
  PermGroup g(25, gens);
  CHECK_THROWS_AS(g.order(), CapExceeded);
}

TEST_CASE("conjugate subgroup and join") {
  auto h = brute::group(4, {"(1,2)"});
  auto k = h.conjugate(P("(2,3)", 4));
  CHECK(k == brute::group(4, {"(1,3)"}));
  CHECK(join(h, k).order() == 6);
  CHECK_THROWS_AS(brute::group(3, {"(1,2)"}).is_subgroup_of(brute::group(4, {"(1,2)"})), DegreeMismatch);
}
