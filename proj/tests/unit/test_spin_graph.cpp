#include <doctest.h>

#include "spin/error.hpp"
#include "spin/spin_graph.hpp"
#include "support/oracles.hpp"

using namespace spin;

namespace {

StableGraph loop_graph(unsigned r) { return StableGraph{r, {{0, 1}}, {{0, 0, 0}}}; }

// Independent enumeration: every assignment of {free, 1..r-1} per edge, with
// the divisibility condition recomputed from scratch.
std::set<std::map<int, unsigned>> brute_force_types(const StableGraph& g) {
  const long r = g.r();
  std::set<std::map<int, unsigned>> out;
  const auto& edges = g.edges();
  std::vector<unsigned> choice(edges.size(), 0);
  while (true) {
    std::map<int, long> D;
    for (const auto& v : g.vertices()) D[v.id] = 2L * v.genus - 2;
    std::map<int, unsigned> nonfree;
    bool canonical = true;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      ++D[edges[i].a];
      ++D[edges[i].b];
      if (choice[i] == 0) continue;
      if (edges[i].a == edges[i].b && 2 * choice[i] > r) canonical = false;
      D[edges[i].a] -= choice[i];
      D[edges[i].b] -= r - choice[i];
      nonfree[edges[i].id] = choice[i];
    }
    bool ok = canonical;
    for (const auto& [v, d] : D) ok = ok && ((d % r) + r) % r == 0;
    if (ok) out.insert(nonfree);
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == g.r()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("graph construction and validation") {
  CHECK_THROWS_AS((StableGraph{2, {{0, 1}, {0, 2}}, {}}), InputError);
  CHECK_THROWS_AS((StableGraph{2, {{0, 1}}, {{0, 0, 1}}}), InputError);
  CHECK_THROWS_AS((StableGraph{2, {{0, 1}}, {{0, 0, 0}, {0, 0, 0}}}), InputError);

  const auto loop = loop_graph(2);
  CHECK(loop.genus() == 2);
  CHECK(loop.valence(0) == 2);
  CHECK(validate_graph(loop).valid);

  const StableGraph reversed{2, {{5, 1}, {3, 1}}, {{7, 5, 3}}};
  CHECK(reversed.edge(7).a == 3);
  CHECK(reversed.vertices().front().id == 3);

  const auto unstable = validate_graph(StableGraph{2, {{0, 0}, {1, 2}}, {{0, 0, 1}}});
  CHECK_FALSE(unstable.valid);
  CHECK(unstable.problems.front() == "vertex 0 is unstable: 2g-2+deg = -1");

  CHECK_FALSE(validate_graph(StableGraph{2, {{0, 1}, {1, 1}}, {}}).valid);  // disconnected
  CHECK_FALSE(validate_graph(StableGraph{2, {{0, 1}}, {}}).valid);          // genus 1
  const auto bad_r = validate_graph(StableGraph{4, {{0, 2}}, {}});
  CHECK_FALSE(bad_r.valid);
  CHECK(bad_r.problems.back() == "r = 4 does not divide 2g-2 = 2");
  CHECK_THROWS_AS(enumerate_spin_types(StableGraph{4, {{0, 2}}, {}}), DomainError);
}

TEST_CASE("enumeration on small graphs") {
  const auto types = enumerate_spin_types(loop_graph(2));
  REQUIRE(types.size() == 2);
  CHECK(types[0].nonfree.empty());
  CHECK(types[0].degrees.at(0) == 1);
  CHECK(types[1].nonfree.at(0) == 1);
  CHECK(types[1].degrees.at(0) == 0);

  // Two elliptic components on one edge: the node must be non-free.
  const StableGraph banana{2, {{0, 1}, {1, 1}}, {{0, 0, 1}}};
  const auto t2 = enumerate_spin_types(banana);
  REQUIRE(t2.size() == 1);
  CHECK(t2[0].nonfree.at(0) == 1);

  // r = 4 on the same graph has genus 2 and is inadmissible; genus 3 instead.
  const StableGraph g3{4, {{0, 1}, {1, 2}}, {{0, 0, 1}}};
  const auto t4 = enumerate_spin_types(g3);
  REQUIRE(t4.size() == 1);
  CHECK(t4[0].nonfree.at(0) == 1);  // D_0 = 1 - u, D_1 = 3 - (4 - u)
  CHECK(t4[0].degrees == std::map<int, long>{{0, 0}, {1, 0}});
}

TEST_CASE("enumeration agrees with brute force on the corpus") {
  const auto corpus = testing::stable_graph_corpus(3, 4, 4);
  std::size_t checked = 0;
  for (const auto& c : corpus) {
    for (unsigned r : testing::admissible_orders(c.genus)) {
      const auto g = testing::to_graph(c, r);
      const auto types = enumerate_spin_types(g);
      std::set<std::map<int, unsigned>> got;
      for (const auto& t : types) got.insert(t.nonfree);
      CHECK(got.size() == types.size());
      CHECK(got == brute_force_types(g));
      for (const auto& t : types) {
        CHECK(degree_sum_check(g, t));
        long sum = 0;
        for (const auto& [v, d] : t.degrees) sum += d;
        CHECK(sum + static_cast<long>(t.nonfree.size()) == (2 * c.genus - 2) / static_cast<long>(r));
      }
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("corpus counts") {
  // Stable graphs of genus 2 (all 7 have at most 2 vertices and 3 edges).
  const auto corpus = testing::stable_graph_corpus(4, 5, 3);
  long g2 = 0, g3 = 0;
  for (const auto& c : corpus) (c.genus == 2 ? g2 : g3)++;
  CHECK(g2 == 7);
  // 42 stable graphs of genus 3, minus the 5 trivalent ones with 6 edges.
  CHECK(g3 == 37);
}

TEST_CASE("automorphism orders and root counts") {
  const auto loop = loop_graph(2);
  const auto types = enumerate_spin_types(loop);
  CHECK(aut_order(loop, types[0]) == 2);
  CHECK(aut_order(loop, types[1]) == 2);
  CHECK(count_roots(loop, types[0]) == 8);   // r^{2*1 + 1}
  CHECK(count_roots(loop, types[1]) == 4);   // the node is cut: r^{2*1}
  CHECK(realized_aut_order(loop, types[0], 1) == 1);

  const StableGraph banana{3, {{0, 1}, {1, 1}, {2, 0}}, {{0, 0, 1}, {1, 1, 2}, {2, 0, 2}, {3, 0, 2}}};
  REQUIRE(validate_graph(banana).valid);
  for (const auto& t : enumerate_spin_types(banana)) {
    mpz_class expected = 1;
    for (std::size_t i = 0; i < testing::union_find_components(banana, t.nonfree); ++i) expected *= 3;
    CHECK(aut_order(banana, t) == expected);
  }

  for (long g = 2; g <= 6; ++g) {
    for (unsigned r : {2U, 3U, 4U, 5U}) {
      if ((2 * g - 2) % r != 0) continue;
      const StableGraph smooth{r, {{0, static_cast<unsigned>(g)}}, {}};
      const auto ts = enumerate_spin_types(smooth);
      REQUIRE(ts.size() == 1);
      mpz_class expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), r, 2 * g);
      CHECK(count_roots(smooth, ts[0]) == expected);
    }
  }
  CHECK(count_roots(StableGraph{2, {{0, 2}}, {}}, SpinType{{}, {{0, 1}}}) == 16);
}

TEST_CASE("components_without") {
  const StableGraph path{2, {{0, 1}, {1, 0}, {2, 1}}, {{0, 0, 1}, {1, 1, 2}}};
  CHECK(components_without(path, {}).size() == 1);
  const auto parts = components_without(path, {{0, 1}});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::vector<int>{0});
  CHECK(parts[1] == std::vector<int>{1, 2});
}

TEST_CASE("deformation presentation") {
  const auto loop = loop_graph(2);
  const auto types = enumerate_spin_types(loop);
  const auto pres = universal_deformation_presentation(loop, types[1]);
  CHECK(pres.parameters == 3);
  CHECK(pres.generators == std::vector<std::string>{"P1", "Q1", "t2", "t3"});
  CHECK(pres.relations == std::vector<std::string>{"P1 - Q1"});
  CHECK(pres.substitutions == std::vector<std::string>{"t1 -> P1*Q1"});
  CHECK(pres.pure_cover_relations == std::vector<std::string>{"p1 - tau1", "q1 - tau1"});

  const auto free = universal_deformation_presentation(loop, types[0]);
  CHECK(free.generators == std::vector<std::string>{"t1", "t2", "t3"});
  CHECK(free.relations.empty());

  const StableGraph g3{4, {{0, 1}, {1, 2}}, {{0, 0, 1}}};
  const auto p3 = universal_deformation_presentation(g3, enumerate_spin_types(g3)[0]);
  CHECK(p3.relations == std::vector<std::string>{"P1 - Q1^3"});
  CHECK(p3.pure_cover_relations == std::vector<std::string>{"p1 - tau1^3", "q1 - tau1"});
  CHECK(p3.generators.size() == 7);
}

TEST_CASE("natural pullback degree") {
  CHECK(natural_pullback_degree(5, 2) == 3);
  CHECK(natural_pullback_degree(0, 0) == 0);
  CHECK_THROWS_AS(natural_pullback_degree(1, -1), DomainError);
}
