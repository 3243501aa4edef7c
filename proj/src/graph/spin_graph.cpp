#include "spin/spin_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "spin/error.hpp"

namespace spin {

StableGraph::StableGraph(unsigned r, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : r_(r), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (r_ == 0) throw InputError("r must be positive");
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_pos_.emplace(vertices_[i].id, i).second) {
      throw InputError("duplicate vertex id " + std::to_string(vertices_[i].id));
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (!edge_pos_.emplace(e.id, i).second) throw InputError("duplicate edge id " + std::to_string(e.id));
    if (!vertex_pos_.contains(e.a) || !vertex_pos_.contains(e.b)) {
      throw InputError("edge " + std::to_string(e.id) + " has an unknown endpoint");
    }
    if (e.a > e.b) std::swap(e.a, e.b);
  }
}

std::size_t StableGraph::vertex_index(int id) const {
  auto it = vertex_pos_.find(id);
  if (it == vertex_pos_.end()) throw InputError("unknown vertex id " + std::to_string(id));
  return it->second;
}

std::size_t StableGraph::edge_index(int id) const {
  auto it = edge_pos_.find(id);
  if (it == edge_pos_.end()) throw InputError("unknown edge id " + std::to_string(id));
  return it->second;
}

unsigned StableGraph::valence(int vertex_id) const {
  unsigned deg = 0;
  for (const auto& e : edges_) {
    if (e.a == vertex_id) ++deg;
    if (e.b == vertex_id) ++deg;
  }
  return deg;
}

long StableGraph::genus() const {
  long g = 0;
  for (const auto& v : vertices_) g += v.genus;
  const long betti = static_cast<long>(edges_.size()) - static_cast<long>(vertices_.size()) +
                     static_cast<long>(components_without(*this, {}).size());
  return g + betti;
}

GraphDiagnostics validate_graph(const StableGraph& g) {
  GraphDiagnostics d;
  d.genus = g.genus();
  auto problem = [&](std::string msg) {
    d.valid = false;
    d.problems.push_back(std::move(msg));
  };
  if (g.vertices().empty()) {
    problem("graph has no vertices");
    return d;
  }
  if (components_without(g, {}).size() != 1) problem("graph is not connected");
  for (const auto& v : g.vertices()) {
    const long stability = 2L * v.genus - 2 + g.valence(v.id);
    if (stability <= 0) {
      problem("vertex " + std::to_string(v.id) + " is unstable: 2g-2+deg = " +
              std::to_string(stability));
    }
  }
  if (d.genus < 2) problem("total genus " + std::to_string(d.genus) + " is below 2");
  if ((2 * d.genus - 2) % static_cast<long>(g.r()) != 0) {
    problem("r = " + std::to_string(g.r()) + " does not divide 2g-2 = " +
            std::to_string(2 * d.genus - 2));
  }
  return d;
}

std::map<int, long> twisted_canonical_degrees(const StableGraph& g,
                                              const std::map<int, unsigned>& nonfree) {
  std::map<int, long> D;
  for (const auto& v : g.vertices()) D[v.id] = 2L * v.genus - 2 + g.valence(v.id);
  for (const auto& [edge_id, u] : nonfree) {
    const Edge& e = g.edge(edge_id);
    if (u == 0 || u >= g.r()) throw InputError("twist u must satisfy 0 < u < r");
    D[e.a] -= u;
    D[e.b] -= static_cast<long>(g.r()) - u;
  }
  return D;
}

namespace {

long mod(long a, long r) { return ((a % r) + r) % r; }

void require_valid(const StableGraph& g) {
  const auto diag = validate_graph(g);
  if (!diag.valid) throw DomainError("invalid stable graph: " + diag.problems.front());
}

}  // namespace

std::vector<SpinType> enumerate_spin_types(const StableGraph& g) {
  require_valid(g);
  const long r = g.r();
  const auto& edges = g.edges();
  std::map<int, long> base;
  for (const auto& v : g.vertices()) base[v.id] = 2L * v.genus - 2 + g.valence(v.id);

  std::vector<SpinType> out;
  std::map<int, unsigned> chosen;
  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (k == edges.size()) {
      SpinType t;
      for (const auto& [id, D] : base) {
        if (mod(D, r) != 0) return;
        t.degrees[id] = D / r;
      }
      t.nonfree = chosen;
      out.push_back(std::move(t));
      return;
    }
    const Edge& e = edges[k];
    visit(k + 1);
    const long max_u = e.is_loop() ? r / 2 : r - 1;
    for (long u = 1; u <= max_u; ++u) {
      base[e.a] -= u;
      base[e.b] -= r - u;
      chosen[e.id] = static_cast<unsigned>(u);
      visit(k + 1);
      chosen.erase(e.id);
      base[e.a] += u;
      base[e.b] += r - u;
    }
  };
  visit(0);
  return out;
}

bool degree_sum_check(const StableGraph& g, const SpinType& t) {
  const long target = (2 * g.genus() - 2);
  if (target % static_cast<long>(g.r()) != 0) return false;
  long sum = static_cast<long>(t.nonfree.size());
  for (const auto& [id, d] : t.degrees) sum += d;
  return sum == target / static_cast<long>(g.r());
}

std::vector<std::vector<int>> components_without(const StableGraph& g,
                                                 const std::map<int, unsigned>& removed) {
  std::map<int, std::vector<int>> adjacency;
  for (const auto& v : g.vertices()) adjacency[v.id];
  for (const auto& e : g.edges()) {
    if (removed.contains(e.id) || e.is_loop()) continue;
    adjacency[e.a].push_back(e.b);
    adjacency[e.b].push_back(e.a);
  }
  std::set<int> seen;
  std::vector<std::vector<int>> components;
  for (const auto& [start, _] : adjacency) {
    if (seen.contains(start)) continue;
    std::vector<int> comp;
    std::queue<int> frontier;
    frontier.push(start);
    seen.insert(start);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      comp.push_back(v);
      for (int w : adjacency[v]) {
        if (seen.insert(w).second) frontier.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

mpz_class aut_order(const StableGraph& g, const SpinType& t) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), g.r(), components_without(g, t.nonfree).size());
  return out;
}

mpz_class realized_aut_order(const StableGraph& g, const SpinType& t, unsigned roots_in_field) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), roots_in_field, components_without(g, t.nonfree).size());
  return out;
}

mpz_class count_roots(const StableGraph& g, const SpinType& t) {
  unsigned long exponent = 0;
  for (const auto& comp : components_without(g, t.nonfree)) {
    const std::set<int> members(comp.begin(), comp.end());
    long genus_sum = 0;
    for (int v : comp) genus_sum += g.vertex(v).genus;
    long edges_in = 0;
    for (const auto& e : g.edges()) {
      if (!t.nonfree.contains(e.id) && members.contains(e.a)) ++edges_in;
    }
    const long betti = edges_in - static_cast<long>(comp.size()) + 1;
    exponent += static_cast<unsigned long>(2 * genus_sum + betti);
  }
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), g.r(), exponent);
  return out;
}

namespace {

std::string power(const std::string& base, unsigned e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

DeformationPresentation universal_deformation_presentation(const StableGraph& g, const SpinType& t) {
  DeformationPresentation pres;
  pres.genus = g.genus();
  if (pres.genus < 2) throw DomainError("deformation presentation needs genus >= 2");
  pres.parameters = static_cast<unsigned>(3 * pres.genus - 3);
  if (g.edges().size() > pres.parameters) {
    throw DomainError("graph has more nodes than 3g-3 deformation parameters");
  }
  unsigned i = 0;
  for (const auto& [edge_id, u] : t.nonfree) {
    g.edge(edge_id);
    if (u == 0 || u >= g.r()) throw InputError("twist u must satisfy 0 < u < r");
    ++i;
    const std::string idx = std::to_string(i);
    DeformationNode node{edge_id, u, g.r() - u, "P" + idx, "Q" + idx, "tau" + idx};
    pres.generators.push_back(node.p_name);
    pres.generators.push_back(node.q_name);
    pres.relations.push_back(power(node.p_name, node.u) + " - " + power(node.q_name, node.v));
    pres.substitutions.push_back("t" + idx + " -> " + node.p_name + "*" + node.q_name);
    pres.pure_cover_relations.push_back("p" + idx + " - " + power(node.tau_name, node.v));
    pres.pure_cover_relations.push_back("q" + idx + " - " + power(node.tau_name, node.u));
    pres.nodes.push_back(std::move(node));
  }
  for (unsigned k = i + 1; k <= pres.parameters; ++k) pres.generators.push_back("t" + std::to_string(k));
  return pres;
}

long natural_pullback_degree(long d, long k) {
  if (k < 0) throw DomainError("number of normalized singularities must be nonnegative");
  return d - k;
}

}  // namespace spin
