#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace spin {

struct Vertex {
  int id = 0;
  unsigned genus = 0;
};

// Edge endpoints are stored with a <= b; the twist u of a spin type sits at a.
struct Edge {
  int id = 0;
  int a = 0;
  int b = 0;
  bool is_loop() const { return a == b; }
};

// Dual graph of a stable curve together with the spin order r.
class StableGraph {
 public:
  StableGraph(unsigned r, std::vector<Vertex> vertices, std::vector<Edge> edges);

  unsigned r() const { return r_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t vertex_index(int id) const;
  std::size_t edge_index(int id) const;
  const Edge& edge(int id) const { return edges_[edge_index(id)]; }
  const Vertex& vertex(int id) const { return vertices_[vertex_index(id)]; }

  // Half-edge count; loops count twice.
  unsigned valence(int vertex_id) const;
  // Sum of vertex genera plus first Betti number.
  long genus() const;

 private:
  unsigned r_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<int, std::size_t> vertex_pos_;
  std::map<int, std::size_t> edge_pos_;
};

struct GraphDiagnostics {
  bool valid = true;
  long genus = 0;
  std::vector<std::string> problems;
};

GraphDiagnostics validate_graph(const StableGraph& g);

struct SpinType {
  std::map<int, unsigned> nonfree;  // edge id -> u at the edge's first endpoint; v = r - u
  std::map<int, long> degrees;      // vertex id -> d_v
  friend auto operator<=>(const SpinType&, const SpinType&) = default;
};

// Per-vertex D_v = 2g_v - 2 + deg(v) - (twists at v's non-free half-edges).
std::map<int, long> twisted_canonical_degrees(const StableGraph& g,
                                              const std::map<int, unsigned>& nonfree);

// All twist assignments with every D_v divisible by r, in lexicographic
// order of the per-edge choice vector (free first, then u = 1, 2, ...).
// Throws DomainError on an invalid graph.
std::vector<SpinType> enumerate_spin_types(const StableGraph& g);

bool degree_sum_check(const StableGraph& g, const SpinType& t);

// Vertex-id sets of the connected components of g with the edges in
// `removed` deleted.
std::vector<std::vector<int>> components_without(const StableGraph& g,
                                                 const std::map<int, unsigned>& removed);

// r^c, c = number of components of the partial normalization along S.
mpz_class aut_order(const StableGraph& g, const SpinType& t);
// The same count restricted to roots of unity the base field realizes.
mpz_class realized_aut_order(const StableGraph& g, const SpinType& t, unsigned roots_in_field);

// Product over components C of (graph minus S) of r^{2 sum g_v + b1(C)}.
mpz_class count_roots(const StableGraph& g, const SpinType& t);

struct DeformationNode {
  int edge = 0;
  unsigned u = 0;
  unsigned v = 0;
  std::string p_name, q_name, tau_name;  // P_i, Q_i, tau_i
};

struct DeformationPresentation {
  long genus = 0;
  unsigned parameters = 0;  // 3g - 3
  std::vector<std::string> generators;
  std::vector<std::string> relations;      // "P1 - Q1^2"
  std::vector<std::string> substitutions;  // "t1 -> P1*Q1"
  std::vector<DeformationNode> nodes;
  std::vector<std::string> pure_cover_relations;  // "p1 - tau1^2", "q1 - tau1"
};

DeformationPresentation universal_deformation_presentation(const StableGraph& g, const SpinType& t);

// deg of the natural pullback after normalizing k singularities.
long natural_pullback_degree(long d, long k);

}  // namespace spin
