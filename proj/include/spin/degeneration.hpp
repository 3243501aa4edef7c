#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "spin/spin_graph.hpp"

namespace spin {

// Components of a semistable special fibre and their intersection counts
// delta_ij (i != j); delta_j is the row sum.
class IntersectionGraph {
 public:
  explicit IntersectionGraph(std::size_t components);

  std::size_t size() const { return delta_.size(); }
  void connect(std::size_t i, std::size_t j, int multiplicity = 1);
  int delta(std::size_t i, std::size_t j) const { return delta_[i][j]; }
  int delta(std::size_t j) const;

 private:
  std::vector<std::vector<int>> delta_;
};

// Degree of O(sum a_i X_i) on X_j: -a_j delta_j + sum_i a_i delta_ij.
// Throws InputError when a coefficient is missing.
long divisor_degree(const std::map<std::size_t, long>& coefficients, const IntersectionGraph& fibre,
                    std::size_t j);

// Exceptional curves over a node of order n after base change t -> t^r.
long chain_length(unsigned n, unsigned r);

// Special fibre after base change and resolution: the stable components
// (indices 0..V-1, in vertex-id order) followed by one chain of n r - 1
// exceptional curves per node.  E_1 of a chain meets the edge's first
// endpoint.
struct SemistableFibre {
  IntersectionGraph intersections{0};
  std::vector<int> vertex_ids;                      // component index -> vertex id
  std::vector<unsigned> genera;                     // per stable component
  std::map<int, std::vector<std::size_t>> chains;   // edge id -> E_1..E_{nr-1}
  std::size_t stable_count() const { return vertex_ids.size(); }
  bool is_exceptional(std::size_t c) const { return c >= vertex_ids.size(); }
};

SemistableFibre build_semistable_fibre(const StableGraph& g, const std::map<int, unsigned>& orders);

struct ReducedDivisor {
  long c = 0;                                 // common residue of the stable coefficients
  std::vector<long> coefficients;             // stable ones zero, exceptional ones shifted by c
  std::map<int, unsigned> chain_residues;     // edge id -> e_1 mod r
};

// Checks deg omega(sum a_i X_i) = 0 mod r everywhere and the congruence of
// all stable coefficients, then normalizes.  Throws DomainError on failure.
ReducedDivisor reduce_nonexceptional(const SemistableFibre& fibre, const std::vector<long>& a,
                                     unsigned r);

struct ChainSolution {
  std::vector<long> coefficients;  // e'_1 .. e'_{nr-1}
  std::optional<long> kink;        // position m with degree r, none when e'_1 = 0
  std::vector<long> degrees;       // degree on each E_i
  long first() const { return coefficients.empty() ? 0 : coefficients.front(); }
};

// e'_1 = s0 - r (or 0), m = n(r + e'_1), e'_i = i e'_1 + max(0, i - m) r.
ChainSolution normalize_chain(unsigned residue, unsigned n, unsigned r);

struct NodeFamilyDatum {
  int edge = 0;
  unsigned order = 1;
  unsigned residue = 0;
};

// Twist at a node with first chain coefficient e'_1 < 0: u = -e'_1 at the
// E_1 side, v = r + e'_1.  Loops are reported with u <= v.
std::optional<unsigned> limit_twist(const Edge& e, const ChainSolution& chain, unsigned r);

SpinType limit_spin_type(const StableGraph& g, const std::vector<NodeFamilyDatum>& nodes);

}  // namespace spin
