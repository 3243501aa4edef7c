#include "spin/degeneration.hpp"

#include <algorithm>
#include <set>

#include "spin/error.hpp"

namespace spin {

IntersectionGraph::IntersectionGraph(std::size_t components)
    : delta_(components, std::vector<int>(components, 0)) {}

void IntersectionGraph::connect(std::size_t i, std::size_t j, int multiplicity) {
  if (i >= size() || j >= size()) throw InputError("component index out of range");
  if (i == j) return;  // a self-node does not meet the rest of the fibre
  delta_[i][j] += multiplicity;
  delta_[j][i] += multiplicity;
}

int IntersectionGraph::delta(std::size_t j) const {
  int sum = 0;
  for (std::size_t i = 0; i < size(); ++i) sum += delta_[j][i];
  return sum;
}

long divisor_degree(const std::map<std::size_t, long>& coefficients, const IntersectionGraph& fibre,
                    std::size_t j) {
  auto coeff = [&](std::size_t i) {
    auto it = coefficients.find(i);
    if (it == coefficients.end()) throw InputError("missing coefficient for component " + std::to_string(i));
    return it->second;
  };
  if (j >= fibre.size()) throw InputError("component index out of range");
  long deg = -coeff(j) * fibre.delta(j);
  for (std::size_t i = 0; i < fibre.size(); ++i) {
    if (i != j && fibre.delta(i, j) != 0) deg += coeff(i) * fibre.delta(i, j);
  }
  return deg;
}

long chain_length(unsigned n, unsigned r) {
  if (n == 0) throw DomainError("node order must be at least 1");
  return static_cast<long>(n) * r - 1;
}

SemistableFibre build_semistable_fibre(const StableGraph& g, const std::map<int, unsigned>& orders) {
  SemistableFibre f;
  std::size_t total = g.vertices().size();
  for (const auto& e : g.edges()) {
    auto it = orders.find(e.id);
    if (it == orders.end()) throw InputError("no order given for edge " + std::to_string(e.id));
    total += static_cast<std::size_t>(chain_length(it->second, g.r()));
  }
  f.intersections = IntersectionGraph{total};
  for (const auto& v : g.vertices()) {
    f.vertex_ids.push_back(v.id);
    f.genera.push_back(v.genus);
  }
  std::size_t next = g.vertices().size();
  for (const auto& e : g.edges()) {
    const std::size_t a = g.vertex_index(e.a);
    const std::size_t b = g.vertex_index(e.b);
    const long len = chain_length(orders.at(e.id), g.r());
    std::vector<std::size_t> chain;
    for (long i = 0; i < len; ++i) chain.push_back(next++);
    if (chain.empty()) {
      f.intersections.connect(a, b);
    } else {
      f.intersections.connect(a, chain.front());
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) f.intersections.connect(chain[i], chain[i + 1]);
      f.intersections.connect(chain.back(), b);
    }
    f.chains.emplace(e.id, std::move(chain));
  }
  return f;
}

namespace {

long mod(long a, long r) { return ((a % r) + r) % r; }

}  // namespace

ReducedDivisor reduce_nonexceptional(const SemistableFibre& fibre, const std::vector<long>& a,
                                     unsigned r) {
  const std::size_t n = fibre.intersections.size();
  if (a.size() != n) {
    throw InputError("expected " + std::to_string(n) + " coefficients, got " + std::to_string(a.size()));
  }
  if (r == 0) throw InputError("r must be positive");
  const long rr = r;
  ReducedDivisor out;
  out.c = fibre.stable_count() == 0 ? 0 : mod(a[0], rr);
  for (std::size_t i = 0; i < fibre.stable_count(); ++i) {
    if (mod(a[i], rr) != out.c) {
      throw DomainError("stable coefficient " + std::to_string(a[i]) + " on component " +
                        std::to_string(i) + " is not congruent to c = " + std::to_string(out.c) +
                        " mod r");
    }
  }
  std::map<std::size_t, long> coeffs;
  for (std::size_t i = 0; i < n; ++i) coeffs[i] = a[i];
  for (std::size_t j = 0; j < n; ++j) {
    long deg = divisor_degree(coeffs, fibre.intersections, j);
    if (!fibre.is_exceptional(j)) deg += 2L * fibre.genera[j] - 2 + fibre.intersections.delta(j);
    if (mod(deg, rr) != 0) {
      throw DomainError("degree of omega(sum a_i X_i) on component " + std::to_string(j) + " is " +
                        std::to_string(deg) + ", not divisible by r");
    }
  }
  out.coefficients.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.coefficients[i] = fibre.is_exceptional(i) ? a[i] - out.c : 0;
  for (const auto& [edge, chain] : fibre.chains) {
    out.chain_residues[edge] =
        chain.empty() ? 0U : static_cast<unsigned>(mod(out.coefficients[chain.front()], rr));
  }
  return out;
}

ChainSolution normalize_chain(unsigned residue, unsigned n, unsigned r) {
  if (r == 0) throw InputError("r must be positive");
  if (residue >= r) throw InputError("residue must lie in [0, r)");
  const long len = chain_length(n, r);
  const long rr = r;
  const long first = residue == 0 ? 0 : static_cast<long>(residue) - rr;

  ChainSolution sol;
  if (first < 0) sol.kink = static_cast<long>(n) * (rr + first);
  for (long i = 1; i <= len; ++i) {
    long e = i * first;
    if (sol.kink && i > *sol.kink) e += (i - *sol.kink) * rr;
    sol.coefficients.push_back(e);
  }

  // Degrees on the bare chain, with zero coefficients at both ends.
  IntersectionGraph path{static_cast<std::size_t>(len + 2)};
  for (long i = 0; i + 1 < len + 2; ++i) path.connect(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
  std::map<std::size_t, long> coeffs{{0, 0}, {static_cast<std::size_t>(len + 1), 0}};
  for (long i = 1; i <= len; ++i) coeffs[static_cast<std::size_t>(i)] = sol.coefficients[i - 1];
  for (long i = 1; i <= len; ++i) {
    sol.degrees.push_back(divisor_degree(coeffs, path, static_cast<std::size_t>(i)));
  }
  return sol;
}

std::optional<unsigned> limit_twist(const Edge& e, const ChainSolution& chain, unsigned r) {
  const long first = chain.first();
  if (first == 0) return std::nullopt;
  unsigned u = static_cast<unsigned>(-first);
  if (e.is_loop()) u = std::min(u, r - u);
  return u;
}

SpinType limit_spin_type(const StableGraph& g, const std::vector<NodeFamilyDatum>& nodes) {
  const auto diag = validate_graph(g);
  if (!diag.valid) throw DomainError("invalid stable graph: " + diag.problems.front());
  std::map<int, const NodeFamilyDatum*> by_edge;
  for (const auto& d : nodes) {
    g.edge(d.edge);
    if (!by_edge.emplace(d.edge, &d).second) {
      throw InputError("duplicate datum for edge " + std::to_string(d.edge));
    }
  }
  SpinType t;
  for (const auto& e : g.edges()) {
    auto it = by_edge.find(e.id);
    if (it == by_edge.end()) throw InputError("no family datum for edge " + std::to_string(e.id));
    const ChainSolution chain = normalize_chain(it->second->residue, it->second->order, g.r());
    if (auto u = limit_twist(e, chain, g.r())) t.nonfree[e.id] = *u;
  }
  const long r = g.r();
  for (const auto& [id, D] : twisted_canonical_degrees(g, t.nonfree)) {
    if (mod(D, r) != 0) {
      throw DomainError("residues are inconsistent: degree " + std::to_string(D) + " at vertex " +
                        std::to_string(id) + " is not divisible by r");
    }
    t.degrees[id] = D / r;
  }
  return t;
}

}  // namespace spin
