#include "spin/service.hpp"

namespace spin::service {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

unsigned require_unsigned(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long>() < 0) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<unsigned>();
}

struct LocalContext {
  RingPtr ring;
  AlgebraPtr algebra;
  EpqModule module;
};

LocalContext local_context(const json& request) {
  RingPtr ring = io::ring_from_json(require(request, "ring"));
  ArtinElement p = io::element_from_json(ring, require(request, "p"));
  ArtinElement q = io::element_from_json(ring, require(request, "q"));
  const int cap = request.contains("degree_cap")
                      ? static_cast<int>(require_unsigned(request.at("degree_cap"), "degree_cap"))
                      : NodalAlgebra::kDefaultDegreeCap;
  AlgebraPtr algebra = NodalAlgebra::create(p * q, cap);
  EpqModule module{algebra, std::move(p), std::move(q)};
  return LocalContext{std::move(ring), std::move(algebra), std::move(module)};
}

unsigned spin_order(const json& request, const RingPtr& ring) {
  const unsigned r = require_unsigned(require(request, "r"), "r");
  if (r == 0) throw InputError("r must be positive");
  if (!ring->field().allows_order(r)) {
    throw DomainError("characteristic of " + ring->field().name() + " divides r = " + std::to_string(r));
  }
  return r;
}

json spin_map_json(const SpinMapLocal& b) {
  json comps = json::array();
  for (const auto& c : b.components) comps.push_back(io::to_json(c));
  return comps;
}

}  // namespace

json error_object(const std::string& kind, const std::string& message, const json& details) {
  json err{{"kind", kind}, {"message", message}};
  if (!details.is_null()) err["details"] = details;
  return json{{"error", err}};
}

json validate(const StableGraph& g) {
  const auto diag = validate_graph(g);
  json out{{"valid", diag.valid}, {"genus", diag.genus}, {"r", g.r()}, {"problems", diag.problems}};
  if (!diag.valid) throw DiagnosticError(diag.problems.front(), out);
  return out;
}

json enumerate(const StableGraph& g) {
  json out = json::array();
  for (const auto& t : enumerate_spin_types(g)) out.push_back(io::to_json(g, t));
  return out;
}

json aut(const StableGraph& g) {
  json out = json::array();
  const unsigned rational_roots = Field::rationals().roots_of_unity(g.r());
  for (const auto& t : enumerate_spin_types(g)) {
    out.push_back({{"type", io::to_json(g, t)},
                   {"components", components_without(g, t.nonfree).size()},
                   {"aut_order", io::to_json(aut_order(g, t))},
                   {"realized_order_over_Q", io::to_json(realized_aut_order(g, t, rational_roots))}});
  }
  return out;
}

json count(const StableGraph& g) {
  json out = json::array();
  for (const auto& t : enumerate_spin_types(g)) {
    out.push_back({{"type", io::to_json(g, t)}, {"count", io::to_json(count_roots(g, t))}});
  }
  return out;
}

json deform(const StableGraph& g, const json& type) {
  if (!type.is_null()) {
    const SpinType t = io::spin_type_from_json(g, type);
    return json{{"type", io::to_json(g, t)},
                {"presentation", io::to_json(universal_deformation_presentation(g, t))}};
  }
  json out = json::array();
  for (const auto& t : enumerate_spin_types(g)) {
    out.push_back({{"type", io::to_json(g, t)},
                   {"presentation", io::to_json(universal_deformation_presentation(g, t))}});
  }
  return out;
}

json local_classify(const json& request) {
  LocalContext ctx = local_context(request);
  const unsigned r = spin_order(request, ctx.ring);
  const json& comps = require(request, "components");
  if (!comps.is_array()) throw InputError("components must be an array");
  SpinMapLocal b{ctx.module, r, {}};
  for (const auto& c : comps) b.components.push_back(io::nodal_from_json(ctx.algebra, c));

  const RelationCheck relations = check_spin_relations(b);
  if (!relations.ok) {
    json details{{"relations", {{"ok", false}, {"failing", relations.failing}}}};
    std::string idx;
    for (auto i : relations.failing) idx += (idx.empty() ? "" : ", ") + std::to_string(i);
    throw DiagnosticError("spin relations p b_i = x b_{i+1}, y b_i = q b_{i+1} fail at i = " + idx,
                          details);
  }
  const SigmaReport report = extract_sigma(b);
  json sigma = json::array();
  for (const auto& s : report.sigma) sigma.push_back(io::to_json(s));
  const LocalAutGroup group = local_aut_group(b);
  return json{{"degree_cap", ctx.algebra->degree_cap()},
              {"relations", {{"ok", true}, {"failing", json::array()}}},
              {"twist", {{"u", report.twist.u}, {"v", report.twist.v}}},
              {"w", io::to_json(report.w)},
              {"cokernel_length", report.twist.u + report.twist.v - 1},
              {"good_cokernel", report.good_cokernel},
              {"sigma", sigma},
              {"classification", to_string(report.classification)},
              {"aut_group",
               {{"group", group.description()},
                {"order", group.order},
                {"roots_in_field", group.roots_in_field}}}};
}

json local_isomorphic(const json& request) {
  RingPtr ring = io::ring_from_json(require(request, "ring"));
  ArtinElement p = io::element_from_json(ring, require(request, "p"));
  ArtinElement q = io::element_from_json(ring, require(request, "q"));
  ArtinElement p2 = io::element_from_json(ring, require(request, "p_prime"));
  ArtinElement q2 = io::element_from_json(ring, require(request, "q_prime"));
  if (!(p * q == p2 * q2)) throw DomainError("p q and p' q' differ: the modules live over different pi");
  AlgebraPtr algebra = NodalAlgebra::create(p * q);
  const EpqModule source{algebra, std::move(p), std::move(q)};
  const EpqModule target{algebra, std::move(p2), std::move(q2)};
  const auto mu = epq_isomorphic(source, target);
  return json{{"isomorphic", mu.has_value()}, {"mu", mu ? io::to_json(*mu) : json(nullptr)}};
}

json local_make(const json& request) {
  LocalContext ctx = local_context(request);
  const unsigned r = spin_order(request, ctx.ring);
  const unsigned u = require_unsigned(require(request, "u"), "u");
  const unsigned v = require_unsigned(require(request, "v"), "v");
  const ArtinElement w = request.contains("w") ? io::element_from_json(ctx.ring, request.at("w"))
                                               : ArtinElement::one(ctx.ring);
  const NodalElement a = request.contains("a") ? io::nodal_from_json(ctx.algebra, request.at("a"))
                                               : NodalElement::constant(ctx.algebra, 1);
  const SpinMapLocal b = make_spin_map(ctx.module, r, u, v, w, a);
  return json{{"r", r}, {"twist", {{"u", u}, {"v", v}}}, {"components", spin_map_json(b)}};
}

json chain(unsigned r, unsigned n, unsigned residue) {
  return io::to_json(normalize_chain(residue, n, r));
}

json limit(const json& family) {
  json graph_j = require(family, "graph");
  if (family.contains("r")) {
    if (graph_j.contains("r") && graph_j.at("r") != family.at("r")) {
      throw InputError("family r and graph r disagree");
    }
    graph_j["r"] = family.at("r");
  }
  const StableGraph g = io::graph_from_json(graph_j);
  std::vector<NodeFamilyDatum> nodes;
  const json& nodes_j = require(family, "nodes");
  if (!nodes_j.is_array()) throw InputError("nodes must be an array");
  for (const auto& n : nodes_j) {
    NodeFamilyDatum d;
    d.edge = static_cast<int>(require(n, "edge").get<long>());
    d.order = n.contains("order") ? require_unsigned(n.at("order"), "order") : 1U;
    d.residue = require_unsigned(require(n, "residue"), "residue");
    if (d.order == 0) throw InputError("node order must be at least 1");
    if (d.residue >= g.r()) throw InputError("residue must lie in [0, r)");
    nodes.push_back(d);
  }
  const SpinType t = limit_spin_type(g, nodes);
  json chains = json::array();
  for (const auto& d : nodes) {
    json c = io::to_json(normalize_chain(d.residue, d.order, g.r()));
    c["edge"] = d.edge;
    chains.push_back(c);
  }
  return json{{"type", io::to_json(g, t)}, {"chains", chains}};
}

}  // namespace spin::service
