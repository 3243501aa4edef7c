#include "spin/json_io.hpp"

#include <sstream>

#include "spin/error.hpp"

namespace spin::io {

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long require_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long>();
}

unsigned require_unsigned(const json& j, const char* what) {
  const long v = require_int(j, what);
  if (v < 0) throw InputError(std::string(what) + " must be nonnegative");
  return static_cast<unsigned>(v);
}

Monomial parse_monomial_key(const std::string& key, std::size_t arity) {
  Monomial m;
  if (!key.empty()) {
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        const long e = std::stol(part, &used);
        if (used != part.size() || e < 0) throw std::invalid_argument(part);
        m.push_back(static_cast<std::uint32_t>(e));
      } catch (const std::exception&) {
        throw InputError("bad monomial key '" + key + "'");
      }
    }
  }
  if (m.size() != arity) throw InputError("monomial key '" + key + "' has wrong arity");
  return m;
}

}  // namespace

Field field_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw InputError("field must be \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.contains("Fp")) {
    const long p = require_int(j.at("Fp"), "Fp");
    if (p < 2 || p > 0xFFFFFFFFL) throw InputError("Fp characteristic out of range");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("field must be \"Q\" or {\"Fp\": p}");
}

json to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"Fp", f.characteristic()}};
}

RingPtr ring_from_json(const json& j) {
  const Field field = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
  const json& vars_j = require(j, "vars");
  if (!vars_j.is_array()) throw InputError("vars must be an array");
  std::vector<std::string> vars;
  for (const auto& v : vars_j) {
    if (!v.is_string()) throw InputError("variable names must be strings");
    vars.push_back(v.get<std::string>());
  }
  const json& ideal_j = require(j, "ideal");
  if (!ideal_j.is_array()) throw InputError("ideal must be an array of exponent vectors");
  std::vector<Monomial> ideal;
  for (const auto& g : ideal_j) {
    if (!g.is_array()) throw InputError("ideal generator must be an exponent vector");
    Monomial m;
    for (const auto& e : g) m.push_back(require_unsigned(e, "exponent"));
    ideal.push_back(std::move(m));
  }
  return ArtinRing::create(field, std::move(vars), std::move(ideal));
}

json ring_to_json(const ArtinRing& ring) {
  json ideal = json::array();
  for (const auto& g : ring.generators()) ideal.push_back(g);
  return json{{"field", to_json(ring.field())}, {"vars", ring.variables()}, {"ideal", ideal}};
}

Scalar scalar_from_json(const Field& field, const json& j) {
  if (j.is_number_integer()) return Scalar{field, j.get<long>()};
  if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  throw InputError("coefficient must be an integer or a \"num/den\" string");
}

json to_json(const Scalar& s) { return s.to_string(); }

std::string monomial_key(const Monomial& m) {
  std::string key;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(m[i]);
  }
  return key;
}

ArtinElement element_from_json(const RingPtr& ring, const json& j) {
  if (j.is_string()) return normalize(ring, j.get<std::string>());
  if (j.is_number_integer()) return ArtinElement::constant(ring, j.get<long>());
  if (j.is_object()) {
    ArtinElement out{ring};
    for (const auto& [key, value] : j.items()) {
      out += ArtinElement::monomial(ring, parse_monomial_key(key, ring->variable_count()),
                                    scalar_from_json(ring->field(), value));
    }
    return out;
  }
  throw InputError("ring element must be an expression string, integer or monomial map");
}

json to_json(const ArtinElement& e) {
  json out = json::object();
  for (const auto& [mono, c] : e.terms()) out[monomial_key(mono)] = to_json(c);
  return out;
}

NodalElement nodal_from_json(const AlgebraPtr& algebra, const json& j) {
  if (j.is_string()) return parse_nodal(algebra, j.get<std::string>());
  if (j.is_number_integer()) return NodalElement::constant(algebra, j.get<long>());
  if (!j.is_object()) throw InputError("nodal element must be an expression string or object");
  const RingPtr& ring = algebra->ring();
  NodalElement out{algebra};
  for (const auto& [key, value] : j.items()) {
    if (key == "const") {
      out += NodalElement::constant(algebra, element_from_json(ring, value));
    } else if (key == "x" || key == "y") {
      if (!value.is_object()) throw InputError("'" + key + "' must map exponents to elements");
      for (const auto& [exp_key, coeff] : value.items()) {
        int n = 0;
        try {
          std::size_t used = 0;
          n = std::stoi(exp_key, &used);
          if (used != exp_key.size()) throw std::invalid_argument(exp_key);
        } catch (const std::exception&) {
          throw InputError("bad exponent '" + exp_key + "'");
        }
        if (n < 1) throw InputError("branch exponents start at 1");
        out += NodalElement::term(algebra, key == "x" ? n : -n, element_from_json(ring, coeff));
      }
    } else {
      throw InputError("unexpected key '" + key + "' in nodal element");
    }
  }
  return out;
}

json to_json(const NodalElement& e) {
  json out = json::object();
  json xs = json::object(), ys = json::object();
  for (const auto& [k, c] : e.terms()) {
    if (k == 0) {
      out["const"] = to_json(c);
    } else if (k > 0) {
      xs[std::to_string(k)] = to_json(c);
    } else {
      ys[std::to_string(-k)] = to_json(c);
    }
  }
  if (!xs.empty()) out["x"] = xs;
  if (!ys.empty()) out["y"] = ys;
  return out;
}

StableGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("graph must be an object");
  const unsigned r = require_unsigned(require(j, "r"), "r");
  std::vector<Vertex> vertices;
  const json& vs = require(j, "vertices");
  if (!vs.is_array()) throw InputError("vertices must be an array");
  for (const auto& v : vs) {
    vertices.push_back(Vertex{static_cast<int>(require_int(require(v, "id"), "vertex id")),
                              require_unsigned(require(v, "genus"), "genus")});
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const json& es = j.at("edges");
    if (!es.is_array()) throw InputError("edges must be an array");
    for (const auto& e : es) {
      const json& ends = require(e, "v");
      if (!ends.is_array() || ends.size() != 2) throw InputError("edge 'v' must list two vertex ids");
      edges.push_back(Edge{static_cast<int>(require_int(require(e, "id"), "edge id")),
                           static_cast<int>(require_int(ends[0], "endpoint")),
                           static_cast<int>(require_int(ends[1], "endpoint"))});
    }
  }
  return StableGraph{r, std::move(vertices), std::move(edges)};
}

json to_json(const StableGraph& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"genus", v.genus}});
  for (const auto& e : g.edges()) es.push_back({{"id", e.id}, {"v", {e.a, e.b}}});
  return json{{"r", g.r()}, {"vertices", vs}, {"edges", es}};
}

SpinType spin_type_from_json(const StableGraph& g, const json& j) {
  SpinType t;
  if (j.contains("nonfree")) {
    for (const auto& n : j.at("nonfree")) {
      const int edge = static_cast<int>(require_int(require(n, "edge"), "edge"));
      const unsigned u = require_unsigned(require(n, "u"), "u");
      g.edge(edge);
      if (u == 0 || u >= g.r()) throw InputError("twist u must satisfy 0 < u < r");
      if (n.contains("v") && require_unsigned(n.at("v"), "v") != g.r() - u) {
        throw InputError("twist must satisfy u + v = r");
      }
      t.nonfree[edge] = u;
    }
  }
  const auto D = twisted_canonical_degrees(g, t.nonfree);
  for (const auto& [id, value] : D) {
    if (value % static_cast<long>(g.r()) != 0) {
      throw DomainError("twists leave degree " + std::to_string(value) + " at vertex " +
                        std::to_string(id) + ", not divisible by r");
    }
    t.degrees[id] = value / static_cast<long>(g.r());
  }
  if (j.contains("degrees")) {
    for (const auto& [key, value] : j.at("degrees").items()) {
      const int id = std::stoi(key);
      if (!t.degrees.contains(id) || t.degrees.at(id) != require_int(value, "degree")) {
        throw InputError("degree for vertex " + key + " does not match the twists");
      }
    }
  }
  return t;
}

json to_json(const StableGraph& g, const SpinType& t) {
  json nonfree = json::array();
  for (const auto& [edge, u] : t.nonfree) nonfree.push_back({{"edge", edge}, {"u", u}, {"v", g.r() - u}});
  json degrees = json::object();
  for (const auto& [id, d] : t.degrees) degrees[std::to_string(id)] = d;
  return json{{"nonfree", nonfree}, {"degrees", degrees}};
}

json to_json(const DeformationPresentation& p) {
  json nodes = json::array();
  for (const auto& n : p.nodes) {
    nodes.push_back({{"edge", n.edge},
                     {"u", n.u},
                     {"v", n.v},
                     {"P", n.p_name},
                     {"Q", n.q_name},
                     {"tau", n.tau_name}});
  }
  return json{{"genus", p.genus},
              {"parameters", p.parameters},
              {"generators", p.generators},
              {"relations", p.relations},
              {"substitutions", p.substitutions},
              {"nodes", nodes},
              {"pure_cover", p.pure_cover_relations}};
}

json to_json(const ChainSolution& c) {
  return json{{"coeffs", c.coefficients},
              {"m", c.kink ? json(*c.kink) : json(nullptr)},
              {"degrees", c.degrees}};
}

json to_json(const mpz_class& z) {
  if (z.fits_ulong_p()) return z.get_ui();
  return z.get_str();
}

}  // namespace spin::io
