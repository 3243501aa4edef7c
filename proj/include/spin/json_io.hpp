#pragma once

#include <json.hpp>

#include "spin/artin.hpp"
#include "spin/degeneration.hpp"
#include "spin/local_model.hpp"
#include "spin/spin_graph.hpp"

// JSON encodings of the domain types.  Decoders throw InputError on schema
// violations.
namespace spin::io {

using json = nlohmann::json;

Field field_from_json(const json& j);
json to_json(const Field& f);

// {"field": "Q" | {"Fp": p}, "vars": [...], "ideal": [[e1, e2, ...], ...]}
RingPtr ring_from_json(const json& j);
json ring_to_json(const ArtinRing& ring);

Scalar scalar_from_json(const Field& field, const json& j);
json to_json(const Scalar& s);

// An element is an expression string, a number, or a map from
// comma-separated exponent vectors to "num/den" coefficients.
ArtinElement element_from_json(const RingPtr& ring, const json& j);
json to_json(const ArtinElement& e);
std::string monomial_key(const Monomial& m);

// {"const": elt, "x": {"1": elt, ...}, "y": {"1": elt, ...}} or an expression
// string in x, y and the ring variables.
NodalElement nodal_from_json(const AlgebraPtr& algebra, const json& j);
json to_json(const NodalElement& e);

// {"r": 2, "vertices": [{"id": 0, "genus": 1}], "edges": [{"id": 0, "v": [0, 0]}]}
StableGraph graph_from_json(const json& j);
json to_json(const StableGraph& g);

// {"nonfree": [{"edge": 0, "u": 1, "v": 1}], "degrees": {"0": 0}}
SpinType spin_type_from_json(const StableGraph& g, const json& j);
json to_json(const StableGraph& g, const SpinType& t);

json to_json(const DeformationPresentation& p);
json to_json(const ChainSolution& c);

// Exact integers that overflow 64 bits are emitted as decimal strings.
json to_json(const mpz_class& z);

}  // namespace spin::io
