#pragma once

#include <string>

#include "spin/error.hpp"
#include "spin/json_io.hpp"

// JSON request handlers shared by the C API and the tests.  Each takes the
// documented request document and returns the result document; failures
// surface as InputError / DomainError.
namespace spin::service {

using io::json;

// DomainError carrying a machine-readable payload (e.g. graph diagnostics).
class DiagnosticError : public DomainError {
 public:
  DiagnosticError(const std::string& what, json details) : DomainError(what), details_(std::move(details)) {}
  const json& details() const { return details_; }

 private:
  json details_;
};

json validate(const StableGraph& g);  // throws DiagnosticError on an invalid graph
json enumerate(const StableGraph& g);
json aut(const StableGraph& g);
json count(const StableGraph& g);
// `type` selects one spin type (SpinType JSON); null means every enumerated type.
json deform(const StableGraph& g, const json& type);

// {"ring", "p", "q", "r", "components": [...], "degree_cap"?}
json local_classify(const json& request);
// {"ring", "p", "q", "p_prime", "q_prime"}
json local_isomorphic(const json& request);
// {"ring", "p", "q", "r", "u", "v", "w"?, "a"?, "degree_cap"?}
json local_make(const json& request);

json chain(unsigned r, unsigned n, unsigned residue);
// {"r"?, "graph": {...}, "nodes": [{"edge", "order", "residue"}]}
json limit(const json& family);

// Structured error object {"error": {"kind", "message", "details"?}}.
json error_object(const std::string& kind, const std::string& message, const json& details = nullptr);

}  // namespace spin::service
