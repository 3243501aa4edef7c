#include "spin/spin.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "spin/service.hpp"

struct spin_ring {
  spin::RingPtr ring;
};

struct spin_graph {
  spin::StableGraph graph;
};

namespace {

using spin::io::json;

thread_local std::string last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

spin_status fail(spin_status status, const char* kind, const std::string& message,
                 const json& details = nullptr) {
  last_error = spin::service::error_object(kind, message, details).dump();
  return status;
}

// Runs body, translating exceptions into status codes and error objects.
template <class Body>
spin_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return SPIN_OK;
  } catch (const spin::service::DiagnosticError& e) {
    return fail(SPIN_ERROR_DOMAIN, "domain", e.what(), e.details());
  } catch (const spin::DomainError& e) {
    return fail(SPIN_ERROR_DOMAIN, "domain", e.what());
  } catch (const spin::InputError& e) {
    return fail(SPIN_ERROR_INPUT, "input", e.what());
  } catch (const json::exception& e) {
    return fail(SPIN_ERROR_INPUT, "input", e.what());
  } catch (const std::exception& e) {
    return fail(SPIN_ERROR_INTERNAL, "internal", e.what());
  } catch (...) {
    return fail(SPIN_ERROR_INTERNAL, "internal", "unknown failure");
  }
}

json parse_json(const char* text, const char* what) {
  if (!text) throw spin::InputError(std::string(what) + " is null");
  return json::parse(text);
}

spin::ArtinElement parse_element(const spin::RingPtr& ring, const char* text) {
  if (!text) throw spin::InputError("element is null");
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return spin::normalize(ring, text);
  return spin::io::element_from_json(ring, j);
}

void emit(const json& j, char** out_json) {
  if (!out_json) throw spin::InputError("out_json is null");
  *out_json = dup_string(j.dump());
  if (!*out_json) throw std::bad_alloc();
}

void require_handle(const void* h, const char* what) {
  if (!h) throw spin::InputError(std::string(what) + " handle is null");
}

}  // namespace

extern "C" {

const char* spin_version(void) { return "0.1.0"; }

const char* spin_last_error(void) { return last_error.c_str(); }

void spin_string_free(char* s) { std::free(s); }

spin_status spin_ring_from_json(const char* text, spin_ring** out) {
  return guarded([&] {
    if (!out) throw spin::InputError("out is null");
    *out = new spin_ring{spin::io::ring_from_json(parse_json(text, "ring"))};
  });
}

void spin_ring_free(spin_ring* ring) { delete ring; }

spin_status spin_ring_dimension(const spin_ring* ring, size_t* out) {
  return guarded([&] {
    require_handle(ring, "ring");
    if (!out) throw spin::InputError("out is null");
    *out = ring->ring->dimension();
  });
}

spin_status spin_ring_normalize(const spin_ring* ring, const char* element, char** out_json) {
  return guarded([&] {
    require_handle(ring, "ring");
    emit(spin::io::to_json(parse_element(ring->ring, element)), out_json);
  });
}

spin_status spin_ring_is_unit(const spin_ring* ring, const char* element, int* out) {
  return guarded([&] {
    require_handle(ring, "ring");
    if (!out) throw spin::InputError("out is null");
    *out = parse_element(ring->ring, element).is_unit() ? 1 : 0;
  });
}

spin_status spin_ring_invert(const spin_ring* ring, const char* element, char** out_json) {
  return guarded([&] {
    require_handle(ring, "ring");
    emit(spin::io::to_json(spin::invert(parse_element(ring->ring, element))), out_json);
  });
}

spin_status spin_ring_rth_root(const spin_ring* ring, const char* element, unsigned r,
                               const char* root0, char** out_json) {
  return guarded([&] {
    require_handle(ring, "ring");
    if (!root0) throw spin::InputError("root0 is null");
    const spin::Scalar start = spin::Scalar::parse(ring->ring->field(), root0);
    emit(spin::io::to_json(spin::rth_root_lift(parse_element(ring->ring, element), r, start)),
         out_json);
  });
}

spin_status spin_ring_associate(const spin_ring* ring, const char* a, const char* b,
                                char** out_json) {
  return guarded([&] {
    require_handle(ring, "ring");
    const auto lambda =
        spin::associate_solve(parse_element(ring->ring, a), parse_element(ring->ring, b));
    emit(json{{"lambda", lambda ? spin::io::to_json(*lambda) : json(nullptr)}}, out_json);
  });
}

spin_status spin_graph_from_json(const char* text, spin_graph** out) {
  return guarded([&] {
    if (!out) throw spin::InputError("out is null");
    *out = new spin_graph{spin::io::graph_from_json(parse_json(text, "graph"))};
  });
}

void spin_graph_free(spin_graph* graph) { delete graph; }

spin_status spin_graph_validate(const spin_graph* graph, char** out_json) {
  return guarded([&] {
    require_handle(graph, "graph");
    emit(spin::service::validate(graph->graph), out_json);
  });
}

spin_status spin_graph_enumerate(const spin_graph* graph, char** out_json) {
  return guarded([&] {
    require_handle(graph, "graph");
    emit(spin::service::enumerate(graph->graph), out_json);
  });
}

spin_status spin_graph_aut(const spin_graph* graph, char** out_json) {
  return guarded([&] {
    require_handle(graph, "graph");
    emit(spin::service::aut(graph->graph), out_json);
  });
}

spin_status spin_graph_count(const spin_graph* graph, char** out_json) {
  return guarded([&] {
    require_handle(graph, "graph");
    emit(spin::service::count(graph->graph), out_json);
  });
}

spin_status spin_graph_deform(const spin_graph* graph, const char* type_json, char** out_json) {
  return guarded([&] {
    require_handle(graph, "graph");
    const json type = type_json ? json::parse(type_json) : json(nullptr);
    emit(spin::service::deform(graph->graph, type), out_json);
  });
}

spin_status spin_local_classify(const char* request_json, char** out_json) {
  return guarded([&] {
    emit(spin::service::local_classify(parse_json(request_json, "request")), out_json);
  });
}

spin_status spin_local_isomorphic(const char* request_json, char** out_json) {
  return guarded([&] {
    emit(spin::service::local_isomorphic(parse_json(request_json, "request")), out_json);
  });
}

spin_status spin_local_make(const char* request_json, char** out_json) {
  return guarded([&] {
    emit(spin::service::local_make(parse_json(request_json, "request")), out_json);
  });
}

spin_status spin_chain(unsigned r, unsigned n, unsigned residue, char** out_json) {
  return guarded([&] { emit(spin::service::chain(r, n, residue), out_json); });
}

spin_status spin_limit(const char* family_json, char** out_json) {
  return guarded([&] { emit(spin::service::limit(parse_json(family_json, "family")), out_json); });
}

}  // extern "C"
