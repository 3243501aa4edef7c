// spin: command-line front end over the C interface in libspin.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spin/spin.h"

namespace {

using json = nlohmann::json;

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

const char* kSchemaHelp = R"(Input schemas (arguments accept a file path, '-' for stdin, or inline JSON):
  ring     {"field": "Q" | {"Fp": p}, "vars": ["t","eps"], "ideal": [[5,0],[0,2],[1,1]]}
  element  "1 + t^2 - eps/3"  |  3  |  {"2,0": "1/3", "0,1": "-1"}
  nodal    "x + t^2*y^2"  |  {"const": elt, "x": {"1": elt}, "y": {"2": elt}}
  graph    {"r": 2, "vertices": [{"id": 0, "genus": 1}], "edges": [{"id": 0, "v": [0,0]}]}
  type     {"nonfree": [{"edge": 0, "u": 1}], "degrees": {"0": 0}}
  local    {"ring": ..., "p": elt, "q": elt, "r": 3, "components": [nodal, ...], "degree_cap": 64}
  isom     {"ring": ..., "p": elt, "q": elt, "p_prime": elt, "q_prime": elt}
  make     {"ring": ..., "p": elt, "q": elt, "r": 3, "u": 1, "v": 2, "w": elt, "a": nodal}
  family   {"r": 2, "graph": graph, "nodes": [{"edge": 0, "order": 1, "residue": 1}]}
Exit status: 0 success, 1 domain error, 2 malformed input; errors are JSON on stderr.
Edge endpoints are stored smaller id first; the twist u sits at that endpoint.)";

struct InputError {
  std::string message;
};

std::string load(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(arg);
  if (!in) throw InputError{"cannot read '" + arg + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int exit_code(spin_status status) {
  switch (status) {
    case SPIN_OK:
      return 0;
    case SPIN_ERROR_DOMAIN:
      return kExitDomain;
    case SPIN_ERROR_INPUT:
      return kExitInput;
    default:
      return kExitInternal;
  }
}

std::string type_label(const json& type) {
  std::ostringstream os;
  os << "S={";
  bool first = true;
  for (const auto& n : type.at("nonfree")) {
    os << (first ? "" : ", ") << "e" << n.at("edge").get<int>() << ":(" << n.at("u").get<int>() << ","
       << n.at("v").get<int>() << ")";
    first = false;
  }
  os << "} d={";
  first = true;
  for (const auto& [id, d] : type.at("degrees").items()) {
    os << (first ? "" : ", ") << id << ":" << d.get<long>();
    first = false;
  }
  os << "}";
  return os.str();
}

std::string as_text(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_table(const std::string& command, const json& result) {
  if (command == "chain") {
    std::cout << "coeffs  " << result.at("coeffs").dump() << "\n"
              << "m       " << as_text(result.at("m")) << "\n"
              << "degrees " << result.at("degrees").dump() << "\n";
    return;
  }
  if (result.is_array() && (command == "enumerate" || command == "aut" || command == "count")) {
    std::size_t i = 0;
    for (const auto& row : result) {
      const json& type = row.contains("type") ? row.at("type") : row;
      std::cout << i++ << "  " << type_label(type);
      if (row.contains("aut_order")) {
        std::cout << "  aut=" << as_text(row.at("aut_order"))
                  << " (over Q: " << as_text(row.at("realized_order_over_Q")) << ")";
      }
      if (row.contains("count")) std::cout << "  roots=" << as_text(row.at("count"));
      std::cout << "\n";
    }
    return;
  }
  if (command == "validate") {
    std::cout << "valid " << result.at("valid") << "  genus " << result.at("genus") << "  r " << result.at("r")
              << "\n";
    for (const auto& p : result.at("problems")) std::cout << "  " << as_text(p) << "\n";
    return;
  }
  if (command == "local-classify") {
    std::cout << "classification " << as_text(result.at("classification")) << "\n"
              << "twist          (" << result.at("twist").at("u") << "," << result.at("twist").at("v") << ")\n"
              << "cokernel       " << result.at("cokernel_length")
              << (result.at("good_cokernel").get<bool>() ? " (good)" : " (not good)") << "\n"
              << "w              " << result.at("w").dump() << "\n";
    std::size_t i = 1;
    for (const auto& s : result.at("sigma")) std::cout << "sigma_" << i++ << "        " << s.dump() << "\n";
    std::cout << "aut            " << as_text(result.at("aut_group").at("group")) << ", order "
              << result.at("aut_group").at("order") << " over the base field\n";
    return;
  }
  if (command == "limit") {
    std::cout << type_label(result.at("type")) << "\n";
    for (const auto& c : result.at("chains")) {
      std::cout << "  e" << c.at("edge") << "  m=" << as_text(c.at("m")) << "  coeffs " << c.at("coeffs").dump()
                << "\n";
    }
    return;
  }
  if (command == "deform") {
    const json rows = result.is_array() ? result : json::array({result});
    for (const auto& row : rows) {
      const json& p = row.at("presentation");
      auto list = [](const json& a) {
        std::string s;
        for (const auto& x : a) s += (s.empty() ? "" : ", ") + as_text(x);
        return s;
      };
      std::cout << type_label(row.at("type")) << "\n"
                << "  generators   " << list(p.at("generators")) << "\n"
                << "  relations    " << list(p.at("relations")) << "\n"
                << "  substitution " << list(p.at("substitutions")) << "\n"
                << "  pure cover   " << list(p.at("pure_cover")) << "\n";
    }
    return;
  }
  std::cout << result.dump(2) << "\n";
}

// Calls a C entry point producing JSON and prints its result or error.
template <class Call>
int run(const std::string& command, const std::string& format, Call&& call) {
  char* out = nullptr;
  const spin_status status = call(&out);
  if (status != SPIN_OK) {
    std::cerr << spin_last_error() << "\n";
    return exit_code(status);
  }
  const json result = json::parse(out);
  spin_string_free(out);
  if (format == "table") {
    print_table(command, result);
  } else {
    std::cout << result.dump(2) << "\n";
  }
  return 0;
}

struct GraphHandle {
  spin_graph* graph = nullptr;
  ~GraphHandle() { spin_graph_free(graph); }
};

struct RingHandle {
  spin_ring* ring = nullptr;
  ~RingHandle() { spin_ring_free(ring); }
};

int with_graph(const std::string& path, const std::string& command, const std::string& format,
               const std::function<spin_status(const spin_graph*, char**)>& op) {
  const std::string text = load(path);
  GraphHandle h;
  if (const auto status = spin_graph_from_json(text.c_str(), &h.graph); status != SPIN_OK) {
    std::cerr << spin_last_error() << "\n";
    return exit_code(status);
  }
  return run(command, format, [&](char** out) { return op(h.graph, out); });
}

void input_failure(const std::string& message) {
  std::cerr << json{{"error", {{"kind", "input"}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation with limit r-spin structures on stable curves"};
  app.footer(kSchemaHelp);
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string graph_path, input_path, family_path, type_arg, ring_path, element, other, root0;
  unsigned r = 0, n = 1, residue = 0;

  auto add_graph_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph,--graph,-g", graph_path, "Graph JSON")->required();
    return sub;
  };
  auto* validate = add_graph_cmd("validate", "Check stability, connectivity, genus and r | 2g-2");
  auto* enumerate = add_graph_cmd("enumerate", "List every spin type on the graph");
  auto* aut = add_graph_cmd("aut", "Automorphism order r^c for every spin type");
  auto* count = add_graph_cmd("count", "Root count r^(2 sum g + b1) for every spin type");
  auto* deform = add_graph_cmd("deform", "Universal deformation presentation per spin type");
  deform->add_option("--type", type_arg, "Restrict to one spin type (JSON)");

  auto* local = app.add_subcommand("local", "Local models at a node");
  local->require_subcommand(1);
  auto* classify = local->add_subcommand("classify", "Relations, cokernel, sigma and class of a spin map");
  auto* isom = local->add_subcommand("isom", "Isomorphism test E(p,q) vs E(p',q')");
  auto* make = local->add_subcommand("make", "Induced spin map from (r, u, v, w, a)");
  for (auto* sub : {classify, isom, make}) sub->add_option("input,--input,-i", input_path, "Request JSON")->required();
  auto* classify_alias = app.add_subcommand("local-classify", "Same as 'local classify'");
  auto* isom_alias = app.add_subcommand("local-isom", "Same as 'local isom'");
  for (auto* sub : {classify_alias, isom_alias}) {
    sub->add_option("input,--input,-i", input_path, "Request JSON")->required();
  }

  auto* chain = app.add_subcommand("chain", "Normalized exceptional-chain coefficients");
  chain->add_option("--r", r, "Spin order")->required();
  chain->add_option("--n", n, "Singularity order")->required();
  chain->add_option("--residue", residue, "Residue of e_1 mod r")->required();

  auto* limit = app.add_subcommand("limit", "Limit spin type of a smoothing family");
  limit->add_option("family,--family,-f", family_path, "Family JSON")->required();

  auto* ring = app.add_subcommand("ring", "Coefficient-ring arithmetic");
  ring->require_subcommand(1);
  auto* normalize = ring->add_subcommand("normalize", "Normal form of an element");
  auto* invert = ring->add_subcommand("invert", "Inverse of a unit");
  auto* root = ring->add_subcommand("root", "r-th root lift with prescribed constant term");
  auto* associate = ring->add_subcommand("associate", "Unit lambda with b = lambda a");
  for (auto* sub : {normalize, invert, root, associate}) {
    sub->add_option("--ring", ring_path, "Ring JSON")->required();
    sub->add_option("--element,-e", element, "Element")->required();
  }
  root->add_option("--r", r, "Root order")->required();
  root->add_option("--root0", root0, "Constant term of the root")->required();
  associate->add_option("--target,-b", other, "Element b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*validate) return with_graph(graph_path, "validate", format, spin_graph_validate);
    if (*enumerate) return with_graph(graph_path, "enumerate", format, spin_graph_enumerate);
    if (*aut) return with_graph(graph_path, "aut", format, spin_graph_aut);
    if (*count) return with_graph(graph_path, "count", format, spin_graph_count);
    if (*deform) {
      const std::optional<std::string> type =
          type_arg.empty() ? std::nullopt : std::optional<std::string>(load(type_arg));
      return with_graph(graph_path, "deform", format, [&](const spin_graph* g, char** out) {
        return spin_graph_deform(g, type ? type->c_str() : nullptr, out);
      });
    }
    if (*classify || *classify_alias) {
      const std::string text = load(input_path);
      return run("local-classify", format, [&](char** out) { return spin_local_classify(text.c_str(), out); });
    }
    if (*isom || *isom_alias) {
      const std::string text = load(input_path);
      return run("local-isom", format, [&](char** out) { return spin_local_isomorphic(text.c_str(), out); });
    }
    if (*make) {
      const std::string text = load(input_path);
      return run("local-make", format, [&](char** out) { return spin_local_make(text.c_str(), out); });
    }
    if (*chain) {
      return run("chain", format, [&](char** out) { return spin_chain(r, n, residue, out); });
    }
    if (*limit) {
      const std::string text = load(family_path);
      return run("limit", format, [&](char** out) { return spin_limit(text.c_str(), out); });
    }
    if (*ring) {
      const std::string text = load(ring_path);
      RingHandle h;
      if (const auto s = spin_ring_from_json(text.c_str(), &h.ring); s != SPIN_OK) {
        std::cerr << spin_last_error() << "\n";
        return exit_code(s);
      }
      const char* e = element.c_str();
      if (*normalize) return run("ring", format, [&](char** out) { return spin_ring_normalize(h.ring, e, out); });
      if (*invert) return run("ring", format, [&](char** out) { return spin_ring_invert(h.ring, e, out); });
      if (*root) {
        return run("ring", format,
                   [&](char** out) { return spin_ring_rth_root(h.ring, e, r, root0.c_str(), out); });
      }
      if (*associate) {
        return run("ring", format,
                   [&](char** out) { return spin_ring_associate(h.ring, e, other.c_str(), out); });
      }
    }
  } catch (const InputError& e) {
    input_failure(e.message);
    return kExitInput;
  } catch (const json::exception& e) {
    input_failure(e.what());
    return kExitInput;
  }
  return kExitInput;
}
