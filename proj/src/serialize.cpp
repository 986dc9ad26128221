#include "antireg/serialize.hpp"

#include <stdexcept>
#include <string>

namespace antireg {

using nlohmann::json;

namespace {

mpz_class integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (!j.is_string()) {
    throw std::invalid_argument(std::string(what) + ": expected a decimal string or integer");
  }
  const auto& s = j.get_ref<const std::string&>();
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw std::invalid_argument(std::string(what) + ": not a decimal integer: \"" + s + "\"");
  }
  return z;
}

json integer_array(const std::vector<mpz_class>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

}  // namespace

json to_json(const Hypergraph& h) {
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back(e);
  json out;
  out["k"] = h.uniformity() ? json(*h.uniformity()) : json(nullptr);
  out["n"] = h.vertex_count();
  out["edges"] = std::move(edges);
  return out;
}

json to_json(const Polynomial& p) { return integer_array(p.coefficients()); }

json to_json(const Labeling& l) {
  json out;
  out["c"] = integer_array(l.c);
  out["tau"] = l.tau.get_str();
  return out;
}

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("hypergraph: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) {
    throw std::invalid_argument("hypergraph: \"n\" must be a nonnegative integer");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw std::invalid_argument("hypergraph: \"edges\" must be an array");
  }
  std::optional<int> k;
  if (j.contains("k") && !j["k"].is_null()) {
    if (!j["k"].is_number_integer()) throw std::invalid_argument("hypergraph: \"k\" must be an integer");
    k = j["k"].get<int>();
  }
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw std::invalid_argument("hypergraph: every edge must be an array");
    Edge edge;
    for (const auto& v : e) {
      if (!v.is_number_unsigned()) {
        throw std::invalid_argument("hypergraph: vertices must be positive integers");
      }
      edge.push_back(v.get<Vertex>());
    }
    edges.push_back(std::move(edge));
  }
  return Hypergraph(j["n"].get<std::size_t>(), std::move(edges), k);
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j) coeffs.push_back(integer_from_json(c, "polynomial"));
  return Polynomial(std::move(coeffs));
}

Labeling labeling_from_json(const json& j) {
  if (!j.is_object() || !j.contains("c") || !j["c"].is_array() || !j.contains("tau")) {
    throw std::invalid_argument("labeling: expected {\"c\": [...], \"tau\": ...}");
  }
  Labeling l;
  for (const auto& c : j["c"]) l.c.push_back(integer_from_json(c, "labeling"));
  l.tau = integer_from_json(j["tau"], "labeling");
  return l;
}

}  // namespace antireg
