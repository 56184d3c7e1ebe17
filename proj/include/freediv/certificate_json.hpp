#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "parse.hpp"
#include "saito.hpp"

namespace freediv {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kCertificateVersion = 1;

inline ordered_json ring_to_json(const GradedRing& r) {
  ordered_json j;
  j["vars"] = r.vars();
  j["weights"] = r.weights();
  return j;
}

/// Fixed key order; polynomials in canonical text form.
inline ordered_json to_json(const FreenessCertificate& c) {
  ordered_json j;
  j["ring"] = ring_to_json(*c.ring);
  j["divisor"] = to_string(c.divisor);
  ordered_json basis = ordered_json::array();
  for (const auto& d : c.basis) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& g : d.coeffs()) coeffs.push_back(to_string(g));
    basis.push_back({{"coeffs", coeffs}});
  }
  j["basis"] = basis;
  j["unit"] = to_string(c.unit);
  j["exponents"] = c.exponents;
  j["der0_exponents"] = c.der0_exponents;
  j["method"] = c.method;
  j["version"] = kCertificateVersion;
  if (c.provenance) j["provenance"] = *c.provenance;
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

inline std::string serialize(const FreenessCertificate& c, int indent = 2) { return to_json(c).dump(indent); }

namespace detail {

inline const ordered_json& field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("certificate: missing field '") + key + "'");
  return j.at(key);
}

inline std::vector<std::int64_t> int_list(const ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InvalidArgument(std::string("certificate: '") + key + "' must be a list");
  std::vector<std::int64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw InvalidArgument(std::string("certificate: '") + key + "' must hold integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

inline std::string text(const ordered_json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw InvalidArgument(std::string("certificate: '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace detail

/// Structural parse only; run verify_certificate to trust the contents.
inline FreenessCertificate from_json(const ordered_json& j) {
  FreenessCertificate c;
  const auto& ring = detail::field(j, "ring");
  const auto& vars = detail::field(ring, "vars");
  if (!vars.is_array()) throw InvalidArgument("certificate: ring.vars must be a list");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string()) throw InvalidArgument("certificate: ring.vars must hold strings");
    names.push_back(v.get<std::string>());
  }
  auto weights = detail::int_list(ring, "weights");
  try {
    c.ring = make_ring(names, weights);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("certificate: ") + e.what());
  }
  c.divisor = parse_poly(detail::text(j, "divisor"), c.ring);
  const auto& basis = detail::field(j, "basis");
  if (!basis.is_array()) throw InvalidArgument("certificate: basis must be a list");
  for (const auto& b : basis) {
    const auto& coeffs = detail::field(b, "coeffs");
    if (!coeffs.is_array() || coeffs.size() != c.ring->size())
      throw InvalidArgument("certificate: each basis element needs one coefficient per variable");
    std::vector<Polynomial> cs;
    for (const auto& g : coeffs) {
      if (!g.is_string()) throw InvalidArgument("certificate: coefficients must be strings");
      cs.push_back(parse_poly(g.get<std::string>(), c.ring));
    }
    c.basis.emplace_back(c.ring, std::move(cs));
  }
  c.unit = parse_rational(detail::text(j, "unit"));
  c.exponents = detail::int_list(j, "exponents");
  c.der0_exponents = detail::int_list(j, "der0_exponents");
  c.method = detail::text(j, "method");
  const auto& version = detail::field(j, "version");
  if (!version.is_number_integer() || version.get<int>() != kCertificateVersion)
    throw InvalidArgument("certificate: unsupported version");
  if (j.contains("provenance")) c.provenance = detail::text(j, "provenance");
  if (j.contains("notes")) {
    for (const auto& n : j.at("notes")) {
      if (!n.is_string()) throw InvalidArgument("certificate: notes must be strings");
      c.notes.push_back(n.get<std::string>());
    }
  }
  return c;
}

inline FreenessCertificate parse_certificate(const std::string& s) {
  ordered_json j;
  try {
    j = ordered_json::parse(s);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("certificate: invalid JSON: ") + e.what());
  }
  return from_json(j);
}

}  // namespace freediv
