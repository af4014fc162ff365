#ifndef GORLAB_JSON_IO_HPP
#define GORLAB_JSON_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorlab/algebra.hpp"

namespace gorlab {

using json = nlohmann::ordered_json;

// Parsed ring-spec file:
//   {"field": "Q" | {"Fp": p}, "vars": [..], "degrees": [..], "ideal": [..]}
// degrees are optional (default all 1); ideal entries use the polynomial
// grammar.
struct RingSpecData {
  bool rational = true;
  std::uint32_t p = 0;
  std::vector<std::string> vars;
  std::vector<int> degrees;
  std::vector<std::string> ideal;

  std::string canonical() const {
    std::string s = rational ? "Q" : "Fp:" + std::to_string(p);
    s += "|";
    for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? "," : "") + vars[i];
    s += "|";
    for (std::size_t i = 0; i < degrees.size(); ++i)
      s += (i ? "," : "") + std::to_string(degrees[i]);
    s += "|";
    for (std::size_t i = 0; i < ideal.size(); ++i) s += (i ? ";" : "") + ideal[i];
    return s;
  }

  // FNV-1a 64-bit of the canonical serialization, as fixed-width hex.
  std::string hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical()) {
      h ^= c;
      h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
      out[i] = hex[h & 0xf];
      h >>= 4;
    }
    return out;
  }
};

inline RingSpecData parse_ring_spec_json(const json& j) {
  RingSpecData spec;
  if (!j.is_object()) throw InputError("ring spec must be a JSON object");
  if (j.contains("field")) {
    const auto& f = j.at("field");
    if (f.is_string() && f.get<std::string>() == "Q") {
      spec.rational = true;
    } else if (f.is_object() && f.contains("Fp")) {
      spec.rational = false;
      long p = f.at("Fp").get<long>();
      if (p < 2 || p >= (1l << 31)) throw InputError("prime field modulus out of range");
      spec.p = static_cast<std::uint32_t>(p);
    } else {
      throw InputError("field must be \"Q\" or {\"Fp\": p}");
    }
  }
  if (!j.contains("vars") || !j.at("vars").is_array() || j.at("vars").empty())
    throw InputError("ring spec needs a non-empty \"vars\" array");
  for (const auto& v : j.at("vars")) spec.vars.push_back(v.get<std::string>());
  if (j.contains("degrees")) {
    for (const auto& d : j.at("degrees")) spec.degrees.push_back(d.get<int>());
    if (spec.degrees.size() != spec.vars.size())
      throw InputError("degrees length must match vars length");
  } else {
    spec.degrees.assign(spec.vars.size(), 1);
  }
  if (j.contains("ideal"))
    for (const auto& g : j.at("ideal")) spec.ideal.push_back(g.get<std::string>());
  return spec;
}

inline RingSpecData parse_ring_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("ring spec is not valid JSON: ") + e.what());
  }
  return parse_ring_spec_json(j);
}

template <class K>
FieldCtx<K> field_ctx_of(const RingSpecData& spec);

template <>
inline FieldCtx<Rational> field_ctx_of<Rational>(const RingSpecData&) {
  return {};
}

template <>
inline FieldCtx<GFp> field_ctx_of<GFp>(const RingSpecData& spec) {
  return FieldCtx<GFp>{spec.p};
}

template <class K>
GradedAlgebra<K> build_algebra(const RingSpecData& spec) {
  auto ring = PolyRing<K>::create(spec.vars, field_ctx_of<K>(spec), spec.degrees);
  std::vector<Polynomial<K>> gens;
  for (const auto& s : spec.ideal) gens.push_back(parse_polynomial<K>(ring, s));
  return GradedAlgebra<K>::create(ring, std::move(gens));
}

}  // namespace gorlab

#endif
