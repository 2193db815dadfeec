#ifndef BOREL_IO_HPP
#define BOREL_IO_HPP

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borel/borel_set.hpp"
#include "borel/deform.hpp"
#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/monomial.hpp"

namespace borel {

using json = nlohmann::ordered_json;

/// Raw parse of "gen, gen, ... @ r"; the truncation degree is optional.
struct ideal_input {
  int num_vars = 0;
  std::vector<monomial> generators;
  std::optional<int> degree;
};

/// Parses an ideal like "x3^2, x3*x2^2, x2^4 @ 8". The variable count is
/// inferred from the largest index mentioned unless ambient_dim forces more.
inline ideal_input parse_ideal(std::string_view text, std::optional<int> ambient_dim = {}) {
  ideal_input out;
  std::string gens_part(text);
  if (auto at = gens_part.find('@'); at != std::string::npos) {
    std::string deg = gens_part.substr(at + 1);
    gens_part.resize(at);
    try {
      std::size_t used = 0;
      int r = std::stoi(deg, &used);
      while (used < deg.size() && (deg[used] == ' ' || deg[used] == '\t')) ++used;
      if (used != deg.size())
        throw parse_error("ideal: trailing text after truncation degree");
      out.degree = r;
    } catch (const parse_error&) {
      throw;
    } catch (const std::exception&) {
      throw parse_error("ideal: bad truncation degree '" + deg + "'");
    }
    if (*out.degree < 0) throw parse_error("ideal: negative truncation degree");
  }
  int max_index = -1;
  for (std::size_t i = 0; i + 1 < gens_part.size(); ++i) {
    if (gens_part[i] != 'x') continue;
    std::size_t j = i + 1;
    long idx = 0;
    bool any = false;
    while (j < gens_part.size() && gens_part[j] >= '0' && gens_part[j] <= '9') {
      idx = idx * 10 + (gens_part[j] - '0');
      ++j;
      any = true;
    }
    if (any && idx > max_index) max_index = static_cast<int>(idx);
  }
  if (ambient_dim) {
    if (*ambient_dim < max_index)
      throw parse_error("ideal: variable index exceeds requested ambient dimension");
    max_index = *ambient_dim;
  }
  if (max_index < 1) throw parse_error("ideal: no variables found (need at least x_0, x_1)");
  out.num_vars = max_index + 1;
  std::size_t start = 0;
  while (start <= gens_part.size()) {
    std::size_t comma = gens_part.find(',', start);
    std::string piece = gens_part.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t a = piece.find_first_not_of(" \t");
    std::size_t b = piece.find_last_not_of(" \t");
    if (a != std::string::npos)
      out.generators.push_back(parse_monomial(piece.substr(a, b - a + 1), out.num_vars));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.generators.empty()) throw parse_error("ideal: no generators");
  return out;
}

/// Builds the canonical Borel ideal from parsed input. With an explicit
/// truncation degree the stratum is taken there; otherwise the Hilbert
/// polynomial is read off the generator-degree stratum and the Gotzmann
/// number fixes the degree.
inline borel_ideal resolve_ideal(const ideal_input& in) {
  const int n = in.num_vars - 1;
  int gen_deg = 0;
  for (const monomial& g : in.generators) gen_deg = std::max(gen_deg, g.degree());
  if (in.degree) {
    if (*in.degree < gen_deg)
      throw error("ideal: truncation degree " + std::to_string(*in.degree) +
                  " below generator degree " + std::to_string(gen_deg));
    return saturate(borel_set::from_generators(n, *in.degree, in.generators));
  }
  borel_set base = borel_set::from_generators(n, gen_deg, in.generators);
  hilbert_polynomial p = hilbert_polynomial_of(base);
  int r = gotzmann_number(p);
  if (r == base.degree()) return saturate(base);
  if (r > base.degree()) return saturate(borel_set::from_generators(n, r, in.generators));
  borel_ideal sat = saturate(base);
  return saturate(borel_set::from_generators(n, r, sat.saturated_generators));
}

inline borel_ideal parse_and_resolve_ideal(std::string_view text,
                                           std::optional<int> ambient_dim = {}) {
  return resolve_ideal(parse_ideal(text, ambient_dim));
}

/// Canonical round-trippable text: "x3^2, x3*x2 @ 10".
inline std::string ideal_text(const borel_ideal& ideal) {
  std::string s;
  for (const monomial& g : ideal.saturated_generators) {
    if (!s.empty()) s += ", ";
    s += to_string(g);
  }
  s += " @ " + std::to_string(ideal.stratum.degree());
  return s;
}

inline json ideal_json(const borel_ideal& ideal) {
  json j;
  j["n"] = ideal.stratum.ambient_dim();
  j["r"] = ideal.stratum.degree();
  json gens = json::array();
  for (const monomial& g : ideal.saturated_generators) gens.push_back(to_string(g));
  j["generators"] = std::move(gens);
  j["hilbert_polynomial"] = to_string(hilbert_polynomial_of(ideal.stratum));
  return j;
}

inline json family_json(const dec_move_family& fam) {
  json arr = json::array();
  for (const move_composition& f : fam.compositions()) {
    json comp = json::object();
    for (const auto& [idx, mult] : f.steps()) comp[std::to_string(idx)] = mult;
    arr.push_back(std::move(comp));
  }
  return arr;
}

inline json deformation_json(const deformation& d, bool flat_verified) {
  json j;
  json src = json::array(), tgt = json::array();
  for (const monomial& g : saturate(d.source).saturated_generators) src.push_back(to_string(g));
  for (const monomial& g : saturate(d.target).saturated_generators) tgt.push_back(to_string(g));
  j["source"] = std::move(src);
  j["target"] = std::move(tgt);
  j["stratum"] = d.stratum;
  j["alpha"] = to_string(d.alpha);
  j["beta"] = to_string(d.beta);
  j["family"] = family_json(d.family);
  j["flat_verified"] = flat_verified;
  return j;
}

}  // namespace borel

#endif
