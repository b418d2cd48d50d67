// SPDX-License-Identifier: MIT
#include "tfrac/spec_json.hpp"

#include <fmt/format.h>

#include <json.hpp>
#include <string>
#include <vector>

namespace tfrac {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecParseError(fmt::format("invalid JSON: {}", e.what()));
  }
}

Poly to_poly(const json& value) {
  if (value.is_number_integer()) return Poly(value.get<long>());
  if (value.is_string()) return Poly::parse(value.get<std::string>());
  throw SpecParseError(fmt::format("expected an integer or polynomial string, got {}", value.dump()));
}

/// poly with the symbol `var` replaced by the integer `at`.
Poly evaluate_at(const Poly& poly, std::string_view var, unsigned at) {
  return specialize(poly, Substitution{{IndexedSymbol(var), Poly(static_cast<long>(at))}});
}

CoeffSeq to_coeff_seq(const json& j, unsigned first_index) {
  if (j.is_array()) {
    std::vector<Poly> values;
    for (const auto& v : j) values.push_back(to_poly(v));
    return CoeffSeq::table(std::move(values), 0, first_index);
  }
  if (j.is_string() || j.is_number_integer()) {
    const Poly rule = to_poly(j);
    return CoeffSeq::rule([rule](unsigned i) { return evaluate_at(rule, "i", i); }, rule.str());
  }
  if (j.is_object() && j.contains("odd") && j.contains("even")) {
    const Poly odd = to_poly(j.at("odd"));
    const Poly even = to_poly(j.at("even"));
    return CoeffSeq::rule(
        [odd, even](unsigned i) { return evaluate_at(i % 2 == 1 ? odd : even, "k", (i + 1) / 2); },
        fmt::format("{} | {}", odd.str(), even.str()));
  }
  throw SpecParseError(fmt::format("unrecognized coefficient sequence {}", j.dump()));
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SpecParseError(fmt::format("spec needs a \"{}\" member", key));
  return j.at(key);
}

}  // namespace

CoeffSeq parse_coeff_seq(std::string_view text, unsigned first_index) {
  return to_coeff_seq(parse_json(text), first_index);
}

TFractionSpec parse_tfraction(std::string_view text) {
  constexpr std::string_view kQuasi = "quasiaffine:";
  if (text.starts_with(kQuasi)) {
    std::vector<Poly> parts;
    std::string_view rest = text.substr(kQuasi.size());
    while (true) {
      const auto comma = rest.find(',');
      parts.push_back(Poly::parse(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (parts.size() != 8) {
      throw SpecParseError(fmt::format("quasiaffine needs 8 values (x,y,u,v,a,b,c,d), got {}", parts.size()));
    }
    return quasi_affine({parts[0], parts[1], parts[2], parts[3], parts[4], parts[5], parts[6], parts[7]});
  }
  const json j = parse_json(text);
  return {to_coeff_seq(member(j, "alpha"), 1), to_coeff_seq(member(j, "delta"), 1)};
}

JFractionSpec parse_jfraction(std::string_view text) {
  const json j = parse_json(text);
  return {to_coeff_seq(member(j, "gamma"), 0), to_coeff_seq(member(j, "beta"), 1)};
}

SFractionSpec parse_sfraction(std::string_view text) {
  const json j = parse_json(text);
  return {to_coeff_seq(member(j, "alpha"), 1)};
}

Substitution parse_substitution(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SpecParseError("a specialization must be a JSON object");
  Substitution out;
  for (const auto& [key, value] : j.items()) out[IndexedSymbol::parse(key)] = to_poly(value);
  return out;
}

}  // namespace tfrac
