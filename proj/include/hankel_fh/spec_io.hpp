#pragma once

// JSON spec files. V and W are Chebyshev coefficient arrays (or monomial
// arrays under V_mono / W_mono); complex values are [re, im] pairs and plain
// numbers are accepted for real values.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hankel_fh/applications.hpp"
#include "hankel_fh/errors.hpp"
#include "hankel_fh/weight.hpp"

namespace hankel_fh {

using json = nlohmann::json;

struct SpecFile {
  WeightSpec spec;
  std::optional<ThinningSpec> thinning;
};

namespace detail {

inline std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline double get_real(const json& v, const std::string& what) {
  if (!v.is_number()) throw InvalidSpec(what + " must be a number");
  return v.get<double>();
}

inline ComplexValue get_complex(const json& v, const std::string& what) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw InvalidSpec(what + " must be a number or a [re, im] pair");
}

inline std::vector<double> get_real_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw InvalidSpec(what + " must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_real(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<ComplexValue> get_complex_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw InvalidSpec(what + " must be an array");
  std::vector<ComplexValue> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_complex(v[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

inline ChebSeries get_series(const json& j, const std::string& key, bool required) {
  const std::string mono = key + "_mono";
  if (j.contains(key) && j.contains(mono)) throw InvalidSpec("give either " + key + " or " + mono + ", not both");
  if (j.contains(key)) {
    auto c = get_real_list(j.at(key), key);
    if (c.empty()) c.push_back(0.0);
    return ChebSeries(std::move(c));
  }
  if (j.contains(mono)) {
    auto c = get_real_list(j.at(mono), mono);
    if (c.empty()) c.push_back(0.0);
    return ChebSeries::from_monomial(c);
  }
  if (required) throw InvalidSpec("missing key '" + key + "'");
  return ChebSeries::constant(0.0);
}

inline json complex_json(ComplexValue z) { return json::array({z.real(), z.imag()}); }

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
}

}  // namespace detail

inline ThinningSpec thinning_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("thinning must be an object with keys keep and survival");
  ThinningSpec th;
  if (!j.contains("keep") || !j.contains("survival")) throw InvalidSpec("thinning needs keys keep and survival");
  for (const auto& k : j.at("keep")) {
    if (!k.is_number_integer()) throw InvalidSpec("thinning.keep entries must be integers");
    th.keep.push_back(k.get<int>());
  }
  th.survival = detail::get_real_list(j.at("survival"), "thinning.survival");
  return th;
}

inline json to_json(const ThinningSpec& th) { return {{"keep", th.keep}, {"survival", th.survival}}; }

/// Builds and validates a spec from parsed JSON.
inline SpecFile spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidSpec("spec must be a JSON object");
  SpecFile out;
  WeightSpec& s = out.spec;
  if (!j.contains("class") || !j.at("class").is_string()) throw InvalidSpec("missing string key 'class'");
  s.ensemble = ensemble_class_from_string(j.at("class").get<std::string>());
  s.V = detail::get_series(j, "V", true);
  s.W = detail::get_series(j, "W", false);
  s.points = j.contains("points") ? detail::get_real_list(j.at("points"), "points") : std::vector<double>{};
  if (!j.contains("alphas")) throw InvalidSpec("missing key 'alphas'");
  s.alphas = detail::get_complex_list(j.at("alphas"), "alphas");
  s.betas = j.contains("betas") ? detail::get_complex_list(j.at("betas"), "betas") : std::vector<ComplexValue>{};
  if (j.contains("delta")) s.separation = detail::get_real(j.at("delta"), "delta");
  validate(s);
  if (j.contains("thinning")) {
    out.thinning = thinning_from_json(j.at("thinning"));
    validate(*out.thinning, s.m());
  }
  return out;
}

inline json to_json(const WeightSpec& s) {
  json j;
  j["class"] = std::string(to_string(s.ensemble));
  j["V"] = s.V.coeffs();
  j["W"] = s.W.coeffs();
  j["points"] = s.points;
  json a = json::array(), b = json::array();
  for (auto z : s.alphas) a.push_back(detail::complex_json(z));
  for (auto z : s.betas) b.push_back(detail::complex_json(z));
  j["alphas"] = a;
  j["betas"] = b;
  j["delta"] = s.separation;
  return j;
}

inline json to_json(const SpecFile& f) {
  json j = to_json(f.spec);
  if (f.thinning) j["thinning"] = to_json(*f.thinning);
  return j;
}

inline SpecFile parse_spec_text(const std::string& text) { return spec_from_json(detail::parse_json_text(text)); }

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpecFile parse_spec_file(const std::string& path) { return parse_spec_text(read_text_file(path)); }

inline ThinningSpec parse_thinning_file(const std::string& path) {
  const json j = detail::parse_json_text(read_text_file(path));
  return thinning_from_json(j.contains("thinning") ? j.at("thinning") : j);
}

}  // namespace hankel_fh
