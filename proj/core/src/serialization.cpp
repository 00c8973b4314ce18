// Copyright 2026 The contactscatter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "contact/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

#include "contact/errors.hpp"

namespace contact {
namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidSpec(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidSpec(std::string("bad field '") + key + "': " + e.what());
  }
}

double number(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidSpec(std::string("missing field '") + key + "'");
  return number_from_json(j.at(key));
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? number_from_json(j.at(key)) : fallback;
}

Json optional_number(const std::optional<double>& x) {
  return x ? number_to_json(*x) : Json(nullptr);
}

std::optional<double> optional_number(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return number_from_json(j.at(key));
}

void dump_to(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        out += Json(it.key()).dump();
        out.push_back(':');
        dump_to(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    case Json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const Json& v : j) {
        if (!first) out.push_back(',');
        first = false;
        dump_to(v, out);
      }
      out.push_back(']');
      break;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::kEven;
  if (s == "odd") return Parity::kOdd;
  throw InvalidSpec("unknown parity '" + s + "'");
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json number_to_json(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InvalidSpec("expected a number, got " + j.dump());
}

std::string dump(const Json& j) {
  std::string out;
  dump_to(j, out);
  return out;
}

void to_json(Json& j, const PotentialSpec& s) {
  j = Json{{"family", std::string(to_string(s.family))},
           {"omega", number_to_json(s.omega)},
           {"alpha", number_to_json(s.alpha)},
           {"beta", number_to_json(s.beta)},
           {"a", number_to_json(s.a)},
           {"a0", number_to_json(s.a0)}};
}

void from_json(const Json& j, PotentialSpec& s) {
  if (!j.is_object()) throw InvalidSpec("potential spec must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    static const char* kKeys[] = {"family", "omega", "alpha", "beta", "a", "a0"};
    bool known = false;
    for (const char* k : kKeys) known = known || it.key() == k;
    if (!known) throw InvalidSpec("unknown field '" + it.key() + "' in potential spec");
  }
  PotentialSpec out;
  out.family = parse_family(field<std::string>(j, "family"));
  out.omega = number(j, "omega");
  out.alpha = number_or(j, "alpha", out.alpha);
  out.beta = number_or(j, "beta", out.beta);
  out.a = number_or(j, "a", out.a);
  out.a0 = number_or(j, "a0", out.a0);
  s = out;
}

void to_json(Json& j, const PhaseShiftEntry& e) {
  j = Json{{"index", e.index}, {"tan_delta", number_to_json(e.tan_delta)}, {"delta", number_to_json(e.delta)}};
}

void from_json(const Json& j, PhaseShiftEntry& e) {
  e.index = field<int>(j, "index");
  e.tan_delta = number(j, "tan_delta");
  e.delta = number(j, "delta");
}

void to_json(Json& j, const PhaseShiftTable& t) {
  j = Json{{"family", std::string(to_string(t.family))},
           {"k", number_to_json(t.k)},
           {"entries", t.entries},
           {"truncation",
            {{"index", t.truncation_index},
             {"reason", t.truncation == Truncation::kCap ? "cap" : "below_threshold"}}}};
}

void from_json(const Json& j, PhaseShiftTable& t) {
  t.family = parse_family(field<std::string>(j, "family"));
  t.k = number(j, "k");
  t.entries = field<std::vector<PhaseShiftEntry>>(j, "entries");
  const Json& tr = field<Json>(j, "truncation");
  t.truncation_index = field<int>(tr, "index");
  const auto reason = field<std::string>(tr, "reason");
  if (reason == "cap") {
    t.truncation = Truncation::kCap;
  } else if (reason == "below_threshold") {
    t.truncation = Truncation::kBelowThreshold;
  } else {
    throw InvalidSpec("unknown truncation reason '" + reason + "'");
  }
}

void to_json(Json& j, const ChannelFit& c) {
  j = Json{{"index", c.index},
           {"behavior", std::string(to_string(c.behavior))},
           {"slope", number_to_json(c.slope)},
           {"log_slope", optional_number(c.log_slope)},
           {"last_value", number_to_json(c.last_value)},
           {"points", c.points}};
}

void from_json(const Json& j, ChannelFit& c) {
  c.index = field<int>(j, "index");
  c.behavior = parse_channel_behavior(field<std::string>(j, "behavior"));
  c.slope = number(j, "slope");
  c.log_slope = optional_number(j, "log_slope");
  c.last_value = number(j, "last_value");
  c.points = field<std::size_t>(j, "points");
}

void to_json(Json& j, const EvidencePoint& p) {
  j = Json{{"xi", number_to_json(p.xi)},
           {"log10_xi", number_to_json(p.log10_xi)},
           {"tan_delta0", number_to_json(p.tan_delta0)},
           {"log_abs_tan_delta0", number_to_json(p.log_abs_tan_delta0)},
           {"tan_delta1", optional_number(p.tan_delta1)}};
}

void from_json(const Json& j, EvidencePoint& p) {
  p.xi = number(j, "xi");
  p.log10_xi = number(j, "log10_xi");
  p.tan_delta0 = number(j, "tan_delta0");
  p.log_abs_tan_delta0 = number(j, "log_abs_tan_delta0");
  p.tan_delta1 = optional_number(j, "tan_delta1");
}

void to_json(Json& j, const LimitValues& v) {
  j = Json{{"tan_delta0", optional_number(v.tan_delta0)},
           {"tan_delta_even", optional_number(v.tan_delta_even)},
           {"tan_delta_odd", optional_number(v.tan_delta_odd)}};
}

void from_json(const Json& j, LimitValues& v) {
  v.tan_delta0 = optional_number(j, "tan_delta0");
  v.tan_delta_even = optional_number(j, "tan_delta_even");
  v.tan_delta_odd = optional_number(j, "tan_delta_odd");
}

void to_json(Json& j, const LimitClassification& c) {
  j = Json{{"verdict", std::string(to_string(c.verdict))},
           {"resonant_index", c.resonant_index ? Json(*c.resonant_index) : Json(nullptr)},
           {"limit_values", c.limit_values ? Json(*c.limit_values) : Json(nullptr)},
           {"slope", number_to_json(c.slope)},
           {"channels", c.channels},
           {"evidence", c.evidence}};
}

void from_json(const Json& j, LimitClassification& c) {
  c.verdict = parse_verdict(field<std::string>(j, "verdict"));
  c.resonant_index = j.contains("resonant_index") && !j.at("resonant_index").is_null()
                         ? std::optional<int>(field<int>(j, "resonant_index"))
                         : std::nullopt;
  c.limit_values = j.contains("limit_values") && !j.at("limit_values").is_null()
                       ? std::optional<LimitValues>(field<LimitValues>(j, "limit_values"))
                       : std::nullopt;
  c.slope = number(j, "slope");
  c.channels = field<std::vector<ChannelFit>>(j, "channels");
  c.evidence = field<std::vector<EvidencePoint>>(j, "evidence");
}

void to_json(Json& j, const ResonanceSet& r) {
  Json omegas = Json::array();
  for (double w : r.omegas) omegas.push_back(number_to_json(w));
  j = Json{{"family", std::string(to_string(r.family))},
           {"alpha", number_to_json(r.alpha)},
           {"beta", optional_number(r.beta)},
           {"formula", r.formula},
           {"omegas", omegas}};
}

void from_json(const Json& j, ResonanceSet& r) {
  r.family = parse_resonance_family(field<std::string>(j, "family"));
  r.alpha = number(j, "alpha");
  r.beta = optional_number(j, "beta");
  r.formula = field<std::string>(j, "formula");
  r.omegas.clear();
  for (const Json& w : field<Json>(j, "omegas")) r.omegas.push_back(number_from_json(w));
}

void to_json(Json& j, const WavefunctionPieces& p) {
  j = Json{{"interior_amplitude", number_to_json(p.interior_amplitude)},
           {"exterior_amplitude", number_to_json(p.exterior_amplitude)},
           {"parity", p.parity ? Json(std::string(to_string(*p.parity))) : Json(nullptr)}};
}

void from_json(const Json& j, WavefunctionPieces& p) {
  p.interior_amplitude = number(j, "interior_amplitude");
  p.exterior_amplitude = number(j, "exterior_amplitude");
  p.parity = j.contains("parity") && !j.at("parity").is_null()
                 ? std::optional<Parity>(parse_parity(field<std::string>(j, "parity")))
                 : std::nullopt;
}

void to_json(Json& j, const HalfBoundReport& r) {
  j = Json{{"exists", r.exists},
           {"parity", r.parity ? Json(std::string(to_string(*r.parity))) : Json(nullptr)},
           {"pieces", r.pieces},
           {"residual", number_to_json(r.residual)}};
}

void from_json(const Json& j, HalfBoundReport& r) {
  r.exists = field<bool>(j, "exists");
  r.parity = j.contains("parity") && !j.at("parity").is_null()
                 ? std::optional<Parity>(parse_parity(field<std::string>(j, "parity")))
                 : std::nullopt;
  r.pieces = field<WavefunctionPieces>(j, "pieces");
  r.residual = number(j, "residual");
}

void to_json(Json& j, const AuditRow& r) {
  j = Json{{"spec", r.spec},
           {"numeric", r.numeric ? Json(std::string(to_string(*r.numeric))) : Json("inconclusive")},
           {"symbolic", std::string(to_string(r.symbolic))},
           {"verdicts_agree", r.verdicts_agree},
           {"resonance", r.resonance},
           {"half_bound", r.half_bound},
           {"half_bound_consistent", r.half_bound_consistent},
           {"slope", number_to_json(r.slope)}};
}

void from_json(const Json& j, AuditRow& r) {
  r.spec = field<PotentialSpec>(j, "spec");
  const auto numeric = field<std::string>(j, "numeric");
  r.numeric = numeric == "inconclusive" ? std::nullopt : std::optional<Verdict>(parse_verdict(numeric));
  r.symbolic = parse_verdict(field<std::string>(j, "symbolic"));
  r.verdicts_agree = field<bool>(j, "verdicts_agree");
  r.resonance = field<bool>(j, "resonance");
  r.half_bound = field<HalfBoundReport>(j, "half_bound");
  r.half_bound_consistent = field<bool>(j, "half_bound_consistent");
  r.slope = number(j, "slope");
}

void to_json(Json& j, const AuditReport& r) {
  j = Json{{"rows", r.rows}, {"failures", r.failures}, {"passed", r.passed()}};
}

void from_json(const Json& j, AuditReport& r) {
  r.rows = field<std::vector<AuditRow>>(j, "rows");
  r.failures = field<std::size_t>(j, "failures");
}

}  // namespace contact
