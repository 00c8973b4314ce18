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

#ifndef CONTACT_SERIALIZATION_HPP_
#define CONTACT_SERIALIZATION_HPP_

#include <string>

#include <json.hpp>

#include "contact/limits.hpp"
#include "contact/model.hpp"
#include "contact/observables.hpp"
#include "contact/phase_shifts.hpp"

namespace contact {

using Json = nlohmann::json;

// %.17g, with "inf", "-inf" and "nan" for the non-finite values.
std::string format_double(double x);

// Numbers are written as JSON numbers; non-finite values as the strings
// above. number_from_json accepts either form.
Json number_to_json(double x);
double number_from_json(const Json& j);

// Compact JSON text with every double rendered by format_double, so equal
// values always produce equal bytes.
std::string dump(const Json& j);

// Records are converted through the usual nlohmann hooks. from_json throws
// InvalidSpec on missing or malformed fields.
void to_json(Json& j, const PotentialSpec& spec);
void from_json(const Json& j, PotentialSpec& spec);
void to_json(Json& j, const PhaseShiftEntry& e);
void from_json(const Json& j, PhaseShiftEntry& e);
void to_json(Json& j, const PhaseShiftTable& t);
void from_json(const Json& j, PhaseShiftTable& t);
void to_json(Json& j, const ChannelFit& c);
void from_json(const Json& j, ChannelFit& c);
void to_json(Json& j, const EvidencePoint& p);
void from_json(const Json& j, EvidencePoint& p);
void to_json(Json& j, const LimitValues& v);
void from_json(const Json& j, LimitValues& v);
void to_json(Json& j, const LimitClassification& c);
void from_json(const Json& j, LimitClassification& c);
void to_json(Json& j, const ResonanceSet& r);
void from_json(const Json& j, ResonanceSet& r);
void to_json(Json& j, const WavefunctionPieces& p);
void from_json(const Json& j, WavefunctionPieces& p);
void to_json(Json& j, const HalfBoundReport& r);
void from_json(const Json& j, HalfBoundReport& r);
void to_json(Json& j, const AuditRow& r);
void from_json(const Json& j, AuditRow& r);
void to_json(Json& j, const AuditReport& r);
void from_json(const Json& j, AuditReport& r);

}  // namespace contact

#endif  // CONTACT_SERIALIZATION_HPP_
