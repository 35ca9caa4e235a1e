// Copyright 2026 The Orlicz Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORLICZ_IO_HPP_
#define ORLICZ_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "orlicz/delta2_sequences.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/subspaces.hpp"
#include "orlicz/weighted_vector.hpp"

namespace orlicz::io {

using nlohmann::json;

// Non-finite doubles become null.
json Num(double x);

// {"family": ..., "params": {...}, "t_max": number, "grid_resolution": int}
OrliczFunction FunctionFromJson(const json& spec);
json FunctionToJson(const OrliczFunction& m);

// {"entries": [[value, multiplicity] | [value, {"log_mult": x}], ...]}
WeightedVector VectorFromJson(const json& doc);
json VectorToJson(const WeightedVector& x);

// "# p=... s_bound=... a_estimate=..." then k,t_k,phi_k.
void WriteTCsv(std::ostream& os, const TSequence& t);
// p comes from the header unless p_override is set; s_bound is left at the
// header value and should be recomputed by the caller.
TSequence ReadTCsv(std::istream& is, std::optional<double> p_override = std::nullopt);

json WitnessToJson(const WitnessData& w);
// Rebuilds z from the pairs and re-verifies the per-k inequalities against m.
WitnessData WitnessFromJson(const json& doc, const OrliczFunction& m);

json ReadJsonFile(const std::string& path);
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace orlicz::io

#endif  // ORLICZ_IO_HPP_
