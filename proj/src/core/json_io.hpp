/*
 * Copyright 2026 The conemm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include <json.hpp>

#include "core/certificate.hpp"
#include "core/instance.hpp"
#include "core/minimax.hpp"
#include "core/partition.hpp"

namespace conemm {

// Every document keeps rationals as strings ("p" or "p/q"); floating-point
// numbers are rejected outright. Indices in documents are 1-based.

/// Parses {"n": int?, "r": int, "q": int, "coeffs": [["p/q", ...], ...]}.
/// n may be omitted (stored as 0). Integer JSON numbers are accepted for
/// coefficients; anything floating raises "rationals only".
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& inst);

/// {"b": [...], "c": [...], "delta": "p/q", "kappa": "p/q", "seed": int}
nlohmann::json certificate_to_json(const Certificate& cert);
CertificateData certificate_data_from_json(const nlohmann::json& doc);

/// {"blocks": [[1-based indices, ...], ...]}
nlohmann::json partition_to_json(const Partition& partition);
Partition partition_from_json(const nlohmann::json& doc);

nlohmann::json validation_to_json(const ValidationReport& report);
nlohmann::json support_to_json(const SupportReport& report);
nlohmann::json genericity_to_json(const GenericityReport& report);
nlohmann::json thresholds_to_json(const ThresholdReport& report);
nlohmann::json verify_to_json(const VerifyResult& result);
nlohmann::json solve_to_json(const SolveResult& result);
nlohmann::json regroup_to_json(const RegroupResult& result);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// Identical inputs always produce byte-identical text.
std::string dump_stable(const nlohmann::json& doc);

nlohmann::json parse_json_text(const std::string& text);

}  // namespace conemm
