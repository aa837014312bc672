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

#include "core/json_io.hpp"

namespace conemm {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& value, const std::string& where) {
    if (value.is_string()) {
        return Rational::parse(value.get<std::string>());
    }
    if (value.is_number_integer()) {
        return Rational(static_cast<long>(value.get<std::int64_t>()));
    }
    if (value.is_number_float()) {
        throw Error(ErrorCode::parse_error, where + ": rationals only, floating point is rejected");
    }
    throw Error(ErrorCode::parse_error, where + ": expected a rational as \"p\" or \"p/q\"");
}

int int_from_json(const json& value, const std::string& where) {
    if (!value.is_number_integer()) {
        throw Error(ErrorCode::parse_error, where + ": expected an integer");
    }
    return static_cast<int>(value.get<std::int64_t>());
}

json rational_vector_to_json(const RationalVector& values) {
    json arr = json::array();
    for (const Rational& v : values) arr.push_back(v.str());
    return arr;
}

RationalVector rational_vector_from_json(const json& arr, const std::string& where) {
    if (!arr.is_array()) {
        throw Error(ErrorCode::parse_error, where + ": expected an array");
    }
    RationalVector out;
    out.reserve(arr.size());
    for (const json& v : arr) out.push_back(rational_from_json(v, where));
    return out;
}

}  // namespace

Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw Error(ErrorCode::parse_error, "instance document must be a JSON object");
    }
    Instance inst;
    if (doc.contains("n") && !doc.at("n").is_null()) {
        inst.n = int_from_json(doc.at("n"), "n");
        if (inst.n < 1) {
            throw Error(ErrorCode::parse_error, "n must be a positive integer when present");
        }
    }
    if (!doc.contains("r") || !doc.contains("q") || !doc.contains("coeffs")) {
        throw Error(ErrorCode::parse_error, "instance document needs \"r\", \"q\" and \"coeffs\"");
    }
    inst.r = int_from_json(doc.at("r"), "r");
    inst.q = int_from_json(doc.at("q"), "q");
    if (inst.r < 1 || inst.q < 1) {
        throw Error(ErrorCode::parse_error, "q and r must be positive integers");
    }
    const json& rows = doc.at("coeffs");
    if (!rows.is_array() || static_cast<int>(rows.size()) != inst.q) {
        throw Error(ErrorCode::parse_error, "coeffs must be an array of q rows");
    }
    inst.coeffs = Matrix(inst.q, inst.r);
    for (int i = 0; i < inst.q; ++i) {
        const json& row = rows.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != inst.r) {
            throw Error(ErrorCode::parse_error,
                        "coeffs row " + std::to_string(i + 1) + " must hold r entries");
        }
        for (int j = 0; j < inst.r; ++j) {
            inst.coeffs.at(i, j) = rational_from_json(
                row.at(static_cast<std::size_t>(j)),
                "coeffs[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]");
        }
    }
    return inst;
}

json instance_to_json(const Instance& inst) {
    json rows = json::array();
    for (int i = 0; i < inst.q; ++i) {
        json row = json::array();
        for (int j = 0; j < inst.r; ++j) row.push_back(inst.coeffs.at(i, j).str());
        rows.push_back(std::move(row));
    }
    json doc{{"r", inst.r}, {"q", inst.q}, {"coeffs", std::move(rows)}};
    if (inst.n > 0) doc["n"] = inst.n;
    return doc;
}

json certificate_to_json(const Certificate& cert) {
    return json{{"b", rational_vector_to_json(cert.data.b)},
                {"c", rational_vector_to_json(cert.data.c)},
                {"delta", cert.data.delta.str()},
                {"kappa", cert.kappa.str()},
                {"seed", cert.seed}};
}

CertificateData certificate_data_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("b") || !doc.contains("c") || !doc.contains("delta")) {
        throw Error(ErrorCode::parse_error, "certificate document needs \"b\", \"c\" and \"delta\"");
    }
    CertificateData data;
    data.b = rational_vector_from_json(doc.at("b"), "b");
    data.c = rational_vector_from_json(doc.at("c"), "c");
    data.delta = rational_from_json(doc.at("delta"), "delta");
    return data;
}

json partition_to_json(const Partition& partition) {
    json blocks = json::array();
    for (const std::vector<int>& block : partition.blocks) {
        json arr = json::array();
        for (int idx : block) arr.push_back(idx + 1);
        blocks.push_back(std::move(arr));
    }
    return json{{"blocks", std::move(blocks)}};
}

Partition partition_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("blocks") || !doc.at("blocks").is_array()) {
        throw Error(ErrorCode::parse_error, "partition document needs a \"blocks\" array");
    }
    Partition partition;
    for (const json& block : doc.at("blocks")) {
        if (!block.is_array()) {
            throw Error(ErrorCode::parse_error, "partition blocks must be arrays of indices");
        }
        std::vector<int> indices;
        for (const json& idx : block) {
            indices.push_back(int_from_json(idx, "blocks") - 1);
        }
        partition.blocks.push_back(std::move(indices));
    }
    return partition;
}

json validation_to_json(const ValidationReport& report) {
    return json{{"valid", report.ok()}, {"violations", report.violations}};
}

json support_to_json(const SupportReport& report) {
    json doc{{"pass", report.pass}};
    if (!report.pass) {
        json t = json::array();
        for (int j : report.witness_T) t.push_back(j + 1);
        doc["witness_T"] = std::move(t);
        doc["count"] = report.count;
        doc["bound"] = report.bound;
    }
    return doc;
}

json genericity_to_json(const GenericityReport& report) {
    json doc{{"pass", report.pass}};
    if (!report.pass) {
        doc["witness"] = json{{"i", report.i + 1}, {"i2", report.i2 + 1}, {"j", report.j + 1}, {"j2", report.j2 + 1}};
    }
    return doc;
}

json thresholds_to_json(const ThresholdReport& report) {
    return json{{"quasi_hyperbolic_a", report.quasi_hyperbolic_a},
                {"hyperbolic_b", report.hyperbolic_b},
                {"quasi_hyperbolic_CM", report.quasi_hyperbolic_cm},
                {"hyperbolic_2", report.hyperbolic_2},
                {"cohen_macaulay_assumed", report.cohen_macaulay},
                {"required_q",
                 json{{"quasi_hyperbolic_a", report.required_a},
                      {"hyperbolic_b", report.required_b},
                      {"quasi_hyperbolic_CM", report.required_cm},
                      {"hyperbolic_2", report.required_2}}}};
}

json verify_to_json(const VerifyResult& result) {
    json doc{{"pass", result.pass}};
    if (!result.pass) {
        json witness{{"inequality", result.inequality}, {"lhs", result.lhs.str()}};
        witness["i"] = result.i >= 0 ? json(result.i + 1) : json(nullptr);
        witness["j"] = result.j >= 0 ? json(result.j + 1) : json(nullptr);
        doc["witness"] = std::move(witness);
    }
    return doc;
}

json solve_to_json(const SolveResult& result) {
    return json{{"b", rational_vector_to_json(result.w.b)},
                {"counts_perturbed", result.counts_perturbed.counts},
                {"counts_unperturbed", result.counts_unperturbed.counts},
                {"had_ties_unperturbed", result.counts_unperturbed.had_ties},
                {"kappa", result.pert.kappa.str()},
                {"seed", result.pert.seed},
                {"balance_iterations", result.balance_iterations}};
}

json regroup_to_json(const RegroupResult& result) {
    json sums = json::array();
    for (const RationalVector& sum : result.sums) sums.push_back(rational_vector_to_json(sum));
    return json{{"blocks", partition_to_json(result.partition).at("blocks")},
                {"sums", std::move(sums)},
                {"q_prime", result.q_prime},
                {"meets_2n_plus_r", result.meets_2n_plus_r},
                {"meets_2n", result.meets_2n},
                {"meets_2n_squared", result.meets_2n_squared}};
}

std::string dump_stable(const json& doc) {
    return doc.dump(2) + "\n";
}

json parse_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw Error(ErrorCode::parse_error, "malformed JSON input");
    }
    return doc;
}

}  // namespace conemm
