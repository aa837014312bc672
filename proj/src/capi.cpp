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

#include "conemm.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/certificate.hpp"
#include "core/generators.hpp"
#include "core/instance.hpp"
#include "core/json_io.hpp"
#include "core/minimax.hpp"
#include "core/partition.hpp"
#include "core/rational.hpp"

struct conemm_instance {
    conemm::Instance inst;
};

namespace {

thread_local std::string g_last_error;

conemm_status status_of(conemm::ErrorCode code) {
    switch (code) {
        case conemm::ErrorCode::parse_error: return CONEMM_ERR_PARSE;
        case conemm::ErrorCode::invalid_argument: return CONEMM_ERR_ARGUMENT;
        case conemm::ErrorCode::hypothesis_failed: return CONEMM_FAIL;
        case conemm::ErrorCode::search_exhausted: return CONEMM_FAIL;
        case conemm::ErrorCode::budget_exhausted: return CONEMM_ERR_BUDGET;
        case conemm::ErrorCode::guard_violation: return CONEMM_ERR_GUARD;
        case conemm::ErrorCode::internal_error: return CONEMM_ERR_INTERNAL;
    }
    return CONEMM_ERR_INTERNAL;
}

char* dup_text(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out != nullptr) {
        std::memcpy(out, text.c_str(), text.size() + 1);
    }
    return out;
}

void emit(char** out_json, const nlohmann::json& doc) {
    if (out_json != nullptr) *out_json = dup_text(conemm::dump_stable(doc));
}

template <typename Fn>
conemm_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const conemm::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CONEMM_ERR_INTERNAL;
    }
}

conemm::Rational parse_kappa(const char* kappa) {
    if (kappa == nullptr) return conemm::Rational(1, 16);
    conemm::Rational k = conemm::Rational::parse(kappa);
    if (!k.is_positive() || k > conemm::Rational(1)) {
        throw conemm::Error(conemm::ErrorCode::invalid_argument, "kappa must lie in (0, 1]");
    }
    return k;
}

int resolve_n(const conemm::Instance& inst, int n) {
    if (n < 0) {
        throw conemm::Error(conemm::ErrorCode::invalid_argument, "dimension n must be positive");
    }
    if (n > 0) {
        if (inst.n > 0 && inst.n != n) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument,
                                "n = " + std::to_string(n) + " contradicts the instance's n = " +
                                    std::to_string(inst.n));
        }
        return n;
    }
    if (inst.n > 0) return inst.n;
    throw conemm::Error(conemm::ErrorCode::invalid_argument,
                        "dimension n is neither in the instance nor supplied");
}

}  // namespace

conemm_status conemm_instance_parse(const char* json_text, conemm_instance** out) {
    return guarded([&]() -> conemm_status {
        if (json_text == nullptr || out == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null argument");
        }
        nlohmann::json doc = conemm::parse_json_text(json_text);
        auto* handle = new conemm_instance{conemm::instance_from_json(doc)};
        *out = handle;
        return CONEMM_OK;
    });
}

char* conemm_instance_dump(const conemm_instance* inst) {
    if (inst == nullptr) return nullptr;
    try {
        return dup_text(conemm::dump_stable(conemm::instance_to_json(inst->inst)));
    } catch (...) {
        return nullptr;
    }
}

void conemm_instance_free(conemm_instance* inst) {
    delete inst;
}

int conemm_instance_n(const conemm_instance* inst) { return inst == nullptr ? 0 : inst->inst.n; }
int conemm_instance_r(const conemm_instance* inst) { return inst == nullptr ? 0 : inst->inst.r; }
int conemm_instance_q(const conemm_instance* inst) { return inst == nullptr ? 0 : inst->inst.q; }

conemm_status conemm_check(const conemm_instance* inst, int n, int cohen_macaulay, char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null instance");
        }
        const int dim = resolve_n(inst->inst, n);
        conemm::ValidationReport validation = conemm::validate_instance(inst->inst);
        nlohmann::json doc;
        doc["validation"] = conemm::validation_to_json(validation);
        bool pass = validation.ok();
        if (validation.ok()) {
            conemm::SupportReport support = conemm::check_support_condition(inst->inst);
            doc["support_condition"] = conemm::support_to_json(support);
            doc["genericity"] = conemm::genericity_to_json(conemm::check_genericity(inst->inst.coeffs));
            pass = support.pass;
        }
        doc["thresholds"] = conemm::thresholds_to_json(
            conemm::threshold_check(dim, inst->inst.r, inst->inst.q, cohen_macaulay != 0));
        doc["pass"] = pass;
        emit(out_json, doc);
        if (!pass) {
            g_last_error = "hypothesis check failed";
            return CONEMM_FAIL;
        }
        return CONEMM_OK;
    });
}

conemm_status conemm_solve(const conemm_instance* inst, uint64_t seed, const char* kappa,
                           long max_iterations, char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null instance");
        }
        conemm::BalanceConfig config;
        config.max_iterations = max_iterations;
        conemm::SolveResult result =
            conemm::solve_minimax(inst->inst, seed, parse_kappa(kappa), config);
        emit(out_json, conemm::solve_to_json(result));
        return CONEMM_OK;
    });
}

conemm_status conemm_certify(const conemm_instance* inst, int n, uint64_t seed, const char* kappa,
                             long max_iterations, char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null instance");
        }
        conemm::BalanceConfig config;
        config.max_iterations = max_iterations;
        conemm::Certificate cert = conemm::build_certificate(
            inst->inst, resolve_n(inst->inst, n), seed, parse_kappa(kappa), 16, config);
        emit(out_json, conemm::certificate_to_json(cert));
        return CONEMM_OK;
    });
}

conemm_status conemm_verify(const conemm_instance* inst, int n, const char* certificate_json,
                            char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr || certificate_json == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null argument");
        }
        conemm::CertificateData data =
            conemm::certificate_data_from_json(conemm::parse_json_text(certificate_json));
        conemm::VerifyResult result =
            conemm::verify_certificate(inst->inst, resolve_n(inst->inst, n), data);
        emit(out_json, conemm::verify_to_json(result));
        if (!result.pass) {
            g_last_error = "certificate verification failed at inequality " + result.inequality;
            return CONEMM_FAIL;
        }
        return CONEMM_OK;
    });
}

conemm_status conemm_partition(const conemm_instance* inst, char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null instance");
        }
        conemm::Partition partition = conemm::build_partition(inst->inst);
        emit(out_json, conemm::partition_to_json(partition));
        return CONEMM_OK;
    });
}

conemm_status conemm_regroup(const conemm_instance* inst, int n, char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null instance");
        }
        conemm::RegroupResult result = conemm::ample_regroup(inst->inst, resolve_n(inst->inst, n));
        emit(out_json, conemm::regroup_to_json(result));
        return CONEMM_OK;
    });
}

conemm_status conemm_oracle_minimax(const conemm_instance* inst, int denominator_bound,
                                    char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null instance");
        }
        conemm::OracleCountsResult result =
            conemm::oracle_best_counts(inst->inst.coeffs, denominator_bound);
        nlohmann::json doc{{"best_sorted_counts", result.best_sorted}, {"witness_b", nlohmann::json::array()}};
        for (const conemm::Rational& b : result.witness.b) doc["witness_b"].push_back(b.str());
        emit(out_json, doc);
        return CONEMM_OK;
    });
}

conemm_status conemm_oracle_partition(const conemm_instance* inst, char** out_json) {
    return guarded([&]() -> conemm_status {
        if (inst == nullptr) {
            throw conemm::Error(conemm::ErrorCode::invalid_argument, "null instance");
        }
        conemm::PartitionOracleResult result = conemm::oracle_partition(inst->inst);
        nlohmann::json doc{{"exists", result.exists}};
        doc["blocks"] = result.exists ? conemm::partition_to_json(result.witness).at("blocks")
                                      : nlohmann::json(nullptr);
        emit(out_json, doc);
        return CONEMM_OK;
    });
}

conemm_status conemm_threshold_check(int n, int r, long q, int cohen_macaulay, char** out_json) {
    return guarded([&]() -> conemm_status {
        emit(out_json,
             conemm::thresholds_to_json(conemm::threshold_check(n, r, q, cohen_macaulay != 0)));
        return CONEMM_OK;
    });
}

conemm_status conemm_gen_conjbex(int n, int s, char** out_json) {
    return guarded([&]() -> conemm_status {
        emit(out_json, conemm::instance_to_json(conemm::gen_conjbex(n, s)));
        return CONEMM_OK;
    });
}

conemm_status conemm_gen_conjaex(int n, int r, char** out_json) {
    return guarded([&]() -> conemm_status {
        emit(out_json, conemm::instance_to_json(conemm::gen_conjaex(n, r)));
        return CONEMM_OK;
    });
}

conemm_status conemm_gen_appex(int n, uint64_t seed, char** out_json) {
    return guarded([&]() -> conemm_status {
        emit(out_json, conemm::instance_to_json(conemm::gen_appex(n, seed)));
        return CONEMM_OK;
    });
}

conemm_status conemm_gen_random(int n, int r, int q, uint64_t seed, const char* bound,
                                char** out_json) {
    return guarded([&]() -> conemm_status {
        conemm::Rational b = bound == nullptr ? conemm::Rational(4) : conemm::Rational::parse(bound);
        emit(out_json, conemm::instance_to_json(conemm::gen_random(n, r, q, seed, b)));
        return CONEMM_OK;
    });
}

void conemm_free(char* text) {
    std::free(text);
}

const char* conemm_last_error(void) {
    return g_last_error.c_str();
}

const char* conemm_version(void) {
    return "0.1.0";
}
