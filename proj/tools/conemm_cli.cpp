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

// Command-line front end. Talks to the library exclusively through the
// C API; all verdicts and payloads are JSON on stdout, diagnostics go to
// stderr. Exit codes: 0 pass, 1 checked failure, 2 usage or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "conemm.h"

namespace {

int exit_code_for(conemm_status status) {
    switch (status) {
        case CONEMM_OK: return 0;
        case CONEMM_FAIL: return 1;
        case CONEMM_ERR_BUDGET: return 1;
        default: return 2;
    }
}

void report_error(conemm_status status) {
    const char* message = conemm_last_error();
    if (message != nullptr && message[0] != '\0') {
        std::cerr << "conemm: " << message << "\n";
    } else {
        std::cerr << "conemm: failed with status " << static_cast<int>(status) << "\n";
    }
}

int finish(conemm_status status, char* payload) {
    if (payload != nullptr) {
        std::cout << payload;
        conemm_free(payload);
    }
    if (status != CONEMM_OK) report_error(status);
    return exit_code_for(status);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct InstanceHandle {
    conemm_instance* ptr = nullptr;

    ~InstanceHandle() { conemm_instance_free(ptr); }
};

/// Parses the instance document; exits with code 2 on malformed input.
int load_instance(const std::string& path, InstanceHandle& handle) {
    std::string text;
    try {
        text = read_input(path);
    } catch (const std::exception& e) {
        std::cerr << "conemm: " << e.what() << "\n";
        return 2;
    }
    conemm_status status = conemm_instance_parse(text.c_str(), &handle.ptr);
    if (status != CONEMM_OK) {
        report_error(status);
        return exit_code_for(status) == 0 ? 2 : exit_code_for(status);
    }
    return 0;
}

long max_iterations_from_env() {
    const char* env = std::getenv("CONE_MINIMAX_MAX_ITERS");
    if (env == nullptr || env[0] == '\0') return 0;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || value < 0) {
        throw std::runtime_error("invalid CONE_MINIMAX_MAX_ITERS value");
    }
    return value;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-rational hypothesis checks, minimax weights, certificates and partitions "
                 "for divisor classes in nef-generator coordinates"};
    app.require_subcommand(1);

    std::string inst_path = "-";
    std::string cert_path;
    int n = 0;
    bool cohen_macaulay = false;
    std::uint64_t seed = 0;
    std::string kappa;
    std::string family;
    int gen_s = 1, gen_r = 0, gen_q = 0;
    std::string bound = "4";
    int denominator_bound = 8;
    std::string oracle_kind;

    CLI::App* check = app.add_subcommand("check", "hypothesis and threshold report");
    check->add_option("instance", inst_path, "instance JSON file, or - for stdin");
    check->add_option("--n", n, "dimension (must match the instance's n when both are present)");
    check->add_flag("--cm", cohen_macaulay, "assume the Cohen-Macaulay hypothesis");

    CLI::App* solve = app.add_subcommand("solve", "lexicographical-minimax weights and counts");
    solve->add_option("instance", inst_path, "instance JSON file, or - for stdin");
    solve->add_option("--seed", seed, "deterministic seed");
    solve->add_option("--kappa", kappa, "perturbation scale as p/q in (0,1], default 1/16");

    CLI::App* certify = app.add_subcommand("certify", "build the (A, c, delta) certificate");
    certify->add_option("instance", inst_path, "instance JSON file, or - for stdin");
    certify->add_option("--n", n, "dimension");
    certify->add_option("--seed", seed, "deterministic seed");
    certify->add_option("--kappa", kappa, "initial perturbation scale, default 1/16");

    CLI::App* verify = app.add_subcommand("verify", "verify a certificate against an instance");
    verify->add_option("instance", inst_path, "instance JSON file, or - for stdin")->required();
    verify->add_option("certificate", cert_path, "certificate JSON file")->required();
    verify->add_option("--n", n, "dimension");

    CLI::App* partition = app.add_subcommand("partition", "positive partition into floor(q/r) blocks");
    partition->add_option("instance", inst_path, "instance JSON file, or - for stdin");

    CLI::App* gen = app.add_subcommand("gen", "emit a generated instance");
    gen->add_option("--family", family, "conjbex | conjaex | appex | random")->required();
    gen->add_option("--n", n, "dimension")->required();
    gen->add_option("--s", gen_s, "conjbex parameter s >= 1");
    gen->add_option("--r", gen_r, "generator count (conjaex, random)");
    gen->add_option("--q", gen_q, "row count (random)");
    gen->add_option("--seed", seed, "deterministic seed (appex, random)");
    gen->add_option("--bound", bound, "entry bound for random, default 4");

    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive small-case oracles");
    oracle->add_option("kind", oracle_kind, "minimax | partition")->required();
    oracle->add_option("instance", inst_path, "instance JSON file, or - for stdin");
    oracle->add_option("--denominator-bound", denominator_bound, "weight grid denominator cap (minimax)");

    CLI11_PARSE(app, argc, argv);

    long max_iterations = 0;
    try {
        max_iterations = max_iterations_from_env();
    } catch (const std::exception& e) {
        std::cerr << "conemm: " << e.what() << "\n";
        return 2;
    }
    const char* kappa_arg = kappa.empty() ? nullptr : kappa.c_str();
    char* payload = nullptr;

    if (gen->parsed()) {
        conemm_status status = CONEMM_ERR_ARGUMENT;
        if (family == "conjbex") {
            status = conemm_gen_conjbex(n, gen_s, &payload);
        } else if (family == "conjaex") {
            status = conemm_gen_conjaex(n, gen_r, &payload);
        } else if (family == "appex") {
            status = conemm_gen_appex(n, seed, &payload);
        } else if (family == "random") {
            status = conemm_gen_random(n, gen_r, gen_q, seed, bound.c_str(), &payload);
        } else {
            std::cerr << "conemm: unknown family '" << family << "'\n";
            return 2;
        }
        return finish(status, payload);
    }

    InstanceHandle inst;
    if (int rc = load_instance(inst_path, inst); rc != 0) return rc;

    if (check->parsed()) {
        conemm_status status = conemm_check(inst.ptr, n, cohen_macaulay ? 1 : 0, &payload);
        return finish(status, payload);
    }
    if (solve->parsed()) {
        conemm_status status = conemm_solve(inst.ptr, seed, kappa_arg, max_iterations, &payload);
        return finish(status, payload);
    }
    if (certify->parsed()) {
        conemm_status status = conemm_certify(inst.ptr, n, seed, kappa_arg, max_iterations, &payload);
        return finish(status, payload);
    }
    if (verify->parsed()) {
        std::string cert_text;
        try {
            cert_text = read_input(cert_path);
        } catch (const std::exception& e) {
            std::cerr << "conemm: " << e.what() << "\n";
            return 2;
        }
        conemm_status status = conemm_verify(inst.ptr, n, cert_text.c_str(), &payload);
        return finish(status, payload);
    }
    if (partition->parsed()) {
        conemm_status status = conemm_partition(inst.ptr, &payload);
        return finish(status, payload);
    }
    if (oracle->parsed()) {
        if (oracle_kind == "minimax") {
            conemm_status status = conemm_oracle_minimax(inst.ptr, denominator_bound, &payload);
            return finish(status, payload);
        }
        if (oracle_kind == "partition") {
            conemm_status status = conemm_oracle_partition(inst.ptr, &payload);
            return finish(status, payload);
        }
        std::cerr << "conemm: unknown oracle '" << oracle_kind << "'\n";
        return 2;
    }
    std::cerr << "conemm: no subcommand\n";
    return 2;
}
