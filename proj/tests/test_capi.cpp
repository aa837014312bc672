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

// Exercises the shared-library surface exactly as an external consumer
// would: JSON text in, JSON text out, no internal headers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "conemm.h"

using nlohmann::json;

namespace {

struct Text {
    char* ptr = nullptr;

    ~Text() { conemm_free(ptr); }

    json parsed() const { return json::parse(std::string(ptr)); }
};

struct Handle {
    conemm_instance* ptr = nullptr;

    ~Handle() { conemm_instance_free(ptr); }
};

constexpr const char* kFiveRows = R"({
  "n": 1, "r": 2, "q": 5,
  "coeffs": [["1","0"],["0","1"],["1","1"],["2","1"],["1","2"]]
})";

}  // namespace

TEST_CASE("parse, inspect and dump an instance") {
    Handle inst;
    REQUIRE(conemm_instance_parse(kFiveRows, &inst.ptr) == CONEMM_OK);
    CHECK(conemm_instance_n(inst.ptr) == 1);
    CHECK(conemm_instance_r(inst.ptr) == 2);
    CHECK(conemm_instance_q(inst.ptr) == 5);

    char* dumped = conemm_instance_dump(inst.ptr);
    REQUIRE(dumped != nullptr);
    json doc = json::parse(std::string(dumped));
    CHECK(doc.at("q") == 5);
    CHECK(doc.at("coeffs").at(3).at(0) == "2");
    conemm_free(dumped);
}

TEST_CASE("malformed input reports a parse error") {
    Handle inst;
    CHECK(conemm_instance_parse("{\"r\": 1}", &inst.ptr) == CONEMM_ERR_PARSE);
    CHECK(std::string(conemm_last_error()).size() > 0);
    CHECK(conemm_instance_parse("{\"r\":1,\"q\":1,\"coeffs\":[[0.5]]}", &inst.ptr) == CONEMM_ERR_PARSE);
    CHECK(std::string(conemm_last_error()).find("rationals only") != std::string::npos);
}

TEST_CASE("check reports pass and thresholds") {
    Handle inst;
    REQUIRE(conemm_instance_parse(kFiveRows, &inst.ptr) == CONEMM_OK);
    Text report;
    CHECK(conemm_check(inst.ptr, 1, 0, &report.ptr) == CONEMM_OK);
    json doc = report.parsed();
    CHECK(doc.at("pass") == true);
    CHECK(doc.at("support_condition").at("pass") == true);
    CHECK(doc.at("thresholds").at("quasi_hyperbolic_a") == true);  // 5 >= 5
}

TEST_CASE("check flags a support violation with CONEMM_FAIL") {
    Handle inst;
    REQUIRE(conemm_instance_parse(
                R"({"n":1,"r":2,"q":4,"coeffs":[["1","0"],["1","0"],["1","0"],["0","1"]]})",
                &inst.ptr) == CONEMM_OK);
    Text report;
    CHECK(conemm_check(inst.ptr, 1, 0, &report.ptr) == CONEMM_FAIL);
    json doc = report.parsed();
    CHECK(doc.at("pass") == false);
    CHECK(doc.at("support_condition").at("witness_T") == json::array({1}));
    CHECK(doc.at("support_condition").at("count") == 3);
}

TEST_CASE("n mismatch between flag and document is an argument error") {
    Handle inst;
    REQUIRE(conemm_instance_parse(kFiveRows, &inst.ptr) == CONEMM_OK);
    Text report;
    CHECK(conemm_check(inst.ptr, 3, 0, &report.ptr) == CONEMM_ERR_ARGUMENT);
}

TEST_CASE("solve returns weights meeting the count bound") {
    Handle inst;
    REQUIRE(conemm_instance_parse(kFiveRows, &inst.ptr) == CONEMM_OK);
    Text result;
    REQUIRE(conemm_solve(inst.ptr, 7, nullptr, 0, &result.ptr) == CONEMM_OK);
    json doc = result.parsed();
    CHECK(doc.at("b").size() == 2);
    for (const json& c : doc.at("counts_perturbed")) CHECK(c.get<int>() >= 2);
}

TEST_CASE("certify then verify round-trips; tampering flips the verdict") {
    Handle inst;
    REQUIRE(conemm_instance_parse(kFiveRows, &inst.ptr) == CONEMM_OK);
    Text cert;
    REQUIRE(conemm_certify(inst.ptr, 1, 7, nullptr, 0, &cert.ptr) == CONEMM_OK);
    json cert_doc = cert.parsed();
    CHECK(cert_doc.at("b").size() == 2);
    CHECK(cert_doc.at("c").size() == 5);

    Text verdict;
    CHECK(conemm_verify(inst.ptr, 1, cert.ptr, &verdict.ptr) == CONEMM_OK);
    CHECK(verdict.parsed().at("pass") == true);

    // an absurd delta must break inequality (iii)
    json tampered = cert_doc;
    tampered["delta"] = "1000000";
    Text failed;
    CHECK(conemm_verify(inst.ptr, 1, tampered.dump().c_str(), &failed.ptr) == CONEMM_FAIL);
    json fdoc = failed.parsed();
    CHECK(fdoc.at("pass") == false);
    CHECK(fdoc.at("witness").at("inequality") == "iii");
}

TEST_CASE("oracle endpoints and guards") {
    Handle inst;
    REQUIRE(conemm_instance_parse(kFiveRows, &inst.ptr) == CONEMM_OK);
    Text minimax;
    REQUIRE(conemm_oracle_minimax(inst.ptr, 6, &minimax.ptr) == CONEMM_OK);
    CHECK(minimax.parsed().at("best_sorted_counts") == json::array({3, 2}));

    Text partition;
    REQUIRE(conemm_oracle_partition(inst.ptr, &partition.ptr) == CONEMM_OK);
    CHECK(partition.parsed().at("exists") == true);

    Text guarded;
    CHECK(conemm_oracle_minimax(inst.ptr, 64, &guarded.ptr) == CONEMM_ERR_GUARD);
}

TEST_CASE("generators and thresholds through the C surface") {
    Text gen;
    REQUIRE(conemm_gen_conjbex(2, 2, &gen.ptr) == CONEMM_OK);
    json doc = gen.parsed();
    CHECK(doc.at("q") == 12);
    CHECK(doc.at("r") == 3);

    Text thresholds;
    REQUIRE(conemm_threshold_check(2, 3, 21, 0, &thresholds.ptr) == CONEMM_OK);
    CHECK(thresholds.parsed().at("hyperbolic_b") == true);

    Text bad;
    CHECK(conemm_gen_conjaex(2, 3, &bad.ptr) == CONEMM_ERR_ARGUMENT);
}

TEST_CASE("partition and regroup endpoints") {
    Handle inst;
    REQUIRE(conemm_instance_parse(
                R"({"n":1,"r":2,"q":4,"coeffs":[["1","0"],["1","0"],["0","1"],["1","1"]]})",
                &inst.ptr) == CONEMM_OK);
    Text partition;
    REQUIRE(conemm_partition(inst.ptr, &partition.ptr) == CONEMM_OK);
    CHECK(partition.parsed().at("blocks") == json::array({{1, 3}, {2, 4}}));

    Text regroup;
    REQUIRE(conemm_regroup(inst.ptr, 1, &regroup.ptr) == CONEMM_OK);
    json rdoc = regroup.parsed();
    CHECK(rdoc.at("q_prime") == 2);
    CHECK(rdoc.at("sums").at(0) == json::array({"1", "1"}));
}

TEST_CASE("version string is present") {
    CHECK(std::string(conemm_version()) == "0.1.0");
}
