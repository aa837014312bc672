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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/certificate.hpp"
#include "core/generators.hpp"
#include "core/json_io.hpp"

using namespace conemm;
using nlohmann::json;

TEST_CASE("instance documents round-trip") {
    const std::string text = R"({"n": 1, "r": 2, "q": 3,
        "coeffs": [["1", "0"], ["0", "2/4"], ["7", "1/3"]]})";
    Instance inst = instance_from_json(parse_json_text(text));
    CHECK(inst.n == 1);
    CHECK(inst.q == 3);
    CHECK(inst.coeffs.at(1, 1) == Rational(1, 2));
    CHECK(inst.coeffs.at(2, 1) == Rational(1, 3));

    json out = instance_to_json(inst);
    Instance again = instance_from_json(out);
    CHECK(again.coeffs == inst.coeffs);
    CHECK(out.at("coeffs").at(1).at(1).get<std::string>() == "1/2");
}

TEST_CASE("integers are accepted, floats are not") {
    const std::string with_ints = R"({"r": 2, "q": 1, "coeffs": [[1, 2]]})";
    Instance inst = instance_from_json(parse_json_text(with_ints));
    CHECK(inst.n == 0);
    CHECK(inst.coeffs.at(0, 1) == Rational(2));

    const std::string with_float = R"({"r": 2, "q": 1, "coeffs": [[1.5, 2]]})";
    CHECK_THROWS_WITH_AS(instance_from_json(parse_json_text(with_float)),
                         doctest::Contains("rationals only"), Error);

    const std::string with_float_string = R"({"r": 2, "q": 1, "coeffs": [["1.5", "2"]]})";
    CHECK_THROWS_WITH_AS(instance_from_json(parse_json_text(with_float_string)),
                         doctest::Contains("rationals only"), Error);
}

TEST_CASE("schema violations are parse errors") {
    CHECK_THROWS_AS(instance_from_json(parse_json_text(R"({"r": 2, "q": 2, "coeffs": [["1","0"]]})")), Error);
    CHECK_THROWS_AS(instance_from_json(parse_json_text(R"({"r": 0, "q": 1, "coeffs": [[]]})")), Error);
    CHECK_THROWS_AS(instance_from_json(parse_json_text(R"({"q": 1, "coeffs": [["1"]]})")), Error);
    CHECK_THROWS_AS(instance_from_json(parse_json_text(R"({"n": -1, "r": 1, "q": 1, "coeffs": [["1"]]})")), Error);
    CHECK_THROWS_AS(instance_from_json(parse_json_text(R"({"r": 1, "q": 1, "coeffs": [["1/0"]]})")), Error);
    CHECK_THROWS_AS(parse_json_text("{"), Error);
}

TEST_CASE("negative entries parse but fail validation") {
    Instance inst = instance_from_json(
        parse_json_text(R"({"r": 2, "q": 1, "coeffs": [["-1/2", "1"]]})"));
    ValidationReport report = validate_instance(inst);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().find("negative entry") != std::string::npos);
}

TEST_CASE("certificate documents carry the schema fields") {
    Certificate cert = build_certificate(gen_conjbex(2, 2), 2, 5);
    json doc = certificate_to_json(cert);
    CHECK(doc.contains("b"));
    CHECK(doc.contains("c"));
    CHECK(doc.contains("delta"));
    CHECK(doc.contains("kappa"));
    CHECK(doc.contains("seed"));

    CertificateData data = certificate_data_from_json(doc);
    CHECK(data.b == cert.data.b);
    CHECK(data.c == cert.data.c);
    CHECK(data.delta == cert.data.delta);

    CHECK_THROWS_AS(certificate_data_from_json(parse_json_text(R"({"b": ["1"]})")), Error);
}

TEST_CASE("partition documents use 1-based indices") {
    Partition p;
    p.blocks = {{0, 2}, {1, 3}};
    json doc = partition_to_json(p);
    CHECK(doc.at("blocks").at(0).at(0).get<int>() == 1);
    CHECK(doc.at("blocks").at(1).at(1).get<int>() == 4);
    Partition back = partition_from_json(doc);
    CHECK(back.blocks == p.blocks);
}

TEST_CASE("stable dumps are deterministic and newline-terminated") {
    json doc{{"zeta", 1}, {"alpha", 2}};
    std::string text = dump_stable(doc);
    CHECK(text.back() == '\n');
    CHECK(text.find("alpha") < text.find("zeta"));  // keys are sorted
    CHECK(text == dump_stable(doc));
}
