// Copyright 2026 The wwit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <string>

#include "wwit/state_io.hpp"

using namespace wwit;
using nlohmann::json;

namespace {

// Runs `fn`, expecting an InputError whose message starts with `field`.
template <class Fn>
void expect_field_error(Fn &&fn, const std::string &field) {
    try {
        fn();
        ADD_FAILURE() << "no error for " << field;
    } catch (const InputError &e) {
        EXPECT_EQ(std::string(e.what()).rfind(field, 0), 0U) << e.what();
    }
}

} // namespace

TEST(StateIo, PureDocument) {
    const auto doc = parse_state_document(json::parse(
        R"({"kind":"pure","n_qubits":2,"amplitudes":[[0,0],[0.6,0],[0,0.8],0]})"));
    ASSERT_TRUE(doc.is_pure());
    EXPECT_EQ(doc.source, "pure");
    EXPECT_EQ(doc.n_qubits(), 2);
    EXPECT_EQ(doc.pure()[2], Complex(0.0, 0.8));
}

TEST(StateIo, PureRoundTrip) {
    const PureState w = make_w_state(4);
    const auto doc = parse_state_document(to_json(w));
    EXPECT_EQ(doc.pure().amplitudes(), w.amplitudes());
}

TEST(StateIo, EnsembleRoundTrip) {
    const StateEnsemble e =
        StateEnsemble::from_terms({{0.25, make_w_state(3)}, {0.75, make_ghz_state(3)}});
    const auto doc = parse_state_document(to_json(e));
    EXPECT_FALSE(doc.is_pure());
    const WitnessSpec w = build_witness(3);
    EXPECT_NEAR(evaluate(w, doc), expectation(w, e), 1e-15);
}

TEST(StateIo, DenseDocument) {
    const json doc = json::parse(R"({"kind":"dense","n_qubits":1,
        "matrix":[[0.5,0],[0,0.5]]})");
    expect_field_error([&] { (void)parse_state_document(doc); }, "n_qubits");

    json two = json::object();
    two["kind"] = "dense";
    two["n_qubits"] = 2;
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) {
            row.push_back(i == j ? 0.25 : 0.0);
        }
        rows.push_back(row);
    }
    two["matrix"] = rows;
    const auto parsed = parse_state_document(two);
    EXPECT_EQ(parsed.source, "dense");
    // Maximally mixed: <W|rho|W> = 1/4, trace = 1/2 - 1/4.
    EXPECT_NEAR(evaluate(build_witness(2), parsed), 0.25, 1e-15);

    two["matrix"][0][1] = json::array({0.0, 0.1});
    expect_field_error([&] { (void)parse_state_document(two); }, "matrix");
}

TEST(StateIo, Families) {
    const auto w = parse_state_document(json::parse(R"({"kind":"family","name":"w","params":{"n":5}})"));
    EXPECT_EQ(w.pure().amplitudes(), make_w_state(5).amplitudes());

    const auto ghz = state_from_family("ghz", json::object(), 4);
    EXPECT_EQ(ghz.n_qubits(), 4);

    const auto acin = state_from_family(
        "acin", json::parse(R"({"lambda":[0.6,0.8,0,0,0],"theta":0})"));
    EXPECT_EQ(acin.n_qubits(), 3);

    const auto sp = state_from_family("symmetric_product",
                                      json::parse(R"({"a":[0.6,0],"b":0.8,"n":3})"));
    EXPECT_NEAR(std::abs(sp.pure()[7]), 0.512, 1e-15);

    const auto mix = state_from_family("w_white_noise", json::parse(R"({"n":3,"p":0.5})"));
    EXPECT_NEAR(evaluate(build_witness(3), mix), 4.0 / 9.0 - 0.5 - 0.5 / 8.0, 1e-15);
}

TEST(StateIo, ErrorsNameTheField) {
    expect_field_error([] { (void)parse_state_document(json::parse(R"({"n_qubits":2})")); },
                       "kind");
    expect_field_error(
        [] { (void)parse_state_document(json::parse(R"({"kind":"pure","n_qubits":2})")); },
        "amplitudes");
    expect_field_error(
        [] {
            (void)parse_state_document(
                json::parse(R"({"kind":"pure","n_qubits":2,"amplitudes":[1,0,0,"x"]})"));
        },
        "amplitudes[3]");
    expect_field_error(
        [] {
            (void)parse_state_document(
                json::parse(R"({"kind":"pure","n_qubits":2,"amplitudes":[1,1,0,0]})"));
        },
        "amplitudes");
    expect_field_error(
        [] {
            (void)parse_state_document(json::parse(
                R"({"kind":"ensemble","n_qubits":1,"terms":[{"weight":1,"amplitudes":[1,0]}]})"));
        },
        "n_qubits");
    expect_field_error(
        [] {
            (void)parse_state_document(json::parse(
                R"({"kind":"ensemble","n_qubits":2,"terms":[{"weight":0.5,"amplitudes":[1,0,0,0]}]})"));
        },
        "terms");
    expect_field_error(
        [] {
            (void)parse_state_document(json::parse(
                R"({"kind":"ensemble","n_qubits":2,"terms":[{"amplitudes":[1,0,0,0]}]})"));
        },
        "terms[0].weight");
    expect_field_error([] { (void)state_from_family("w", json::object()); }, "params.n");
    expect_field_error([] { (void)state_from_family("w", json::parse(R"({"n":40})")); },
                       "params.n");
    expect_field_error(
        [] { (void)state_from_family("acin", json::parse(R"({"lambda":[1,0]})")); },
        "params.lambda");
    expect_field_error(
        [] { (void)state_from_family("w_ghz_mix", json::parse(R"({"n":3,"p":2})")); },
        "params");
    expect_field_error([] { (void)state_from_family("cluster", json::object()); }, "name");
    expect_field_error([] { (void)parse_state_document(json::parse(R"({"kind":"mystery"})")); },
                       "kind");
}

TEST(StateIo, PureAccessorRejectsMixedState) {
    const auto mix = state_from_family("w_ghz_mix", json::parse(R"({"n":3,"p":0.5})"));
    expect_field_error([&] { (void)mix.pure(); }, "state");
}

TEST(StateIo, TangentPlaneFile) {
    const auto doc = load_state_file(std::string(WWIT_TEST_DATA_DIR) + "/tangent_plane.json");
    EXPECT_EQ(doc.n_qubits(), 3);
    const WitnessSpec w = build_custom_witness(make_w_state(3), 2.0 / 3.0);
    EXPECT_NEAR(evaluate(w, doc), 0.0, 1e-12);
}

TEST(StateIo, MissingFileAndBadJson) {
    expect_field_error([] { (void)load_state_file("/nonexistent/state.json"); }, "state");
    expect_field_error(
        [] { (void)load_state_file(std::string(WWIT_TEST_DATA_DIR) + "/../CMakeLists.txt"); },
        "state");
}
