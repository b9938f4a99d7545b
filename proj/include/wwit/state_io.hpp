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
/**
 * @file
 * JSON state documents.
 *
 *   {"kind":"pure","n_qubits":N,"amplitudes":[[re,im], ...]}
 *   {"kind":"ensemble","n_qubits":N,"terms":[{"weight":w,"amplitudes":[...]}, ...]}
 *   {"kind":"dense","n_qubits":N,"matrix":[[[re,im], ...], ...]}
 *   {"kind":"family","name":NAME,"params":{...}}
 *
 * Family names and params:
 *   w, ghz                 {"n"}
 *   acin                   {"lambda":[l0..l4], "theta"}
 *   symmetric_product      {"a", "b", "n"}   (complex as [re,im] or a number)
 *   w_ghz_mix, w_white_noise {"n", "p"}
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "wwit/states.hpp"
#include "wwit/witness.hpp"

namespace wwit {

struct StateDocument {
    std::variant<PureState, StateEnsemble, DenseDensity> state;
    /// "pure", "ensemble", "dense" or the family name.
    std::string source;

    [[nodiscard]] int n_qubits() const;
    [[nodiscard]] bool is_pure() const {
        return std::holds_alternative<PureState>(state);
    }
    /// Throws InputError naming the kind if the document is not a pure state.
    [[nodiscard]] const PureState &pure() const;
};

/// `default_n` fills in a family's "n" when the params omit it.
[[nodiscard]] StateDocument parse_state_document(const nlohmann::json &doc,
                                                 std::optional<int> default_n = {});
[[nodiscard]] StateDocument load_state_file(const std::filesystem::path &path);
[[nodiscard]] StateDocument state_from_family(const std::string &name,
                                              const nlohmann::json &params,
                                              std::optional<int> default_n = {});

/// Tr(W rho) for whichever representation the document holds.
[[nodiscard]] double evaluate(const WitnessSpec &w, const StateDocument &doc);

[[nodiscard]] nlohmann::json to_json(const PureState &s);
[[nodiscard]] nlohmann::json to_json(const StateEnsemble &e);

} // namespace wwit
