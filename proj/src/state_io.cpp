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
#include "wwit/state_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "wwit/families.hpp"

namespace wwit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &field, const std::string &what) {
    throw InputError(field + ": " + what);
}

const json &require_field(const json &obj, const std::string &key,
                          const std::string &path) {
    if (!obj.is_object()) {
        fail(path, "expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(path.empty() ? key : path + "." + key, "missing field");
    }
    return *it;
}

double as_real(const json &v, const std::string &field) {
    if (!v.is_number()) {
        fail(field, "expected a number");
    }
    return v.get<double>();
}

int as_int(const json &v, const std::string &field) {
    if (!v.is_number_integer()) {
        fail(field, "expected an integer");
    }
    return v.get<int>();
}

Complex as_complex(const json &v, const std::string &field) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    fail(field, "expected [re, im] or a number");
}

ComplexVector as_amplitudes(const json &v, const std::string &field) {
    if (!v.is_array()) {
        fail(field, "expected an array");
    }
    ComplexVector out(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[static_cast<Eigen::Index>(i)] =
            as_complex(v[i], field + "[" + std::to_string(i) + "]");
    }
    return out;
}

// Re-throws InputError from a constructor with the field path attached.
template <class Fn>
auto with_field(const std::string &field, Fn &&fn) {
    try {
        return fn();
    } catch (const InputError &e) {
        std::string what = e.what();
        const std::string leaf = field.substr(field.find_last_of('.') + 1) + ": ";
        if (what.rfind(leaf, 0) == 0) {
            what.erase(0, leaf.size());
        }
        fail(field, what);
    }
}

int family_n(const json &params, std::optional<int> default_n) {
    if (params.contains("n")) {
        return as_int(params["n"], "params.n");
    }
    if (default_n) {
        return *default_n;
    }
    fail("params.n", "missing field (and no --n given)");
}

} // namespace

int StateDocument::n_qubits() const {
    return std::visit([](const auto &s) { return s.n_qubits(); }, state);
}

const PureState &StateDocument::pure() const {
    if (const auto *p = std::get_if<PureState>(&state)) {
        return *p;
    }
    throw InputError("state: this command needs a pure state, got '" + source + "'");
}

StateDocument state_from_family(const std::string &name, const json &params,
                                std::optional<int> default_n) {
    if (!params.is_object()) {
        fail("params", "expected an object");
    }
    if (name == "w") {
        const int n = family_n(params, default_n);
        return {with_field("params.n", [&] { return make_w_state(n); }), name};
    }
    if (name == "ghz") {
        const int n = family_n(params, default_n);
        return {with_field("params.n", [&] { return make_ghz_state(n); }), name};
    }
    if (name == "acin") {
        const json &l = require_field(params, "lambda", "params");
        if (!l.is_array() || l.size() != 5) {
            fail("params.lambda", "expected 5 numbers");
        }
        std::array<double, 5> lambda{};
        for (std::size_t i = 0; i < 5; ++i) {
            lambda[i] = as_real(l[i], "params.lambda[" + std::to_string(i) + "]");
        }
        const double theta =
            params.contains("theta") ? as_real(params["theta"], "params.theta") : 0.0;
        return {with_field("params", [&] { return make_acin_state(lambda, theta); }),
                name};
    }
    if (name == "symmetric_product") {
        const Complex a = as_complex(require_field(params, "a", "params"), "params.a");
        const Complex b = as_complex(require_field(params, "b", "params"), "params.b");
        const int n = family_n(params, default_n);
        return {with_field("params", [&] { return make_symmetric_product(a, b, n); }),
                name};
    }
    if (name == "w_ghz_mix" || name == "w_white_noise") {
        const int n = family_n(params, default_n);
        const double p = as_real(require_field(params, "p", "params"), "params.p");
        return {with_field("params",
                           [&] { return realize(FamilySpec{parse_family(name), n, p}); }),
                name};
    }
    fail("name", "unknown family '" + name + "'");
}

StateDocument parse_state_document(const json &doc, std::optional<int> default_n) {
    const json &kind_v = require_field(doc, "kind", "");
    if (!kind_v.is_string()) {
        fail("kind", "expected a string");
    }
    const auto kind = kind_v.get<std::string>();

    if (kind == "family") {
        const json &name = require_field(doc, "name", "");
        if (!name.is_string()) {
            fail("name", "expected a string");
        }
        const json params = doc.contains("params") ? doc["params"] : json::object();
        return state_from_family(name.get<std::string>(), params, default_n);
    }

    if (kind != "pure" && kind != "ensemble" && kind != "dense") {
        fail("kind", "unknown kind '" + kind + "'");
    }
    const int n = as_int(require_field(doc, "n_qubits", ""), "n_qubits");
    with_field("n_qubits", [&] {
        require_qubit_count(n);
        return 0;
    });

    if (kind == "pure") {
        ComplexVector amps = as_amplitudes(require_field(doc, "amplitudes", ""), "amplitudes");
        return {with_field("amplitudes",
                           [&] { return PureState::from_amplitudes(n, std::move(amps)); }),
                kind};
    }
    if (kind == "ensemble") {
        const json &terms_v = require_field(doc, "terms", "");
        if (!terms_v.is_array()) {
            fail("terms", "expected an array");
        }
        std::vector<EnsembleTerm> terms;
        for (std::size_t i = 0; i < terms_v.size(); ++i) {
            const std::string path = "terms[" + std::to_string(i) + "]";
            const double w = as_real(require_field(terms_v[i], "weight", path), path + ".weight");
            ComplexVector amps =
                as_amplitudes(require_field(terms_v[i], "amplitudes", path), path + ".amplitudes");
            terms.push_back({w, with_field(path + ".amplitudes", [&] {
                                 return PureState::from_amplitudes(n, std::move(amps));
                             })});
        }
        return {with_field("terms",
                           [&] { return StateEnsemble::from_terms(std::move(terms)); }),
                kind};
    }
    // kind == "dense"
    const json &rows = require_field(doc, "matrix", "");
    if (!rows.is_array() || rows.empty()) {
        fail("matrix", "expected a nonempty array of rows");
    }
    const auto dim = static_cast<Eigen::Index>(rows.size());
    if (dim > static_cast<Eigen::Index>(kMaxDenseDim)) {
        fail("matrix", "dense input is capped at dimension 1024");
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const std::string path = "matrix[" + std::to_string(i) + "]";
        const ComplexVector row = as_amplitudes(rows[static_cast<std::size_t>(i)], path);
        if (row.size() != dim) {
            fail(path, "row length differs from the number of rows");
        }
        m.row(i) = row.transpose();
    }
    return {with_field("matrix",
                       [&] { return DenseDensity::from_matrix(n, std::move(m)); }),
            kind};
}

StateDocument load_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        fail("state", "cannot open '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        fail("state", std::string("invalid JSON: ") + e.what());
    }
    return parse_state_document(doc);
}

double evaluate(const WitnessSpec &w, const StateDocument &doc) {
    return std::visit([&](const auto &s) { return expectation(w, s); }, doc.state);
}

json to_json(const PureState &s) {
    json amps = json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        amps.push_back({s[i].real(), s[i].imag()});
    }
    return {{"kind", "pure"}, {"n_qubits", s.n_qubits()}, {"amplitudes", amps}};
}

json to_json(const StateEnsemble &e) {
    json terms = json::array();
    for (const auto &t : e.terms()) {
        terms.push_back({{"weight", t.weight}, {"amplitudes", to_json(t.state)["amplitudes"]}});
    }
    return {{"kind", "ensemble"}, {"n_qubits", e.n_qubits()}, {"terms", terms}};
}

} // namespace wwit
