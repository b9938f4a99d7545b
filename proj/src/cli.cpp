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
#include "wwit/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wwit/bipartition.hpp"
#include "wwit/families.hpp"
#include "wwit/product_optimizer.hpp"
#include "wwit/state_io.hpp"
#include "wwit/witness.hpp"

namespace wwit {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
    std::optional<int> n;
    std::string n_range = "3..6";
    std::uint64_t seed = 0;
    double tol = 1e-12;
    std::string format;
    bool pretty = false;
    std::string out_file;
    int threads = 1;
    bool timing = false;

    std::string state_file;
    std::string family;
    std::string params = "{}";

    std::optional<double> alpha;
    std::string reference_file;

    int restarts = 32;
    int max_sweeps = 500;
    std::string oracle = "none";
    int grid_steps = 60;

    std::vector<int> subset;

    double p_from = 0.0;
    double p_to = 1.0;
    double step = 0.01;

    int trials = 10000;
};

class VerificationFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotConverged : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("state: cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct LoadedState {
    StateDocument doc;
    std::string digest;
    ojson echo;
};

LoadedState load_state(const Options &o) {
    if (!o.state_file.empty() && !o.family.empty()) {
        throw InputError("state: give either --state or --family, not both");
    }
    if (!o.state_file.empty()) {
        const std::string text = read_file(o.state_file);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error &e) {
            throw InputError(std::string("state: invalid JSON: ") + e.what());
        }
        return {parse_state_document(doc, o.n), fnv1a_hex(text), ojson{{"state", o.state_file}}};
    }
    if (o.family.empty()) {
        throw InputError("state: --state FILE or --family NAME is required");
    }
    nlohmann::json params;
    try {
        params = nlohmann::json::parse(o.params);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("params: invalid JSON: ") + e.what());
    }
    if (o.n && params.is_object() && !params.contains("n")) {
        params["n"] = *o.n;
    }
    const std::string canonical = o.family + ":" + params.dump();
    return {state_from_family(o.family, params, o.n), fnv1a_hex(canonical),
            ojson{{"family", o.family}, {"params", ojson::parse(params.dump())}}};
}

ojson report(const std::string &command, ojson params, const std::string &digest,
             const Options &o, ojson result) {
    ojson r;
    r["command"] = command;
    r["params"] = std::move(params);
    r["input_digest"] = digest;
    r["seed"] = o.seed;
    r["result"] = std::move(result);
    return r;
}

std::string resolved_format(const Options &o, const std::string &fallback) {
    if (o.pretty) {
        return "pretty";
    }
    return o.format.empty() ? fallback : o.format;
}

ojson factor_json(const ProductState &p) {
    ojson f = ojson::array();
    for (const auto &q : p.factors) {
        f.push_back({{q[0].real(), q[0].imag()}, {q[1].real(), q[1].imag()}});
    }
    return f;
}

std::string pretty_verdict(const Verdict &v) {
    std::ostringstream os;
    os << std::setprecision(12);
    os << "trace                 " << v.trace << "\n";
    os << "not fully separable   " << (v.not_fully_separable ? "yes" : "no") << "\n";
    for (std::size_t k = 0; k < v.excluded_from_dk.size(); ++k) {
        os << "outside D_" << k + 1 << std::string(k + 1 >= 10 ? 10 : 11, ' ')
           << (v.excluded_from_dk[k] ? "yes" : "no") << "\n";
    }
    os << "genuine entangled     " << (v.genuine_entangled ? "yes" : "no") << "\n";
    os << "margin                " << v.margin << "\n";
    return os.str();
}

std::string cmd_info(const Options &o) {
    if (!o.n) {
        throw InputError("n: --n is required");
    }
    const BoundsTable b = bounds_table(*o.n);
    if (resolved_format(o, "json") == "pretty") {
        std::ostringstream os;
        os << std::setprecision(12);
        os << "n                " << b.n_qubits << "\n";
        os << "c_n              " << b.c << "\n";
        os << "eigenvalues      " << b.c << " (x" << (std::uint64_t{1} << b.n_qubits) - 1
           << "), " << b.c - 1.0 << " (x1)\n";
        os << "any state        [" << b.global_min << ", " << b.global_max << "]\n";
        os << "fully separable  t >= " << b.full_sep_min << "\n";
        for (std::size_t k = 0; k < b.dk_min.size(); ++k) {
            os << "D_" << k + 1 << std::string(k + 1 >= 10 ? 13 : 14, ' ') << "t >= "
               << b.dk_min[k] << "\n";
        }
        return os.str();
    }
    return report("info", {{"n", *o.n}}, fnv1a_hex("info:" + std::to_string(*o.n)), o,
                  to_json(b))
               .dump(2) +
           "\n";
}

std::string cmd_eval(const Options &o) {
    const LoadedState in = load_state(o);
    const int n = in.doc.n_qubits();
    ojson params = in.echo;

    const bool custom = o.alpha.has_value() || !o.reference_file.empty();
    WitnessSpec w = build_witness(n);
    if (custom) {
        PureState ref = make_w_state(n);
        if (!o.reference_file.empty()) {
            ref = load_state_file(o.reference_file).pure();
        }
        w = build_custom_witness(std::move(ref), o.alpha.value_or(witness_coefficient(n)));
        params["alpha"] = w.alpha;
        if (!o.reference_file.empty()) {
            params["reference"] = o.reference_file;
        }
    }
    const double t = evaluate(w, in.doc);

    ojson result;
    result["source"] = in.doc.source;
    result["n_qubits"] = n;
    result["witness"] = {{"reference", w.w_reference ? "w" : "custom"}, {"alpha", w.alpha}};
    std::optional<Verdict> verdict;
    if (custom) {
        result["trace"] = t;
        result["detected"] = t < 0.0;
    } else {
        verdict = classify(t, n);
        result["verdict"] = to_json(*verdict);
    }
    if (resolved_format(o, "json") == "pretty") {
        if (verdict) {
            return pretty_verdict(*verdict);
        }
        std::ostringstream os;
        os << std::setprecision(12) << "trace     " << t << "\n"
           << "detected  " << (t < 0.0 ? "yes" : "no") << "\n";
        return os.str();
    }
    return report("eval", params, in.digest, o, result).dump(2) + "\n";
}

std::string cmd_alpha(const Options &o) {
    const LoadedState in = load_state(o);
    const PureState &target = in.doc.pure();
    OptimizerConfig cfg;
    cfg.restarts = o.restarts;
    cfg.tol = o.tol;
    cfg.max_sweeps = o.max_sweeps;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    const AlphaResult a = closest_product_alpha(target, cfg);

    ojson params = in.echo;
    params["restarts"] = cfg.restarts;
    params["tol"] = cfg.tol;
    params["max_sweeps"] = cfg.max_sweeps;
    params["oracle"] = o.oracle;

    ojson result;
    result["alpha"] = a.alpha;
    result["converged"] = a.converged;
    result["sweeps_used"] = a.sweeps_used;
    result["best_restart"] = a.best_restart;
    result["per_restart_values"] = a.per_restart_values;
    result["argmax"] = factor_json(a.argmax);
    if (o.oracle == "none") {
        result["oracle"] = nullptr;
    } else {
        const GridMode mode = o.oracle == "grid" ? GridMode::Full : GridMode::Symmetric;
        params["grid_steps"] = o.grid_steps;
        const double grid = brute_force_alpha_grid(target, o.grid_steps, mode);
        result["oracle"] = {{"mode", o.oracle},
                            {"grid_steps", o.grid_steps},
                            {"value", grid},
                            {"optimizer_minus_oracle", a.alpha - grid}};
    }

    std::string text;
    if (resolved_format(o, "json") == "pretty") {
        std::ostringstream os;
        os << std::setprecision(15) << "alpha        " << a.alpha << "\n"
           << "converged    " << (a.converged ? "yes" : "no") << "\n"
           << "best restart " << a.best_restart << " (" << a.sweeps_used << " sweeps)\n";
        if (o.oracle != "none") {
            os << "oracle       " << result["oracle"]["value"].get<double>() << "\n";
        }
        text = os.str();
    } else {
        text = report("alpha", params, in.digest, o, result).dump(2) + "\n";
    }
    if (!a.converged) {
        throw NotConverged(text);
    }
    return text;
}

ojson schmidt_entry(const PureState &s, const BipartitionSpec &b, bool is_w, double tol) {
    const double sigma = sigma_max(coefficient_matrix(s, b), tol);
    ojson e;
    e["subset"] = b.subset();
    e["sigma_max"] = sigma;
    if (is_w) {
        const double claim = std::sqrt(double(s.n_qubits() - b.cut_size()) / s.n_qubits());
        e["claim"] = claim;
        e["abs_error"] = std::abs(sigma - claim);
    } else {
        e["claim"] = nullptr;
        e["abs_error"] = nullptr;
    }
    return e;
}

std::string cmd_schmidt(const Options &o) {
    const LoadedState in = load_state(o);
    const PureState &s = in.doc.pure();
    const int n = s.n_qubits();
    const bool is_w = (s.amplitudes() - make_w_state(n).amplitudes()).norm() < 1e-12;
    ojson params = in.echo;
    ojson result;
    if (!o.subset.empty()) {
        params["subset"] = o.subset;
        result = schmidt_entry(s, BipartitionSpec(n, o.subset), is_w, o.tol);
    } else {
        result = ojson::array();
        for (int k = 1; k <= n / 2; ++k) {
            for (const auto &b : bipartitions_of_size(n, k)) {
                result.push_back(schmidt_entry(s, b, is_w, o.tol));
            }
        }
    }
    if (resolved_format(o, "json") == "pretty") {
        std::ostringstream os;
        os << std::setprecision(15);
        const ojson rows = result.is_array() ? result : ojson::array({result});
        for (const auto &e : rows) {
            os << std::left << std::setw(24) << e["subset"].dump() << e["sigma_max"].get<double>();
            if (!e["claim"].is_null()) {
                os << "  claim " << e["claim"].get<double>();
            }
            os << "\n";
        }
        return os.str();
    }
    return report("schmidt", params, in.digest, o, result).dump(2) + "\n";
}

std::string cmd_sweep(const Options &o) {
    if (o.family.empty()) {
        throw InputError("family: --family w_ghz_mix|w_white_noise is required");
    }
    const Family family = parse_family(o.family);
    nlohmann::json params_in;
    try {
        params_in = nlohmann::json::parse(o.params);
    } catch (const nlohmann::json::parse_error &e) {
        throw InputError(std::string("params: invalid JSON: ") + e.what());
    }
    std::optional<int> n = o.n;
    if (params_in.is_object() && params_in.contains("n")) {
        n = params_in["n"].get<int>();
    }
    if (!n) {
        throw InputError("n: --n is required");
    }
    const auto records = sweep(family, *n, o.p_from, o.p_to, o.step, o.threads);
    const std::string format = resolved_format(o, "csv");
    if (format == "csv") {
        return sweep_to_csv(records);
    }
    const ThresholdReport th = thresholds(family, *n);
    ojson params{{"family", o.family}, {"n", *n}, {"from", o.p_from}, {"to", o.p_to},
                 {"step", o.step}};
    if (format == "pretty") {
        std::ostringstream os;
        os << std::setprecision(12) << "p_entangled  " << th.p_entangled << "\n"
           << "p_genuine    " << th.p_genuine << "\n\n"
           << std::left << std::setw(10) << "p" << std::setw(20) << "trace" << "verdict\n";
        for (const auto &r : records) {
            const char *label = r.verdict.genuine_entangled     ? "genuine"
                                : r.verdict.not_fully_separable ? "entangled"
                                                                : "inconclusive";
            os << std::setw(10) << r.p << std::setw(20) << r.trace << label << "\n";
        }
        return os.str();
    }
    ojson result;
    result["family"] = o.family;
    result["n_qubits"] = *n;
    result["thresholds"] = {{"p_entangled", th.p_entangled},
                            {"p_genuine", th.p_genuine},
                            {"p_entangled_bisection", th.p_entangled_bisection},
                            {"p_genuine_bisection", th.p_genuine_bisection}};
    if (const auto note = sweep_note(family, *n)) {
        result["note"] = *note;
    }
    ojson recs = ojson::array();
    for (const auto &r : records) {
        ojson j = to_json(r.verdict);
        recs.push_back({{"p", r.p}, {"verdict", j}});
    }
    result["records"] = recs;
    return report("sweep", params, fnv1a_hex(params.dump()), o, result).dump(2) + "\n";
}

std::pair<int, int> parse_range(const std::string &text) {
    int lo = 0;
    int hi = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d..%d%c", &lo, &hi, &tail) == 2 ||
        (std::sscanf(text.c_str(), "%d%c", &lo, &tail) == 1 && (hi = lo, true))) {
        if (lo <= hi) {
            return {lo, hi};
        }
    }
    throw InputError("n: expected a range like 3..6, got '" + text + "'");
}

std::string cmd_verify(const Options &o) {
    const auto [lo, hi] = parse_range(o.n_range);
    VerifyOptions v;
    v.n_min = lo;
    v.n_max = hi;
    v.seed = o.seed;
    v.trials = o.trials;
    v.restarts = o.restarts;
    v.threads = o.threads;
    std::vector<CheckResult> checks = run_checks(v);
    checks.push_back(check_determinism(o.seed));

    bool ok = true;
    std::ostringstream os;
    if (resolved_format(o, "pretty") == "json") {
        ojson rows = ojson::array();
        for (const auto &c : checks) {
            ok = ok && c.passed;
            rows.push_back({{"id", c.id},
                            {"passed", c.passed},
                            {"description", c.description},
                            {"detail", c.detail}});
        }
        os << report("verify", {{"n", o.n_range}, {"trials", o.trials}}, fnv1a_hex(o.n_range),
                     o, rows)
                  .dump(2)
           << "\n";
    } else {
        for (const auto &c : checks) {
            ok = ok && c.passed;
            os << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(22) << c.id
               << c.description << "\n"
               << std::string(28, ' ') << c.detail << "\n";
        }
    }
    if (!ok) {
        throw VerificationFailed(os.str());
    }
    return os.str();
}

void add_output_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_flag("--pretty", o.pretty, "Human-readable table");
    cmd->add_option("--out", o.out_file, "Write output to FILE");
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_option("--tol", o.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--timing", o.timing, "Report wall-clock duration on stderr");
}

void add_state_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--n", o.n, "Number of qubits");
    cmd->add_option("--state", o.state_file, "JSON state document");
    cmd->add_option("--family", o.family,
                    "w | ghz | acin | symmetric_product | w_ghz_mix | w_white_noise");
    cmd->add_option("--params", o.params, "Family parameters as JSON");
}

void write_output(const Options &o, const std::string &text, std::ostream &out) {
    if (o.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_file, std::ios::binary);
    if (!f) {
        throw InputError("out: cannot open '" + o.out_file + "'");
    }
    f << text;
}

void error_line(std::ostream &err, const char *kind, const std::string &message) {
    err << nlohmann::json{{"error", kind}, {"message", message}}.dump() << "\n";
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"W-state entanglement witnesses for N-qubit systems", "wwit"};
    app.require_subcommand(1);
    Options o;

    auto *info = app.add_subcommand("info", "Witness coefficient, eigenvalues and bounds");
    info->add_option("--n", o.n, "Number of qubits")->required();
    add_output_flags(info, o);

    auto *eval = app.add_subcommand("eval", "Evaluate and classify a state");
    add_state_flags(eval, o);
    add_output_flags(eval, o);
    eval->add_option("--alpha", o.alpha, "Custom witness coefficient in (0, 1)");
    eval->add_option("--reference", o.reference_file, "Custom reference pure state (JSON)");

    auto *alpha = app.add_subcommand("alpha", "Closest product state overlap");
    add_state_flags(alpha, o);
    add_output_flags(alpha, o);
    alpha->add_option("--restarts", o.restarts, "Random restarts")->check(CLI::PositiveNumber);
    alpha->add_option("--max-sweeps", o.max_sweeps, "Sweeps per restart")
        ->check(CLI::PositiveNumber);
    alpha->add_option("--oracle", o.oracle, "Grid oracle")
        ->check(CLI::IsMember({"none", "grid", "symmetric"}));
    alpha->add_option("--grid-steps", o.grid_steps, "Grid points per angle");

    auto *schmidt = app.add_subcommand("schmidt", "Largest Schmidt coefficients");
    add_state_flags(schmidt, o);
    add_output_flags(schmidt, o);
    schmidt->add_option("--subset", o.subset, "Qubits on one side, e.g. 2,4")->delimiter(',');

    auto *sweep_cmd = app.add_subcommand("sweep", "Classify a family over a grid of p");
    sweep_cmd->add_option("--n", o.n, "Number of qubits");
    sweep_cmd->add_option("--family", o.family, "w_ghz_mix | w_white_noise");
    sweep_cmd->add_option("--params", o.params, "Family parameters as JSON");
    sweep_cmd->add_option("--from", o.p_from, "First p");
    sweep_cmd->add_option("--to", o.p_to, "Last p");
    sweep_cmd->add_option("--step", o.step, "Grid step");
    add_output_flags(sweep_cmd, o);

    auto *verify = app.add_subcommand("verify", "Run the numerical self-checks");
    verify->add_option("--n", o.n_range, "Qubit range, e.g. 3..6");
    verify->add_option("--trials", o.trials, "Random trials per property suite")
        ->check(CLI::PositiveNumber);
    verify->add_option("--restarts", o.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
    add_output_flags(verify, o);

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        error_line(err, "input", e.what());
        return kExitInput;
    }

    const auto start = std::chrono::steady_clock::now();
    auto finish = [&](int code) {
        if (o.timing) {
            const double ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
            err << nlohmann::json{{"duration_ms", ms}}.dump() << "\n";
        }
        return code;
    };
    try {
        std::string text;
        if (info->parsed()) {
            text = cmd_info(o);
        } else if (eval->parsed()) {
            text = cmd_eval(o);
        } else if (alpha->parsed()) {
            text = cmd_alpha(o);
        } else if (schmidt->parsed()) {
            text = cmd_schmidt(o);
        } else if (sweep_cmd->parsed()) {
            text = cmd_sweep(o);
        } else {
            text = cmd_verify(o);
        }
        write_output(o, text, out);
        return finish(kExitOk);
    } catch (const VerificationFailed &e) {
        write_output(o, e.what(), out);
        error_line(err, "verification", "one or more checks failed");
        return finish(kExitVerification);
    } catch (const NotConverged &e) {
        write_output(o, e.what(), out);
        error_line(err, "convergence", "optimizer hit max_sweeps before converging");
        return finish(kExitNonConvergence);
    } catch (const ConvergenceError &e) {
        error_line(err, "convergence", e.what());
        return finish(kExitNonConvergence);
    } catch (const InputError &e) {
        error_line(err, "input", e.what());
        return finish(kExitInput);
    } catch (const nlohmann::json::exception &e) {
        error_line(err, "input", e.what());
        return finish(kExitInput);
    }
}

CheckResult check_determinism(std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const std::string s = std::to_string(seed);
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out;
        std::ostringstream err;
        args.insert(args.begin(), "wwit");
        const int code = run_cli(args, out, err);
        return std::to_string(code) + "\n" + out.str();
    };
    const std::vector<std::string> alpha_args{"alpha", "--family", "w", "--n", "5", "--seed", s};
    const std::vector<std::string> sweep_args{"sweep", "--family", "w_white_noise", "--n", "4",
                                              "--step", "0.01"};
    bool same = true;
    for (const auto &base : {alpha_args, sweep_args}) {
        const std::string reference = run(base);
        for (const char *threads : {"1", "3", "8"}) {
            auto args = base;
            args.insert(args.end(), {"--threads", threads});
            same = same && run(args) == reference;
        }
        auto json_args = base;
        json_args.insert(json_args.end(), {"--format", "json"});
        same = same && run(json_args) == run(json_args);
    }
    return {"determinism", "alpha and sweep output byte-identical across runs and thread counts",
            same, same ? "identical" : "outputs differ",
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

} // namespace wwit
