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
#include "wwit/families.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "wwit/parallel.hpp"

namespace wwit {

namespace {

double two_pow(int n) { return std::ldexp(1.0, n); }

// Root of a decreasing curve crossing `level` on [0, 1], bisected until the
// bracket stops shrinking in floating point.
double bisect_crossing(const TraceCurve &curve, double level) {
    double lo = 0.0;
    double hi = 1.0;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (curve(mid) - level > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::abs(curve(lo) - level) <= std::abs(curve(hi) - level) ? lo : hi;
}

} // namespace

std::string_view family_name(Family f) {
    switch (f) {
    case Family::WGhzMix:
        return "w_ghz_mix";
    case Family::WWhiteNoise:
        return "w_white_noise";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "w_ghz_mix") {
        return Family::WGhzMix;
    }
    if (name == "w_white_noise") {
        return Family::WWhiteNoise;
    }
    throw InputError("unknown family '" + std::string(name) + "'");
}

StateEnsemble realize(const FamilySpec &f) {
    if (!(f.p >= 0.0 && f.p <= 1.0)) {
        throw InputError("p: must lie in [0, 1]");
    }
    std::vector<EnsembleTerm> terms;
    if (f.p > 0.0) {
        terms.push_back({f.p, make_w_state(f.n_qubits)});
    }
    if (f.p < 1.0) {
        if (f.family == Family::WGhzMix) {
            terms.push_back({1.0 - f.p, make_ghz_state(f.n_qubits)});
        } else {
            require_qubit_count(f.n_qubits, kMaxDenseQubits);
            const auto dim = std::uint64_t{1} << f.n_qubits;
            const double w = (1.0 - f.p) / static_cast<double>(dim);
            for (std::uint64_t b = 0; b < dim; ++b) {
                terms.push_back({w, basis_state(f.n_qubits, b)});
            }
        }
    }
    return StateEnsemble::from_terms(std::move(terms));
}

TraceCurve trace_curve(Family family, int n) {
    const double c = witness_coefficient(n);
    require_qubit_count(n);
    switch (family) {
    case Family::WGhzMix:
        // <GHZ_N|W_N> = 0, so <W|rho|W> = p.
        return {c, -1.0};
    case Family::WWhiteNoise: {
        // <W|rho|W> = p + (1 - p) / 2^N.
        const double noise = 1.0 / two_pow(n);
        return {c - noise, -(1.0 - noise)};
    }
    }
    throw InputError("unknown family");
}

double ThresholdReport::max_abs_difference() const {
    return std::max(std::abs(p_entangled - p_entangled_bisection),
                    std::abs(p_genuine - p_genuine_bisection));
}

ThresholdReport thresholds(Family family, int n) {
    const TraceCurve curve = trace_curve(family, n);
    const double c = witness_coefficient(n);
    const double nd = static_cast<double>(n);
    const double genuine_level = c - (nd - 1.0) / nd;

    ThresholdReport r{family, n, 0.0, 0.0, 0.0, 0.0};
    if (family == Family::WGhzMix) {
        r.p_entangled = c;
        r.p_genuine = (nd - 1.0) / nd;
    } else {
        const double d = two_pow(n);
        r.p_entangled = (d * c - 1.0) / (d - 1.0);
        r.p_genuine = (d * ((nd - 1.0) / nd) - 1.0) / (d - 1.0);
    }
    r.p_entangled_bisection = bisect_crossing(curve, 0.0);
    r.p_genuine_bisection = bisect_crossing(curve, genuine_level);
    return r;
}

std::vector<SweepRecord> sweep(Family family, int n, double p_from, double p_to,
                               double step, int threads) {
    if (!(p_from >= 0.0 && p_from <= p_to && p_to <= 1.0)) {
        throw InputError("sweep range: need 0 <= p_from <= p_to <= 1");
    }
    if (!(step > 0.0)) {
        throw InputError("sweep step: must be positive");
    }
    const TraceCurve curve = trace_curve(family, n);
    const auto count = static_cast<std::size_t>(std::floor((p_to - p_from) / step + 1e-9)) + 1;
    std::vector<SweepRecord> out(count, SweepRecord{0.0, 0.0, Verdict{n, 0.0, false, {}, false, 0.0}});
    detail::parallel_for(count, threads, [&](std::size_t i) {
        const double p = std::min(p_from + static_cast<double>(i) * step, p_to);
        const double t = curve(p);
        out[i] = SweepRecord{p, t, classify(t, n)};
    });
    return out;
}

std::string sweep_to_csv(const std::vector<SweepRecord> &records) {
    std::ostringstream os;
    const std::size_t k_max = records.empty() ? 0 : records.front().verdict.excluded_from_dk.size();
    os << "p,trace,not_fully_separable";
    for (std::size_t k = 1; k <= k_max; ++k) {
        os << ",excluded_d" << k;
    }
    os << ",genuine\n";
    char buf[64];
    for (const auto &r : records) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g", r.p, r.trace);
        os << buf << ',' << int(r.verdict.not_fully_separable);
        for (bool excluded : r.verdict.excluded_from_dk) {
            os << ',' << int(excluded);
        }
        os << ',' << int(r.verdict.genuine_entangled) << '\n';
    }
    return os.str();
}

std::optional<std::string> sweep_note(Family family, int n) {
    if (n != 3 || family != Family::WGhzMix) {
        return std::nullopt;
    }
    return std::string(
        "The witness is one-sided: a nonnegative trace is inconclusive. Genuine "
        "entanglement of this family at small p (detectable by the three-tangle) "
        "is not computed here.");
}

} // namespace wwit
