// Copyright 2026 The naqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "naqc/suites.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "naqc/random.h"
#include "naqc/states.h"
#include "naqc/steering.h"
#include "sample_loop.h"

namespace naqc {

namespace {

using detail::Probe;

struct SuiteSpec {
    std::string_view name;
    uint64_t default_samples;
    double tolerance;
    std::string_view description;
};

constexpr std::array<SuiteSpec, 7> kSuites{{
    {"coherence-complementarity", 10000, 1e-9, "sum_i C_i <= eps for random qubits in the Bloch ball, every measure"},
    {"skew-oracle", 1000, 1e-10, "closed-form skew information vs -tr([sqrt(rho), sigma]^2)/2"},
    {"relent-oracle", 1000, 1e-10, "closed-form relative entropy of coherence vs S(dephased) - S(rho)"},
    {"no-signalling", 1000, 1e-10, "weighted conditional Bloch vectors reproduce Bob's reduced state"},
    {"bipartite-complementarity", 10000, 1e-9, "S_012 <= 3 eps, decompositions agree, violations compensated"},
    {"mixing-monotonicity", 1000, 1e-9, "S_j(p rho1 + (1-p) rho2) <= p S_j(rho1) + (1-p) S_j(rho2)"},
    {"tripartite-complementarity", 1000, 1e-9, "T3 = T1 + T2 and T3 <= 9 eps on random three-qubit states"},
}};

const SuiteSpec &find_suite(std::string_view name) {
    for (const SuiteSpec &s : kSuites) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

Probe coherence_complementarity(uint64_t seed, uint64_t i) {
    BlochQubit q = random_bloch_ball(derive_seed(seed, i));
    double margin = -std::numeric_limits<double>::infinity();
    for (MeasureKind m : kAllMeasures) {
        double sum = 0;
        for (PauliAxis axis : kAllAxes) {
            sum += coherence(q, axis, m);
        }
        margin = std::max(margin, sum - epsilon(m));
    }
    return {margin, margin <= 1e-9};
}

Probe skew_oracle(uint64_t seed, uint64_t i) {
    BlochQubit q = random_bloch_ball(derive_seed(seed, i));
    DensityMatrix rho = qubit_of_bloch(q);
    ComplexMatrix root = sqrt_psd(rho);
    double worst = 0;
    for (PauliAxis axis : kAllAxes) {
        ComplexMatrix s = pauli(axis);
        ComplexMatrix comm = root * s - s * root;
        double brute = -0.5 * (comm * comm).trace().real();
        worst = std::max(worst, std::abs(brute - c_skew(q, axis)));
    }
    return {worst, worst <= 1e-10};
}

Probe relent_oracle(uint64_t seed, uint64_t i) {
    BlochQubit q = random_bloch_ball(derive_seed(seed, i));
    DensityMatrix rho = qubit_of_bloch(q);
    const double s_rho = entropy_bits(rho);
    double worst = 0;
    for (PauliAxis axis : kAllAxes) {
        ComplexMatrix dephased(2);
        for (Outcome a : kAllOutcomes) {
            ComplexMatrix p = projector(axis, a);
            dephased += p * rho.matrix() * p;
        }
        double brute = entropy_bits(DensityMatrix::from_matrix(dephased)) - s_rho;
        worst = std::max(worst, std::abs(brute - c_relent(q, axis)));
    }
    return {worst, worst <= 1e-10};
}

Probe no_signalling(uint64_t seed, uint64_t i) {
    DensityMatrix rho = search_sample(2, seed, i);
    static constexpr std::array<size_t, 1> keep_bob{1};
    Vec3 bob = bloch_vector(partial_trace(rho.matrix(), keep_bob));
    double worst = 0;
    double prob_defect = 0;
    for (PauliAxis axis : kAllAxes) {
        auto branches = conditional_states(rho, axis);
        Vec3 avg{0, 0, 0};
        for (const ConditionalBranch &b : branches) {
            for (size_t k = 0; k < 3; k++) {
                avg[k] += b.probability * b.state.r()[k];
            }
        }
        for (size_t k = 0; k < 3; k++) {
            worst = std::max(worst, std::abs(avg[k] - bob[k]));
        }
        prob_defect = std::max(prob_defect, std::abs(branches[0].probability + branches[1].probability - 1));
    }
    return {worst, worst <= 1e-10 && prob_defect <= 1e-10};
}

Probe bipartite_complementarity(uint64_t seed, uint64_t i) {
    DensityMatrix rho = search_sample(2, seed, i);
    ConditionalEnsemble ensemble = conditional_ensemble(rho);
    double margin = -std::numeric_limits<double>::infinity();
    bool ok = true;
    for (MeasureKind m : kAllMeasures) {
        const double eps = epsilon(m);
        std::array<double, 3> s{};
        for (int j = 0; j < 3; j++) {
            s[j] = shift_value(ensemble, j, m);
        }
        const double total = s[0] + s[1] + s[2];
        margin = std::max(margin, total - 3 * eps);
        ok = ok && total <= 3 * eps + 1e-9;

        // Whenever S_jk is violated, the remaining single S_l must hold.
        for (int l = 0; l < 3; l++) {
            double pair = total - s[l];
            if (pair > 2 * eps + kViolationSlack) {
                ok = ok && s[l] <= eps + 1e-9;
            }
        }

        try {
            SteeringReport report = steering_report(ensemble, m);
            const Decompositions &d = report.decompositions;
            for (double v : {d.s0_s1_s2, d.s01_s2, d.s02_s1, d.s12_s0, report.triple.value}) {
                ok = ok && std::abs(v - total) <= 1e-12;
            }
            ok = ok && !report.triple.violated;
        } catch (const ConsistencyError &) {
            ok = false;
        }
    }
    return {margin, ok};
}

Probe mixing_monotonicity(uint64_t seed, uint64_t i) {
    const uint64_t s = derive_seed(seed, i);
    DensityMatrix rho1 = search_sample(2, s, i % 2);
    DensityMatrix rho2 = search_sample(2, s, 2 + (i / 2) % 2);
    const double p = GaussianSource(derive_seed(s, 7)).uniform();
    DensityMatrix mix = DensityMatrix::from_matrix(rho1.matrix() * p + rho2.matrix() * (1 - p));

    ConditionalEnsemble e1 = conditional_ensemble(rho1);
    ConditionalEnsemble e2 = conditional_ensemble(rho2);
    ConditionalEnsemble em = conditional_ensemble(mix);
    double margin = -std::numeric_limits<double>::infinity();
    for (MeasureKind m : kAllMeasures) {
        for (int j = 0; j < 3; j++) {
            double lhs = shift_value(em, j, m);
            double rhs = p * shift_value(e1, j, m) + (1 - p) * shift_value(e2, j, m);
            margin = std::max(margin, lhs - rhs);
        }
    }
    return {margin, margin <= 1e-9};
}

Probe tripartite_complementarity(uint64_t seed, uint64_t i) {
    DensityMatrix rho = search_sample(3, seed, i);
    double margin = -std::numeric_limits<double>::infinity();
    bool ok = true;
    for (MeasureKind m : kAllMeasures) {
        double nine_terms = 0;
        for (const TripartiteBranch &b : tripartite_branches(rho, m)) {
            nine_terms += b.probability * b.shift.total();
        }
        margin = std::max(margin, nine_terms - 9 * epsilon(m));
        ok = ok && nine_terms <= 9 * epsilon(m) + 1e-9;
        try {
            TripartiteReport r = tripartite_report(rho, m);
            ok = ok && std::abs(r.t3.value - (r.t1.value + r.t2.value)) <= 1e-12;
            ok = ok && std::abs(r.t3.value - nine_terms) <= 1e-12;
        } catch (const ConsistencyError &) {
            ok = false;
        }
    }
    return {margin, ok};
}

detail::ProbeFn probe_for(std::string_view name, uint64_t seed) {
    using Kernel = Probe (*)(uint64_t, uint64_t);
    Kernel k = nullptr;
    if (name == "coherence-complementarity") {
        k = coherence_complementarity;
    } else if (name == "skew-oracle") {
        k = skew_oracle;
    } else if (name == "relent-oracle") {
        k = relent_oracle;
    } else if (name == "no-signalling") {
        k = no_signalling;
    } else if (name == "bipartite-complementarity") {
        k = bipartite_complementarity;
    } else if (name == "mixing-monotonicity") {
        k = mixing_monotonicity;
    } else if (name == "tripartite-complementarity") {
        k = tripartite_complementarity;
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
    }
    return [k, seed](uint64_t i) { return k(seed, i); };
}

}  // namespace

const std::vector<std::string_view> &suite_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const SuiteSpec &s : kSuites) {
            out.push_back(s.name);
        }
        return out;
    }();
    return names;
}

uint64_t default_samples(std::string_view suite) {
    return find_suite(suite).default_samples;
}

SuiteResult run_suite(std::string_view name, uint64_t seed, uint64_t samples, Execution exec) {
    const SuiteSpec &spec = find_suite(name);
    const uint64_t n = samples == 0 ? spec.default_samples : samples;
    detail::ProbeFn probe = probe_for(name, seed);
    detail::Tally t = exec == Execution::kSerial ? detail::tally_serial(n, probe) : detail::tally_parallel(n, probe);

    SuiteResult r;
    r.name = std::string(spec.name);
    r.samples = t.count;
    r.failures = t.failures;
    r.worst_margin = t.worst_margin;
    r.worst_index = t.worst_index;
    r.tolerance = spec.tolerance;
    r.description = std::string(spec.description);
    return r;
}

std::vector<SuiteResult> run_all_suites(uint64_t seed, Execution exec) {
    std::vector<SuiteResult> out;
    for (std::string_view name : suite_names()) {
        out.push_back(run_suite(name, seed, 0, exec));
    }
    return out;
}

const std::vector<std::string_view> &criterion_names(size_t nqubits) {
    static const std::vector<std::string_view> bipartite{"single0",  "single1",  "single2", "double01",
                                                         "double02", "double12", "triple"};
    static const std::vector<std::string_view> tripartite{"t1", "t2", "t3"};
    if (nqubits == 2) {
        return bipartite;
    }
    if (nqubits == 3) {
        return tripartite;
    }
    throw std::invalid_argument("criteria exist for 2 or 3 qubits only");
}

double criterion_bound(std::string_view criterion, MeasureKind measure) {
    const double eps = epsilon(measure);
    if (criterion.starts_with("single")) {
        return eps;
    }
    if (criterion.starts_with("double")) {
        return 2 * eps;
    }
    if (criterion == "triple" || criterion == "t1") {
        return 3 * eps;
    }
    if (criterion == "t2") {
        return 6 * eps;
    }
    if (criterion == "t3") {
        return 9 * eps;
    }
    throw std::invalid_argument("unknown criterion '" + std::string(criterion) + "'");
}

double criterion_value(const DensityMatrix &rho, std::string_view criterion, MeasureKind measure) {
    const auto &names = criterion_names(rho.nqubits());
    if (std::find(names.begin(), names.end(), criterion) == names.end()) {
        throw std::invalid_argument("unknown criterion '" + std::string(criterion) + "' for a " +
                                    std::to_string(rho.nqubits()) + "-qubit state");
    }
    if (criterion.starts_with("single")) {
        return criterion_single(rho, criterion.back() - '0', measure).value;
    }
    if (criterion.starts_with("double")) {
        return criterion_double(rho, criterion[6] - '0', criterion[7] - '0', measure).value;
    }
    if (criterion == "triple") {
        return criterion_triple(rho, measure).value;
    }
    TripartiteReport r = tripartite_report(rho, measure);
    return criterion == "t1" ? r.t1.value : criterion == "t2" ? r.t2.value : r.t3.value;
}

DensityMatrix search_sample(size_t nqubits, uint64_t seed, uint64_t index) {
    const uint64_t s = derive_seed(seed, index);
    if (index % 2 == 0) {
        return random_pure(nqubits, s);
    }
    return random_mixed(nqubits, size_t{1} << nqubits, s);
}

SearchResult search(size_t nqubits, std::string_view criterion, MeasureKind measure, uint64_t samples,
                    uint64_t seed, Execution exec) {
    const auto &names = criterion_names(nqubits);
    if (std::find(names.begin(), names.end(), criterion) == names.end()) {
        throw std::invalid_argument("unknown criterion '" + std::string(criterion) + "' for " +
                                    std::to_string(nqubits) + " qubits");
    }
    if (samples == 0) {
        throw std::invalid_argument("search needs at least one sample");
    }
    detail::ValueFn value = [&](uint64_t i) {
        return criterion_value(search_sample(nqubits, seed, i), criterion, measure);
    };
    detail::Best best =
        exec == Execution::kSerial ? detail::argmax_serial(samples, value) : detail::argmax_parallel(samples, value);

    SearchResult r;
    r.criterion = std::string(criterion);
    r.measure = measure;
    r.nqubits = nqubits;
    r.samples = samples;
    r.best_value = best.value;
    r.bound = criterion_bound(criterion, measure);
    r.best_index = best.index;
    r.best_seed = derive_seed(seed, best.index);
    r.kind = best.index % 2 == 0 ? "pure" : "mixed";
    r.best_state = search_sample(nqubits, seed, best.index);
    return r;
}

}  // namespace naqc
