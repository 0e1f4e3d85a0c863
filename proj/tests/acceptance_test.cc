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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "naqc/coherence.h"
#include "naqc/states.h"
#include "naqc/steering.h"
#include "naqc/suites.h"

using namespace naqc;

namespace {

const double kSqrt6 = std::sqrt(6.0);
constexpr uint64_t kSeed = 20260101;

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            ok = false;
        }
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += (cond ? "" : "FAILED ") + what;
    }
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, x);
    return buf;
}

std::string suite_detail(const SuiteResult &r) {
    return r.name + " samples=" + std::to_string(r.samples) + " failures=" + std::to_string(r.failures) +
           " worst_margin=" + fmt("%.3e", r.worst_margin);
}

std::array<cplx, 2> eigvec(PauliAxis axis, Outcome a) {
    const double h = 1 / std::numbers::sqrt2;
    switch (axis.index()) {
        case 1:
            return {h, a.sign() * h};
        case 2:
            return {h, cplx(0, a.sign() * h)};
        default:
            return a.value() == 0 ? std::array<cplx, 2>{1, 0} : std::array<cplx, 2>{0, 1};
    }
}

/// Unnormalized state left after contracting the qubit at `slot` of an
/// n-qubit matrix with <v|.|v>, by explicit index loops.
ComplexMatrix contract(const ComplexMatrix &m, size_t n, size_t slot, const std::array<cplx, 2> &v) {
    const size_t dim = size_t{1} << (n - 1);
    const size_t bit = n - 1 - slot;
    auto expand = [&](size_t reduced, size_t x) {
        size_t low = reduced & ((size_t{1} << bit) - 1);
        size_t high = reduced >> bit;
        return (high << (bit + 1)) | (x << bit) | low;
    };
    ComplexMatrix out(dim);
    for (size_t r = 0; r < dim; r++) {
        for (size_t c = 0; c < dim; c++) {
            cplx sum = 0;
            for (size_t x = 0; x < 2; x++) {
                for (size_t y = 0; y < 2; y++) {
                    sum += std::conj(v[x]) * m(expand(r, x), expand(c, y)) * v[y];
                }
            }
            out(r, c) = sum;
        }
    }
    return out;
}

/// l1 coherence of a qubit matrix: 2|rho_01| after rotating the axis into z.
double l1_brute(const ComplexMatrix &q, PauliAxis axis) {
    double total = 0;
    for (Outcome a : kAllOutcomes) {
        auto v = eigvec(axis, a);
        for (Outcome b : kAllOutcomes) {
            if (a.value() == b.value()) {
                continue;
            }
            auto w = eigvec(axis, b);
            cplx e = 0;
            for (size_t x = 0; x < 2; x++) {
                for (size_t y = 0; y < 2; y++) {
                    e += std::conj(v[x]) * q(x, y) * w[y];
                }
            }
            total += std::abs(e);
        }
    }
    return total;
}

/// Brute-force shift value for a two-qubit matrix under the l1 measure.
double shift_brute(const ComplexMatrix &rho, int j) {
    double total = 0;
    for (PauliAxis axis : kAllAxes) {
        for (Outcome a : kAllOutcomes) {
            ComplexMatrix bob = contract(rho, 2, 0, eigvec(axis, a));
            double p = bob.trace().real();
            if (p > kBranchCutoff) {
                total += p * l1_brute(bob * (1 / p), axis.shifted(j));
            }
        }
    }
    return total;
}

/// Brute-force T1 (l1): Charlie measures axis i, Alice-Bob scored on S_{i mod 3}.
double t1_brute(const ComplexMatrix &rho) {
    double total = 0;
    for (PauliAxis axis : kAllAxes) {
        for (Outcome c : kAllOutcomes) {
            ComplexMatrix ab = contract(rho, 3, 2, eigvec(axis, c));
            double p = ab.trace().real();
            if (p > kBranchCutoff) {
                total += p * shift_brute(ab * (1 / p), axis.index() % 3);
            }
        }
    }
    return total;
}

Verdict criterion1() {
    Verdict v;
    SuiteResult r = run_suite("coherence-complementarity", kSeed, 10000);
    v.require(r.passed(), suite_detail(r));
    BlochQubit q = BlochQubit::from_vector({1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)});
    auto sum = [&](MeasureKind m) { return coherence_triple(q, m).sum(); };
    v.require(std::abs(sum(MeasureKind::L1) - kSqrt6) <= 1e-12, "l1 sum " + fmt("%.15f", sum(MeasureKind::L1)));
    v.require(std::abs(sum(MeasureKind::SKEW_INFORMATION) - 2) <= 1e-12,
              "skew sum " + fmt("%.15f", sum(MeasureKind::SKEW_INFORMATION)));
    const double relent = sum(MeasureKind::RELATIVE_ENTROPY);
    v.require(std::abs(relent - 2.2336) <= 1e-4, "relent sum " + fmt("%.10f", relent) + " vs 2.2336 (tol 1e-4)");
    return v;
}

Verdict criterion2() {
    Verdict v;
    double worst = 0, worst_brute = 0;
    bool flags_match = true, triple_ok = true;
    double peak = 0, peak_alpha = -1;
    const double threshold = std::pow((kSqrt6 - 2) / 2, 2);
    for (int k = 0; k <= 100; k++) {
        const double alpha = k / 100.0;
        const double g = std::sqrt(alpha * (1 - alpha));
        const double s0 = 2 * std::abs(2 * alpha - 1);
        const double s12_half = 2 + 2 * g;
        const double s012_third = (s0 + 4 + 4 * g) / 3;

        DensityMatrix rho = pure_alpha(alpha);
        SteeringReport r = steering_report(rho, MeasureKind::L1);
        worst = std::max({worst, std::abs(r.shift.s[0] - s0), std::abs(r.doubles[2].criterion.value / 2 - s12_half),
                          std::abs(r.triple.value / 3 - s012_third)});
        worst_brute = std::max({worst_brute, std::abs(shift_brute(rho.matrix(), 0) - s0),
                                std::abs(shift_brute(rho.matrix(), 1) / 2 + shift_brute(rho.matrix(), 2) / 2 -
                                         s12_half)});

        const bool expected = alpha * (1 - alpha) > threshold;
        if (std::abs(alpha * (1 - alpha) - threshold) > 1e-9) {
            flags_match = flags_match && r.doubles[2].criterion.violated == expected;
        }
        triple_ok = triple_ok && r.triple.value / 3 <= kSqrt6 && !r.triple.violated;
        if (r.doubles[2].criterion.value / 2 > peak) {
            peak = r.doubles[2].criterion.value / 2;
            peak_alpha = alpha;
        }
    }
    v.require(worst <= 1e-10, "closed forms worst " + fmt("%.2e", worst));
    v.require(worst_brute <= 1e-10, "brute-force conditioning worst " + fmt("%.2e", worst_brute));
    v.require(flags_match, "S12/2 > sqrt6 exactly where alpha(1-alpha) > ((sqrt6-2)/2)^2");
    v.require(std::abs(peak - 3) <= 1e-10 && peak_alpha == 0.5,
              "peak " + fmt("%.12f", peak) + " at alpha " + fmt("%.2f", peak_alpha));
    v.require(triple_ok, "S012/3 <= sqrt6 everywhere");
    return v;
}

Verdict criterion3() {
    Verdict v;
    SteeringReport r = steering_report(bell(), MeasureKind::L1);
    const double s12 = r.doubles[2].criterion.value;
    v.require(std::abs(s12 - 6) <= 1e-10 && s12 > 2 * kSqrt6 && r.doubles[2].criterion.violated,
              "S12 " + fmt("%.12f", s12));
    v.require(std::abs(r.shift.s[0]) <= 1e-10, "S0 " + fmt("%.3e", r.shift.s[0]));
    v.require(std::abs(r.triple.value - 6) <= 1e-10 && r.triple.value <= 3 * kSqrt6 && !r.triple.violated,
              "S012 " + fmt("%.12f", r.triple.value));
    return v;
}

Verdict criterion4() {
    Verdict v;
    SuiteResult r = run_suite("bipartite-complementarity", kSeed, 10000);
    v.require(r.passed(), suite_detail(r));
    return v;
}

Verdict criterion5() {
    Verdict v;
    double worst_claimed = 0, worst_brute = 0;
    double lo = -1, hi = -1;
    for (int k = 0; k <= 100; k++) {
        const double alpha = k / 100.0;
        const double t1 = tripartite_t1(ghz_alpha(alpha), MeasureKind::L1).value;
        const double claimed = 6 + 4 * alpha * std::sqrt(1 - alpha * alpha);
        worst_claimed = std::max(worst_claimed, std::abs(t1 - claimed));
        worst_brute = std::max(worst_brute, std::abs(t1 - t1_brute(ghz_alpha(alpha).matrix())));
        if (t1 > 3 * kSqrt6) {
            if (lo < 0) {
                lo = alpha;
            }
            hi = alpha;
        }
    }
    const double at_half = tripartite_t1(ghz_alpha(1 / std::numbers::sqrt2), MeasureKind::L1).value;
    v.require(worst_brute <= 1e-10, "T1 vs brute force worst " + fmt("%.2e", worst_brute));
    v.require(worst_claimed <= 1e-10, "T1 vs 6+4a*sqrt(1-a^2) worst " + fmt("%.6f", worst_claimed));
    v.require(lo > 0 && hi < 1, lo < 0 ? std::string("T1 never exceeds 3 sqrt6")
                                       : "T1 > 3 sqrt6 on [" + fmt("%.2f", lo) + ", " + fmt("%.2f", hi) + "]");
    v.require(std::abs(at_half - 8) <= 1e-10, "T1(1/sqrt2) " + fmt("%.12f", at_half));
    return v;
}

Verdict criterion6() {
    Verdict v;
    SuiteResult r = run_suite("tripartite-complementarity", kSeed, 1000);
    v.require(r.passed(), suite_detail(r));
    return v;
}

Verdict suite_criterion(std::string_view name) {
    Verdict v;
    SuiteResult r = run_suite(name, kSeed, 1000);
    v.require(r.passed(), suite_detail(r));
    return v;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char *title;
        double time_limit;
        std::function<Verdict()> run;
    };
    const double kNoLimit = 0;
    const Entry entries[] = {
        {1, "coherence complementarity", 5, criterion1},
        {2, "pure family sweep", 5, criterion2},
        {3, "Bell state violation", kNoLimit, criterion3},
        {4, "bipartite complementarity", 60, criterion4},
        {5, "GHZ family sweep", kNoLimit, criterion5},
        {6, "tripartite complementarity", 120, criterion6},
        {7, "skew information oracle", kNoLimit, [] { return suite_criterion("skew-oracle"); }},
        {8, "mixing monotonicity", kNoLimit, [] { return suite_criterion("mixing-monotonicity"); }},
        {9, "no-signalling", kNoLimit, [] { return suite_criterion("no-signalling"); }},
    };

    int failed = 0;
    for (const Entry &e : entries) {
        auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = e.run();
        } catch (const std::exception &ex) {
            v.require(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt("%.2fs", secs);
        if (e.time_limit > 0) {
            v.require(secs < e.time_limit, timing + " < " + fmt("%.0fs", e.time_limit));
        } else {
            v.detail += "; " + timing;
        }
        std::printf("criterion %d %s: %s (%s)\n", e.id, v.ok ? "PASS" : "FAIL", e.title, v.detail.c_str());
        failed += v.ok ? 0 : 1;
    }
    std::printf("%d of 9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
