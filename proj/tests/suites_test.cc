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

#include <cmath>
#include <omp.h>
#include <stdexcept>

#include "gtest/gtest.h"
#include "sample_loop.h"

using namespace naqc;

namespace {

const double kSqrt6 = std::sqrt(6.0);

/// Forces several threads even on a single-core machine.
class ThreadGuard {
   public:
    explicit ThreadGuard(int n) : saved_(omp_get_max_threads()) {
        omp_set_num_threads(n);
    }
    ~ThreadGuard() {
        omp_set_num_threads(saved_);
    }

   private:
    int saved_;
};

void expect_same(const SuiteResult &a, const SuiteResult &b) {
    EXPECT_EQ(a.name, b.name);
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_EQ(a.worst_margin, b.worst_margin);
    EXPECT_EQ(a.worst_index, b.worst_index);
}

}  // namespace

TEST(sample_loop, tally_matches_serial) {
    ThreadGuard guard(4);
    // Repeated margins exercise the lowest-index tie break across threads.
    auto probe = [](uint64_t i) {
        double m = -std::abs(static_cast<double>(i % 97) - 50);
        return detail::Probe{m, i % 13 != 0};
    };
    for (uint64_t n : {0, 1, 7, 1000, 10007}) {
        detail::Tally s = detail::tally_serial(n, probe);
        detail::Tally p = detail::tally_parallel(n, probe);
        EXPECT_EQ(s.count, n);
        EXPECT_EQ(p.count, s.count);
        EXPECT_EQ(p.failures, s.failures);
        EXPECT_EQ(p.worst_margin, s.worst_margin);
        EXPECT_EQ(p.worst_index, s.worst_index);
    }
    EXPECT_EQ(detail::tally_serial(1000, probe).worst_index, 50u);
}

TEST(sample_loop, argmax_matches_serial) {
    ThreadGuard guard(4);
    auto value = [](uint64_t i) { return static_cast<double>((i * 7919) % 1009); };
    detail::Best s = detail::argmax_serial(5000, value);
    detail::Best p = detail::argmax_parallel(5000, value);
    EXPECT_EQ(s.value, 1008);
    EXPECT_EQ(p.value, s.value);
    EXPECT_EQ(p.index, s.index);
}

TEST(sample_loop, earliest_exception_wins) {
    ThreadGuard guard(4);
    auto probe = [](uint64_t i) -> detail::Probe {
        if (i == 4000 || i == 123 || i == 9000) {
            throw std::runtime_error(std::to_string(i));
        }
        return {0, true};
    };
    for (int rep = 0; rep < 5; rep++) {
        try {
            detail::tally_parallel(10000, probe);
            FAIL() << "expected a throw";
        } catch (const std::runtime_error &e) {
            EXPECT_STREQ(e.what(), "123");
        }
    }
}

TEST(suites, names_and_defaults) {
    const auto &names = suite_names();
    EXPECT_EQ(names.size(), 7u);
    EXPECT_EQ(default_samples("coherence-complementarity"), 10000u);
    EXPECT_EQ(default_samples("bipartite-complementarity"), 10000u);
    EXPECT_EQ(default_samples("tripartite-complementarity"), 1000u);
    EXPECT_THROW(run_suite("nope", 1), std::invalid_argument);
    EXPECT_THROW(default_samples("nope"), std::invalid_argument);
}

TEST(suites, all_pass_and_parallel_matches_serial) {
    ThreadGuard guard(3);
    for (std::string_view name : suite_names()) {
        const uint64_t n = std::min<uint64_t>(default_samples(name), 500);
        SuiteResult s = run_suite(name, 2026, n, Execution::kSerial);
        SuiteResult p = run_suite(name, 2026, n, Execution::kParallel);
        SCOPED_TRACE(std::string(name));
        expect_same(s, p);
        EXPECT_TRUE(s.passed());
        EXPECT_EQ(s.samples, n);
        EXPECT_LE(s.worst_margin, s.tolerance);
    }
}

TEST(suites, deterministic_in_seed) {
    SuiteResult a = run_suite("mixing-monotonicity", 5, 200);
    SuiteResult b = run_suite("mixing-monotonicity", 5, 200);
    SuiteResult c = run_suite("mixing-monotonicity", 6, 200);
    expect_same(a, b);
    EXPECT_NE(a.worst_margin, c.worst_margin);
}

TEST(search, criterion_names) {
    EXPECT_EQ(criterion_names(2).size(), 7u);
    EXPECT_EQ(criterion_names(3).size(), 3u);
    EXPECT_THROW(criterion_names(4), std::invalid_argument);
    EXPECT_THROW(search(2, "t1", MeasureKind::L1, 10, 1), std::invalid_argument);
    EXPECT_THROW(search(3, "triple", MeasureKind::L1, 10, 1), std::invalid_argument);
    EXPECT_EQ(criterion_bound("double12", MeasureKind::L1), 2 * kSqrt6);
    EXPECT_EQ(criterion_bound("t3", MeasureKind::SKEW_INFORMATION), 18);
}

TEST(search, parallel_matches_serial) {
    ThreadGuard guard(4);
    SearchResult s = search(2, "double12", MeasureKind::RELATIVE_ENTROPY, 2000, 77, Execution::kSerial);
    SearchResult p = search(2, "double12", MeasureKind::RELATIVE_ENTROPY, 2000, 77, Execution::kParallel);
    EXPECT_EQ(s.best_value, p.best_value);
    EXPECT_EQ(s.best_index, p.best_index);
    EXPECT_EQ(s.best_seed, p.best_seed);
    ASSERT_TRUE(p.best_state.has_value());
    EXPECT_EQ(p.best_state->matrix(), search_sample(2, 77, p.best_index).matrix());
    EXPECT_EQ(criterion_value(*p.best_state, "double12", MeasureKind::RELATIVE_ENTROPY), p.best_value);
    EXPECT_EQ(p.kind, p.best_index % 2 == 0 ? "pure" : "mixed");
}

TEST(search, two_qubit_examples) {
    SearchResult triple = search(2, "triple", MeasureKind::L1, 100000, 1);
    EXPECT_LE(triple.best_value, 3 * kSqrt6 + 1e-9);
    EXPECT_EQ(triple.bound, 3 * kSqrt6);

    SearchResult dbl = search(2, "double12", MeasureKind::L1, 100000, 1);
    EXPECT_GE(dbl.best_value, 5.9);
    EXPECT_GT(dbl.best_value, dbl.bound);
}

TEST(search, three_qubit_example) {
    SearchResult t3 = search(3, "t3", MeasureKind::L1, 1000, 1);
    EXPECT_LE(t3.best_value, 9 * kSqrt6 + 1e-9);
    EXPECT_EQ(t3.nqubits, 3u);
    EXPECT_EQ(t3.samples, 1000u);
}

TEST(search, sample_kinds) {
    EXPECT_NEAR(search_sample(2, 3, 0).purity(), 1, 1e-12);
    EXPECT_GT(eig_hermitian(search_sample(2, 3, 1).matrix()).values[3], 0);
    EXPECT_EQ(search_sample(3, 3, 5).matrix(), search_sample(3, 3, 5).matrix());
}
