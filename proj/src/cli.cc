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

#include "naqc/cli.h"

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "naqc/steering.h"
#include "naqc/suites.h"

namespace naqc::cli {

namespace {

using json = nlohmann::json;

double number_at(const json &j, const char *what) {
    if (!j.is_number()) {
        throw ParseError(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

Vec3 vec3_at(const json &params, const char *key) {
    if (!params.contains(key) || !params[key].is_array() || params[key].size() != 3) {
        throw ParseError(std::string("params.") + key + " must be an array of 3 numbers");
    }
    Vec3 out{};
    for (size_t k = 0; k < 3; k++) {
        out[k] = number_at(params[key][k], key);
    }
    return out;
}

double param_at(const json &params, const char *key) {
    if (!params.is_object() || !params.contains(key)) {
        throw ParseError(std::string("missing params.") + key);
    }
    return number_at(params[key], key);
}

std::vector<std::vector<double>> real_rows(const json &j, const char *key, size_t dim) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != dim) {
        throw ParseError(std::string(key) + " must be an array of " + std::to_string(dim) + " rows");
    }
    std::vector<std::vector<double>> rows;
    for (const json &row : j[key]) {
        if (!row.is_array() || row.size() != dim) {
            throw ParseError(std::string(key) + " rows must have " + std::to_string(dim) + " entries");
        }
        std::vector<double> values;
        for (const json &x : row) {
            values.push_back(number_at(x, key));
        }
        rows.push_back(std::move(values));
    }
    return rows;
}

json criterion_json(const Criterion &c) {
    return json{{"value", c.value}, {"bound", c.bound}, {"violated", c.violated}};
}

json bipartite_json(const DensityMatrix &rho, MeasureKind m) {
    SteeringReport r = steering_report(rho, m);
    json singles = json::array();
    for (int j = 0; j < 3; j++) {
        json c = criterion_json(r.singles[j]);
        c["j"] = j;
        singles.push_back(c);
    }
    json doubles = json::array();
    for (const DoubleCriterion &d : r.doubles) {
        json c = criterion_json(d.criterion);
        c["j"] = d.j;
        c["k"] = d.k;
        doubles.push_back(c);
    }
    return json{
        {"measure", measure_name(m)},
        {"epsilon", epsilon(m)},
        {"shift", r.shift.s},
        {"singles", singles},
        {"doubles", doubles},
        {"triple", criterion_json(r.triple)},
        {"decompositions",
         {{"S0+S1+S2", r.decompositions.s0_s1_s2},
          {"S01+S2", r.decompositions.s01_s2},
          {"S02+S1", r.decompositions.s02_s1},
          {"S12+S0", r.decompositions.s12_s0}}},
    };
}

json tripartite_json(const DensityMatrix &rho, MeasureKind m) {
    TripartiteReport r = tripartite_report(rho, m);
    return json{
        {"measure", measure_name(m)}, {"epsilon", epsilon(m)},   {"t1", criterion_json(r.t1)},
        {"t2", criterion_json(r.t2)}, {"t3", criterion_json(r.t3)},
    };
}

json dense_json(const DensityMatrix &rho) {
    const ComplexMatrix &m = rho.matrix();
    json re = json::array();
    json im = json::array();
    for (size_t r = 0; r < m.dim(); r++) {
        json re_row = json::array();
        json im_row = json::array();
        for (size_t c = 0; c < m.dim(); c++) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return json{{"nqubits", rho.nqubits()}, {"re", re}, {"im", im}};
}

}  // namespace

StateDocument parse_state_document(std::string_view json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("state document must be a JSON object");
    }
    const bool has_dense = j.contains("nqubits") || j.contains("re") || j.contains("im");
    const bool has_family = j.contains("family") || j.contains("params");
    if (has_dense == has_family) {
        throw ParseError("state document needs exactly one of a dense block or a family block");
    }

    StateDocument doc;
    if (has_dense) {
        if (!j.contains("nqubits") || !j["nqubits"].is_number_integer()) {
            throw ParseError("nqubits must be an integer");
        }
        const int n = j["nqubits"].get<int>();
        if (n < 1 || n > 3) {
            throw ParseError("nqubits must be 1, 2 or 3");
        }
        const size_t dim = size_t{1} << n;
        auto re = real_rows(j, "re", dim);
        auto im = real_rows(j, "im", dim);
        ComplexMatrix m(dim);
        for (size_t r = 0; r < dim; r++) {
            for (size_t c = 0; c < dim; c++) {
                m(r, c) = cplx(re[r][c], im[r][c]);
            }
        }
        doc.dense = m;
        return doc;
    }

    if (!j.contains("family") || !j["family"].is_string()) {
        throw ParseError("family must be a string");
    }
    FamilySpec spec;
    try {
        spec.family = parse_family(j["family"].get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
    const json params = j.value("params", json::object());
    switch (spec.family) {
        case Family::PURE_ALPHA:
        case Family::GHZ_ALPHA:
            spec.parameter = param_at(params, "alpha");
            break;
        case Family::WERNER:
            spec.parameter = param_at(params, "p");
            break;
        case Family::BELL:
            break;
        case Family::GENERAL_BLOCH: {
            spec.bloch.r = vec3_at(params, "r");
            spec.bloch.s = vec3_at(params, "s");
            if (!params.contains("T") || !params["T"].is_array() || params["T"].size() != 3) {
                throw ParseError("params.T must be a 3x3 array");
            }
            for (size_t i = 0; i < 3; i++) {
                json row = json{{"row", params["T"][i]}};
                spec.bloch.t[i] = vec3_at(row, "row");
            }
            break;
        }
    }
    doc.family = spec;
    return doc;
}

DensityMatrix decode_state(const StateDocument &doc) {
    try {
        if (doc.dense) {
            return DensityMatrix::from_matrix(*doc.dense);
        }
        return make_state(*doc.family);
    } catch (const InvalidStateError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw InvalidStateError(e.what());
    }
}

std::string encode_dense(const DensityMatrix &rho) {
    return dense_json(rho).dump();
}

std::vector<MeasureKind> parse_measure_selector(std::string_view selector) {
    if (selector == "all") {
        return {kAllMeasures.begin(), kAllMeasures.end()};
    }
    try {
        return {parse_measure(selector)};
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

std::string cmd_evaluate(const StateDocument &doc, std::string_view measure_selector) {
    const std::vector<MeasureKind> measures = parse_measure_selector(measure_selector);
    const DensityMatrix rho = decode_state(doc);
    if (rho.nqubits() != 2 && rho.nqubits() != 3) {
        throw InvalidStateError("evaluate needs a 2- or 3-qubit state");
    }
    json reports = json::array();
    for (MeasureKind m : measures) {
        reports.push_back(rho.nqubits() == 2 ? bipartite_json(rho, m) : tripartite_json(rho, m));
    }
    json out{{"nqubits", rho.nqubits()}, {"reports", reports}};
    return out.dump(2) + "\n";
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.14e", x);
    return buf;
}

std::vector<double> sweep_grid(double from, double to, double step) {
    if (!(step > 0) || !std::isfinite(from) || !std::isfinite(to) || to < from) {
        throw std::invalid_argument("sweep needs finite from <= to and step > 0");
    }
    const auto n = static_cast<size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (size_t k = 0; k < n; k++) {
        grid[k] = std::min(from + static_cast<double>(k) * step, to);
    }
    return grid;
}

std::string sweep_csv(const SweepOptions &opts) {
    const double eps = epsilon(opts.measure);
    std::ostringstream out;
    auto row = [&](std::initializer_list<double> cells) {
        bool first = true;
        for (double x : cells) {
            if (!std::isfinite(x)) {
                throw ConsistencyError("non-finite value in sweep row");
            }
            out << (first ? "" : ",") << format_number(x);
            first = false;
        }
        out << '\n';
    };

    switch (opts.family) {
        case Family::PURE_ALPHA:
        case Family::WERNER: {
            out << (opts.family == Family::PURE_ALPHA ? "alpha" : "p") << ",S0,S12_half,S012_third,epsilon\n";
            for (double x : sweep_grid(opts.from, opts.to, opts.step)) {
                DensityMatrix rho = opts.family == Family::PURE_ALPHA ? pure_alpha(x) : werner(x);
                ShiftValues sv = shift_values(rho, opts.measure);
                row({x, sv.s[0], (sv.s[1] + sv.s[2]) / 2, sv.total() / 3, eps});
            }
            break;
        }
        case Family::GHZ_ALPHA: {
            out << "alpha,T1,T2,T3,bound_3eps,bound_9eps\n";
            for (double x : sweep_grid(opts.from, opts.to, opts.step)) {
                TripartiteReport r = tripartite_report(ghz_alpha(x), opts.measure);
                row({x, r.t1.value, r.t2.value, r.t3.value, 3 * eps, 9 * eps});
            }
            break;
        }
        default:
            throw std::invalid_argument("sweep supports pure_alpha, ghz_alpha and werner");
    }
    return out.str();
}

void cmd_sweep(const SweepOptions &opts, const std::string &path) {
    const std::string csv = sweep_csv(opts);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << csv;
    if (!file.flush()) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::string cmd_search(size_t nqubits, std::string_view criterion, MeasureKind measure, uint64_t samples,
                       uint64_t seed) {
    SearchResult r = search(nqubits, criterion, measure, samples, seed);
    json out{
        {"criterion", r.criterion},
        {"measure", measure_name(r.measure)},
        {"nqubits", r.nqubits},
        {"samples", r.samples},
        {"seed", seed},
        {"best_value", r.best_value},
        {"bound", r.bound},
        {"violated", r.best_value > r.bound + kViolationSlack},
        {"best_index", r.best_index},
        {"best_seed", r.best_seed},
        {"kind", r.kind},
        {"purity", r.best_state->purity()},
    };
    if (r.nqubits == 2) {
        TwoQubitBloch b = to_bloch(*r.best_state);
        out["bloch"] = json{{"r", b.r}, {"s", b.s}, {"T", b.t}};
    }
    out["state"] = dense_json(*r.best_state);
    return out.dump(2) + "\n";
}

CheckOutcome cmd_check(std::string_view suite, uint64_t seed, uint64_t samples) {
    std::vector<SuiteResult> results;
    if (suite == "all") {
        for (std::string_view name : suite_names()) {
            results.push_back(run_suite(name, seed, samples));
        }
    } else {
        results.push_back(run_suite(suite, seed, samples));
    }
    std::ostringstream text;
    bool passed = true;
    for (const SuiteResult &r : results) {
        passed = passed && r.passed();
        char line[512];
        std::snprintf(line, sizeof line, "%-28s %s samples=%llu failures=%llu worst_margin=%.6e (sample %llu) tol=%.0e\n",
                      r.name.c_str(), r.passed() ? "PASS" : "FAIL", static_cast<unsigned long long>(r.samples),
                      static_cast<unsigned long long>(r.failures), r.worst_margin,
                      static_cast<unsigned long long>(r.worst_index), r.tolerance);
        text << line;
    }
    return CheckOutcome{text.str(), passed};
}

int exit_code_for_current_exception() {
    try {
        throw;
    } catch (const ParseError &) {
        return kParseError;
    } catch (const IoError &) {
        return kIoError;
    } catch (const InvalidStateError &) {
        return kInvalidState;
    } catch (const ConsistencyError &) {
        return kConsistencyBreach;
    } catch (const std::invalid_argument &) {
        return kParseError;
    } catch (...) {
        return kIoError;
    }
}

}  // namespace naqc::cli
