// Copyright 2026 The fracvar Authors
// SPDX-License-Identifier: Apache-2.0

#include "fracvar/benchmark.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <stdexcept>

#include "fracvar/errors.hpp"
#include "fracvar/model.hpp"

namespace fracvar {
namespace {

std::string fmt(double v, const char* spec = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

int parse_int(std::string_view s) {
    int v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

void grade(std::vector<BenchmarkRow>& rows) {
    // Monotone decrease of E in n for each example, over the rows that solved.
    std::map<std::string, std::vector<BenchmarkRow*>> by_example;
    for (auto& r : rows) {
        if (r.error.empty()) by_example[r.example].push_back(&r);
    }
    std::map<std::string, bool> monotone;
    for (auto& [name, list] : by_example) {
        std::sort(list.begin(), list.end(),
                  [](const BenchmarkRow* l, const BenchmarkRow* r) { return l->n < r->n; });
        bool ok = true;
        for (std::size_t i = 1; i < list.size(); ++i) {
            if (list[i]->n != list[i - 1]->n && !(list[i]->E < list[i - 1]->E)) ok = false;
        }
        monotone[name] = ok;
    }
    for (auto& r : rows) {
        if (!r.error.empty()) {
            r.passed = false;
            continue;
        }
        const bool mono = monotone[r.example];
        if (r.E_ref) {
            r.strict = std::abs(*r.rel_dev) <= kReferenceRelTol;
            r.fallback = !r.strict && mono && r.E <= 2.0 * *r.E_ref && r.E >= 0.5 * *r.E_ref;
            r.passed = r.strict || r.fallback;
        } else {
            r.passed = mono;
        }
    }
}

} // namespace

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> table = {
        {1, 5, 1.9668e-4, 0.0264}, {1, 10, 2.8297e-4, 0.0158}, {1, 30, 9.8318e-4, 0.0065},
        {2, 5, 2.4053e-4, 0.0070}, {2, 10, 3.0209e-4, 0.0035}, {2, 30, 7.3457e-4, 0.0012},
        {3, 5, 0.0126, 1.4787},    {3, 20, 0.2012, 0.3006},    {3, 90, 26.355, 0.0618},
    };
    return table;
}

std::optional<ReferenceRow> find_reference(int example, int n) {
    for (const auto& r : reference_table()) {
        if (r.example == example && r.n == n) return r;
    }
    return std::nullopt;
}

std::vector<RowSpec> default_rows() {
    std::vector<RowSpec> rows;
    for (const auto& r : reference_table()) rows.push_back({r.example, r.n});
    return rows;
}

std::vector<RowSpec> parse_rows(std::string_view spec) {
    std::vector<RowSpec> rows;
    for (;;) {
        const std::size_t comma = spec.find(',');
        const std::string_view item = spec.substr(0, comma);
        if (item.empty()) throw std::invalid_argument("empty row in row list");
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("row '" + std::string(item) + "' is not of the form example:n");
        }
        const RowSpec row{parse_int(item.substr(0, colon)), parse_int(item.substr(colon + 1))};
        if (row.example < 1 || row.example > 3) {
            throw std::invalid_argument("example must be 1, 2 or 3 in row '" + std::string(item) + "'");
        }
        rows.push_back(row);
        if (comma == std::string_view::npos) break;
        spec.remove_prefix(comma + 1);
    }
    return rows;
}

BenchmarkRow run_row(const RowSpec& spec, const BenchmarkOptions& opts) {
    BenchmarkRow row;
    row.example = "example" + std::to_string(spec.example);
    row.n = spec.n;
    row.intervals = opts.count == MeshCount::nodes ? spec.n - 1 : spec.n;
    if (const auto ref = find_reference(spec.example, spec.n)) row.E_ref = ref->E;
    try {
        const SolveReport rep =
            solve(builtin_problem(row.example), row.intervals, opts.solve, opts.convention);
        row.T = rep.wall_seconds;
        row.E = rep.error_vs_exact.value_or(0.0);
        row.residual = rep.residual_inf_norm;
        row.path = rep.path;
        if (row.E_ref) row.rel_dev = (row.E - *row.E_ref) / *row.E_ref;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<BenchmarkRow> run_benchmark(const std::vector<RowSpec>& specs,
                                        const BenchmarkOptions& opts) {
    std::vector<BenchmarkRow> rows;
    if (opts.parallel) {
        std::vector<std::future<BenchmarkRow>> jobs;
        for (const auto& s : specs) jobs.push_back(std::async(std::launch::async, run_row, s, opts));
        for (auto& j : jobs) rows.push_back(j.get());
    } else {
        for (const auto& s : specs) rows.push_back(run_row(s, opts));
    }
    grade(rows);
    return rows;
}

bool all_passed(const std::vector<BenchmarkRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const BenchmarkRow& r) { return r.passed; });
}

bool any_fallback(const std::vector<BenchmarkRow>& rows) {
    return std::any_of(rows.begin(), rows.end(), [](const BenchmarkRow& r) { return !r.strict; });
}

namespace {

std::string status(const BenchmarkRow& r) {
    if (!r.error.empty()) return "error";
    if (r.strict) return "pass";
    if (r.fallback) return "fallback";
    return r.passed ? (r.E_ref ? "pass" : "ok") : "fail";
}

} // namespace

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
    out << "example,n,intervals,path,T,E,E_ref,rel_dev,status\n";
    for (const auto& r : rows) {
        out << r.example << ',' << r.n << ',' << r.intervals << ',' << to_string(r.path) << ','
            << fmt(r.T) << ',' << fmt(r.E, "%.17g") << ',' << (r.E_ref ? fmt(*r.E_ref) : "") << ','
            << (r.rel_dev ? fmt(*r.rel_dev, "%.4f") : "") << ',' << status(r) << '\n';
    }
}

void write_benchmark_markdown(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
    out << "| example | n | intervals | path | T [s] | E | E (reference) | rel. dev. | status |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        out << "| " << r.example << " | " << r.n << " | " << r.intervals << " | "
            << to_string(r.path) << " | " << fmt(r.T, "%.4e") << " | " << fmt(r.E, "%.4f")
            << " | " << (r.E_ref ? fmt(*r.E_ref, "%.4f") : "") << " | "
            << (r.rel_dev ? fmt(100.0 * *r.rel_dev, "%+.2f%%") : "") << " | " << status(r)
            << " |\n";
    }
}

} // namespace fracvar
