#pragma once

// JSON wire format for matrices and run reports.
//
// A matrix file is {"rows": [[[re, im], ...], ...]}: one array per row, one
// [re, im] pair per entry, all entries finite doubles. Serialization uses
// ordered_json and shortest-round-trip doubles, so a value survives
// dump -> parse -> dump byte-identically and seeded runs can be compared as
// flat bytes. Non-finite doubles are never written into a matrix; metric
// values may be infinite (the membership sentinel), which nlohmann renders as
// JSON null.

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fundop/complexmat.hpp"
#include "fundop/errors.hpp"
#include "fundop/report.hpp"

namespace fundop {

using Json = nlohmann::ordered_json;

inline Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index k = 0; k < m.cols(); ++k)
            row.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
        rows.push_back(std::move(row));
    }
    Json j;
    j["rows"] = std::move(rows);
    return j;
}

inline Mat mat_from_json(const Json& j, const std::string& where = "matrix") {
    if (!j.is_object() || !j.contains("rows"))
        throw ParseFailure(where + ": expected an object with a rows array");
    const Json& rows = j["rows"];
    if (!rows.is_array() || rows.empty())
        throw ParseFailure(where + ": rows must be a non-empty array");
    const Json& first = rows[0];
    if (!first.is_array() || first.empty())
        throw ParseFailure(where + ": each row must be a non-empty array");
    const Index n_rows = static_cast<Index>(rows.size());
    const Index n_cols = static_cast<Index>(first.size());
    Mat m(n_rows, n_cols);
    for (Index i = 0; i < n_rows; ++i) {
        const Json& row = rows[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != n_cols)
            throw ParseFailure(where + ": row " + std::to_string(i) + " must have " +
                               std::to_string(n_cols) + " entries");
        for (Index k = 0; k < n_cols; ++k) {
            const Json& e = row[static_cast<size_t>(k)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
                throw ParseFailure(where + ": entry (" + std::to_string(i) + ", " +
                                   std::to_string(k) + ") must be [re, im]");
            const double re = e[0].get<double>();
            const double im = e[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw ParseFailure(where + ": entry (" + std::to_string(i) + ", " +
                                   std::to_string(k) + ") must be finite");
            m(i, k) = Complex(re, im);
        }
    }
    return m;
}

inline Json report_to_json(const Report& rep) {
    Json j;
    j["name"] = rep.name;
    j["pass"] = rep.pass();
    Json checks = Json::array();
    for (const Check& c : rep.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["residual"] = c.residual;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    Json metrics = Json::object();
    for (const auto& [key, value] : rep.metrics) metrics[key] = value;
    j["metrics"] = std::move(metrics);
    return j;
}

// One command invocation: named string inputs (file paths, parameters),
// string-valued facts (classifications), grouped checks, and named matrix
// outputs. The run passes iff every check in every group passes.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<Report> reports;
    std::vector<std::pair<std::string, Mat>> outputs;

    bool pass() const {
        for (const Report& r : reports)
            if (!r.pass()) return false;
        return true;
    }
};

// Flattened single-document form: {"command", "inputs", "facts",
// "checks": [{"name", "residual", "tolerance", "pass"}], "metrics",
// "outputs": {name: matrix}, "pass"}. Check and metric names carry their
// group name as a dotted prefix.
inline Json run_report_to_json(const RunReport& run) {
    Json j;
    j["command"] = run.command;
    Json inputs = Json::object();
    for (const auto& [key, value] : run.inputs) inputs[key] = value;
    j["inputs"] = std::move(inputs);
    Json facts = Json::object();
    for (const auto& [key, value] : run.facts) facts[key] = value;
    j["facts"] = std::move(facts);
    Json checks = Json::array();
    for (const Report& r : run.reports)
        for (const Check& c : r.checks) {
            Json cj;
            cj["name"] = r.name.empty() ? c.name : r.name + "." + c.name;
            cj["residual"] = c.residual;
            cj["tolerance"] = c.tolerance;
            cj["pass"] = c.pass;
            checks.push_back(std::move(cj));
        }
    j["checks"] = std::move(checks);
    Json metrics = Json::object();
    for (const Report& r : run.reports)
        for (const auto& [key, value] : r.metrics)
            metrics[r.name.empty() ? key : r.name + "." + key] = value;
    j["metrics"] = std::move(metrics);
    Json outputs = Json::object();
    for (const auto& [key, value] : run.outputs) outputs[key] = mat_to_json(value);
    j["outputs"] = std::move(outputs);
    j["pass"] = run.pass();
    return j;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseFailure(where + ": " + e.what());
    }
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseFailure("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseFailure("cannot open " + path + " for writing");
    out << dump_json(j);
}

inline Mat load_matrix_file(const std::string& path) {
    return mat_from_json(load_json_file(path), path);
}

} // namespace fundop
