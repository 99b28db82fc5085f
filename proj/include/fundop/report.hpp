#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace fundop {

// One named residual check. `pass` is fixed at construction so a report is a
// plain value that can be serialized and compared.
struct Check {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

inline Check make_check(std::string name, double residual, double tolerance) {
    Check c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = residual <= tolerance;
    return c;
}

// A bundle of checks produced by one verification routine, plus free-form
// numeric metrics (decay certificates, spectral data) that carry no pass/fail
// meaning of their own.
struct Report {
    std::string name;
    std::vector<Check> checks;
    std::map<std::string, double> metrics;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }

    double max_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = std::max(r, c.residual);
        return r;
    }

    void add(std::string name_, double residual, double tolerance) {
        checks.push_back(make_check(std::move(name_), residual, tolerance));
    }

    void absorb(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        metrics.insert(other.metrics.begin(), other.metrics.end());
    }
};

} // namespace fundop
