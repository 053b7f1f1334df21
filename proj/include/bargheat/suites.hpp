#pragma once

#include "bargheat/verify.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bargheat::suites {

using verify::DefectReport;
using Reports = std::vector<DefectReport>;

struct SuiteOptions {
    std::optional<double> a; // restrict every parameter sweep to this a
    int order = 64;
    double tolerance = 1e-8; // replaces the default 1e-8 checks
};

/// isometry, intertwine, residual, semigroup, lemma23, errata.
const std::vector<std::string>& suite_names();

/// UsageError for an unknown name.
Reports run_suite(std::string_view name, const SuiteOptions& options = {});

/// The nine acceptance criteria, numbered from 1.
constexpr int kCriteria = 9;
std::string_view criterion_title(int n);
Reports criterion(int n, const SuiteOptions& options = {});

/// One line per criterion: the worst member of `parts` (by defect/tolerance).
DefectReport summarize(int n, const Reports& parts);

/// criterion(n) summarized for n = 1..9.
Reports table(const SuiteOptions& options = {});

// --- test material shared with the unit tests ------------------------------

/// Unit-norm real-side functions with degree <= 4 and alpha in {-a, -a/2}.
std::vector<PolyGauss> isometry_set(double a);
/// Real-side functions of degree <= 8, alpha in {-a, -a/2, -3a/4}, beta in {0, 1, i}.
std::vector<PolyGauss> intertwine_set(double a);
/// (d/dx - a x)^n exp(-a x^2 / 2).
PolyGauss hermite_state(double a, int n);

} // namespace bargheat::suites
