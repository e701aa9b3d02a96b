#pragma once

// JSON report fragments. Every position is rendered as its label.

#include <string_view>
#include <vector>

#include "sincov/analysis.hpp"
#include "sincov/genbench.hpp"
#include "sincov/io.hpp"
#include "sincov/metric.hpp"
#include "sincov/reverse.hpp"

namespace sincov {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::size_t kReportViolationCap = 1000;

using Labels = std::vector<std::string>;

Json tolerance_json(const Tolerance& tol);

/// {"command", "input", "result", "tolerance", "version"}
Json envelope(std::string_view command, Json input, Json result, const Tolerance& tol);

Json violations_json(const ViolationReport& r, const Labels& labels);
Json audit_json(const AuditReport& r);
Json fsp_json(const FspReport& r);
Json zero_structure_json(const ZeroStructure& s, const Labels& labels);
Json oracle_json(std::string_view claim, const OracleResult& r, const Labels& labels);
Json bench_json(const BenchReport& r);
Json cycle_json(const CycleError& e, const Labels& labels);

template <class T>
Json potential_json(const BasicPotential<T>& p, const Labels& labels);

template <class T>
Json quotient_json(const QuotientMap<T>& q, const Labels& labels);

}  // namespace sincov
