#pragma once

#include <string>

#include "aforge/anomaly.hpp"
#include "aforge/samples.hpp"

namespace aforge {

enum class ReportFormat { KeyValue, Csv };

// Key-value: one key=value per line with the keys case, a_n_reduced,
// a_n_status, a_e_reduced, a_e_status, gamma, gamma_err, fit_residual.
// Csv: the same keys as a header and one row at full precision.
std::string emit_report(const AnomalyResult& result, ReportFormat format = ReportFormat::KeyValue);

// Header `lambda,w,err,source`, 17 significant digits.
std::string emit_trace_csv(const TraceSamples& samples);

}  // namespace aforge
