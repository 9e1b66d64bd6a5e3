#include "aforge/report.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace aforge {
namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string readable(double v) {
  const double a = std::abs(v);
  if (a >= 1e-3 && a < 1e6) return fmt("%.4f", v);
  return fmt("%.4e", v);
}

std::string value_field(const AnomalyValue& v) {
  switch (v.status) {
    case AnomalyStatus::Zero: return "0 (below tolerance)";
    case AnomalyStatus::Divergent: return "divergent";
    case AnomalyStatus::Finite: return readable(v.reduced);
  }
  return "";
}

std::string status_field(const AnomalyValue& v) {
  std::string s = to_string(v.status);
  if (v.status == AnomalyStatus::Divergent) s += " growth_exponent=" + fmt("%.2f", v.growth_exponent);
  return s;
}

}  // namespace

std::string emit_report(const AnomalyResult& r, ReportFormat format) {
  const std::string na = "n/a";
  if (format == ReportFormat::KeyValue) {
    std::string out;
    auto line = [&](const char* k, const std::string& v) { out += std::string(k) + "=" + v + "\n"; };
    line("case", to_string(r.case_label));
    line("a_n_reduced", value_field(r.n));
    line("a_n_status", status_field(r.n));
    line("a_e_reduced", value_field(r.e));
    line("a_e_status", status_field(r.e));
    line("gamma", r.fitted ? fmt("%.4f", r.fit.gamma) : na);
    line("gamma_err", r.fitted ? fmt("%.2e", r.fit.gamma_err) : na);
    line("fit_residual", r.fitted ? fmt("%.2e", r.fit.residual) : na);
    return out;
  }
  auto full = [](const AnomalyValue& v) {
    return v.status == AnomalyStatus::Divergent ? std::string("inf") : fmt("%.17g", v.reduced);
  };
  std::string out = "case,a_n_reduced,a_n_status,a_e_reduced,a_e_status,gamma,gamma_err,fit_residual\n";
  out += std::string(to_string(r.case_label)) + "," + full(r.n) + "," + to_string(r.n.status) + "," +
         full(r.e) + "," + to_string(r.e.status) + "," +
         (r.fitted ? fmt("%.17g", r.fit.gamma) : na) + "," +
         (r.fitted ? fmt("%.17g", r.fit.gamma_err) : na) + "," +
         (r.fitted ? fmt("%.17g", r.fit.residual) : na) + "\n";
  return out;
}

std::string emit_trace_csv(const TraceSamples& s) {
  std::string out = "lambda,w,err,source\n";
  for (const auto& e : s.entries)
    out += fmt("%.17g", e.lambda) + "," + fmt("%.17g", e.w) + "," + fmt("%.17g", e.error) + "," +
           to_string(s.source) + "\n";
  return out;
}

}  // namespace aforge
