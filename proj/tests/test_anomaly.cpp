#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "aforge/anomaly.hpp"
#include "aforge/error.hpp"
#include "aforge/perturbation.hpp"
#include "aforge/report.hpp"
#include "aforge/scenarios.hpp"

using namespace aforge;

namespace {

TraceSamples power_law(double c, double gamma, double lo = 10.0, double hi = 1000.0, std::size_t n = 9) {
  TraceSamples s;
  s.source = TraceSource::Oracle;
  for (double l : geometric_grid(lo, hi, n)) s.entries.push_back({l, c * std::pow(l, -gamma), 0.0});
  return s;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("extraction on exact power laws") {
  const auto a = extract_anomalies(power_law(5.0, 1.0));
  CHECK(a.n.status == AnomalyStatus::Finite);
  CHECK(a.n.reduced == doctest::Approx(10.0).epsilon(1e-10));
  CHECK(a.e.status == AnomalyStatus::Zero);

  const auto b = extract_anomalies(power_law(-3.0, 2.0));
  CHECK(b.n.status == AnomalyStatus::Zero);
  CHECK(b.e.status == AnomalyStatus::Finite);
  CHECK(b.e.reduced == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(b.fitted);
}

TEST_CASE("extraction truth table") {
  const auto g1 = extract_anomalies(power_law(-0.4, 1.0));
  CHECK(g1.n.status == AnomalyStatus::Finite);
  CHECK(g1.e.status == AnomalyStatus::Zero);

  const auto g15 = extract_anomalies(power_law(-0.4, 1.5));
  CHECK(g15.n.status == AnomalyStatus::Zero);
  CHECK(g15.e.status == AnomalyStatus::Divergent);
  CHECK(g15.e.growth_exponent == doctest::Approx(0.5).epsilon(1e-10));
  // 2 c (1 - gamma) Lambda^(1/2)
  CHECK(g15.e.divergence_coefficient == doctest::Approx(0.4).epsilon(1e-10));

  const auto g2 = extract_anomalies(power_law(-0.4, 2.0));
  CHECK(g2.n.status == AnomalyStatus::Zero);
  CHECK(g2.e.status == AnomalyStatus::Finite);

  // steeper than 2: both vanish; shallower than 1: the number anomaly diverges
  const auto g3 = extract_anomalies(power_law(-0.4, 3.0));
  CHECK(g3.n.status == AnomalyStatus::Zero);
  CHECK(g3.e.status == AnomalyStatus::Zero);
  const auto g05 = extract_anomalies(power_law(-0.4, 0.5));
  CHECK(g05.n.status == AnomalyStatus::Divergent);
  CHECK(g05.e.status == AnomalyStatus::Divergent);

  // near-critical exponents snap
  const auto snap = extract_anomalies(power_law(-0.4, 1.03));
  CHECK(snap.n.status == AnomalyStatus::Finite);
  CHECK(snap.e.status == AnomalyStatus::Zero);
}

TEST_CASE("extraction edge cases") {
  TraceSamples zeros;
  for (double l : {10.0, 20.0, 40.0, 80.0}) zeros.entries.push_back({l, 0.0, 0.0});
  const auto z = extract_anomalies(zeros);
  CHECK_FALSE(z.fitted);
  CHECK(z.n.status == AnomalyStatus::Zero);
  CHECK(z.e.status == AnomalyStatus::Zero);

  TraceSamples noisy = power_law(1.0, 1.0);
  for (std::size_t i = 0; i < noisy.entries.size(); ++i) noisy.entries[i].w *= (i % 2 ? 3.0 : 0.3);
  try {
    extract_anomalies(noisy);
    FAIL("expected NotPowerLaw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPowerLaw);
  }

  // an amplitude under the floor is Zero even at a finite exponent
  const auto tiny = extract_anomalies(power_law(1e-9, 1.0));
  CHECK(tiny.n.status == AnomalyStatus::Zero);
}

TEST_CASE("closed forms") {
  const auto au = UnitSystem::atomic();
  CHECK(delta_an_case_a_closed_form(50.0, au) == doctest::Approx(-10.0 / 36.0));
  CHECK(delta_an_case_a_closed_form(200.0, au) == doctest::Approx(-20.0 / 36.0));
  CHECK(delta_an_case_a_closed_form(0.0, au) == 0.0);
  CHECK(delta_an_case_a_closed_form(50.0, UnitSystem::make(0.5, 1.0, 1.0)) == doctest::Approx(-20.0 / 36.0));
  CHECK(delta_ae_case_b_closed_form(1.0, au) == doctest::Approx(0.25));
  CHECK(delta_ae_case_b_closed_form(3.0, au) == doctest::Approx(2.25));
  CHECK(delta_ae_case_b_closed_form(0.0, au) == 0.0);
  CHECK_THROWS_AS(delta_an_case_a_closed_form(-1.0, au), Error);
}

TEST_CASE("case B end to end") {
  const auto au = UnitSystem::atomic();
  for (double Z : {1.0, 2.0}) {
    const auto s = sample_w(PotentialSpec::coulomb(Z), au, geometric_grid(10, 100, 12), Order::Second);
    const auto r = extract_anomalies(s);
    CHECK(r.case_label == CaseLabel::B);
    CHECK(r.e.status == AnomalyStatus::Finite);
    CHECK(r.e.reduced == doctest::Approx(delta_ae_case_b_closed_form(Z, au)).epsilon(1e-2));
    CHECK(r.n.status == AnomalyStatus::Zero);
  }
  // closed-form samples give the value exactly
  TraceSamples cf;
  for (double l : geometric_grid(10, 1000, 9)) cf.entries.push_back({l, w2_closed_form(1.0, au, l), 0.0});
  CHECK(extract_anomalies(cf).e.reduced == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("first-order divergence classification") {
  const auto au = UnitSystem::atomic();
  const auto grid = default_lambda_grid();
  const auto c1 = classify_divergence_first_order(PotentialSpec::coulomb(1.0), au, grid);
  CHECK(c1.e.status == AnomalyStatus::Divergent);
  CHECK(std::abs(c1.e.growth_exponent - 0.5) < 0.05);
  CHECK(c1.n.status == AnomalyStatus::Zero);
  const auto c2 = classify_divergence_first_order(PotentialSpec::coulomb(2.0), au, grid);
  CHECK(c2.e.divergence_coefficient / c1.e.divergence_coefficient == doctest::Approx(2.0).epsilon(0.02));
  const auto y = classify_divergence_first_order(PotentialSpec::yukawa(1.0, 0.5), au, grid);
  CHECK(y.n.status == AnomalyStatus::Zero);
  CHECK(y.e.status == AnomalyStatus::Zero);
}

TEST_CASE("scenario checks") {
  const auto c = make_check("x", 1.004, 1.0, 0.01, true);
  CHECK(c.passed);
  CHECK(format_check(c).find("PASS") != std::string::npos);
  CHECK_FALSE(make_check("x", 1.2, 1.0, 0.01, true).passed);
  CHECK_FALSE(make_check("x", NAN, 1.0, 0.01, true).passed);
  CHECK(make_check("x", 1.52, 1.5, 0.05, false).passed);
  CHECK_THROWS_AS(case_a_study(10.0, UnitSystem::atomic()), Error);
}

TEST_CASE("key-value report") {
  const auto b = extract_anomalies(power_law(-0.125, 2.0));
  const auto kv = lines(emit_report(b));
  REQUIRE(kv.size() == 8);
  const char* keys[] = {"case", "a_n_reduced", "a_n_status", "a_e_reduced", "a_e_status", "gamma", "gamma_err",
                        "fit_residual"};
  for (int i = 0; i < 8; ++i) CHECK(kv[i].rfind(std::string(keys[i]) + "=", 0) == 0);
  CHECK(kv[1] == "a_n_reduced=0 (below tolerance)");
  CHECK(kv[2] == "a_n_status=zero");
  CHECK(kv[3] == "a_e_reduced=0.2500");
  CHECK(kv[4] == "a_e_status=finite");
  CHECK(kv[5] == "gamma=2.0000");

  const auto d = lines(emit_report(extract_anomalies(power_law(-1.0, 1.5))));
  CHECK(d[3] == "a_e_reduced=divergent");
  CHECK(d[4] == "a_e_status=divergent growth_exponent=0.50");

  TraceSamples zeros;
  for (double l : {10.0, 20.0, 40.0, 80.0}) zeros.entries.push_back({l, 0.0, 0.0});
  const auto z = lines(emit_report(extract_anomalies(zeros)));
  CHECK(z[5] == "gamma=n/a");
}

TEST_CASE("csv report and trace csv") {
  const auto r = extract_anomalies(power_law(-0.125, 2.0));
  const auto csv = lines(emit_report(r, ReportFormat::Csv));
  REQUIRE(csv.size() == 2);
  CHECK(csv[0] == "case,a_n_reduced,a_n_status,a_e_reduced,a_e_status,gamma,gamma_err,fit_residual");

  TraceSamples s;
  s.source = TraceSource::SecondOrder;
  s.entries = {{10.0, -0.1, 1e-12}, {20.0, 1.0 / 3.0, 0.0}};
  const auto t = lines(emit_trace_csv(s));
  REQUIRE(t.size() == 3);
  CHECK(t[0] == "lambda,w,err,source");
  CHECK(t[2].rfind("20,0.33333333333333331,0,second-order", 0) == 0);
  CHECK(std::stod(t[1].substr(3)) == -0.1);
}
