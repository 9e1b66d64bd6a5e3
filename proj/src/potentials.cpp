#include "aforge/potentials.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "aforge/error.hpp"

namespace aforge {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0)
    raise(ErrorKind::Domain, std::string(what) + " must be positive");
}

// Z = 0 is accepted as the null potential; negative charges are expressed
// through the sign flag instead.
void require_charge(double Z) {
  if (!std::isfinite(Z) || Z < 0.0) raise(ErrorKind::Domain, "Z must be non-negative");
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    raise(ErrorKind::Parse, "bad number for '" + std::string(key) + "': '" + std::string(text) + "'");
  return value;
}

}  // namespace

PotentialSpec PotentialSpec::coulomb(double Z, Interaction sign) {
  require_charge(Z);
  PotentialSpec s;
  s.family = PotentialFamily::Coulomb;
  s.Z = Z;
  s.sign = sign;
  return s;
}

PotentialSpec PotentialSpec::inverse_square(double alpha) {
  require_positive(alpha, "alpha");
  PotentialSpec s;
  s.family = PotentialFamily::InverseSquare;
  s.alpha = alpha;
  s.sign = Interaction::Repulsive;
  return s;
}

PotentialSpec PotentialSpec::yukawa(double Z, double kappa, Interaction sign) {
  require_charge(Z);
  require_positive(kappa, "kappa");
  PotentialSpec s;
  s.family = PotentialFamily::Yukawa;
  s.Z = Z;
  s.kappa = kappa;
  s.sign = sign;
  return s;
}

PotentialSpec PotentialSpec::cutoff_coulomb(double Z, double r_cut, Interaction sign) {
  require_charge(Z);
  require_positive(r_cut, "r_cut");
  PotentialSpec s;
  s.family = PotentialFamily::CutoffCoulomb;
  s.Z = Z;
  s.r_cut = r_cut;
  s.sign = sign;
  return s;
}

double evaluate(const PotentialSpec& spec, const UnitSystem& units, double r) {
  if (!(r > 0.0)) raise(ErrorKind::Domain, "evaluate requires r > 0");
  const double q = spec.sign_factor() * spec.Z * units.e2();
  switch (spec.family) {
    case PotentialFamily::Coulomb: return q / r;
    case PotentialFamily::InverseSquare: return spec.alpha / (r * r);
    case PotentialFamily::Yukawa: return q * std::exp(-spec.kappa * r) / r;
    case PotentialFamily::CutoffCoulomb: return q / std::max(r, spec.r_cut);
  }
  return 0.0;
}

bool has_fourier_transform(const PotentialSpec& spec) noexcept {
  return spec.family != PotentialFamily::InverseSquare;
}

double fourier_transform_at(const PotentialSpec& spec, const UnitSystem& units, double k) {
  if (!(k > 0.0)) raise(ErrorKind::Domain, "fourier_transform_at requires k > 0");
  const double hbar = units.hbar();
  const double strength = 4.0 * kPi * spec.Z * units.e2() * hbar * hbar;
  switch (spec.family) {
    case PotentialFamily::Coulomb: return strength / (k * k);
    case PotentialFamily::Yukawa: {
      const double hk = hbar * spec.kappa;
      return strength / (k * k + hk * hk);
    }
    case PotentialFamily::CutoffCoulomb: {
      const double x = k * spec.r_cut / hbar;
      // sin(x)/x with a short series near the origin
      const double sinc = x < 1e-4 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
      return strength * sinc / (k * k);
    }
    case PotentialFamily::InverseSquare:
      raise(ErrorKind::NotRepresentable,
            "inverse-square potential has no closed-form 3D transform");
  }
  return 0.0;
}

CaseLabel case_for_exponent(double s) noexcept {
  if (s == 2.0) return CaseLabel::A;
  if (s == 1.0) return CaseLabel::B;
  if (s >= 0.0 && s < 1.0) return CaseLabel::C;
  return CaseLabel::Unsupported;
}

SingularityClass classify(const PotentialSpec& spec) noexcept {
  SingularityClass c;
  switch (spec.family) {
    case PotentialFamily::InverseSquare:
      c.small_x_exponent = 2.0;
      c.large_x_tail = TailKind::Screened;
      break;
    case PotentialFamily::Coulomb:
      c.small_x_exponent = 1.0;
      c.large_x_tail = TailKind::CoulombTail;
      break;
    case PotentialFamily::Yukawa:
      c.small_x_exponent = 1.0;
      c.large_x_tail = TailKind::Screened;
      break;
    case PotentialFamily::CutoffCoulomb:
      // bounded core, but the -Z e^2/r tail outside r_cut is unscreened
      c.small_x_exponent = 0.0;
      c.large_x_tail = TailKind::CoulombTail;
      break;
  }
  c.case_label = case_for_exponent(c.small_x_exponent);
  return c;
}

double coulomb_tail_coefficient(const PotentialSpec& spec, const UnitSystem& units) noexcept {
  if (classify(spec).large_x_tail != TailKind::CoulombTail) return 0.0;
  return 4.0 * kPi * spec.Z * units.e2() * units.hbar() * units.hbar();
}

PotentialSpec parse_potential(std::string_view text) {
  const std::string src = lower(trim(text));
  const auto colon = src.find(':');
  if (colon == std::string::npos)
    raise(ErrorKind::Parse, "potential spec needs '<family>:<key>=<value>,...': '" + src + "'");
  const std::string family(trim(std::string_view(src).substr(0, colon)));

  std::map<std::string, double> kv;
  std::string_view rest = std::string_view(src).substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) raise(ErrorKind::Parse, "expected key=value, got '" + std::string(item) + "'");
    const std::string key(trim(item.substr(0, eq)));
    if (kv.count(key)) raise(ErrorKind::Parse, "duplicate key '" + key + "'");
    kv[key] = parse_number(key, item.substr(eq + 1));
  }

  auto take = [&](const char* key) {
    auto it = kv.find(key);
    if (it == kv.end()) raise(ErrorKind::Parse, "missing key '" + std::string(key) + "' for " + family);
    const double v = it->second;
    kv.erase(it);
    return v;
  };
  auto finish = [&](PotentialSpec spec) {
    if (!kv.empty()) raise(ErrorKind::Parse, "unknown key '" + kv.begin()->first + "' for " + family);
    return spec;
  };

  if (family == "coulomb") {
    const double Z = take("z");
    return finish(PotentialSpec::coulomb(Z));
  }
  if (family == "inverse-square") {
    const double alpha = take("alpha");
    return finish(PotentialSpec::inverse_square(alpha));
  }
  if (family == "yukawa") {
    const double Z = take("z");
    const double kappa = take("kappa");
    return finish(PotentialSpec::yukawa(Z, kappa));
  }
  if (family == "cutoff-coulomb") {
    const double Z = take("z");
    const double rcut = take("rcut");
    return finish(PotentialSpec::cutoff_coulomb(Z, rcut));
  }
  raise(ErrorKind::Parse, "unknown potential family '" + family + "'");
}

const char* to_string(PotentialFamily family) noexcept {
  switch (family) {
    case PotentialFamily::Coulomb: return "coulomb";
    case PotentialFamily::InverseSquare: return "inverse-square";
    case PotentialFamily::Yukawa: return "yukawa";
    case PotentialFamily::CutoffCoulomb: return "cutoff-coulomb";
  }
  return "?";
}

const char* to_string(TailKind tail) noexcept {
  return tail == TailKind::CoulombTail ? "Coulomb tail" : "screened";
}

const char* to_string(CaseLabel label) noexcept {
  switch (label) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::Unsupported: return "unsupported";
  }
  return "?";
}

std::string to_string(const PotentialSpec& spec) {
  std::ostringstream os;
  os.precision(17);
  os << to_string(spec.family) << ':';
  switch (spec.family) {
    case PotentialFamily::Coulomb: os << "Z=" << spec.Z; break;
    case PotentialFamily::InverseSquare: os << "alpha=" << spec.alpha; break;
    case PotentialFamily::Yukawa: os << "Z=" << spec.Z << ",kappa=" << spec.kappa; break;
    case PotentialFamily::CutoffCoulomb: os << "Z=" << spec.Z << ",rcut=" << spec.r_cut; break;
  }
  if (spec.family != PotentialFamily::InverseSquare && spec.sign == Interaction::Repulsive)
    os << " (repulsive)";
  return os.str();
}

}  // namespace aforge
