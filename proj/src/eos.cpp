#include "bdg/eos.hpp"

#include <cmath>
#include <utility>

#include "bdg/errors.hpp"

namespace bdg {

EosModel EosModel::ideal(double gamma) {
  if (!(gamma > 1.0)) throw DomainError("ideal EOS requires gamma > 1");
  EosModel m;
  m.kind_ = Kind::Ideal;
  m.gamma_ = gamma;
  return m;
}

EosModel EosModel::general(std::function<double(double, double)> spec_internal_energy,
                           std::function<double(double, double)> sound_speed) {
  EosModel m;
  m.kind_ = Kind::General;
  m.gamma_ = 0.0;
  m.spec_e_ = std::move(spec_internal_energy);
  m.sound_ = std::move(sound_speed);
  return m;
}

EosModel EosModel::stiffened(double gamma, double p_inf) {
  if (!(gamma > 1.0) || !(p_inf >= 0.0))
    throw DomainError("stiffened EOS requires gamma > 1, p_inf >= 0");
  return general(
      [gamma, p_inf](double rho, double p) {
        return (p + gamma * p_inf) / ((gamma - 1.0) * rho);
      },
      [gamma, p_inf](double rho, double p) {
        return std::sqrt(gamma * (p + p_inf) / rho);
      });
}

double EosModel::internal_energy(double rho, double p) const {
  if (kind_ == Kind::Ideal) return p / ((gamma_ - 1.0) * rho);
  return spec_e_(rho, p);
}

double EosModel::pressure(double rho, double rhoe) const {
  if (kind_ == Kind::Ideal) return (gamma_ - 1.0) * rhoe;

  // Bracket a sign change of f(p) = rho*E(rho,p) - rhoe, then bisect to
  // relative tolerance 1e-13. Monotonicity of E in p is a documented
  // requirement on user-supplied closures; the bracket check catches
  // violations (and targets below rho*E(rho,0+)).
  const auto f = [&](double p) { return rho * spec_e_(rho, p) - rhoe; };
  double lo = 0.0;
  double flo = f(lo);
  if (flo >= 0.0)
    throw NumericError("EOS pressure recovery: no positive-pressure root (rho*E(rho,0) >= target)");
  double hi = rhoe > 0.0 ? rhoe : 1.0;
  double fhi = f(hi);
  int grow = 0;
  while (fhi < 0.0) {
    if (++grow > 200) throw NumericError("EOS pressure recovery: failed to bracket root");
    hi *= 2.0;
    fhi = f(hi);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-13 * hi) return 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

double EosModel::sound_speed(double rho, double p) const {
  if (kind_ == Kind::Ideal) return std::sqrt(gamma_ * p / rho);
  return sound_(rho, p);
}

double EosModel::chat(double rho, double p, double e) const {
  if (kind_ == Kind::Ideal) return std::sqrt(gamma_ * p / rho);
  const double cs = sound_(rho, p);
  const double pv = p / (rho * std::sqrt(2.0 * e));
  return pv > cs ? pv : cs;
}

}  // namespace bdg
