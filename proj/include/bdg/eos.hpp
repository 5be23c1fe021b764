// Equation-of-state closure e = E(rho, p).
//
// Ideal gas is closed-form. Any other EOS is supplied as a pair of callables
// (specific internal energy and sound speed); pressure recovery then runs a
// bracketed root solve on p -> rho*E(rho,p) - rhoe, which requires E to be
// increasing in p. A stiffened-gas instance is bundled as the sample
// non-ideal EOS.

#ifndef BDG_EOS_HPP
#define BDG_EOS_HPP

#include <functional>

namespace bdg {

class EosModel {
 public:
  enum class Kind { Ideal, General };

  static EosModel ideal(double gamma);
  static EosModel general(std::function<double(double, double)> spec_internal_energy,
                          std::function<double(double, double)> sound_speed);
  // p = (gamma-1)*rho*e - gamma*p_inf, via the general interface.
  static EosModel stiffened(double gamma, double p_inf);

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }

  // e = E(rho, p)
  double internal_energy(double rho, double p) const;
  // inverse: p such that rho*E(rho,p) = rhoe (= rho*e); relative tol 1e-13
  double pressure(double rho, double rhoe) const;
  double sound_speed(double rho, double p) const;
  // wave-speed coefficient: ideal -> c_s; general -> max{p/(rho*sqrt(2e)), c_s}
  double chat(double rho, double p, double e) const;

 private:
  Kind kind_ = Kind::Ideal;
  double gamma_ = 1.4;
  std::function<double(double, double)> spec_e_;
  std::function<double(double, double)> sound_;
};

}  // namespace bdg

#endif
