#pragma once

#include <string>
#include <vector>

namespace ewmt::weingarten {

enum class EllipticFamily { zero, sqrt_scaled, custom_polynomial };

/// The function f in the Weingarten relation H = f(H^2 - K), of minimal type:
/// f(0) = 0 and 4t f'(t)^2 < 1 on (-epsilon, infinity).
///
/// sqrt_scaled is f(t) = alpha*sqrt(t), which is not C^1 at 0; it is
/// evaluated only for t >= eval_floor and set to 0 below. In the rotational
/// setting the argument H^2-K = ((k1-k2)/2)^2 stays strictly positive away
/// from umbilics, so the clamp is never reached along computed profiles.
struct EllipticFunction {
  EllipticFamily family = EllipticFamily::zero;
  double alpha = 0.0;                 // sqrt_scaled scale
  std::vector<double> coefficients;   // custom_polynomial: f(t) = c1*t + c2*t^2 + ...
  double epsilon = 1e-3;              // domain floor: f defined on (-epsilon, inf)
  double eval_floor = 1e-14;          // sqrt_scaled clamp threshold

  static EllipticFunction zero();
  static EllipticFunction sqrt_scaled(double alpha, double epsilon = 1e-3,
                                      double eval_floor = 1e-14);
  static EllipticFunction polynomial(std::vector<double> c1_up, double epsilon = 1e-3);

  std::string describe() const;
};

double f_eval(const EllipticFunction& F, double t);
double f_prime(const EllipticFunction& F, double t);

/// sup over a sampling grid of 4t f'(t)^2; the relation is elliptic when
/// this stays strictly below 1. Grid: n log-spaced points in
/// (max(eval_floor,1e-12), t_max] plus n linear points in (-epsilon+1e-6, 0).
double ellipticity_margin(const EllipticFunction& F, double t_max, int n);

/// True iff g(x) = x - f(x^2) and gbar(x) = x + f(x^2) are strictly
/// increasing on an n-point grid over [x_min, x_max] and g(0) = gbar(0) = 0
/// within 1e-12. Equivalent to ellipticity with f(0)=0.
bool monotone_check(const EllipticFunction& F, double x_min, double x_max, int n);

struct AsymptoticLimits {
  double lower;  // lim_{r -> -inf} (r - f(r^2)), in [-inf, 0)
  double upper;  // lim_{r -> +inf} (r - f(r^2)), in (0, +inf]
};

/// Probes r - f(r^2) at r = -+ r_probe * 2^k, k = 0..20. A side is reported
/// as -+infinity when the probe values grow monotonically in magnitude past
/// 1e6; otherwise the last probed value is returned.
AsymptoticLimits asymptotic_limits(const EllipticFunction& F, double r_probe);

const char* to_string(EllipticFamily f);

}  // namespace ewmt::weingarten
