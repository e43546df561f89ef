#include "ewmt/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "ewmt/errors.hpp"

namespace ewmt::weingarten {

EllipticFunction EllipticFunction::zero() { return {}; }

EllipticFunction EllipticFunction::sqrt_scaled(double alpha, double epsilon, double eval_floor) {
  EllipticFunction F;
  F.family = EllipticFamily::sqrt_scaled;
  F.alpha = alpha;
  F.epsilon = epsilon;
  F.eval_floor = eval_floor;
  return F;
}

EllipticFunction EllipticFunction::polynomial(std::vector<double> c1_up, double epsilon) {
  EllipticFunction F;
  F.family = EllipticFamily::custom_polynomial;
  F.coefficients = std::move(c1_up);
  F.epsilon = epsilon;
  return F;
}

static void check_domain(const EllipticFunction& F, double t, const char* who) {
  if (t <= -F.epsilon) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s: argument %.6g at or below domain floor -%.6g", who, t,
                  F.epsilon);
    throw ewmt::DomainError(buf);
  }
}

double f_eval(const EllipticFunction& F, double t) {
  check_domain(F, t, "f_eval");
  switch (F.family) {
    case EllipticFamily::zero:
      return 0.0;
    case EllipticFamily::sqrt_scaled:
      return t < F.eval_floor ? 0.0 : F.alpha * std::sqrt(t);
    case EllipticFamily::custom_polynomial: {
      double v = 0.0;
      for (auto it = F.coefficients.rbegin(); it != F.coefficients.rend(); ++it) v = v * t + *it;
      return v * t;  // no constant term: f(0) = 0 by construction
    }
  }
  return 0.0;
}

double f_prime(const EllipticFunction& F, double t) {
  check_domain(F, t, "f_prime");
  switch (F.family) {
    case EllipticFamily::zero:
      return 0.0;
    case EllipticFamily::sqrt_scaled:
      if (t < F.eval_floor || t <= 0.0) return 0.0;
      return F.alpha / (2.0 * std::sqrt(t));
    case EllipticFamily::custom_polynomial: {
      double v = 0.0;
      for (std::size_t k = F.coefficients.size(); k-- > 0;)
        v = v * t + static_cast<double>(k + 1) * F.coefficients[k];
      return v;
    }
  }
  return 0.0;
}

double ellipticity_margin(const EllipticFunction& F, double t_max, int n) {
  if (n < 2) throw std::invalid_argument("ellipticity_margin: n must be >= 2");
  if (!(t_max > 0.0)) throw std::invalid_argument("ellipticity_margin: t_max must be positive");

  double sup = -std::numeric_limits<double>::infinity();
  const double lo = std::max(F.eval_floor, 1e-12);
  for (int k = 0; k < n; ++k) {
    const double t = lo * std::pow(t_max / lo, static_cast<double>(k) / (n - 1));
    const double fp = f_prime(F, t);
    sup = std::max(sup, 4.0 * t * fp * fp);
  }
  const double neg_lo = -F.epsilon + 1e-6;
  if (neg_lo < 0.0) {
    for (int k = 1; k <= n; ++k) {
      const double t = neg_lo * (1.0 - static_cast<double>(k) / (n + 1));
      const double fp = f_prime(F, t);
      sup = std::max(sup, 4.0 * t * fp * fp);
    }
  }
  return sup;
}

bool monotone_check(const EllipticFunction& F, double x_min, double x_max, int n) {
  if (n < 3) throw std::invalid_argument("monotone_check: n must be >= 3");
  if (!(x_max > x_min)) throw std::invalid_argument("monotone_check: empty interval");

  if (std::abs(f_eval(F, 0.0)) > 1e-12) return false;

  double g_prev = 0.0, gb_prev = 0.0;
  for (int k = 0; k < n; ++k) {
    const double x = x_min + (x_max - x_min) * static_cast<double>(k) / (n - 1);
    const double fx2 = f_eval(F, x * x);
    const double g = x - fx2;
    const double gb = x + fx2;
    if (k > 0 && (g <= g_prev || gb <= gb_prev)) return false;
    g_prev = g;
    gb_prev = gb;
  }
  return true;
}

AsymptoticLimits asymptotic_limits(const EllipticFunction& F, double r_probe) {
  if (!(r_probe > 0.0)) throw std::invalid_argument("asymptotic_limits: r_probe must be positive");

  auto probe_side = [&](double sign) {
    double prev_mag = -1.0;
    bool monotone = true;
    double value = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const double r = sign * r_probe * std::ldexp(1.0, k);
      value = r - f_eval(F, r * r);
      const double mag = std::abs(value);
      if (mag <= prev_mag) monotone = false;
      prev_mag = mag;
    }
    if (monotone && prev_mag > 1e6)
      return sign * std::numeric_limits<double>::infinity() * (value >= 0.0 ? sign : -sign);
    return value;
  };

  AsymptoticLimits lim;
  // sign of the diverging limit follows the value's sign, not the probe side
  auto side = [&](double sign) {
    double prev_mag = -1.0;
    bool monotone = true;
    double value = 0.0;
    for (int k = 0; k <= 20; ++k) {
      const double r = sign * r_probe * std::ldexp(1.0, k);
      value = r - f_eval(F, r * r);
      const double mag = std::abs(value);
      if (mag <= prev_mag) monotone = false;
      prev_mag = mag;
    }
    if (monotone && prev_mag > 1e6)
      return std::copysign(std::numeric_limits<double>::infinity(), value);
    return value;
  };
  (void)probe_side;
  lim.lower = side(-1.0);
  lim.upper = side(+1.0);
  return lim;
}

const char* to_string(EllipticFamily f) {
  switch (f) {
    case EllipticFamily::zero: return "zero";
    case EllipticFamily::sqrt_scaled: return "sqrt_scaled";
    case EllipticFamily::custom_polynomial: return "custom_polynomial";
  }
  return "?";
}

std::string EllipticFunction::describe() const {
  char buf[64];
  switch (family) {
    case EllipticFamily::zero:
      return "zero";
    case EllipticFamily::sqrt_scaled:
      std::snprintf(buf, sizeof buf, "sqrt_scaled(%.6g)", alpha);
      return buf;
    case EllipticFamily::custom_polynomial: {
      std::string out = "custom_polynomial(";
      for (std::size_t i = 0; i < coefficients.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6g", coefficients[i]);
        if (i) out += ",";
        out += buf;
      }
      return out + ")";
    }
  }
  return "?";
}

}  // namespace ewmt::weingarten
