#include "ewmt/geometry.hpp"

#include <cmath>

#include "ewmt/errors.hpp"

namespace ewmt::geometry {

double metric_eval(const WarpingFunction& W, const Point& p, const TangentVector& u,
                   const TangentVector& v) {
  const double e2h = std::exp(2.0 * W.h(p.rho));
  return u.a1 * v.a1 + p.rho * p.rho * u.a2 * v.a2 + e2h * u.a3 * v.a3;
}

ConnectionCoefficients christoffel(const WarpingFunction& W, const Point& p) {
  if (!(p.rho > 0.0)) throw AxisSingularity("christoffel: rho must be positive");

  const double hr = W.h_rho(p.rho);
  const double e2h = std::exp(2.0 * W.h(p.rho));
  const double inv_rho = 1.0 / p.rho;

  ConnectionCoefficients cc;
  // nabla_{d_omega} d_rho = (1/rho) d_omega, and the torsion-free mirror.
  cc.gamma[axis_omega][axis_rho][axis_omega] = inv_rho;
  cc.gamma[axis_rho][axis_omega][axis_omega] = inv_rho;
  // nabla_{d_t} d_rho = h_rho d_t, and mirror.
  cc.gamma[axis_t][axis_rho][axis_t] = hr;
  cc.gamma[axis_rho][axis_t][axis_t] = hr;
  // nabla_{d_omega} d_omega = -rho d_rho.
  cc.gamma[axis_omega][axis_omega][axis_rho] = -p.rho;
  // nabla_{d_t} d_t = -e^{2h} h_rho d_rho.
  cc.gamma[axis_t][axis_t][axis_rho] = -e2h * hr;
  return cc;
}

TangentVector covariant_derivative(const ConnectionCoefficients& cc, const TangentVector& Y,
                                   int field_axis) {
  TangentVector out;
  double c[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) c[k] += Y[i] * cc.gamma[i][field_axis][k];
  out.a1 = c[0];
  out.a2 = c[1];
  out.a3 = c[2];
  return out;
}

double killing_residual(const WarpingFunction& W, KillingField field, const Point& p,
                        const TangentVector& Y, const TangentVector& Z) {
  if (!(p.rho > 0.0)) throw AxisSingularity("killing_residual: rho must be positive");
  int axis = axis_t;
  if (field == KillingField::d_omega) axis = axis_omega;
  if (field == KillingField::d_rho) axis = axis_rho;

  const ConnectionCoefficients cc = christoffel(W, p);
  const TangentVector dY = covariant_derivative(cc, Y, axis);
  const TangentVector dZ = covariant_derivative(cc, Z, axis);
  return metric_eval(W, p, dY, Z) + metric_eval(W, p, dZ, Y);
}

}  // namespace ewmt::geometry
