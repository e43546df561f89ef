#pragma once

#include "ewmt/warping.hpp"

namespace ewmt::geometry {

// Frame/coordinate indices: 0 = rho, 1 = omega, 2 = t.
inline constexpr int axis_rho = 0;
inline constexpr int axis_omega = 1;
inline constexpr int axis_t = 2;

struct Point {
  double rho = 0.0;    // radial coordinate, >= 0
  double omega = 0.0;  // angle (radians)
  double t = 0.0;      // fiber height
};

/// Tangent vector written on the coordinate frame {d_rho, d_omega, d_t}.
struct TangentVector {
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  static TangentVector d_rho() { return {1.0, 0.0, 0.0}; }
  static TangentVector d_omega() { return {0.0, 1.0, 0.0}; }
  static TangentVector d_t() { return {0.0, 0.0, 1.0}; }

  double operator[](int i) const { return i == 0 ? a1 : (i == 1 ? a2 : a3); }
};

/// gamma[i][j][k] is the X_k-component of nabla_{X_i} X_j at a fixed point,
/// for the frame X_1 = d_rho, X_2 = d_omega, X_3 = d_t.
struct ConnectionCoefficients {
  double gamma[3][3][3] = {};
};

enum class KillingField { d_t, d_omega, d_rho };

/// Warped metric g(u,v) = u1*v1 + rho^2*u2*v2 + e^{2h(rho)}*u3*v3.
double metric_eval(const WarpingFunction& W, const Point& p, const TangentVector& u,
                   const TangentVector& v);

/// Connection coefficients of the warped metric at p. Throws AxisSingularity
/// when p.rho = 0 (the 1/rho terms are singular on the axis).
ConnectionCoefficients christoffel(const WarpingFunction& W, const Point& p);

/// nabla_Y X_j for a coordinate field X_j, assembled from the coefficients.
TangentVector covariant_derivative(const ConnectionCoefficients& cc, const TangentVector& Y,
                                   int field_axis);

/// g(nabla_Y X, Z) + g(nabla_Z X, Y) for a coordinate field X. Vanishes
/// identically for d_t and d_omega, which are Killing fields.
double killing_residual(const WarpingFunction& W, KillingField field, const Point& p,
                        const TangentVector& Y, const TangentVector& Z);

}  // namespace ewmt::geometry
