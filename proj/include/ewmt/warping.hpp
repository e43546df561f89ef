#pragma once

#include <string>
#include <vector>

namespace ewmt::geometry {

enum class WarpingFamily { constant, linear, affine, polynomial };

/// Radial warping function h(rho) with its analytic derivative h_rho.
/// The fiber metric factor of the ambient space is e^{2h(rho)}.
///
/// Coefficient layout per family:
///   constant    {b}            h = b
///   linear      {}             h = rho
///   affine      {a, b}         h = a*rho + b
///   polynomial  {c0, c1, ...}  h = sum c_k rho^k
struct WarpingFunction {
  WarpingFamily family = WarpingFamily::constant;
  std::vector<double> coefficients;

  static WarpingFunction constant(double b = 0.0);
  static WarpingFunction linear();
  static WarpingFunction affine(double a, double b);
  static WarpingFunction polynomial(std::vector<double> coeffs);

  double h(double rho) const;
  double h_rho(double rho) const;

  std::string describe() const;
};

const char* to_string(WarpingFamily f);

}  // namespace ewmt::geometry
