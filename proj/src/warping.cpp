#include "ewmt/warping.hpp"

#include <cstdio>
#include <stdexcept>

namespace ewmt::geometry {

WarpingFunction WarpingFunction::constant(double b) {
  return {WarpingFamily::constant, {b}};
}

WarpingFunction WarpingFunction::linear() {
  return {WarpingFamily::linear, {}};
}

WarpingFunction WarpingFunction::affine(double a, double b) {
  return {WarpingFamily::affine, {a, b}};
}

WarpingFunction WarpingFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("polynomial warping needs at least one coefficient");
  return {WarpingFamily::polynomial, std::move(coeffs)};
}

double WarpingFunction::h(double rho) const {
  switch (family) {
    case WarpingFamily::constant:
      return coefficients.empty() ? 0.0 : coefficients[0];
    case WarpingFamily::linear:
      return rho;
    case WarpingFamily::affine:
      return coefficients[0] * rho + coefficients[1];
    case WarpingFamily::polynomial: {
      double v = 0.0;
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * rho + *it;
      return v;
    }
  }
  return 0.0;
}

double WarpingFunction::h_rho(double rho) const {
  switch (family) {
    case WarpingFamily::constant:
      return 0.0;
    case WarpingFamily::linear:
      return 1.0;
    case WarpingFamily::affine:
      return coefficients[0];
    case WarpingFamily::polynomial: {
      double v = 0.0;
      for (std::size_t k = coefficients.size(); k-- > 1;) v = v * rho + static_cast<double>(k) * coefficients[k];
      return v;
    }
  }
  return 0.0;
}

const char* to_string(WarpingFamily f) {
  switch (f) {
    case WarpingFamily::constant: return "constant";
    case WarpingFamily::linear: return "linear";
    case WarpingFamily::affine: return "affine";
    case WarpingFamily::polynomial: return "polynomial";
  }
  return "?";
}

std::string WarpingFunction::describe() const {
  std::string out = to_string(family);
  if (!coefficients.empty()) {
    out += "(";
    char buf[32];
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.6g", coefficients[i]);
      if (i) out += ",";
      out += buf;
    }
    out += ")";
  }
  return out;
}

}  // namespace ewmt::geometry
