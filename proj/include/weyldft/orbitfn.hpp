// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "weyldft/rational.hpp"
#include "weyldft/rootdata.hpp"
#include "weyldft/weyl.hpp"

namespace weyldft {

/// A point prepared for phase evaluation: alpha^vee coordinates over a common
/// denominator, so that <wb, a> mod 1 reduces to an integer residue. Keeping
/// the reduction exact is what lets the group-theoretic cancellations
/// (orthogonality, zero loci) survive to machine precision.
struct PointCoords {
  IntVec xnum;
  long long den = 1;
};

/// Prepares a point given in omega^vee coordinates.
inline PointCoords make_point_coords(const RootSystemData& d, const RatVec& y) {
  if (static_cast<int>(y.size()) != d.n)
    throw std::invalid_argument("point has wrong dimension");
  const RatVec x = omega_check_to_alpha_check(d, y);
  PointCoords pc;
  long long den = 1;
  for (const auto& r : x) den = std::lcm(den, r.den());
  pc.den = den;
  pc.xnum.resize(d.n);
  for (int i = 0; i < d.n; ++i) pc.xnum[i] = x[i].num() * (den / x[i].den());
  return pc;
}

/// The orbit {w b : w in W^sigma} of one label together with the sigma~ signs;
/// precomputed once per label and reused across every evaluation point.
struct LabelOrbit {
  std::vector<IntVec> wb;
  std::vector<double> sign;
  long long group_order = 0;  // |W^sigma|
};

inline LabelOrbit make_label_orbit(const RootSystemData& d, const WeylGroup& g, FunctionType type,
                                   const IntVec& t) {
  if (!type.available(d.algebra))
    throw std::invalid_argument("function type " + type.name() + " undefined for " +
                                d.algebra.name());
  if (static_cast<int>(t.size()) != d.n)
    throw std::invalid_argument("label has wrong dimension");
  LabelOrbit orbit;
  for (const auto& w : g.elements) {
    if (sign_value(d, type.sigma, w) != 1) continue;
    orbit.wb.push_back(int_mat_vec(w.label_mat, t));
    orbit.sign.push_back(static_cast<double>(sign_value(d, type.sigma_tilde, w)));
  }
  orbit.group_order = static_cast<long long>(orbit.wb.size());
  return orbit;
}

namespace detail {

/// <wb, a> mod 1 as a residue k/den in [0,1).
inline long long phase_residue(const IntVec& wb, const PointCoords& pc) {
  long long num = 0;
  for (std::size_t i = 0; i < wb.size(); ++i) num += wb[i] * pc.xnum[i];
  num %= pc.den;
  if (num < 0) num += pc.den;
  return num;
}

}  // namespace detail

/// Psi_b^{sigma~,sigma}(a) = sum_{w in W^sigma} sigma~(w) e^{2 pi i <wb,a>}.
inline std::complex<double> psi_value(const LabelOrbit& orbit, const PointCoords& pc) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < orbit.wb.size(); ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(detail::phase_residue(orbit.wb[k], pc)) /
        static_cast<double>(pc.den);
    re += orbit.sign[k] * std::cos(angle);
    im += orbit.sign[k] * std::sin(angle);
  }
  return {re, im};
}

/// zeta_b^{sigma~,sigma}(a) with the Hartley kernel cas(x) = cos x + sin x.
inline double zeta_value(const LabelOrbit& orbit, const PointCoords& pc) {
  double v = 0.0;
  for (std::size_t k = 0; k < orbit.wb.size(); ++k) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(detail::phase_residue(orbit.wb[k], pc)) /
        static_cast<double>(pc.den);
    v += orbit.sign[k] * (std::cos(angle) + std::sin(angle));
  }
  return v;
}

/// One-shot evaluation at a label t (omega coords) and point y (omega^vee
/// coords). Transform loops should precompute LabelOrbit/PointCoords instead.
inline std::complex<double> eval_psi(const RootSystemData& d, const WeylGroup& g,
                                     FunctionType type, const IntVec& t, const RatVec& y) {
  return psi_value(make_label_orbit(d, g, type, t), make_point_coords(d, y));
}

inline double eval_zeta(const RootSystemData& d, const WeylGroup& g, FunctionType type,
                        const IntVec& t, const RatVec& y) {
  return zeta_value(make_label_orbit(d, g, type, t), make_point_coords(d, y));
}

/// Both sides of the product-to-sum decomposition
///   Psi_b^{sigma1,sigma}(a) Psi_b^{sigma2,sigma}(a')
///     = sum_{w in W^sigma} sigma2(w) Psi_b^{sigma1.sigma2,sigma}(a + w a'),
/// evaluated independently. Points in omega^vee coordinates.
inline std::pair<std::complex<double>, std::complex<double>> product_decompose(
    const RootSystemData& d, const WeylGroup& g, SignHom sigma1, SignHom sigma2, SignHom sigma,
    const IntVec& t, const RatVec& ya, const RatVec& yb) {
  const FunctionType t1 = FunctionType::make(sigma1, sigma);
  const FunctionType t2 = FunctionType::make(sigma2, sigma);
  const FunctionType t12 = FunctionType::make(sign_product(sigma1, sigma2), sigma);
  const std::complex<double> lhs = eval_psi(d, g, t1, t, ya) * eval_psi(d, g, t2, t, yb);

  const LabelOrbit orbit12 = make_label_orbit(d, g, t12, t);
  std::complex<double> rhs = 0.0;
  for (const auto& w : g.elements) {
    if (sign_value(d, sigma, w) != 1) continue;
    const RatVec wyb = int_mat_ratvec(w.point_mat, yb);
    RatVec sum(d.n);
    for (int i = 0; i < d.n; ++i) sum[i] = ya[i] + wyb[i];
    rhs += static_cast<double>(sign_value(d, sigma2, w)) *
           psi_value(orbit12, make_point_coords(d, sum));
  }
  return {lhs, rhs};
}

}  // namespace weyldft
