// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "weyldft/grids.hpp"
#include "weyldft/orbitfn.hpp"
#include "weyldft/rational.hpp"
#include "weyldft/rootdata.hpp"
#include "weyldft/weyl.hpp"

namespace weyldft {

enum class Kernel { Complex, Hartley };

inline Kernel parse_kernel(const std::string& s) {
  if (s == "complex") return Kernel::Complex;
  if (s == "hartley") return Kernel::Hartley;
  throw std::invalid_argument("unknown kernel: " + s + " (expected complex or hartley)");
}

/// Everything one discrete transform needs: the point set, the label set and
/// the kernel values on their product. Built once per (algebra, type, M);
/// direct O(|F| |Lambda| |W^sigma|) summation, no fast factorization.
struct TransformPlan {
  FunctionType type;
  long long M = 0;
  Kernel kernel = Kernel::Complex;
  PointSet points;
  LabelSet labels;
  // kmat[b][a]: Psi_b(a) (complex kernel) with kmat_r unused, or
  // zeta_b(a) in kmat_r with kmat unused (Hartley path stays real).
  std::vector<std::vector<std::complex<double>>> kmat;
  std::vector<std::vector<double>> kmat_r;
  long long group_order = 0;  // |W^sigma|

  double norm_constant(std::size_t label_index, const RootSystemData& d) const {
    double mn = 1.0;
    for (int i = 0; i < d.n; ++i) mn *= static_cast<double>(M);
    return static_cast<double>(d.connection_index) * static_cast<double>(group_order) * mn *
           static_cast<double>(labels.entries[label_index].h);
  }
};

inline TransformPlan make_plan(const RootSystemData& d, const WeylGroup& g, StabilizerTable& tab,
                               FunctionType type, long long M,
                               Kernel kernel = Kernel::Complex) {
  TransformPlan plan;
  plan.type = type;
  plan.M = M;
  plan.kernel = kernel;
  plan.points = composite_point_set(d, tab, type, M);
  plan.labels = composite_label_set(d, tab, type, M);
  plan.group_order = even_order(d, type.sigma);

  std::vector<PointCoords> pcs;
  pcs.reserve(plan.points.size());
  for (const auto& e : plan.points.entries) pcs.push_back(make_point_coords(d, e.point.u));

  const std::size_t nl = plan.labels.size(), np = plan.points.size();
  if (kernel == Kernel::Complex)
    plan.kmat.assign(nl, std::vector<std::complex<double>>(np));
  else
    plan.kmat_r.assign(nl, std::vector<double>(np));
  for (std::size_t b = 0; b < nl; ++b) {
    const LabelOrbit orbit = make_label_orbit(d, g, type, plan.labels.entries[b].label.t);
    for (std::size_t a = 0; a < np; ++a) {
      if (kernel == Kernel::Complex)
        plan.kmat[b][a] = psi_value(orbit, pcs[a]);
      else
        plan.kmat_r[b][a] = zeta_value(orbit, pcs[a]);
    }
  }
  return plan;
}

struct SampleSet {
  PointSet points;
  std::vector<std::complex<double>> values;
};

struct RealSampleSet {
  PointSet points;
  std::vector<double> values;
};

struct SpectrumCoeffs {
  LabelSet labels;
  std::vector<std::complex<double>> coeffs;
};

struct RealSpectrumCoeffs {
  LabelSet labels;
  std::vector<double> coeffs;
};

namespace detail {

inline void check_same_grid(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) throw std::invalid_argument("mismatched point sets");
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].point.u != b.entries[i].point.u)
      throw std::invalid_argument("mismatched point sets");
}

inline void check_aligned(const TransformPlan& plan, std::size_t n_values) {
  if (n_values != plan.points.size())
    throw std::invalid_argument("sample vector not aligned with the point set");
}

}  // namespace detail

/// <f, g> = sum_a epsilon^sigma(a) f(a) conj(g(a)).
inline std::complex<double> inner_product(const SampleSet& f, const SampleSet& g) {
  detail::check_same_grid(f.points, g.points);
  if (f.values.size() != f.points.size() || g.values.size() != g.points.size())
    throw std::invalid_argument("sample vector not aligned with the point set");
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    s += static_cast<double>(f.points.entries[i].eps) * f.values[i] * std::conj(g.values[i]);
  return s;
}

/// Forward Fourier-Weyl transform:
/// k_b = sum_a eps(a) f(a) conj(Psi_b(a)) / (c |W^sigma| M^n h_M^{vee sigma}(b)).
inline SpectrumCoeffs forward(const RootSystemData& d, const TransformPlan& plan,
                              const std::vector<std::complex<double>>& values) {
  if (plan.kernel != Kernel::Complex) throw std::invalid_argument("plan built for Hartley kernel");
  detail::check_aligned(plan, values.size());
  SpectrumCoeffs out;
  out.labels = plan.labels;
  out.coeffs.resize(plan.labels.size());
  for (std::size_t b = 0; b < plan.labels.size(); ++b) {
    std::complex<double> s = 0.0;
    for (std::size_t a = 0; a < values.size(); ++a)
      s += static_cast<double>(plan.points.entries[a].eps) * values[a] *
           std::conj(plan.kmat[b][a]);
    out.coeffs[b] = s / plan.norm_constant(b, d);
  }
  return out;
}

/// Forward Hartley-Weyl transform (real kernel, no conjugation).
inline RealSpectrumCoeffs forward_hartley(const RootSystemData& d, const TransformPlan& plan,
                                          const std::vector<double>& values) {
  if (plan.kernel != Kernel::Hartley) throw std::invalid_argument("plan built for complex kernel");
  detail::check_aligned(plan, values.size());
  RealSpectrumCoeffs out;
  out.labels = plan.labels;
  out.coeffs.resize(plan.labels.size());
  for (std::size_t b = 0; b < plan.labels.size(); ++b) {
    double s = 0.0;
    for (std::size_t a = 0; a < values.size(); ++a)
      s += static_cast<double>(plan.points.entries[a].eps) * values[a] * plan.kmat_r[b][a];
    out.coeffs[b] = s / plan.norm_constant(b, d);
  }
  return out;
}

/// Interpolation I[f](a) = sum_b k_b Psi_b(a) at the plan's own grid points.
inline std::vector<std::complex<double>> interpolate_at_grid(
    const TransformPlan& plan, const std::vector<std::complex<double>>& coeffs) {
  std::vector<std::complex<double>> out(plan.points.size(), 0.0);
  for (std::size_t b = 0; b < coeffs.size(); ++b)
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += coeffs[b] * plan.kmat[b][a];
  return out;
}

inline std::vector<double> interpolate_at_grid_hartley(const TransformPlan& plan,
                                                       const std::vector<double>& coeffs) {
  std::vector<double> out(plan.points.size(), 0.0);
  for (std::size_t b = 0; b < coeffs.size(); ++b)
    for (std::size_t a = 0; a < out.size(); ++a) out[a] += coeffs[b] * plan.kmat_r[b][a];
  return out;
}

/// Interpolation at an arbitrary point y (omega^vee coordinates).
inline std::complex<double> interpolate(const RootSystemData& d, const WeylGroup& g,
                                        const SpectrumCoeffs& coeffs, const RatVec& y) {
  const PointCoords pc = make_point_coords(d, y);
  std::complex<double> s = 0.0;
  for (std::size_t b = 0; b < coeffs.coeffs.size(); ++b) {
    const LabelOrbit orbit =
        make_label_orbit(d, g, coeffs.labels.type, coeffs.labels.entries[b].label.t);
    s += coeffs.coeffs[b] * psi_value(orbit, pc);
  }
  return s;
}

inline double interpolate_hartley(const RootSystemData& d, const WeylGroup& g,
                                  const RealSpectrumCoeffs& coeffs, const RatVec& y) {
  const PointCoords pc = make_point_coords(d, y);
  double s = 0.0;
  for (std::size_t b = 0; b < coeffs.coeffs.size(); ++b) {
    const LabelOrbit orbit =
        make_label_orbit(d, g, coeffs.labels.type, coeffs.labels.entries[b].label.t);
    s += coeffs.coeffs[b] * zeta_value(orbit, pc);
  }
  return s;
}

/// Gram matrix of the kernel family on the weighted point set, with its
/// deviation from the orthogonality constants c |W^sigma| M^n h_M^{vee}(b).
struct GramReport {
  std::vector<std::vector<std::complex<double>>> gram;
  double max_off_diag = 0.0;      // absolute
  double max_diag_rel_err = 0.0;  // against the predicted diagonal
  double max_imag = 0.0;          // largest |Im| over all entries
  double max_diag = 0.0;
};

inline constexpr long long kDefaultGramBudget = 2'000'000'000;

/// Cost guard: |Lambda|^2 |F| |W^sigma| must not exceed the budget.
inline long long gram_cost(const TransformPlan& plan) {
  const long long nl = static_cast<long long>(plan.labels.size());
  const long long np = static_cast<long long>(plan.points.size());
  return nl * nl * np * plan.group_order;
}

inline GramReport gram_matrix(const RootSystemData& d, const TransformPlan& plan,
                              long long budget = kDefaultGramBudget) {
  if (gram_cost(plan) > budget)
    throw std::runtime_error("gram matrix budget exceeded; use a smaller M or raise --budget");
  const std::size_t nl = plan.labels.size(), np = plan.points.size();
  GramReport rep;
  rep.gram.assign(nl, std::vector<std::complex<double>>(nl, 0.0));
  for (std::size_t b = 0; b < nl; ++b)
    for (std::size_t b2 = 0; b2 < nl; ++b2) {
      std::complex<double> s = 0.0;
      for (std::size_t a = 0; a < np; ++a) {
        const double eps = static_cast<double>(plan.points.entries[a].eps);
        if (plan.kernel == Kernel::Complex)
          s += eps * plan.kmat[b][a] * std::conj(plan.kmat[b2][a]);
        else
          s += eps * plan.kmat_r[b][a] * plan.kmat_r[b2][a];
      }
      rep.gram[b][b2] = s;
    }
  for (std::size_t b = 0; b < nl; ++b) {
    const double expected = plan.norm_constant(b, d);
    rep.max_diag = std::max(rep.max_diag, expected);
    rep.max_diag_rel_err =
        std::max(rep.max_diag_rel_err, std::abs(rep.gram[b][b].real() - expected) / expected);
    for (std::size_t b2 = 0; b2 < nl; ++b2) {
      rep.max_imag = std::max(rep.max_imag, std::abs(rep.gram[b][b2].imag()));
      if (b != b2) rep.max_off_diag = std::max(rep.max_off_diag, std::abs(rep.gram[b][b2]));
    }
  }
  return rep;
}

struct ParsevalReport {
  double lhs = 0.0;  // sum_a eps(a) |f(a)|^2
  double rhs = 0.0;  // c |W^sigma| M^n sum_b h(b) |k_b|^2
  double rel_err = 0.0;
};

inline ParsevalReport parseval_check(const RootSystemData& d, const TransformPlan& plan,
                                     const std::vector<std::complex<double>>& values) {
  detail::check_aligned(plan, values.size());
  ParsevalReport rep;
  for (std::size_t a = 0; a < values.size(); ++a)
    rep.lhs += static_cast<double>(plan.points.entries[a].eps) * std::norm(values[a]);
  double cwm = static_cast<double>(d.connection_index) * static_cast<double>(plan.group_order);
  for (int i = 0; i < d.n; ++i) cwm *= static_cast<double>(plan.M);
  if (plan.kernel == Kernel::Complex) {
    const SpectrumCoeffs k = forward(d, plan, values);
    for (std::size_t b = 0; b < k.coeffs.size(); ++b)
      rep.rhs += static_cast<double>(plan.labels.entries[b].h) * std::norm(k.coeffs[b]);
  } else {
    std::vector<double> real_values(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) real_values[i] = values[i].real();
    const RealSpectrumCoeffs l = forward_hartley(d, plan, real_values);
    for (std::size_t b = 0; b < l.coeffs.size(); ++b)
      rep.rhs += static_cast<double>(plan.labels.entries[b].h) * l.coeffs[b] * l.coeffs[b];
  }
  rep.rhs *= cwm;
  const double scale = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  rep.rel_err = scale == 0.0 ? 0.0 : std::abs(rep.lhs - rep.rhs) / scale;
  return rep;
}

}  // namespace weyldft
