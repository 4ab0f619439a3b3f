// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyldft/affine.hpp"
#include "weyldft/rational.hpp"
#include "weyldft/rootdata.hpp"
#include "weyldft/weyl.hpp"

namespace weyldft {

/// A point of F_M^{sigma~,sigma} in omega^vee coordinates with common
/// denominator M. Points of the reflected sheet r_sigma F^sigma carry their
/// r_sigma-preimage (a point of F), through which weights and boundary
/// membership are computed.
struct GridPoint {
  RatVec u;
  bool reflected = false;
  RatVec preimage;  // empty unless reflected
};

/// A label of Lambda_M^{sigma~,sigma} in integer omega coordinates.
struct WeightLabel {
  IntVec t;
  bool reflected = false;
  IntVec preimage;
};

struct PointEntry {
  GridPoint point;
  long long eps = 0;  // epsilon^sigma weight
};

struct LabelEntry {
  WeightLabel label;
  long long h = 0;  // h_M^{vee sigma} weight
};

struct PointSet {
  AlgebraId algebra;
  long long M = 0;
  FunctionType type;
  std::vector<PointEntry> entries;
  std::size_t size() const { return entries.size(); }
};

struct LabelSet {
  AlgebraId algebra;
  long long M = 0;
  FunctionType type;
  std::vector<LabelEntry> entries;
  std::size_t size() const { return entries.size(); }
};

namespace detail {

/// All nonnegative integer tuples (u_0, u_1..u_n) with
/// u_0 + sum u_i m_i = M, visited in lexicographic order of (u_1..u_n).
/// The callback receives u = (u_0, u_1, ..., u_n).
inline void enumerate_level_tuples(const IntVec& marks, long long M,
                                   const std::function<void(const IntVec&)>& fn) {
  const int n = static_cast<int>(marks.size());
  IntVec u(n + 1, 0);
  std::function<void(int, long long)> rec = [&](int i, long long rem) {
    if (i == n) {
      u[0] = rem;
      fn(u);
      return;
    }
    for (long long v = 0; v * marks[i] <= rem; ++v) {
      u[i + 1] = v;
      rec(i + 1, rem - v * marks[i]);
    }
    u[i + 1] = 0;
  };
  rec(0, M);
}

/// u_i >= 1 for every i in R (indices 0..n).
inline bool satisfies_pattern(const IntVec& u, const std::vector<int>& R) {
  for (int i : R)
    if (u[i] < 1) return false;
  return true;
}

inline std::uint32_t tuple_wall_mask(const IntVec& u) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] == 0) mask |= (1u << i);
  return mask;
}

}  // namespace detail

/// Smallest linear generator index in R^sigma (resp. R^{vee sigma}); the index
/// 0 (affine generator) is returned only if no linear one qualifies, which
/// does not occur for any supported algebra.
inline int choose_reflection(const RootSystemData& d, SignHom sigma, Side side) {
  if (sigma == SignHom::One)
    throw std::invalid_argument("no reflection needed for the trivial sign homomorphism");
  const auto R = negative_generators(d, sigma, side == Side::Dual);
  for (int i : R)
    if (i >= 1) return i;
  return 0;
}

namespace detail {

/// Applies the generator r_i (i = 0 is the affine one) to a point of the
/// fundamental simplex, on the coordinates matching `side`.
inline RatVec apply_generator(const RootSystemData& d, int i, const RatVec& v, Side side) {
  const bool primal = (side == Side::Primal);
  if (i >= 1) {
    return int_mat_ratvec(primal ? d.point_reflection(i) : d.label_reflection(i), v);
  }
  const IntMat& lin = primal ? d.r_xi_pt : d.r_eta_label;
  const IntVec& shift = primal ? d.xi_check_pt : d.theta_s_label;
  RatVec out = int_mat_ratvec(lin, v);
  for (int k = 0; k < d.n; ++k) out[k] += Rational(shift[k]);
  return out;
}

}  // namespace detail

/// F_M^sigma: the tuples of Eq-level data u with u_0 + sum u_i m_i = M and
/// u_i >= 1 exactly on R^sigma, as points u_i/M in omega^vee coordinates.
inline std::vector<GridPoint> basic_point_set(const RootSystemData& d, SignHom sigma,
                                              long long M) {
  if (M < 1) throw std::invalid_argument("resolution M must be positive");
  const auto R = negative_generators(d, sigma, /*dual=*/false);
  std::vector<GridPoint> out;
  detail::enumerate_level_tuples(d.marks, M, [&](const IntVec& u) {
    if (!detail::satisfies_pattern(u, R)) return;
    GridPoint p;
    p.u.resize(d.n);
    for (int i = 0; i < d.n; ++i) p.u[i] = Rational(u[i + 1], M);
    out.push_back(std::move(p));
  });
  return out;
}

/// Lambda_M^sigma: labels with t_0 + sum t_i m_i^vee = M and t_i >= 1 exactly
/// on R^{vee sigma}, integer omega coordinates.
inline std::vector<WeightLabel> basic_label_set(const RootSystemData& d, SignHom sigma,
                                                long long M) {
  if (M < 1) throw std::invalid_argument("resolution M must be positive");
  const auto R = negative_generators(d, sigma, /*dual=*/true);
  std::vector<WeightLabel> out;
  detail::enumerate_level_tuples(d.dual_marks, M, [&](const IntVec& u) {
    if (!detail::satisfies_pattern(u, R)) return;
    WeightLabel l;
    l.t.assign(u.begin() + 1, u.end());
    out.push_back(std::move(l));
  });
  return out;
}

/// F_M^{sigma~,sigma} = (F_M^{sigma~} u F_M^{sigma~.sigma}) u
/// r_sigma (F_M^{sigma~} n F_M^{sigma~.sigma}), with epsilon^sigma weights.
/// Base points come first in lexicographic tuple order, then the reflected
/// sheet in the order of its preimages.
inline PointSet composite_point_set(const RootSystemData& d, StabilizerTable& tab,
                                    FunctionType type, long long M) {
  if (M < 1) throw std::invalid_argument("resolution M must be positive");
  if (!type.available(d.algebra))
    throw std::invalid_argument("function type " + type.name() + " undefined for " +
                                d.algebra.name());
  PointSet set;
  set.algebra = d.algebra;
  set.M = M;
  set.type = type;
  const SignHom st = type.sigma_tilde;
  const SignHom si = type.sigma;
  const auto Rneg = negative_generators(d, si, /*dual=*/false);

  auto eps_of = [&](const IntVec& u) {
    const std::uint32_t mask = detail::tuple_wall_mask(u);
    long long h = tab.order(mask, Side::Primal);
    if (si != SignHom::One && detail::mask_hits(mask, Rneg)) h /= 2;
    return even_order(d, si) / h;
  };
  auto point_of = [&](const IntVec& u) {
    RatVec y(d.n);
    for (int i = 0; i < d.n; ++i) y[i] = Rational(u[i + 1], M);
    return y;
  };

  if (si == SignHom::One) {
    const auto Rt = negative_generators(d, st, false);
    detail::enumerate_level_tuples(d.marks, M, [&](const IntVec& u) {
      if (!detail::satisfies_pattern(u, Rt)) return;
      set.entries.push_back({GridPoint{point_of(u), false, {}}, eps_of(u)});
    });
    return set;
  }

  const auto Ra = negative_generators(d, st, false);
  const auto Rb = negative_generators(d, sign_product(st, si), false);
  const int refl = choose_reflection(d, si, Side::Primal);
  std::vector<IntVec> both;
  detail::enumerate_level_tuples(d.marks, M, [&](const IntVec& u) {
    const bool a = detail::satisfies_pattern(u, Ra);
    const bool b = detail::satisfies_pattern(u, Rb);
    if (a || b) set.entries.push_back({GridPoint{point_of(u), false, {}}, eps_of(u)});
    if (a && b) both.push_back(u);
  });
  for (const auto& u : both) {
    GridPoint p;
    p.preimage = point_of(u);
    p.u = detail::apply_generator(d, refl, p.preimage, Side::Primal);
    p.reflected = true;
    set.entries.push_back({std::move(p), eps_of(u)});
  }
  return set;
}

/// Lambda_M^{sigma~,sigma} with h_M^{vee sigma} weights; mirrors
/// composite_point_set on the dual side.
inline LabelSet composite_label_set(const RootSystemData& d, StabilizerTable& tab,
                                    FunctionType type, long long M) {
  if (M < 1) throw std::invalid_argument("resolution M must be positive");
  if (!type.available(d.algebra))
    throw std::invalid_argument("function type " + type.name() + " undefined for " +
                                d.algebra.name());
  LabelSet set;
  set.algebra = d.algebra;
  set.M = M;
  set.type = type;
  const SignHom st = type.sigma_tilde;
  const SignHom si = type.sigma;
  const auto Rneg = negative_generators(d, si, /*dual=*/true);

  auto h_of = [&](const IntVec& u) {
    const std::uint32_t mask = detail::tuple_wall_mask(u);
    long long h = tab.order(mask, Side::Dual);
    if (si != SignHom::One && detail::mask_hits(mask, Rneg)) h /= 2;
    return h;
  };
  auto label_of = [&](const IntVec& u) { return IntVec(u.begin() + 1, u.end()); };

  if (si == SignHom::One) {
    const auto Rt = negative_generators(d, st, true);
    detail::enumerate_level_tuples(d.dual_marks, M, [&](const IntVec& u) {
      if (!detail::satisfies_pattern(u, Rt)) return;
      set.entries.push_back({WeightLabel{label_of(u), false, {}}, h_of(u)});
    });
    return set;
  }

  const auto Ra = negative_generators(d, st, true);
  const auto Rb = negative_generators(d, sign_product(st, si), true);
  const int refl = choose_reflection(d, si, Side::Dual);
  std::vector<IntVec> both;
  detail::enumerate_level_tuples(d.dual_marks, M, [&](const IntVec& u) {
    const bool a = detail::satisfies_pattern(u, Ra);
    const bool b = detail::satisfies_pattern(u, Rb);
    if (a || b) set.entries.push_back({WeightLabel{label_of(u), false, {}}, h_of(u)});
    if (a && b) both.push_back(u);
  });
  for (const auto& u : both) {
    WeightLabel l;
    l.preimage = label_of(u);
    // labels reflect at scale M: t -> M * r_sigma^vee (t/M)
    RatVec z(d.n);
    for (int i = 0; i < d.n; ++i) z[i] = Rational(l.preimage[i], M);
    const RatVec rz = detail::apply_generator(d, refl, z, Side::Dual);
    l.t.resize(d.n);
    for (int i = 0; i < d.n; ++i) {
      const Rational scaled = rz[i] * Rational(M);
      if (!scaled.is_integer()) throw std::logic_error("reflected label left the weight lattice");
      l.t[i] = scaled.num();
    }
    l.reflected = true;
    set.entries.push_back({std::move(l), h_of(u)});
  }
  return set;
}

/// Boundary membership for composite-set members (reflected entries are
/// tested through their preimage).
inline bool in_boundary_H(const RootSystemData& d, const GridPoint& p, FunctionType type) {
  return in_boundary_H(d, p.reflected ? p.preimage : p.u, type, Side::Primal);
}

inline bool in_boundary_H(const RootSystemData& d, const WeightLabel& l, long long M,
                          FunctionType type) {
  const IntVec& t = l.reflected ? l.preimage : l.t;
  RatVec z(d.n);
  for (int i = 0; i < d.n; ++i) z[i] = Rational(t[i], M);
  return in_boundary_H(d, z, type, Side::Dual);
}

// ---------------------------------------------------------------------------
// Closed-form point counts (two-length algebras, sigma != 1 types)
// ---------------------------------------------------------------------------

namespace detail {

inline long long binom(long long a, long long b) {
  if (a < 0 || b < 0 || a < b) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

// C_n counts by canonical type name; M split into even/odd.
inline long long count_C(int n, const std::string& type, long long M) {
  const long long k = M / 2;
  const bool even = (M % 2 == 0);
  if (type == "Es+")
    return even ? binom(k + n, n) + binom(k + n - 1, n) + binom(k + 1, n) + binom(k, n)
                : 2 * binom(k + n, n) + 2 * binom(k + 1, n);
  if (type == "El+")
    return even ? binom(k + n, n) + 2 * binom(n + k - 1, n) + binom(n + k - 2, n)
                : 2 * binom(k + n, n) + 2 * binom(n + k - 1, n);
  if (type == "Es-")
    return even ? binom(n + k - 1, n) + binom(n + k - 2, n) + binom(k, n) + binom(k - 1, n)
                : 2 * binom(n + k - 1, n) + 2 * binom(k, n);
  if (type == "El-")
    return even ? binom(k + 1, n) + 2 * binom(k, n) + binom(k - 1, n)
                : 2 * binom(k + 1, n) + 2 * binom(k, n);
  if (type == "E-")
    return even ? binom(k + 1, n) + binom(k, n) + binom(n + k - 1, n) + binom(n + k - 2, n)
                : 2 * binom(n + k - 1, n) + 2 * binom(k + 1, n);
  throw std::invalid_argument("no closed form; use enumeration");
}

inline long long poly_eval(const std::vector<long long>& coeffs, long long k) {
  long long v = 0, p = 1;
  for (long long c : coeffs) {
    v += c * p;
    p *= k;
  }
  return v;
}

inline long long count_G2(const std::string& type, long long M) {
  const long long k = M / 6;
  const int r = static_cast<int>(M % 6);
  static const std::vector<std::vector<long long>> g1s = {
      {1, 3, 6}, {1, 5, 6}, {2, 7, 6}, {4, 9, 6}, {5, 11, 6}, {7, 13, 6}};
  static const std::vector<std::vector<long long>> g1e = {
      {2, 0, 6}, {1, 2, 6}, {2, 4, 6}, {3, 6, 6}, {4, 8, 6}, {5, 10, 6}};
  static const std::vector<std::vector<long long>> gls = {
      {1, -3, 6}, {0, -1, 6}, {0, 1, 6}, {1, 3, 6}, {1, 5, 6}, {2, 7, 6}};
  static const std::vector<std::vector<long long>> gle = {
      {0, 0, 6}, {0, 2, 6}, {0, 4, 6}, {2, 6, 6}, {2, 8, 6}, {4, 10, 6}};
  if (type == "Es+" || type == "El+") return poly_eval(g1s[r], k);
  if (type == "E+") return poly_eval(g1e[r], k);
  if (type == "Es-" || type == "El-") return poly_eval(gls[r], k);
  if (type == "E-") return poly_eval(gle[r], k);
  throw std::invalid_argument("no closed form; use enumeration");
}

inline long long count_F4(const std::string& type, long long M) {
  const long long k = M / 12;
  const int r = static_cast<int>(M % 12);
  // The 12k+7 row of the (1,sigma^s) table carries k^3 coefficient 120, the
  // value consistent with direct enumeration for every M.
  static const std::vector<std::vector<long long>> f1s = {
      {1, 8, 25, 36, 36},     {1, 10, 31, 48, 36},   {3, 20, 49, 60, 36},
      {4, 25, 61, 72, 36},    {8, 42, 85, 84, 36},   {10, 52, 103, 96, 36},
      {18, 78, 133, 108, 36}, {22, 95, 157, 120, 36}, {35, 132, 193, 132, 36},
      {43, 158, 223, 144, 36}, {63, 208, 265, 156, 36}, {76, 245, 301, 168, 36}};
  static const std::vector<std::vector<long long>> f1e = {
      {2, 0, 52, 0, 36},      {1, 8, 49, 12, 36},    {3, 18, 58, 24, 36},
      {4, 26, 61, 36, 36},    {8, 40, 76, 48, 36},   {10, 50, 85, 60, 36},
      {17, 70, 106, 72, 36},  {21, 84, 121, 84, 36}, {32, 112, 148, 96, 36},
      {39, 132, 169, 108, 36}, {55, 170, 202, 120, 36}, {66, 198, 229, 132, 36}};
  static const std::vector<std::vector<long long>> fls = {
      {1, -8, 25, -36, 36},   {0, -3, 13, -24, 36},  {0, -2, 13, -12, 36},
      {0, 0, 7, 0, 36},       {0, 2, 13, 12, 36},    {0, 3, 13, 24, 36},
      {1, 8, 25, 36, 36},     {1, 10, 31, 48, 36},   {3, 20, 49, 60, 36},
      {4, 25, 61, 72, 36},    {8, 42, 85, 84, 36},   {10, 52, 103, 96, 36}};
  static const std::vector<std::vector<long long>> fle = {
      {0, 0, -2, 0, 36},      {0, -1, -5, 12, 36},   {0, 0, 4, 24, 36},
      {0, -1, 7, 36, 36},     {0, 4, 22, 48, 36},    {0, 5, 31, 60, 36},
      {2, 16, 52, 72, 36},    {2, 21, 67, 84, 36},   {6, 40, 94, 96, 36},
      {8, 51, 115, 108, 36},  {16, 80, 148, 120, 36}, {20, 99, 175, 132, 36}};
  if (type == "Es+" || type == "El+") return poly_eval(f1s[r], k);
  if (type == "E+") return poly_eval(f1e[r], k);
  if (type == "Es-" || type == "El-") return poly_eval(fls[r], k);
  if (type == "E-") return poly_eval(fle[r], k);
  throw std::invalid_argument("no closed form; use enumeration");
}

}  // namespace detail

/// |F_M^{sigma~,sigma}| from the residue-class polynomial and binomial-sum
/// tables; defined for B_n, C_n, G_2, F_4 and the sigma != 1 types the tables
/// cover. B_n reduces to C_n with the short/long types swapped. Throws
/// "no closed form; use enumeration" outside the covered combinations.
inline long long count_closed_form(const AlgebraId& id, FunctionType type, long long M) {
  if (M < 1) throw std::invalid_argument("resolution M must be positive");
  if (!type.available(id))
    throw std::invalid_argument("function type " + type.name() + " undefined for " + id.name());
  const std::string t = type.name();
  switch (id.family) {
    case Family::C:
      return detail::count_C(id.rank, t, M);
    case Family::B: {
      std::string swapped = t;
      if (t == "Es+") swapped = "El+";
      else if (t == "El+") swapped = "Es+";
      else if (t == "Es-") swapped = "El-";
      else if (t == "El-") swapped = "Es-";
      else if (t != "E-") throw std::invalid_argument("no closed form; use enumeration");
      return detail::count_C(id.rank, swapped, M);
    }
    case Family::G:
      return detail::count_G2(t, M);
    case Family::F:
      return detail::count_F4(t, M);
    default:
      throw std::invalid_argument("no closed form; use enumeration");
  }
}

}  // namespace weyldft
