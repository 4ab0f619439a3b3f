// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "weyldft/rational.hpp"
#include "weyldft/rootdata.hpp"
#include "weyldft/weyl.hpp"

namespace weyldft {

enum class Side { Primal, Dual };

/// Simplex coordinates (y_0, y_1..y_n) of a point given in omega^vee
/// coordinates (primal, y_0 = 1 - sum m_i y_i) or of a dual-space point in
/// omega coordinates (dual, z_0 = 1 - sum m_i^vee z_i). The point lies in the
/// fundamental simplex F (resp. F^vee) iff all n+1 entries are >= 0.
inline RatVec simplex_coords(const RootSystemData& d, const RatVec& v, Side side) {
  const IntVec& m = (side == Side::Primal) ? d.marks : d.dual_marks;
  RatVec out(d.n + 1, Rational(0));
  Rational s(1);
  for (int i = 0; i < d.n; ++i) {
    out[i + 1] = v[i];
    s -= Rational(m[i]) * v[i];
  }
  out[0] = s;
  return out;
}

inline bool in_fundamental(const RootSystemData& d, const RatVec& v, Side side) {
  for (const auto& c : simplex_coords(d, v, side))
    if (c < Rational(0)) return false;
  return true;
}

/// Bitmask over generator indices 0..n marking the walls the point lies on
/// (zero simplex coordinates). The stabilizer of the point in the (dual)
/// affine Weyl group is generated by exactly these reflections.
inline std::uint32_t wall_mask(const RootSystemData& d, const RatVec& v, Side side) {
  std::uint32_t mask = 0;
  const RatVec sc = simplex_coords(d, v, side);
  for (int i = 0; i <= d.n; ++i)
    if (sc[i].is_zero()) mask |= (1u << i);
  return mask;
}

/// Affine transform record accumulated by reduce_to_fundamental:
/// reduced = linear * input + translation, with `linear` the matrix of the
/// Weyl-group part on the input's coordinate system and the translation a
/// lattice vector of Q^vee (primal) resp. Q (dual). The three sign values of
/// the linear part are carried along.
struct ReduceResult {
  RatVec reduced;
  IntMat linear;
  IntVec translation;
  int sign_e = 1;
  int sign_s = 1;
  int sign_l = 1;
  int steps = 0;
};

/// Reduces an arbitrary point to the fundamental simplex F (primal side,
/// omega^vee coordinates) or F^vee (dual side, omega coordinates) by
/// repeatedly applying the generator whose simplex coordinate is most
/// negative, ties broken by lowest index.
inline ReduceResult reduce_to_fundamental(const RootSystemData& d, const RatVec& input,
                                          Side side) {
  const int n = d.n;
  ReduceResult res;
  res.reduced = input;
  res.linear = int_identity(n);
  res.translation = IntVec(n, 0);

  const bool primal = (side == Side::Primal);
  const IntMat& r0_lin = primal ? d.r_xi_pt : d.r_eta_label;
  const IntVec& r0_shift = primal ? d.xi_check_pt : d.theta_s_label;
  int r0_se, r0_ss, r0_sl;
  if (primal)
    r_xi_signs(d, r0_se, r0_ss, r0_sl);
  else
    r_eta_signs(d, r0_se, r0_ss, r0_sl);

  constexpr int kMaxSteps = 1 << 20;
  while (true) {
    const RatVec sc = simplex_coords(d, res.reduced, side);
    int worst = -1;
    for (int i = 0; i <= n; ++i)
      if (sc[i] < Rational(0) && (worst < 0 || sc[i] < sc[worst])) worst = i;
    if (worst < 0) break;
    if (++res.steps > kMaxSteps)
      throw std::logic_error("reduce_to_fundamental did not terminate");
    if (worst == 0) {
      // affine generator: v -> r0_lin v + shift
      res.reduced = int_mat_ratvec(r0_lin, res.reduced);
      for (int i = 0; i < n; ++i) res.reduced[i] += Rational(r0_shift[i]);
      res.linear = int_mat_mul(r0_lin, res.linear);
      res.translation = int_mat_vec(r0_lin, res.translation);
      for (int i = 0; i < n; ++i) res.translation[i] += r0_shift[i];
      res.sign_e *= r0_se;
      res.sign_s *= r0_ss;
      res.sign_l *= r0_sl;
    } else {
      const IntMat g = primal ? d.point_reflection(worst) : d.label_reflection(worst);
      res.reduced = int_mat_ratvec(g, res.reduced);
      res.linear = int_mat_mul(g, res.linear);
      res.translation = int_mat_vec(g, res.translation);
      int se, ss, sl;
      generator_signs(d, worst, se, ss, sl);
      res.sign_e *= se;
      res.sign_s *= ss;
      res.sign_l *= sl;
    }
  }
  return res;
}

/// Orders of the reflection subgroups generated by wall reflections, cached
/// per wall mask. Index 0 contributes the linear part of the affine
/// generator: the reflection in xi (primal) or in eta (dual).
class StabilizerTable {
 public:
  explicit StabilizerTable(const RootSystemData& d) : d_(&d) {}

  long long order(std::uint32_t mask, Side side) {
    auto& memo = (side == Side::Primal) ? primal_ : dual_;
    const auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const long long ord = closure_order(mask, side);
    memo.emplace(mask, ord);
    return ord;
  }

  const RootSystemData& data() const { return *d_; }

 private:
  long long closure_order(std::uint32_t mask, Side side) const {
    std::vector<IntMat> gens;
    for (int i = 1; i <= d_->n; ++i)
      if (mask & (1u << i)) gens.push_back(d_->label_reflection(i));
    if (mask & 1u) gens.push_back(side == Side::Primal ? d_->r_xi_label : d_->r_eta_label);
    if (gens.empty()) return 1;
    std::unordered_set<IntVec, IntVecHash> seen;
    std::vector<IntMat> frontier{int_identity(d_->n)};
    seen.insert(flatten(frontier.front()));
    while (!frontier.empty()) {
      std::vector<IntMat> next;
      for (const auto& m : frontier)
        for (const auto& g : gens) {
          IntMat p = int_mat_mul(m, g);
          auto key = flatten(p);
          if (seen.insert(std::move(key)).second) next.push_back(std::move(p));
        }
      frontier = std::move(next);
    }
    return static_cast<long long>(seen.size());
  }

  const RootSystemData* d_;
  std::map<std::uint32_t, long long> primal_, dual_;
};

namespace detail {

inline bool mask_hits(std::uint32_t mask, const std::vector<int>& indices) {
  for (int i : indices)
    if (mask & (1u << i)) return true;
  return false;
}

}  // namespace detail

/// h^1(a) = |Stab_{W^aff}(a)| for a point of F.
inline long long stabilizer_order_one(StabilizerTable& tab, const RatVec& y, Side side) {
  const RootSystemData& d = tab.data();
  if (!in_fundamental(d, y, side)) throw std::invalid_argument("point not reduced");
  return tab.order(wall_mask(d, y, side), side);
}

/// h^sigma(a) = |Stab_{W^aff_sigma}(a)| for a in F: equals h^1(a), halved
/// exactly when some wall of a lies in R^sigma (i.e. a is in H^sigma).
inline long long stabilizer_order_primal(StabilizerTable& tab, const RatVec& y, SignHom sigma) {
  const RootSystemData& d = tab.data();
  if (!in_fundamental(d, y, Side::Primal)) throw std::invalid_argument("point not reduced");
  const std::uint32_t mask = wall_mask(d, y, Side::Primal);
  const long long h1 = tab.order(mask, Side::Primal);
  if (sigma == SignHom::One) return h1;
  return detail::mask_hits(mask, negative_generators(d, sigma, /*dual=*/false)) ? h1 / 2 : h1;
}

/// epsilon^sigma(a) = |W^sigma| / h^sigma(a). For a point of the reflected
/// part r_sigma F^sigma, pass the r_sigma-preimage (h is reflection-invariant).
inline long long epsilon_weight(StabilizerTable& tab, const RatVec& y, SignHom sigma) {
  const RootSystemData& d = tab.data();
  return even_order(d, sigma) / stabilizer_order_primal(tab, y, sigma);
}

/// h_M^{vee sigma}(b) for a label b with integer omega coordinates t and
/// b/M in F^vee; reflected labels are handled through their preimage.
inline long long dual_stabilizer_order(StabilizerTable& tab, const IntVec& t, long long M,
                                       SignHom sigma) {
  const RootSystemData& d = tab.data();
  if (M < 1) throw std::invalid_argument("resolution M must be positive");
  RatVec z(d.n);
  for (int i = 0; i < d.n; ++i) z[i] = Rational(t[i], M);
  if (!in_fundamental(d, z, Side::Dual)) throw std::invalid_argument("label not reduced");
  const std::uint32_t mask = wall_mask(d, z, Side::Dual);
  const long long h1 = tab.order(mask, Side::Dual);
  if (sigma == SignHom::One) return h1;
  return detail::mask_hits(mask, negative_generators(d, sigma, /*dual=*/true)) ? h1 / 2 : h1;
}

/// Membership in the boundary set H^{sigma~,sigma} (the common zero locus of
/// Psi^{sigma~,sigma}) for a point of the fundamental simplex, or in its dual
/// counterpart H^{vee sigma~,sigma}: the point must lie on a wall of
/// R^{sigma~} and on a wall of R^{sigma~ . sigma}. Points of the reflected
/// sheet r_sigma F^sigma are tested by passing the r_sigma-preimage, for
/// which membership reduces to the same wall criterion.
inline bool in_boundary_H(const RootSystemData& d, const RatVec& v, FunctionType type,
                          Side side) {
  if (!in_fundamental(d, v, side))
    throw std::invalid_argument(side == Side::Primal ? "point not reduced" : "label not reduced");
  const bool dual = (side == Side::Dual);
  const std::uint32_t mask = wall_mask(d, v, side);
  const SignHom st = type.sigma_tilde;
  const SignHom sts = sign_product(type.sigma_tilde, type.sigma);
  return detail::mask_hits(mask, negative_generators(d, st, dual)) &&
         detail::mask_hits(mask, negative_generators(d, sts, dual));
}

}  // namespace weyldft
