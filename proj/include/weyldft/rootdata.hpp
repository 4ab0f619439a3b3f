// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyldft/rational.hpp"

namespace weyldft {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct AlgebraId {
  Family family;
  int rank;

  bool two_lengths() const {
    return family == Family::B || family == Family::C || family == Family::F ||
           family == Family::G;
  }

  bool admissible() const {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 3;
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 4;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  std::string name() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  friend bool operator==(const AlgebraId& a, const AlgebraId& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const AlgebraId& a, const AlgebraId& b) { return !(a == b); }
};

/// Parses strings like "C2", "B3", "E7". Throws on anything else.
inline AlgebraId parse_algebra(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("unsupported algebra: " + s);
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (std::string("ABCDEFG").find(f) == std::string::npos)
    throw std::invalid_argument("unsupported algebra: " + s);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("unsupported algebra: " + s);
  AlgebraId id{static_cast<Family>(f), std::stoi(s.substr(1))};
  if (!id.admissible()) throw std::invalid_argument("unsupported algebra: " + s);
  return id;
}

/// Exact arithmetic data of one simple root system.
///
/// Conventions, fixed once for the whole library:
///  - simple roots numbered as in Bourbaki for A,B,C,D,E,F; for G_2 the
///    numbering has alpha_1 long and alpha_2 short (Cartan [[2,-3],[-1,2]]),
///  - long roots normalized to <alpha,alpha> = 2,
///  - labels carry omega-basis (weight) coordinates, points carry
///    omega^vee-basis (coweight) coordinates.
struct RootSystemData {
  AlgebraId algebra;
  int n = 0;                  // rank
  IntMat cartan;              // C_ij = <alpha_i, alpha_j^vee>
  RatMat cartan_inv;
  RatMat gram;                // <alpha_i, alpha_j>
  IntVec marks;               // m_1..m_n, highest root xi = sum m_i alpha_i
  IntVec dual_marks;          // m_1^vee..m_n^vee, eta = sum m_i^vee alpha_i^vee
  long long coxeter_number = 0;
  long long connection_index = 0;   // c = det C = |P/Q|
  long long weyl_order = 0;         // |W|, closed form
  std::vector<int> short_set;       // 1-based indices of short simple roots
  std::vector<int> long_set;

  // Highest-root data used by the affine generators r_0 and r_0^vee.
  IntVec xi_label;        // omega coords of xi
  IntVec xi_check_pt;     // omega^vee coords of xi^vee
  IntVec eta_label;       // omega coords of eta
  IntVec theta_s_label;   // omega coords of 2 eta/<eta,eta> (the highest short root)
  IntMat r_xi_label, r_xi_pt;    // reflection in xi, on label / point coords
  IntMat r_eta_label, r_eta_pt;  // reflection in eta

  /// Simple reflection r_i acting on label (omega) coordinates:
  /// t_k -> t_k - C_ik t_i.
  IntMat label_reflection(int i) const {
    IntMat m = int_identity(n);
    for (int k = 0; k < n; ++k) m[k][i - 1] -= cartan[i - 1][k];
    return m;
  }

  /// Simple reflection r_i acting on point (omega^vee) coordinates:
  /// y_k -> y_k - C_ki y_i.
  IntMat point_reflection(int i) const {
    IntMat m = int_identity(n);
    for (int k = 0; k < n; ++k) m[k][i - 1] -= cartan[k][i - 1];
    return m;
  }
};

namespace detail {

inline IntVec to_int_vec(const RatVec& v, const char* what) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_integer()) throw std::logic_error(std::string("expected integer vector: ") + what);
    r[i] = v[i].num();
  }
  return r;
}

inline IntMat to_int_mat(const RatMat& m, const char* what) {
  IntMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = to_int_vec(m[i], what);
  return r;
}

// Rank-1 update reflection r_v: lambda -> lambda - <lambda, v^vee> v written in a
// coordinate pair (row functional f, column vector g): M = I - g f^T.
inline RatMat rank_one_reflection(const RatVec& f, const RatVec& g) {
  const std::size_t n = f.size();
  RatMat m = rat_identity(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) m[k][l] -= g[k] * f[l];
  return m;
}

}  // namespace detail

/// Assembles the full RootSystemData for an admissible algebra.
/// Deterministic; all invariants are checked at construction.
inline RootSystemData build_root_system(AlgebraId id) {
  if (!id.admissible()) throw std::invalid_argument("unsupported algebra: " + id.name());
  RootSystemData d;
  d.algebra = id;
  const int n = id.rank;
  d.n = n;

  // squared lengths of simple roots and diagram edges
  RatVec len2(n, Rational(2));
  std::vector<std::pair<int, int>> edges;  // 0-based
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1});
  };
  switch (id.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      chain(n);
      len2[n - 1] = Rational(1);
      break;
    case Family::C:
      chain(n);
      for (int i = 0; i < n - 1; ++i) len2[i] = Rational(1);
      break;
    case Family::D:
      chain(n - 1);
      edges.push_back({n - 3, n - 1});
      break;
    case Family::E:
      // Bourbaki: chain 1-3-4-...-n with node 2 attached to node 4.
      edges.push_back({0, 2});
      for (int i = 2; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({1, 3});
      break;
    case Family::F:
      chain(4);
      len2[2] = Rational(1);
      len2[3] = Rational(1);
      break;
    case Family::G:
      chain(2);
      len2[1] = Rational(2, 3);  // alpha_1 long, alpha_2 short
      break;
  }

  d.gram = RatMat(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) d.gram[i][i] = len2[i];
  for (auto [i, j] : edges) {
    const Rational g = -(len2[i] > len2[j] ? len2[i] : len2[j]) / Rational(2);
    d.gram[i][j] = g;
    d.gram[j][i] = g;
  }

  RatMat cartan_rat(n, RatVec(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan_rat[i][j] = Rational(2) * d.gram[i][j] / d.gram[j][j];
  d.cartan = detail::to_int_mat(cartan_rat, "Cartan matrix");
  d.cartan_inv = rat_inverse(cartan_rat);

  for (int i = 1; i <= n; ++i) (len2[i - 1] < Rational(2) ? d.short_set : d.long_set).push_back(i);
  if (!id.two_lengths() && !d.short_set.empty())
    throw std::logic_error("one-length algebra with short roots");

  switch (id.family) {
    case Family::A:
      d.marks = IntVec(n, 1);
      break;
    case Family::B:
      d.marks = IntVec(n, 2);
      d.marks[0] = 1;
      d.dual_marks = IntVec(n, 2);
      d.dual_marks[n - 1] = 1;
      break;
    case Family::C:
      d.marks = IntVec(n, 2);
      d.marks[n - 1] = 1;
      d.dual_marks = IntVec(n, 2);
      d.dual_marks[0] = 1;
      break;
    case Family::D:
      d.marks = IntVec(n, 2);
      d.marks[0] = d.marks[n - 2] = d.marks[n - 1] = 1;
      break;
    case Family::E:
      if (n == 6) d.marks = {1, 2, 2, 3, 2, 1};
      if (n == 7) d.marks = {2, 2, 3, 4, 3, 2, 1};
      if (n == 8) d.marks = {2, 3, 4, 6, 5, 4, 3, 2};
      break;
    case Family::F:
      d.marks = {2, 3, 4, 2};
      d.dual_marks = {2, 4, 3, 2};
      break;
    case Family::G:
      d.marks = {2, 3};
      d.dual_marks = {3, 2};
      break;
  }
  if (d.dual_marks.empty()) d.dual_marks = d.marks;  // one-length: self-dual data

  d.coxeter_number = 1;
  long long dual_sum = 1;
  for (int i = 0; i < n; ++i) {
    d.coxeter_number += d.marks[i];
    dual_sum += d.dual_marks[i];
  }
  if (dual_sum != d.coxeter_number)
    throw std::logic_error("marks and dual marks disagree on the Coxeter number");

  const Rational det = rat_det(cartan_rat);
  if (!det.is_integer()) throw std::logic_error("non-integer Cartan determinant");
  d.connection_index = det.num();
  long long expected_c = 0;
  switch (id.family) {
    case Family::A: expected_c = n + 1; break;
    case Family::B:
    case Family::C: expected_c = 2; break;
    case Family::D: expected_c = 4; break;
    case Family::E: expected_c = (n == 6) ? 3 : (n == 7 ? 2 : 1); break;
    case Family::F:
    case Family::G: expected_c = 1; break;
  }
  if (d.connection_index != expected_c)
    throw std::logic_error("connection index mismatch for " + id.name());

  auto factorial = [](int k) {
    long long r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  switch (id.family) {
    case Family::A: d.weyl_order = factorial(n + 1); break;
    case Family::B:
    case Family::C: d.weyl_order = (1LL << n) * factorial(n); break;
    case Family::D: d.weyl_order = (1LL << (n - 1)) * factorial(n); break;
    case Family::E: d.weyl_order = (n == 6) ? 51840LL : (n == 7 ? 2903040LL : 696729600LL); break;
    case Family::F: d.weyl_order = 1152; break;
    case Family::G: d.weyl_order = 12; break;
  }

  // Highest-root data. xi = sum m_i alpha_i is always long, so xi^vee = xi.
  {
    RatVec xi_label(n, Rational(0));    // <xi, alpha_k^vee> = sum_j m_j C_jk
    RatVec xi_pt(n, Rational(0));       // <xi, alpha_k>     = sum_j m_j G_jk
    RatVec xi_alpha_check(n);           // xi in alpha^vee coords: m_j G_jj / 2
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        xi_label[k] += Rational(d.marks[j] * d.cartan[j][k]);
        xi_pt[k] += Rational(d.marks[j]) * d.gram[j][k];
      }
      xi_alpha_check[k] = Rational(d.marks[k]) * d.gram[k][k] / Rational(2);
    }
    d.xi_label = detail::to_int_vec(xi_label, "xi (omega coords)");
    d.xi_check_pt = detail::to_int_vec(xi_pt, "xi^vee (omega^vee coords)");
    for (int k = 0; k < n; ++k)
      if (d.xi_label[k] < 0) throw std::logic_error("highest root not dominant");
    // r_xi on labels: t -> t - <lambda, xi^vee> xi,   <lambda, xi^vee> = t . xi_alpha_check
    d.r_xi_label = detail::to_int_mat(
        detail::rank_one_reflection(xi_alpha_check,
                                    RatVec(xi_label.begin(), xi_label.end())),
        "r_xi label matrix");
    // r_xi on points: y -> y - (sum m_l y_l) xi^vee
    RatVec mvec(n);
    for (int l = 0; l < n; ++l) mvec[l] = Rational(d.marks[l]);
    d.r_xi_pt = detail::to_int_mat(
        detail::rank_one_reflection(mvec, RatVec(xi_pt.begin(), xi_pt.end())),
        "r_xi point matrix");
  }

  // Dual highest-root data. eta = sum m_i^vee alpha_i^vee; 2 eta/<eta,eta> is the
  // highest short root (for one-length systems eta = xi and this reduces to it).
  {
    RatMat dual_gram(n, RatVec(n));  // <alpha_i^vee, alpha_j^vee>
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dual_gram[i][j] = Rational(4) * d.gram[i][j] / (d.gram[i][i] * d.gram[j][j]);
    Rational eta_norm2(0);
    RatVec eta_label(n, Rational(0));  // <eta, alpha_k^vee>
    RatVec eta_pt(n, Rational(0));     // <eta, alpha_k>
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        eta_norm2 += Rational(d.dual_marks[i] * d.dual_marks[j]) * dual_gram[i][j];
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        eta_label[k] += Rational(d.dual_marks[j]) * dual_gram[j][k];
        eta_pt[k] += Rational(d.dual_marks[j] * d.cartan[k][j]);
      }
    d.eta_label = detail::to_int_vec(eta_label, "eta (omega coords)");
    for (int k = 0; k < n; ++k)
      if (d.eta_label[k] < 0) throw std::logic_error("highest dual root not dominant");
    RatVec theta_s(n);
    for (int k = 0; k < n; ++k) theta_s[k] = Rational(2) * eta_label[k] / eta_norm2;
    d.theta_s_label = detail::to_int_vec(theta_s, "highest short root (omega coords)");
    // r_eta on labels: t -> t - <lambda, eta^vee> eta; eta^vee has alpha^vee
    // coords 2 m^vee / <eta,eta>.
    RatVec eta_check_alpha(n);
    for (int j = 0; j < n; ++j) eta_check_alpha[j] = Rational(2 * d.dual_marks[j]) / eta_norm2;
    d.r_eta_label = detail::to_int_mat(
        detail::rank_one_reflection(eta_check_alpha,
                                    RatVec(eta_label.begin(), eta_label.end())),
        "r_eta label matrix");
    // r_eta on points: y -> y - (sum_l 2 m_l^vee / G_ll y_l) theta_s
    RatVec f(n);
    RatVec theta_s_pt(n, Rational(0));  // <theta_s, alpha_k>
    for (int l = 0; l < n; ++l) f[l] = Rational(2 * d.dual_marks[l]) / d.gram[l][l];
    for (int k = 0; k < n; ++k)
      theta_s_pt[k] = Rational(2) * eta_pt[k] / eta_norm2;
    d.r_eta_pt = detail::to_int_mat(detail::rank_one_reflection(f, theta_s_pt),
                                    "r_eta point matrix");
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.gram[i][j] != d.gram[j][i]) throw std::logic_error("Gram matrix not symmetric");

  return d;
}

inline RootSystemData build_root_system(const std::string& name) {
  return build_root_system(parse_algebra(name));
}

/// <b, a> for a label with omega coordinates t and a point with alpha^vee
/// coordinates x; the bases are dual so this is the plain dot product.
inline Rational pairing(const IntVec& t, const RatVec& x) {
  if (t.size() != x.size()) throw std::invalid_argument("pairing: length mismatch");
  Rational s(0);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) s += Rational(t[i]) * x[i];
  return s;
}

/// omega^vee coordinates -> alpha^vee coordinates (x = C^{-1} y).
inline RatVec omega_check_to_alpha_check(const RootSystemData& d, const RatVec& y) {
  return rat_mat_vec(d.cartan_inv, y);
}

/// alpha^vee coordinates -> omega^vee coordinates (y = C x).
inline RatVec alpha_check_to_omega_check(const RootSystemData& d, const RatVec& x) {
  RatVec y(d.n, Rational(0));
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (d.cartan[i][j] != 0) y[i] += Rational(d.cartan[i][j]) * x[j];
  return y;
}

/// Orthonormal realization of the root space: alpha_i = sum_k L_ik b_k with
/// (b_k) orthonormal, L the Cholesky factor of the Gram matrix. The factor is
/// exact when every pivot is a rational square (true e.g. for C_2, where it
/// reproduces the basis (alpha_1, alpha_1 + alpha_2)); otherwise only the
/// floating-point embedding is available.
struct OrthonormalBasis {
  RatMat L;                              // valid iff exact
  bool exact = false;
  std::vector<std::vector<double>> Ld;   // always valid
};

namespace detail {

inline std::optional<Rational> rat_sqrt(const Rational& r) {
  if (r < Rational(0)) return std::nullopt;
  auto isqrt = [](long long v) -> std::optional<long long> {
    const long long s = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
    for (long long c = std::max(0LL, s - 2); c <= s + 2; ++c)
      if (c * c == v) return c;
    return std::nullopt;
  };
  const auto sn = isqrt(r.num());
  const auto sd = isqrt(r.den());
  if (!sn || !sd) return std::nullopt;
  return Rational(*sn, *sd);
}

}  // namespace detail

inline OrthonormalBasis orthonormal_basis(const RootSystemData& d) {
  const int n = d.n;
  OrthonormalBasis ob;
  ob.L = RatMat(n, RatVec(n, Rational(0)));
  ob.exact = true;
  RatMat a = d.gram;
  for (int j = 0; j < n && ob.exact; ++j) {
    Rational pivot = a[j][j];
    for (int k = 0; k < j; ++k) pivot -= ob.L[j][k] * ob.L[j][k];
    const auto root = detail::rat_sqrt(pivot);
    if (!root || root->is_zero()) {
      ob.exact = false;
      break;
    }
    ob.L[j][j] = *root;
    for (int i = j + 1; i < n; ++i) {
      Rational v = a[i][j];
      for (int k = 0; k < j; ++k) v -= ob.L[i][k] * ob.L[j][k];
      ob.L[i][j] = v / *root;
    }
  }
  // floating-point factor, computed independently of the exact attempt
  std::vector<std::vector<double>> g(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = d.gram[i][j].to_double();
  ob.Ld.assign(n, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    double pivot = g[j][j];
    for (int k = 0; k < j; ++k) pivot -= ob.Ld[j][k] * ob.Ld[j][k];
    ob.Ld[j][j] = std::sqrt(pivot);
    for (int i = j + 1; i < n; ++i) {
      double v = g[i][j];
      for (int k = 0; k < j; ++k) v -= ob.Ld[i][k] * ob.Ld[j][k];
      ob.Ld[i][j] = v / ob.Ld[j][j];
    }
  }
  return ob;
}

namespace detail {

/// alpha-basis coordinates of a point given in omega^vee coordinates.
inline RatVec point_alpha_coords(const RootSystemData& d, const RatVec& y) {
  RatVec x = omega_check_to_alpha_check(d, y);
  for (int j = 0; j < d.n; ++j) x[j] = x[j] * Rational(2) / d.gram[j][j];
  return x;
}

/// alpha-basis coordinates of a label given in omega coordinates.
inline RatVec label_alpha_coords(const RootSystemData& d, const IntVec& t) {
  RatMat ct_inv = rat_inverse([&] {
    RatMat ct(d.n, RatVec(d.n));
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) ct[i][j] = Rational(d.cartan[j][i]);
    return ct;
  }());
  RatVec tv(t.begin(), t.end());
  return rat_mat_vec(ct_inv, tv);
}

inline std::vector<double> embed(const OrthonormalBasis& ob, const RatVec& alpha_coords) {
  const int n = static_cast<int>(alpha_coords.size());
  std::vector<double> r(n, 0.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) r[k] += alpha_coords[i].to_double() * ob.Ld[i][k];
  return r;
}

inline std::optional<RatVec> embed_exact(const OrthonormalBasis& ob, const RatVec& alpha_coords) {
  if (!ob.exact) return std::nullopt;
  const int n = static_cast<int>(alpha_coords.size());
  RatVec r(n, Rational(0));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) r[k] += alpha_coords[i] * ob.L[i][k];
  return r;
}

}  // namespace detail

/// Euclidean coordinates of a point (omega^vee coords) in the orthonormal basis.
inline std::vector<double> orthonormal_point(const RootSystemData& d, const OrthonormalBasis& ob,
                                             const RatVec& y) {
  return detail::embed(ob, detail::point_alpha_coords(d, y));
}

inline std::optional<RatVec> orthonormal_point_exact(const RootSystemData& d,
                                                     const OrthonormalBasis& ob, const RatVec& y) {
  return detail::embed_exact(ob, detail::point_alpha_coords(d, y));
}

/// Euclidean coordinates of a label (omega coords) in the orthonormal basis.
inline std::vector<double> orthonormal_label(const RootSystemData& d, const OrthonormalBasis& ob,
                                             const IntVec& t) {
  return detail::embed(ob, detail::label_alpha_coords(d, t));
}

inline std::optional<RatVec> orthonormal_label_exact(const RootSystemData& d,
                                                     const OrthonormalBasis& ob, const IntVec& t) {
  return detail::embed_exact(ob, detail::label_alpha_coords(d, t));
}

}  // namespace weyldft
