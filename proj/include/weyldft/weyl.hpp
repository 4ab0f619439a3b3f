// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "weyldft/rational.hpp"
#include "weyldft/rootdata.hpp"

namespace weyldft {

/// The four sign homomorphisms W -> {+1,-1}. One and E (determinant) exist for
/// every Weyl group; S and L only when the root system has two root lengths.
/// Under the pointwise product they form the Klein four-group.
enum class SignHom { One, E, S, L };

inline SignHom sign_product(SignHom a, SignHom b) {
  if (a == b) return SignHom::One;
  if (a == SignHom::One) return b;
  if (b == SignHom::One) return a;
  // distinct nontrivial elements multiply to the third one
  if ((a == SignHom::E && b == SignHom::S) || (a == SignHom::S && b == SignHom::E))
    return SignHom::L;
  if ((a == SignHom::E && b == SignHom::L) || (a == SignHom::L && b == SignHom::E))
    return SignHom::S;
  return SignHom::E;
}

inline bool sign_available(SignHom s, const AlgebraId& id) {
  return s == SignHom::One || s == SignHom::E || id.two_lengths();
}

inline std::string sign_name(SignHom s) {
  switch (s) {
    case SignHom::One: return "1";
    case SignHom::E: return "e";
    case SignHom::S: return "s";
    case SignHom::L: return "l";
  }
  return "?";
}

inline SignHom parse_sign(const std::string& s) {
  if (s == "1" || s == "one") return SignHom::One;
  if (s == "e") return SignHom::E;
  if (s == "s") return SignHom::S;
  if (s == "l") return SignHom::L;
  throw std::invalid_argument("unknown sign homomorphism: " + s);
}

struct WeylElement {
  IntMat label_mat;  // action on omega (label) coordinates
  IntMat point_mat;  // action on omega^vee (point) coordinates
  int sign_e = 1;
  int sign_s = 1;    // +1 identically for one-length algebras
  int sign_l = 1;
  int word_length = 0;
};

inline int sign_value(const RootSystemData& d, SignHom s, const WeylElement& w) {
  if (!sign_available(s, d.algebra))
    throw std::invalid_argument("sign homomorphism undefined for " + d.algebra.name());
  switch (s) {
    case SignHom::One: return 1;
    case SignHom::E: return w.sign_e;
    case SignHom::S: return w.sign_s;
    case SignHom::L: return w.sign_l;
  }
  return 1;
}

/// Signs of the simple reflection r_i (1-based index).
inline void generator_signs(const RootSystemData& d, int i, int& se, int& ss, int& sl) {
  se = -1;
  ss = sl = 1;
  if (d.algebra.two_lengths()) {
    const bool is_short =
        std::find(d.short_set.begin(), d.short_set.end(), i) != d.short_set.end();
    (is_short ? ss : sl) = -1;
  }
}

/// Signs of the reflection in the highest root xi (always long).
inline void r_xi_signs(const RootSystemData& d, int& se, int& ss, int& sl) {
  se = -1;
  ss = 1;
  sl = d.algebra.two_lengths() ? -1 : 1;
}

/// Signs of the reflection in the highest dual root eta (proportional to the
/// highest short root for two-length systems, to xi otherwise).
inline void r_eta_signs(const RootSystemData& d, int& se, int& ss, int& sl) {
  se = -1;
  if (d.algebra.two_lengths()) {
    ss = -1;
    sl = 1;
  } else {
    ss = sl = 1;
  }
}

inline constexpr long long kDefaultWeylOrderCap = 1LL << 21;

/// The finite Weyl group as an explicit element list. Generated breadth-first
/// by word length with generators scanned in index order, so the ordering is
/// deterministic: identity first, then r_1..r_n, then length-2 words in
/// lexicographic order, and so on.
class WeylGroup {
 public:
  std::vector<WeylElement> elements;

  const WeylElement& identity() const { return elements.front(); }

  /// Index of the element with the given label matrix, or -1.
  int find_label_mat(const IntMat& m) const {
    const auto it = index_.find(flatten(m));
    return it == index_.end() ? -1 : it->second;
  }

  static WeylGroup generate(const RootSystemData& d, long long cap = kDefaultWeylOrderCap) {
    if (d.weyl_order > cap)
      throw std::runtime_error("Weyl group of " + d.algebra.name() + " has order " +
                               std::to_string(d.weyl_order) +
                               ", above the generation cap " + std::to_string(cap));
    WeylGroup g;
    const int n = d.n;
    std::vector<IntMat> gen_label(n), gen_point(n);
    std::vector<std::array<int, 3>> gen_sign(n);
    for (int i = 1; i <= n; ++i) {
      gen_label[i - 1] = d.label_reflection(i);
      gen_point[i - 1] = d.point_reflection(i);
      generator_signs(d, i, gen_sign[i - 1][0], gen_sign[i - 1][1], gen_sign[i - 1][2]);
    }
    WeylElement id;
    id.label_mat = int_identity(n);
    id.point_mat = int_identity(n);
    g.elements.push_back(id);
    g.index_.emplace(flatten(id.label_mat), 0);
    std::size_t head = 0;
    while (head < g.elements.size()) {
      const WeylElement cur = g.elements[head];  // copy: vector may reallocate
      ++head;
      for (int i = 0; i < n; ++i) {
        WeylElement nxt;
        nxt.label_mat = int_mat_mul(cur.label_mat, gen_label[i]);
        auto key = flatten(nxt.label_mat);
        if (g.index_.count(key)) continue;
        nxt.point_mat = int_mat_mul(cur.point_mat, gen_point[i]);
        nxt.sign_e = cur.sign_e * gen_sign[i][0];
        nxt.sign_s = cur.sign_s * gen_sign[i][1];
        nxt.sign_l = cur.sign_l * gen_sign[i][2];
        nxt.word_length = cur.word_length + 1;
        g.index_.emplace(std::move(key), static_cast<int>(g.elements.size()));
        g.elements.push_back(std::move(nxt));
      }
    }
    if (static_cast<long long>(g.elements.size()) != d.weyl_order)
      throw std::logic_error("Weyl group closure has unexpected size for " + d.algebra.name());
    return g;
  }

 private:
  std::unordered_map<IntVec, int, IntVecHash> index_;
};

inline std::vector<WeylElement> even_subgroup(const RootSystemData& d, SignHom s,
                                              const WeylGroup& g) {
  std::vector<WeylElement> out;
  for (const auto& w : g.elements)
    if (sign_value(d, s, w) == 1) out.push_back(w);
  return out;
}

/// R^sigma (primal) or R^{vee sigma} (dual): the generators of the (dual)
/// affine Weyl group on which sigma composed with the retraction is -1.
/// Index 0 stands for the affine reflection r_0 (resp. r_0^vee), whose linear
/// part is the reflection in xi (resp. eta).
inline std::vector<int> negative_generators(const RootSystemData& d, SignHom s, bool dual) {
  if (!sign_available(s, d.algebra))
    throw std::invalid_argument("sign homomorphism undefined for " + d.algebra.name());
  std::vector<int> out;
  int se, ss, sl;
  if (dual)
    r_eta_signs(d, se, ss, sl);
  else
    r_xi_signs(d, se, ss, sl);
  auto pick = [&](int e, int sshort, int slong) {
    switch (s) {
      case SignHom::One: return 1;
      case SignHom::E: return e;
      case SignHom::S: return sshort;
      case SignHom::L: return slong;
    }
    return 1;
  };
  if (pick(se, ss, sl) == -1) out.push_back(0);
  for (int i = 1; i <= d.n; ++i) {
    generator_signs(d, i, se, ss, sl);
    if (pick(se, ss, sl) == -1) out.push_back(i);
  }
  return out;
}

/// One of the ten orbit-function types, identified by the pair of sign
/// homomorphisms (sigma~, sigma): sigma fixes the even subgroup W^sigma that
/// is summed over, sigma~ the sign weighting. Pairs (sigma~, sigma) and
/// (sigma~ . sigma, sigma) define the same function; the canonical
/// representative stores the smaller of the two in the order 1 < e < s < l.
struct FunctionType {
  SignHom sigma_tilde = SignHom::One;
  SignHom sigma = SignHom::One;

  static FunctionType make(SignHom st, SignHom si) {
    FunctionType t{st, si};
    const SignHom alt = sign_product(st, si);
    if (static_cast<int>(alt) < static_cast<int>(t.sigma_tilde)) t.sigma_tilde = alt;
    return t;
  }

  bool available(const AlgebraId& id) const {
    return sign_available(sigma_tilde, id) && sign_available(sigma, id);
  }

  std::string name() const {
    if (sigma == SignHom::One) {
      switch (sigma_tilde) {
        case SignHom::One: return "C";
        case SignHom::E: return "S";
        case SignHom::S: return "Ss";
        case SignHom::L: return "Sl";
      }
    }
    const bool plus = sigma_tilde == SignHom::One;
    switch (sigma) {
      case SignHom::E: return plus ? "E+" : "E-";
      case SignHom::S: return plus ? "Es+" : "Es-";
      case SignHom::L: return plus ? "El+" : "El-";
      default: break;
    }
    return "?";
  }

  friend bool operator==(const FunctionType& a, const FunctionType& b) {
    return a.sigma_tilde == b.sigma_tilde && a.sigma == b.sigma;
  }
};

/// Accepts a canonical name ("C", "S", "Ss", "Sl", "E+", "Es+", "El+", "E-",
/// "Es-", "El-") or an explicit pair "(sigma~,sigma)" with tokens 1/e/s/l,
/// e.g. "(e,s)".
inline FunctionType parse_function_type(const std::string& s) {
  static const std::vector<std::pair<std::string, FunctionType>> named = {
      {"C", FunctionType::make(SignHom::One, SignHom::One)},
      {"S", FunctionType::make(SignHom::E, SignHom::One)},
      {"Ss", FunctionType::make(SignHom::S, SignHom::One)},
      {"Sl", FunctionType::make(SignHom::L, SignHom::One)},
      {"E+", FunctionType::make(SignHom::One, SignHom::E)},
      {"Es+", FunctionType::make(SignHom::One, SignHom::S)},
      {"El+", FunctionType::make(SignHom::One, SignHom::L)},
      {"E-", FunctionType::make(SignHom::S, SignHom::E)},
      {"Es-", FunctionType::make(SignHom::E, SignHom::S)},
      {"El-", FunctionType::make(SignHom::E, SignHom::L)},
  };
  for (const auto& [name, t] : named)
    if (name == s) return t;
  if (s.size() >= 5 && s.front() == '(' && s.back() == ')') {
    const auto comma = s.find(',');
    if (comma != std::string::npos) {
      const SignHom st = parse_sign(s.substr(1, comma - 1));
      const SignHom si = parse_sign(s.substr(comma + 1, s.size() - comma - 2));
      return FunctionType::make(st, si);
    }
  }
  throw std::invalid_argument("unknown function type: " + s);
}

/// The types defined for the given algebra: ten for two root lengths,
/// three (C, S, E+) otherwise. Deterministic order.
inline std::vector<FunctionType> all_function_types(const AlgebraId& id) {
  std::vector<FunctionType> out = {
      FunctionType::make(SignHom::One, SignHom::One),
      FunctionType::make(SignHom::E, SignHom::One),
      FunctionType::make(SignHom::One, SignHom::E),
  };
  if (id.two_lengths()) {
    out.push_back(FunctionType::make(SignHom::S, SignHom::One));
    out.push_back(FunctionType::make(SignHom::L, SignHom::One));
    out.push_back(FunctionType::make(SignHom::One, SignHom::S));
    out.push_back(FunctionType::make(SignHom::One, SignHom::L));
    out.push_back(FunctionType::make(SignHom::S, SignHom::E));
    out.push_back(FunctionType::make(SignHom::E, SignHom::S));
    out.push_back(FunctionType::make(SignHom::E, SignHom::L));
  }
  return out;
}

inline long long even_order(const RootSystemData& d, SignHom s) {
  return s == SignHom::One ? d.weyl_order : d.weyl_order / 2;
}

}  // namespace weyldft
