#pragma once

/**
 * @file clifford.hpp
 * @brief Clifford index and gonality of curves on a K3 surface with
 * Picard lattice U(m), computed two ways.
 *
 * The enumerating route lists every decomposition C = D + (C - D) into two
 * moving classes (both with h0 >= 2), takes mu_C = min D.(C - D) - 2 over
 * them, and sets cliff(C) = min(mu_C, floor((g - 1) / 2)).
 *
 * The closed-form route predicts the answer from the elliptic classes
 * alone: cliff(C) = d_C - 2 and gon(C) = d_C, where d_C is the least degree
 * of C on an elliptic curve, except for C = E + F with m > 2, which is
 * Clifford general with cliff(C) = floor(m / 2).
 */

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cones.hpp"

namespace k3cliff {

/// Raised when a property the theory guarantees fails on a computed value.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct MovingDecomposition {
  DivClass part;        ///< D
  DivClass complement;  ///< C - D
  Int product = 0;      ///< D.(C - D)

  friend bool operator==(const MovingDecomposition&, const MovingDecomposition&) = default;
};

/// Every D with h0(D) >= 2 and h0(C - D) >= 2, sorted by D.
inline std::vector<MovingDecomposition> moving_set(const Lattice& lat, const CurveClass& curve) {
  const DivClass c = curve.cls();
  std::vector<MovingDecomposition> out;
  auto consider = [&](DivClass d) {
    const DivClass rest = c - d;
    if (h0(lat, d).h0 < 2 || h0(lat, rest).h0 < 2) return;
    const Int product = lat.intersect(d, rest);
    // curves on a K3 are numerically 2-connected
    if (product < 2)
      throw InvariantViolation("k3cliff: " + d.str() + " + " + rest.str() + " has D.(C-D) = " +
                               std::to_string(product) + " < 2 for m=" + std::to_string(lat.m()));
    out.push_back({d, rest, product});
  };

  // Both D and C - D are effective, so D lies in a box spanned by the
  // effective cone generators.
  if (lat.m() >= 2) {
    for (Int x = 0; x <= c.x; ++x)
      for (Int y = 0; y <= c.y; ++y) consider({x, y});
  } else {
    const auto top = lat.to_e_gamma(c);
    for (Int alpha = 0; alpha <= top.alpha; ++alpha)
      for (Int beta = 0; beta <= top.beta; ++beta) consider(lat.from_e_gamma({alpha, beta}));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.part < b.part; });
  return out;
}

struct MinimalDecompositions {
  std::optional<Int> mu;          ///< empty when A(C) is empty
  std::vector<DivClass> minimizers;  ///< A0(C), lexicographic
};

inline MinimalDecompositions mu_and_A0(const std::vector<MovingDecomposition>& moving) {
  MinimalDecompositions r;
  for (const auto& dec : moving) {
    const Int value = dec.product - 2;
    if (!r.mu || value < *r.mu) {
      r.mu = value;
      r.minimizers.clear();
    }
    if (value == *r.mu) r.minimizers.push_back(dec.part);
  }
  std::sort(r.minimizers.begin(), r.minimizers.end());
  return r;
}

inline MinimalDecompositions mu_and_A0(const Lattice& lat, const CurveClass& curve) {
  return mu_and_A0(moving_set(lat, curve));
}

struct EllipticMinimum {
  Int d = 0;                       ///< min E'.C over elliptic classes E'
  std::vector<DivClass> minimizers;  ///< E0(C), E before F
};

/// d_C and E0(C). Defined for every nonzero class; used on curves and on
/// the parts D, C - D of a decomposition.
inline EllipticMinimum d_and_E0(const Lattice& lat, DivClass c) {
  if (c.is_zero()) throw std::invalid_argument("k3cliff: d_C and E0 are undefined for the zero class");
  EllipticMinimum r;
  bool first = true;
  for (DivClass e : elliptic_classes(lat)) {
    const Int degree = lat.intersect(c, e);
    if (first || degree < r.d) {
      r.d = degree;
      r.minimizers.clear();
      first = false;
    }
    if (degree == r.d) r.minimizers.push_back(e);
  }
  return r;
}

inline EllipticMinimum d_and_E0(const Lattice& lat, const CurveClass& curve) { return d_and_E0(lat, curve.cls()); }

inline Int generic_clifford_index(Int genus) { return checked::floor_div(genus - 1, 2); }

struct CliffordReport {
  Int m = 0;
  DivClass cls;
  Int genus = 0;
  Int d_C = 0;
  std::optional<Int> mu;
  Int clifford = 0;
  Int gonality_lo = 0;
  Int gonality_hi = 0;
  bool is_general = false;
  std::vector<DivClass> A0_witnesses;  ///< filled only by the enumerating route
  std::vector<DivClass> E0_witnesses;

  bool gonality_exact() const { return gonality_lo == gonality_hi; }
  DivClass witness() const { return E0_witnesses.front(); }

  /// Throws InvariantViolation if the record is internally inconsistent.
  void validate() const {
    auto fail = [&](const std::string& what) {
      throw InvariantViolation("k3cliff: report for " + cls.str() + " (m=" + std::to_string(m) + "): " + what);
    };
    const Int generic = generic_clifford_index(genus);
    const Int expected = mu ? std::min(*mu, generic) : generic;
    if (clifford != expected) fail("clifford != min(mu, floor((g-1)/2))");
    if (clifford < 0 || clifford > generic) fail("clifford outside [0, floor((g-1)/2)]");
    if (!(clifford + 2 <= gonality_lo && gonality_lo <= gonality_hi && gonality_hi <= clifford + 3))
      fail("gonality bracket outside [c+2, c+3]");
    if (is_general != (clifford == generic)) fail("generality flag disagrees with clifford");
    if (E0_witnesses.empty()) fail("no elliptic witness");
  }
};

inline CliffordReport clifford_index(const Lattice& lat, const CurveClass& curve) {
  if (curve.genus() < 2)
    throw std::domain_error("k3cliff: Clifford index needs genus >= 2, " + curve.cls().str() + " has genus " +
                            std::to_string(curve.genus()));
  CliffordReport r;
  r.m = lat.m();
  r.cls = curve.cls();
  r.genus = curve.genus();

  const auto minimal = mu_and_A0(lat, curve);
  const auto elliptic = d_and_E0(lat, curve);
  r.mu = minimal.mu;
  r.A0_witnesses = minimal.minimizers;
  r.d_C = elliptic.d;
  r.E0_witnesses = elliptic.minimizers;

  const Int generic = generic_clifford_index(r.genus);
  r.clifford = r.mu ? std::min(*r.mu, generic) : generic;
  r.is_general = r.clifford == generic;

  const bool elliptic_computes = std::all_of(r.E0_witnesses.begin(), r.E0_witnesses.end(), [&](DivClass e) {
    return std::binary_search(r.A0_witnesses.begin(), r.A0_witnesses.end(), e);
  });
  if (!r.is_general && elliptic_computes) {
    // cliff is computed by the pencil |E_C| restricted to C
    r.gonality_lo = r.gonality_hi = r.d_C;
  } else {
    r.gonality_lo = r.clifford + 2;
    r.gonality_hi = std::min(r.clifford + 3, r.d_C);
  }
  return r;
}

inline bool is_exceptional_class(const Lattice& lat, DivClass c) { return lat.m() > 2 && c == kE + kF; }

/// Closed-form prediction; no decompositions are enumerated.
inline CliffordReport theorem_predict(const Lattice& lat, const CurveClass& curve) {
  if (curve.genus() <= 2)
    throw std::domain_error("k3cliff: closed form applies to genus > 2, " + curve.cls().str() + " has genus " +
                            std::to_string(curve.genus()));
  CliffordReport r;
  r.m = lat.m();
  r.cls = curve.cls();
  r.genus = curve.genus();
  const auto elliptic = d_and_E0(lat, curve);
  r.d_C = elliptic.d;
  r.E0_witnesses = elliptic.minimizers;
  r.mu = r.d_C - 2;

  if (is_exceptional_class(lat, r.cls)) {
    r.clifford = lat.m() / 2;
    r.gonality_lo = r.clifford + 2;
    r.gonality_hi = std::min(r.clifford + 3, r.d_C);
  } else {
    r.clifford = r.d_C - 2;
    r.gonality_lo = r.gonality_hi = r.d_C;
  }
  r.is_general = r.clifford == generic_clifford_index(r.genus);
  return r;
}

inline bool verify_theorem(const Lattice& lat, const CurveClass& curve) {
  const auto predicted = theorem_predict(lat, curve);
  const auto computed = clifford_index(lat, curve);
  if (predicted.clifford != computed.clifford || predicted.is_general != computed.is_general) return false;
  if (predicted.gonality_exact())
    return computed.gonality_exact() && computed.gonality_lo == predicted.gonality_lo;
  return true;
}

/// Quantities from the argument that elliptic classes minimise D.(C - D).
struct ProofTrace {
  DivClass D;
  DivClass Dprime;  ///< C - D
  DivClass E_C;
  DivClass E_D;
  DivClass E_Dprime;
  Int n_D = 0;       ///< (D - E_D).(D' - E_D')
  Int r_D = 0;       ///< D.(E_D' - E_C)
  Int r_Dprime = 0;  ///< D'.(E_D - E_C)
  Int inequality1 = 0;  ///< (D - E_C).(D' - E_C)
  Int elliptic_product = 0;  ///< E_D.E_D'
  bool in_A0 = false;

  bool holds() const { return inequality1 >= 0 && n_D >= 0 && r_D >= 0 && r_Dprime >= 0; }
};

namespace detail {
inline DivClass pick(const std::vector<DivClass>& members, std::optional<DivClass> choice, const char* what) {
  if (!choice) return members.front();
  if (std::find(members.begin(), members.end(), *choice) == members.end())
    throw std::invalid_argument(std::string("k3cliff: ") + choice->str() + " is not in " + what);
  return *choice;
}
}  // namespace detail

/// Evaluates the proof quantities for D in A(C). Elliptic representatives
/// default to the first member of each E0 set; any other member may be
/// passed explicitly.
inline ProofTrace proof_trace(const Lattice& lat, const CurveClass& curve, DivClass d,
                              std::optional<DivClass> e_c = std::nullopt, std::optional<DivClass> e_d = std::nullopt,
                              std::optional<DivClass> e_dprime = std::nullopt) {
  if (d.is_zero()) throw std::invalid_argument("k3cliff: E0(D) is undefined for D = 0");
  const auto moving = moving_set(lat, curve);
  const auto it = std::find_if(moving.begin(), moving.end(), [&](const auto& dec) { return dec.part == d; });
  if (it == moving.end()) throw std::invalid_argument("k3cliff: " + d.str() + " is not in A(" + curve.cls().str() + ")");
  const auto minimal = mu_and_A0(moving);

  ProofTrace t;
  t.D = d;
  t.Dprime = curve.cls() - d;
  t.E_C = detail::pick(d_and_E0(lat, curve).minimizers, e_c, "E0(C)");
  t.E_D = detail::pick(d_and_E0(lat, t.D).minimizers, e_d, "E0(D)");
  t.E_Dprime = detail::pick(d_and_E0(lat, t.Dprime).minimizers, e_dprime, "E0(C-D)");
  t.n_D = lat.intersect(t.D - t.E_D, t.Dprime - t.E_Dprime);
  t.r_D = lat.intersect(t.D, t.E_Dprime - t.E_C);
  t.r_Dprime = lat.intersect(t.Dprime, t.E_D - t.E_C);
  t.inequality1 = lat.intersect(t.D - t.E_C, t.Dprime - t.E_C);
  t.elliptic_product = lat.intersect(t.E_D, t.E_Dprime);
  t.in_A0 = std::binary_search(minimal.minimizers.begin(), minimal.minimizers.end(), d);

  if (!t.holds())
    throw InvariantViolation("k3cliff: proof inequality fails for C=" + curve.cls().str() + ", D=" + d.str() +
                             " (m=" + std::to_string(lat.m()) + ")");
  return t;
}

}  // namespace k3cliff
