#pragma once

/**
 * @file cones.hpp
 * @brief Effective and nef cones of U(m), h0 of line bundles, and
 * recognition of classes of irreducible curves.
 *
 * For m >= 2 the surface has no rational curves, so the effective and nef
 * cones coincide with the closed first quadrant. For m = 1 the effective
 * cone is spanned by E and Gamma and the nef cone by E and E + F; h0 of an
 * effective class is computed on its mobile part after removing Gamma as
 * a fixed component.
 */

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace k3cliff {

inline bool is_effective(const Lattice& lat, DivClass d) {
  if (d.is_zero()) return false;
  if (lat.m() >= 2) return d.x >= 0 && d.y >= 0;
  const auto c = lat.to_e_gamma(d);
  return c.alpha >= 0 && c.beta >= 0;
}

inline bool is_nef(const Lattice& lat, DivClass d) {
  if (lat.m() >= 2) return d.x >= 0 && d.y >= 0;
  return lat.intersect(d, kE) >= 0 && lat.intersect(d, kGamma) >= 0;
}

struct H0Result {
  Int h0 = 0;
  DivClass mobile_part;
  Int stripped_gamma_count = 0;

  friend bool operator==(const H0Result&, const H0Result&) = default;
};

/// Mobile part of an effective class: Gamma is removed while it pairs
/// negatively, i.e. beta is lowered to min(beta, floor(alpha / 2)).
inline DivClass mobile_part(const Lattice& lat, DivClass d, Int* stripped = nullptr) {
  if (stripped) *stripped = 0;
  if (lat.m() >= 2 || !is_effective(lat, d)) return d;
  auto c = lat.to_e_gamma(d);
  const Int beta = std::min(c.beta, c.alpha / 2);
  if (stripped) *stripped = c.beta - beta;
  c.beta = beta;
  return lat.from_e_gamma(c);
}

inline H0Result h0(const Lattice& lat, DivClass d) {
  if (d.is_zero()) return {1, d, 0};
  if (!is_effective(lat, d)) return {0, d, 0};

  H0Result r;
  r.mobile_part = mobile_part(lat, d, &r.stripped_gamma_count);
  const DivClass p = r.mobile_part;
  if (p.is_zero()) {
    r.h0 = 1;
  } else if (const Int sq = lat.square(p); sq > 0) {
    r.h0 = lat.chi(p);
  } else {
    // nef and isotropic: a multiple kE or kF of an elliptic pencil
    r.h0 = checked::add(std::max(p.x, p.y), 1);
  }
  return r;
}

/// Elliptic curve classes: E and F for m >= 2, only E for m = 1 (where F
/// has Gamma as a fixed component).
inline std::vector<DivClass> elliptic_classes(const Lattice& lat) {
  if (lat.m() == 1) return {kE};
  return {kE, kF};
}

enum class CurveDefect {
  none,
  zero_class,
  not_effective,
  not_nef,
  pencil_multiple,   ///< kE or kF with k >= 2: composed with an elliptic pencil
  fixed_component,   ///< m = 1, C = kE + Gamma: Gamma is a base component
};

/// Reason a class does not contain irreducible curves, or CurveDefect::none.
inline CurveDefect curve_defect(const Lattice& lat, DivClass c) {
  if (c.is_zero()) return CurveDefect::zero_class;
  if (c == kE || (lat.m() >= 2 && c == kF) || (lat.m() == 1 && c == kGamma)) return CurveDefect::none;
  if (!is_effective(lat, c)) return CurveDefect::not_effective;
  if (!is_nef(lat, c)) return CurveDefect::not_nef;
  // nef with C^2 = 0 is a multiple of E or F
  if (lat.square(c) <= 0) return CurveDefect::pencil_multiple;
  if (lat.m() == 1 && h0(lat, c - kGamma).h0 == h0(lat, c).h0) return CurveDefect::fixed_component;
  return CurveDefect::none;
}

inline bool is_irreducible_curve_class(const Lattice& lat, DivClass c) {
  return curve_defect(lat, c) == CurveDefect::none;
}

inline std::string describe(const Lattice& lat, DivClass c, CurveDefect defect) {
  switch (defect) {
    case CurveDefect::none: return c.str() + " is the class of an irreducible curve";
    case CurveDefect::zero_class: return "the zero class contains no curves";
    case CurveDefect::not_effective: return c.str() + " is not effective";
    case CurveDefect::not_nef: return c.str() + " is not nef (it meets Gamma negatively)";
    case CurveDefect::pencil_multiple: return c.str() + " is a multiple of an elliptic pencil";
    case CurveDefect::fixed_component:
      if (c == kE + kF) return "no irreducible curves in |E+F| for m=1 (Gamma is a base component)";
      return c.str() + " has Gamma as a fixed component for m=" + std::to_string(lat.m());
  }
  return {};
}

class NotACurveClass : public std::invalid_argument {
 public:
  NotACurveClass(const Lattice& lat, DivClass c, CurveDefect defect)
      : std::invalid_argument(describe(lat, c, defect)), cls_(c), defect_(defect) {}

  DivClass cls() const { return cls_; }
  CurveDefect defect() const { return defect_; }

 private:
  DivClass cls_;
  CurveDefect defect_;
};

/// A divisor class known to contain irreducible curves, with its genus.
class CurveClass {
 public:
  CurveClass(const Lattice& lat, DivClass c) : cls_(c) {
    if (const auto defect = curve_defect(lat, c); defect != CurveDefect::none) throw NotACurveClass(lat, c, defect);
    genus_ = lat.genus(c);
  }

  DivClass cls() const { return cls_; }
  Int genus() const { return genus_; }

  friend bool operator==(const CurveClass&, const CurveClass&) = default;

 private:
  DivClass cls_;
  Int genus_ = 0;
};

/// All curve classes with min_genus <= g <= max_genus, ordered by genus and
/// then lexicographically by (x, y).
inline std::vector<CurveClass> curve_classes(const Lattice& lat, Int min_genus, Int max_genus) {
  std::vector<CurveClass> out;
  for (DivClass c : {kGamma, kE, kF}) {
    if (is_irreducible_curve_class(lat, c)) {
      const Int g = lat.genus(c);
      if (g >= min_genus && g <= max_genus) out.emplace_back(lat, c);
    }
  }
  // Remaining curves are big and nef, hence in the open first quadrant with
  // m*x*y = g - 1.
  if (max_genus >= 2) {
    const Int bound = (max_genus - 1) / lat.m();
    for (Int x = 1; x <= bound; ++x) {
      for (Int y = 1; checked::mul(x, y) <= bound; ++y) {
        const DivClass c{x, y};
        const Int g = lat.genus(c);
        if (g >= min_genus && is_irreducible_curve_class(lat, c)) out.emplace_back(lat, c);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CurveClass& a, const CurveClass& b) {
    return std::pair(a.genus(), a.cls()) < std::pair(b.genus(), b.cls());
  });
  return out;
}

}  // namespace k3cliff
