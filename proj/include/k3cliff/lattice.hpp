#pragma once

/**
 * @file lattice.hpp
 * @brief Divisor classes on a K3 surface with Picard lattice U(m).
 *
 * Classes are integer vectors (x, y) meaning xE + yF, where E and F are
 * isotropic generators with E.F = m. E is always the elliptic fiber class.
 * When m = 1 the class Gamma = F - E is a smooth rational curve and the
 * (E, Gamma) basis is used internally by the cone computations.
 */

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "checked.hpp"

namespace k3cliff {

struct DivClass {
  Int x = 0;  ///< coefficient of E
  Int y = 0;  ///< coefficient of F

  constexpr auto operator<=>(const DivClass&) const = default;

  bool is_zero() const { return x == 0 && y == 0; }

  friend DivClass operator+(DivClass a, DivClass b) { return {checked::add(a.x, b.x), checked::add(a.y, b.y)}; }
  friend DivClass operator-(DivClass a, DivClass b) { return {checked::sub(a.x, b.x), checked::sub(a.y, b.y)}; }
  friend DivClass operator*(Int k, DivClass a) { return {checked::mul(k, a.x), checked::mul(k, a.y)}; }

  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
  friend std::ostream& operator<<(std::ostream& os, DivClass d) { return os << d.str(); }
};

inline constexpr DivClass kE{1, 0};
inline constexpr DivClass kF{0, 1};
/// F - E; the class of a rational curve only when m = 1.
inline constexpr DivClass kGamma{-1, 1};

/// Coordinates in the (E, Gamma) basis: D = alpha E + beta Gamma.
struct EGammaCoords {
  Int alpha = 0;
  Int beta = 0;
  constexpr auto operator<=>(const EGammaCoords&) const = default;
};

class Lattice {
 public:
  explicit Lattice(Int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("k3cliff: U(m) requires m >= 1, got m=" + std::to_string(m));
  }

  Int m() const { return m_; }

  Int intersect(DivClass a, DivClass b) const {
    return checked::mul(m_, checked::add(checked::mul(a.x, b.y), checked::mul(b.x, a.y)));
  }

  Int square(DivClass d) const { return intersect(d, d); }

  /// Arithmetic genus 1 + C^2/2 of a curve in the class.
  Int genus(DivClass c) const {
    const Int sq = square(c);
    if (sq < -2) throw std::domain_error("k3cliff: genus undefined for " + c.str() + " with C^2=" + std::to_string(sq));
    return 1 + sq / 2;
  }

  /// Riemann-Roch Euler characteristic 2 + D^2/2.
  Int chi(DivClass d) const { return checked::add(2, square(d) / 2); }

  EGammaCoords to_e_gamma(DivClass d) const {
    require_unimodular_section();
    return {checked::add(d.x, d.y), d.y};
  }

  DivClass from_e_gamma(EGammaCoords c) const {
    require_unimodular_section();
    return {checked::sub(c.alpha, c.beta), c.beta};
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  void require_unimodular_section() const {
    if (m_ != 1)
      throw std::domain_error("k3cliff: the (E, Gamma) basis exists only for m=1 (no rational curves when m=" +
                              std::to_string(m_) + ")");
  }

  Int m_;
};

}  // namespace k3cliff
