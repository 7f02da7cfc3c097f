#pragma once

#include <vector>

#include "nct/rational.hpp"

namespace nct {

// Closed forms for the 2-dimensional duality dictionary, identifying
// H^2(Z^2, U(1)) with T and H^2(R^2, U(1)) with R through the
// normalization omega_theta(x, y) = exp(2 pi i theta x_2 y_1).

/// A stable NC 2-torus system: the torus class theta-dot of the twisted
/// group algebra factor and the Mackey obstruction of the dual-group
/// action on the compact factor.
struct System2D {
  Rational torus_class;  // in [0,1)
  Rational mackey;

  System2D(Rational torus, Rational ma);

  friend bool operator==(const System2D& a, const System2D& b) {
    return a.torus_class == b.torus_class && a.mackey == b.mackey;
  }
};

/// The set theta-hat-perp of restricted classes attainable by transverse
/// partners; always {t, -t mod 1}.
struct ThetaPerpSet2D {
  std::vector<Rational> members;  // sorted, deduplicated

  bool contains(const Rational& v) const;
};

/// True iff theta * theta_hat is 0 or 2; equivalent to transversality of
/// the corresponding 2x2 matrix classes.
bool transverse_locus(const Rational& theta, const Rational& theta_hat);

/// The Mackey obstructions making an action on K (x) (C x|_theta-dot Z^2)
/// transverse. For theta-dot = 0 every obstruction works; otherwise the
/// set is {0} united with {2/(theta+n) : n integer}, enumerated here for
/// |n| <= bound over the canonical lift theta in [0,1).
struct TransverseObstructions {
  bool all = false;
  Rational lift;                 // the canonical lift used by the enumerator
  long bound = 0;
  std::vector<Rational> values;  // empty when all == true
};

TransverseObstructions transverse_obstructions(const Rational& torus_theta, long bound = 3);

/// One duality step at the chosen lift. The three branches of the
/// 2-dimensional dictionary:
///   lift == 0          -> (mackey mod 1, 0)
///   mackey == 0        -> (0, lift)
///   lift * mackey == 2 -> (-mackey mod 1, -lift)
/// Throws BadLift when the lift does not restrict to sys.torus_class and
/// NotTransverse when (lift, mackey) is off the locus.
System2D dual_system_2d(const System2D& sys, const Rational& lift);

ThetaPerpSet2D theta_perp_set_2d(const Rational& theta_hat_torus);

/// True iff the system is Morita equivalent to a commutative one, i.e.
/// theta_hat_torus == 0; equivalent to 0 being attainable in theta-perp.
bool is_commutative_obstruction(const Rational& theta_hat_torus);

/// The Morita invariant of the system: the Mackey obstruction restricted
/// to the perpendicular lattice, i.e. mackey mod 1.
Rational restricted_mackey_invariant(const System2D& sys);

}  // namespace nct
