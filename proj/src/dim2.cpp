#include "nct/dim2.hpp"

#include <algorithm>

#include "nct/error.hpp"

namespace nct {

System2D::System2D(Rational torus, Rational ma)
    : torus_class(std::move(torus)), mackey(std::move(ma)) {
  if (torus_class < Rational(0) || torus_class >= Rational(1))
    throw Error("InvalidArgument", "torus class must lie in [0,1)");
}

bool ThetaPerpSet2D::contains(const Rational& v) const {
  return std::find(members.begin(), members.end(), v) != members.end();
}

bool transverse_locus(const Rational& theta, const Rational& theta_hat) {
  Rational p = theta * theta_hat;
  return p == Rational(0) || p == Rational(2);
}

TransverseObstructions transverse_obstructions(const Rational& torus_theta, long bound) {
  if (torus_theta < Rational(0) || torus_theta >= Rational(1))
    throw Error("InvalidArgument", "torus class must lie in [0,1)");
  TransverseObstructions out;
  out.lift = torus_theta;
  out.bound = bound;
  if (torus_theta.is_zero()) {
    out.all = true;
    return out;
  }
  out.values.push_back(Rational(0));
  for (long n = -bound; n <= bound; ++n) {
    Rational shifted = torus_theta + Rational(n);
    if (shifted.is_zero()) continue;
    out.values.push_back(Rational(2) / shifted);
  }
  return out;
}

System2D dual_system_2d(const System2D& sys, const Rational& lift) {
  if (mod_one(lift) != sys.torus_class)
    throw Error("BadLift", "lift " + to_string(lift) + " does not restrict to " +
                               to_string(sys.torus_class));
  if (!transverse_locus(lift, sys.mackey))
    throw Error("NotTransverse", "theta * theta_hat = " + to_string(lift * sys.mackey) +
                                     " is neither 0 nor 2");
  if (lift.is_zero()) return System2D(mod_one(sys.mackey), Rational(0));
  if (sys.mackey.is_zero()) return System2D(Rational(0), lift);
  return System2D(mod_one(-sys.mackey), -lift);
}

ThetaPerpSet2D theta_perp_set_2d(const Rational& theta_hat_torus) {
  Rational t = mod_one(theta_hat_torus);
  ThetaPerpSet2D out;
  out.members.push_back(t);
  Rational neg = mod_one(-t);
  if (neg != t) out.members.push_back(neg);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool is_commutative_obstruction(const Rational& theta_hat_torus) {
  return mod_one(theta_hat_torus).is_zero();
}

Rational restricted_mackey_invariant(const System2D& sys) { return mod_one(sys.mackey); }

}  // namespace nct
