#include "nct/transversality.hpp"

namespace nct {

namespace {

void require_same_dim(const CocycleClass& a, const CocycleClass& b) {
  if (a.dim() != b.dim())
    throw Error("DimensionMismatch", "classes must share a dimension: " +
                                         std::to_string(a.dim()) + " vs " +
                                         std::to_string(b.dim()));
}

}  // namespace

RMatrix phi_of(const CocycleClass& w, const CocycleClass& w_hat) {
  require_same_dim(w, w_hat);
  const int n = w.dim();
  return RMatrix::Identity(n, n) + w_hat.sigma() * w.sigma();
}

bool is_transverse(const CocycleClass& w, const CocycleClass& w_hat) {
  RMatrix phi = phi_of(w, w_hat);
  if (!is_integer_matrix(phi)) return false;
  Rational d = phi.determinant();
  return d == Rational(1) || d == Rational(-1);
}

CocycleClass semidirect(const CocycleClass& w, const CocycleClass& w_hat) {
  require_same_dim(w, w_hat);
  // omega . h_omega^* omega_hat^{-1}, computed along the compositional path.
  return class_product(w, class_inverse(pullback(w.sigma(), w_hat)));
}

CocycleClass semidirect_bar(const CocycleClass& w, const CocycleClass& w_hat) {
  RMatrix phi = phi_of(w, w_hat);
  if (phi.determinant() == Rational(0))
    throw Error("PhiSingular", "phi = I + S_hat*S is singular");
  return pullback(phi.inverse(), semidirect(w, w_hat));
}

TransversePair TransversePair::make(CocycleClass s, CocycleClass s_hat) {
  if (!is_transverse(s, s_hat))
    throw Error("NotTransverse", "phi is not a lattice automorphism");
  RMatrix phi = phi_of(s, s_hat);
  RMatrix phi_hat = phi_of(s_hat, s);
  return TransversePair(std::move(s), std::move(s_hat), std::move(phi), std::move(phi_hat));
}

TransversePair dualize_pair(const TransversePair& p) {
  return TransversePair::make(semidirect_bar(p.s(), p.s_hat()), semidirect(p.s_hat(), p.s()));
}

TransversePair dualize_pair_inverse(const TransversePair& p) {
  return TransversePair::make(semidirect(p.s(), p.s_hat()), semidirect_bar(p.s_hat(), p.s()));
}

VeeClass h_vee(const CocycleClass& w, const CocycleClass& w_hat) {
  require_same_dim(w, w_hat);
  const int n = w.dim();
  RMatrix block(2 * n, 2 * n);
  block << w.sigma(), RMatrix::Identity(n, n), -RMatrix::Identity(n, n), w_hat.sigma();
  return VeeClass{n, VeeOrder::GFirst, std::move(block)};
}

VeeClass flip(const VeeClass& v) {
  const int n = v.n;
  RMatrix f = RMatrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    f(i, n + i) = Rational(1);
    f(n + i, i) = Rational(1);
  }
  VeeClass out;
  out.n = n;
  out.order = v.order == VeeOrder::GFirst ? VeeOrder::GHatFirst : VeeOrder::GFirst;
  out.block = f * v.block * f;
  return out;
}

std::array<bool, 3> vee_invertibility_equivalence(const CocycleClass& w,
                                                  const CocycleClass& w_hat) {
  bool phi_ok = phi_of(w, w_hat).determinant() != Rational(0);
  bool phi_hat_ok = phi_of(w_hat, w).determinant() != Rational(0);
  bool vee_ok = h_vee(w, w_hat).block.determinant() != Rational(0);
  return {phi_ok, phi_hat_ok, vee_ok};
}

bool vee_dual_decomposition_check(const TransversePair& p) {
  const int n = p.dim();
  if (p.phi().determinant() == Rational(0))
    throw Error("PhiSingular", "phi singular");  // cannot happen for a valid pair
  RMatrix phi_inv = p.phi().inverse();
  RMatrix phi_hat_inv = p.phi_hat().inverse();
  RMatrix assembled(2 * n, 2 * n);
  assembled << p.s_hat().sigma() * phi_hat_inv, -phi_inv, phi_hat_inv,
      p.s().sigma() * phi_inv;
  RMatrix vee_inv = h_vee(p.s(), p.s_hat()).block.inverse();
  return vee_inv == assembled;
}

}  // namespace nct
