#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>

#include "nct/cocycle.hpp"
#include "nct/error.hpp"

namespace nct {

// The transversality relation between a class omega on R^n and a class
// omega_hat on the dual copy of R^n, the twisted-product classes
// omega |x omega_hat (semidirect) and its push-forward along phi
// (semidirect_bar), and the Heisenberg block calculus on R^{2n}.

/// phi = id + h_omega_hat . h_omega, as a matrix: I + S_hat * S.
RMatrix phi_of(const CocycleClass& w, const CocycleClass& w_hat);

/// True iff phi_of(w, w_hat) is integral with determinant +/-1, i.e.
/// restricts to a lattice automorphism of Z^n.
bool is_transverse(const CocycleClass& w, const CocycleClass& w_hat);

/// omega |x omega_hat = omega . h_omega^* omega_hat^{-1}; the matrix of
/// the result is S + S*S_hat*S = S*phi. Defined for all pairs.
CocycleClass semidirect(const CocycleClass& w, const CocycleClass& w_hat);

/// phi_* (omega |x omega_hat): push-forward along phi; the matrix is
/// S*phi^{-1}. Throws PhiSingular when phi is not invertible.
CocycleClass semidirect_bar(const CocycleClass& w, const CocycleClass& w_hat);

/// A transverse pair (omega, omega_hat) with its derived automorphisms
/// phi = I + S_hat*S and phi_hat = I + S*S_hat = phi^t.
class TransversePair {
 public:
  static TransversePair make(CocycleClass s, CocycleClass s_hat);

  const CocycleClass& s() const { return s_; }
  const CocycleClass& s_hat() const { return s_hat_; }
  const RMatrix& phi() const { return phi_; }
  const RMatrix& phi_hat() const { return phi_hat_; }
  int dim() const { return s_.dim(); }

  friend bool operator==(const TransversePair& a, const TransversePair& b) {
    return a.s_ == b.s_ && a.s_hat_ == b.s_hat_;
  }

 private:
  TransversePair(CocycleClass s, CocycleClass s_hat, RMatrix phi, RMatrix phi_hat)
      : s_(std::move(s)), s_hat_(std::move(s_hat)), phi_(std::move(phi)),
        phi_hat_(std::move(phi_hat)) {}

  CocycleClass s_;
  CocycleClass s_hat_;
  RMatrix phi_;
  RMatrix phi_hat_;
};

/// (omega, omega_hat) -> (omega |x~ omega_hat, omega_hat |x omega); a
/// bijection of the transversality set that preserves phi.
TransversePair dualize_pair(const TransversePair& p);

/// Inverse of dualize_pair: (omega, omega_hat) -> (omega |x omega_hat,
/// omega_hat |x~ omega).
TransversePair dualize_pair_inverse(const TransversePair& p);

enum class VeeOrder { GFirst, GHatFirst };

/// Class on the 2n-dimensional product carrying the Heisenberg pairing
/// twisted by classes on the two factors. Coordinate order (G, Ghat) for
/// vee-side data, (Ghat, G) for wedge-side data.
struct VeeClass {
  int n = 0;
  VeeOrder order = VeeOrder::GFirst;
  RMatrix block;
};

/// h of omega v omega_hat: the block matrix [[S, I], [-I, S_hat]] on
/// coordinates (G, Ghat).
VeeClass h_vee(const CocycleClass& w, const CocycleClass& w_hat);

/// Conjugate by the coordinate transposition G x Ghat <-> Ghat x G.
VeeClass flip(const VeeClass& v);

/// (phi invertible, phi_hat invertible, h_vee block invertible); the three
/// are equivalent and the implementation computes each independently.
std::array<bool, 3> vee_invertibility_equivalence(const CocycleClass& w,
                                                  const CocycleClass& w_hat);

/// Checks the exact block identity for the inverse of the vee matrix:
/// h_vee^{-1} = [[S_hat*phi_hat^{-1}, -phi^{-1}], [phi_hat^{-1}, S*phi^{-1}]],
/// the matrix of (omega_hat |x~ omega) + (omega |x~ omega_hat) minus the
/// Heisenberg form pushed forward along phi_hat x id.
bool vee_dual_decomposition_check(const TransversePair& p);

namespace detail {

template <typename Scalar>
bool polarize_is_zero(const Scalar& v, double tol) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    (void)tol;
    return v.is_zero();
  } else {
    return std::abs(v) <= tol;
  }
}

template <typename Scalar>
double polarize_magnitude(const Scalar& v) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return v.is_zero() ? 0.0 : 1.0;  // any nonzero pivot is exact
  } else {
    return std::abs(v);
  }
}

}  // namespace detail

/// Factors an invertible antisymmetric 2n x 2n matrix v as phi^t J phi = v
/// with J = [[0, I], [-I, 0]], by skew-symmetric congruence (Darboux)
/// elimination. Exact for Rational scalars; for floating scalars the pivot
/// threshold is `tolerance` and the caller contract is
/// ||phi^t J phi - v||_inf <= 1e-9.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> polarize(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& v, double tolerance = 1e-9) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index dim = v.rows();
  if (dim != v.cols() || dim % 2 != 0 || dim == 0)
    throw Error("UnsupportedDimension", "polarize needs a 2n x 2n matrix");
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      if (!detail::polarize_is_zero<Scalar>(v(i, j) + v(j, i), tolerance))
        throw Error("NotAntisymmetric", "polarize needs an antisymmetric matrix");

  Mat w = v;
  Mat p = Mat::Identity(dim, dim);

  // Congruence ops keep w = P^t v P. Column ops on w and p are mirrored by
  // the corresponding row ops on w.
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    w.col(a).swap(w.col(b));
    w.row(a).swap(w.row(b));
    p.col(a).swap(p.col(b));
  };
  // coefficients are taken by value: they may alias entries of w that the
  // update itself overwrites
  auto scale_col = [&](Eigen::Index a, Scalar c) {
    w.col(a) *= c;
    w.row(a) *= c;
    p.col(a) *= c;
  };
  auto add_col = [&](Eigen::Index dst, Eigen::Index src, Scalar c) {
    w.col(dst) += c * w.col(src);
    w.row(dst) += c * w.row(src);
    p.col(dst) += c * p.col(src);
  };

  for (Eigen::Index k = 0; k + 1 < dim; k += 2) {
    Eigen::Index pivot = -1;
    double best = 0;
    for (Eigen::Index j = k + 1; j < dim; ++j) {
      double m = detail::polarize_magnitude<Scalar>(w(k, j));
      if (m > best) {
        best = m;
        pivot = j;
      }
    }
    if (pivot < 0 || best <= tolerance)
      throw Error("Singular", "polarize needs an invertible matrix");
    if (pivot != k + 1) swap_cols(pivot, k + 1);
    scale_col(k + 1, Scalar(1) / w(k, k + 1));
    for (Eigen::Index j = k + 2; j < dim; ++j)
      if (!detail::polarize_is_zero<Scalar>(w(k, j), 0)) add_col(j, k + 1, -w(k, j));
    for (Eigen::Index j = k + 2; j < dim; ++j)
      if (!detail::polarize_is_zero<Scalar>(w(k + 1, j), 0)) add_col(j, k, w(k + 1, j));
  }

  // w is now block-diagonal with [[0,1],[-1,0]] blocks; reorder pairs into
  // the split form J and invert.
  const Eigen::Index n = dim / 2;
  Mat q = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    q(2 * i, i) = Scalar(1);
    q(2 * i + 1, n + i) = Scalar(1);
  }
  Mat pq = p * q;
  return pq.inverse();
}

}  // namespace nct
