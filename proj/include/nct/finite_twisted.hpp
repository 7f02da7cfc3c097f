#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "nct/rational.hpp"

namespace nct {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Twisted group algebras over (Z/k)^n with dense complex coefficients.
// Group elements are flat indices into (Z/k)^n, row-major with the last
// coordinate varying fastest. Cocycles are of bilinear type
// omega(a, b) = exp(2 pi i a^t q b / k), so the cocycle identity holds by
// construction; phases snap back to exact roots of unity at the boundary
// between float and rational arithmetic.

class FiniteCocycle {
 public:
  FiniteCocycle(int k, int n, Eigen::MatrixXi q);

  int modulus() const { return k_; }
  int rank() const { return n_; }
  long size() const { return size_; }
  const Eigen::MatrixXi& q() const { return q_; }

  Eigen::VectorXi multi(long index) const;
  long flat(const Eigen::VectorXi& m) const;
  long add(long a, long b) const;
  long neg(long a) const;

  /// a^t q b mod k on flat indices.
  int exponent(long a, long b) const;
  Complex omega(long a, long b) const;

  /// The 1/3-cocycle of the worked (Z/3)^2 example (numerator 1) and its
  /// 2/3 counterpart (numerator 2).
  static FiniteCocycle example_third(int numerator = 1);

 private:
  int k_;
  int n_;
  long size_;
  Eigen::MatrixXi q_;
  std::vector<Complex> roots_;
};

/// Element of C x|_omega (Z/k)^n: dense complex coefficients.
struct FiniteAlgebraElement {
  int k = 0;
  int n = 0;
  CVector coeffs;
};

FiniteAlgebraElement delta(const FiniteCocycle& omega, long index);

/// (f*g)(m) = sum_h f(h) g(m-h) omega(h, m-h).
FiniteAlgebraElement convolve(const FiniteCocycle& omega, const FiniteAlgebraElement& f,
                              const FiniteAlgebraElement& g);

/// f^star(g) = conj(omega(g, -g) f(-g)).
FiniteAlgebraElement star(const FiniteCocycle& omega, const FiniteAlgebraElement& f);

/// Matrix of left multiplication by f in the regular representation.
CMatrix regular_representation(const FiniteCocycle& omega, const FiniteAlgebraElement& f);

double operator_norm(const FiniteCocycle& omega, const FiniteAlgebraElement& f);

/// Dimension of the center, computed numerically: coefficients supported
/// where the pairing against all generators is trivial.
long center_dimension(const FiniteCocycle& omega, double tol = 1e-10);

/// The isomorphism of the worked example onto M_3(C):
/// f~(a,b) = sum_c f(c, b-a) exp(2 pi i c a / 3). Requires the 1/3-cocycle
/// algebra on (Z/3)^2 (error WrongAlgebra otherwise).
CMatrix tilde_iso(const FiniteCocycle& omega, const FiniteAlgebraElement& f);

/// The 9x9 matrix of tilde_iso as a linear map C^9 -> C^9 (column j is
/// the flattened image of delta_j), for rank checks.
CMatrix tilde_transfer_matrix(const FiniteCocycle& omega);

/// Kernel of the antisymmetrized pairing: S = {m : (q - q^t) m = 0 mod k}.
struct SymmetryGroup {
  int k = 0;
  int n = 0;
  std::vector<Eigen::VectorXi> elements;
  std::vector<Eigen::VectorXi> generators;

  long order() const { return static_cast<long>(elements.size()); }
};

SymmetryGroup symmetry_group(const FiniteCocycle& omega);

/// Family of unitaries indexed by (Z/k)^n with V(s) V(s') in C* V(s+s').
class ProjectiveRep {
 public:
  ProjectiveRep(int k, int n, std::vector<CMatrix> matrices, double tol = 1e-10);

  int modulus() const { return k_; }
  int rank() const { return n_; }
  long size() const { return static_cast<long>(matrices_.size()); }
  int dim() const { return static_cast<int>(matrices_.front().rows()); }
  const CMatrix& at(long index) const { return matrices_[static_cast<size_t>(index)]; }

 private:
  int k_;
  int n_;
  std::vector<CMatrix> matrices_;
};

/// U(1)-valued 1-cochain on (Z/k)^n.
struct ScalarCochain {
  int k = 0;
  int n = 0;
  CVector values;
};

/// Table of a U(1)-valued 2-cocycle on (Z/k)^n.
struct CocycleTable {
  int k = 0;
  int n = 0;
  CMatrix values;  // (s, s') entry, flat-indexed

  bool satisfies_cocycle_identity(double tol = 1e-10) const;
};

/// (dV)(s,s') = V(s') V(s+s')^{-1} V(s); throws NotScalar when a triple
/// product is not a scalar multiple of the identity within tol.
CocycleTable boundary(const ProjectiveRep& v, double tol = 1e-10);
CocycleTable boundary(const ScalarCochain& c);

/// The antisymmetrized pairing of a cocycle table as exact k-th roots of
/// unity: pairing(a, b) = exp(2 pi i a^t P b / k) with P integral mod k.
struct PairingClass {
  int k = 0;
  int n = 0;
  Eigen::MatrixXi pairing;  // entries in [0, k)

  /// For n == 2: the torus parameter of the class, P(1,0)/k mod 1.
  Rational torus_class() const;
};

PairingClass mackey_class(const CocycleTable& table, double tol = 1e-10);

/// Snaps a unit complex number to the nearest j/denom phase; fails loudly
/// beyond tol.
long snap_phase(Complex z, long denom, double tol = 1e-8);

/// The unitaries V(s), s = (c/3, d/3), acting on L^2(Z/3) by
/// (V(s) psi)(a) = exp(2 pi i (1/3) d (a+c))^{-sign} psi(a+c), the family
/// implementing the character action through tilde_iso; its boundary is
/// the table exp(2 pi i (1/3) d c'). perturb adds an extra phase
/// exp(2 pi i perturb d (a+c)) (negative-control hook).
ProjectiveRep example_rep_third(int sign = +1, const Rational& perturb = Rational(0));

struct StepReport {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<StepReport> steps;

  bool all_pass() const;
};

struct VerifyOptions {
  Rational perturb_step2 = Rational(0);
};

/// Runs the finite (Z/3)^2 verification chain: symmetry groups, the
/// explicit isomorphism onto M_3, boundary obstructions of the two dual
/// lifts, the directly-given restricted obstruction, and the final
/// obstruction-sum bookkeeping. Failures are report entries, not errors.
VerificationReport verify_twisted_example(const VerifyOptions& options = {});

}  // namespace nct
