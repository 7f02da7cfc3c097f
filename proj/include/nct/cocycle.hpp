#pragma once

#include <vector>

#include "nct/rational.hpp"

namespace nct {

// 2-cocycle classes on R^n and Z^n of bicharacter type, held by their
// antisymmetrized pairing matrices. All arithmetic is exact rational;
// phases are rationals mod 1 (the value r means exp(2*pi*i*r)).

class UpperRepresentative;

/// Class in H^2(R^n, U(1)): an n x n antisymmetric rational matrix sigma,
/// the pairing omega(x,y) * omega(y,x)^{-1} = exp(2 pi i x^t sigma^t y).
class CocycleClass {
 public:
  explicit CocycleClass(RMatrix sigma);

  int dim() const { return static_cast<int>(sigma_.rows()); }
  const RMatrix& sigma() const { return sigma_; }

  /// Strictly-upper part of sigma; a valid representative since
  /// sigma = U - U^t for its own upper part.
  UpperRepresentative upper() const;

  /// The 2-dimensional class with sigma = [[0, theta], [-theta, 0]].
  static CocycleClass from_theta(const Rational& theta);

  /// sigma(0,1); requires dim() == 2.
  Rational theta() const;

  friend bool operator==(const CocycleClass& a, const CocycleClass& b) {
    return a.sigma_ == b.sigma_;
  }

 private:
  RMatrix sigma_;
};

/// Strictly upper triangular rational matrix A, representing the cocycle
/// omega_A(x,y) = exp(2 pi i (A x)^t y).
class UpperRepresentative {
 public:
  explicit UpperRepresentative(RMatrix a);

  int dim() const { return static_cast<int>(a_.rows()); }
  const RMatrix& matrix() const { return a_; }

 private:
  RMatrix a_;
};

/// Class in H^2(Z^n, U(1)) ~ T^{n(n-1)/2}; strictly-upper coefficients
/// reduced mod 1 into [0,1), ordered (0,1),(0,2),...,(n-2,n-1).
class TorusClass {
 public:
  TorusClass(int n, std::vector<Rational> entries);

  int dim() const { return n_; }
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const TorusClass& a, const TorusClass& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  std::vector<Rational> entries_;
};

/// Integer matrix with determinant +/-1; restricts to a bijection of Z^n.
class LatticeAutomorphism {
 public:
  explicit LatticeAutomorphism(RMatrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const RMatrix& matrix() const { return m_; }

 private:
  RMatrix m_;
};

CocycleClass antisym_of(const UpperRepresentative& a);

/// (A x)^t y reduced mod 1.
Rational evaluate(const UpperRepresentative& a, const RVector& x, const RVector& y);

/// True iff det(sigma) != 0, i.e. the pairing homomorphism is injective.
bool is_totally_skew(const CocycleClass& c);

/// Class of the dual cocycle: sigma^{-1}. Throws NotTotallySkew when the
/// class is degenerate.
CocycleClass dual_class(const CocycleClass& c);

TorusClass restrict_to_torus(const CocycleClass& c);

/// All preimages of t under restrict_to_torus whose upper entries differ
/// from the canonical ones by integers of magnitude <= bound, ordered
/// lexicographically in the integer offsets.
std::vector<CocycleClass> lifts_of(const TorusClass& t, long bound);

/// l^t sigma l: pullback along the linear map l.
CocycleClass pullback(const RMatrix& l, const CocycleClass& c);

/// Push-forward along invertible phi, i.e. pullback along phi^{-1}.
CocycleClass push_forward(const RMatrix& phi, const CocycleClass& c);

CocycleClass class_product(const CocycleClass& a, const CocycleClass& b);
CocycleClass class_inverse(const CocycleClass& c);

}  // namespace nct
