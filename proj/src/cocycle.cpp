#include "nct/cocycle.hpp"

#include <Eigen/Dense>

#include "nct/error.hpp"

namespace nct {

namespace {

void require_same_dim(int a, int b) {
  if (a != b)
    throw Error("DimensionMismatch",
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

CocycleClass::CocycleClass(RMatrix sigma) : sigma_(std::move(sigma)) {
  if (sigma_.rows() < 1 || sigma_.rows() != sigma_.cols())
    throw Error("InvalidArgument", "sigma must be square with n >= 1");
  if (!is_antisymmetric(sigma_))
    throw Error("NotAntisymmetric", "sigma must be exactly antisymmetric");
}

UpperRepresentative CocycleClass::upper() const {
  const int n = dim();
  RMatrix a = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a(i, j) = sigma_(i, j);
  return UpperRepresentative(std::move(a));
}

CocycleClass CocycleClass::from_theta(const Rational& theta) {
  RMatrix s(2, 2);
  s << Rational(0), theta, -theta, Rational(0);
  return CocycleClass(std::move(s));
}

Rational CocycleClass::theta() const {
  if (dim() != 2) throw Error("UnsupportedDimension", "theta() requires n == 2");
  return sigma_(0, 1);
}

UpperRepresentative::UpperRepresentative(RMatrix a) : a_(std::move(a)) {
  if (a_.rows() < 1 || a_.rows() != a_.cols())
    throw Error("InvalidArgument", "representative must be square with n >= 1");
  for (Eigen::Index i = 0; i < a_.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j)
      if (!a_(i, j).is_zero())
        throw Error("InvalidArgument", "representative must be strictly upper triangular");
}

TorusClass::TorusClass(int n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw Error("InvalidArgument", "n must be >= 1");
  if (entries_.size() != static_cast<size_t>(n_) * (n_ - 1) / 2)
    throw Error("InvalidArgument", "torus class needs n(n-1)/2 entries");
  for (const Rational& e : entries_)
    if (e < Rational(0) || e >= Rational(1))
      throw Error("InvalidArgument", "torus entries must lie in [0,1)");
}

LatticeAutomorphism::LatticeAutomorphism(RMatrix m) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols())
    throw Error("InvalidArgument", "matrix must be square with n >= 1");
  if (!is_integer_matrix(m_))
    throw Error("InvalidArgument", "lattice automorphism must be integral");
  Rational d = m_.determinant();
  if (d != Rational(1) && d != Rational(-1))
    throw Error("InvalidArgument", "lattice automorphism needs det +/-1");
}

CocycleClass antisym_of(const UpperRepresentative& a) {
  return CocycleClass(a.matrix() - RMatrix(a.matrix().transpose()));
}

Rational evaluate(const UpperRepresentative& a, const RVector& x, const RVector& y) {
  require_same_dim(a.dim(), static_cast<int>(x.size()));
  require_same_dim(a.dim(), static_cast<int>(y.size()));
  Rational v = (a.matrix() * x).dot(y);
  return mod_one(v);
}

bool is_totally_skew(const CocycleClass& c) { return c.sigma().determinant() != Rational(0); }

CocycleClass dual_class(const CocycleClass& c) {
  if (!is_totally_skew(c))
    throw Error("NotTotallySkew", "dual class requires an invertible pairing matrix");
  return CocycleClass(c.sigma().inverse());
}

TorusClass restrict_to_torus(const CocycleClass& c) {
  const int n = c.dim();
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) entries.push_back(mod_one(c.sigma()(i, j)));
  return TorusClass(n, std::move(entries));
}

std::vector<CocycleClass> lifts_of(const TorusClass& t, long bound) {
  if (bound < 0) throw Error("InvalidArgument", "bound must be >= 0");
  const int n = t.dim();
  const size_t m = t.entries().size();
  std::vector<CocycleClass> out;
  std::vector<long> offsets(m, -bound);
  const long width = 2 * bound + 1;
  size_t total = 1;
  for (size_t i = 0; i < m; ++i) total *= static_cast<size_t>(width);
  for (size_t it = 0; it < total; ++it) {
    RMatrix a = RMatrix::Zero(n, n);
    size_t idx = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        a(i, j) = t.entries()[idx] + Rational(offsets[idx]);
        ++idx;
      }
    out.push_back(antisym_of(UpperRepresentative(std::move(a))));
    // lexicographic advance, last entry fastest
    for (size_t i = m; i-- > 0;) {
      if (offsets[i] < bound) {
        ++offsets[i];
        break;
      }
      offsets[i] = -bound;
    }
  }
  return out;
}

CocycleClass pullback(const RMatrix& l, const CocycleClass& c) {
  if (l.rows() != l.cols()) throw Error("InvalidArgument", "pullback matrix must be square");
  require_same_dim(static_cast<int>(l.rows()), c.dim());
  return CocycleClass(l.transpose() * c.sigma() * l);
}

CocycleClass push_forward(const RMatrix& phi, const CocycleClass& c) {
  require_same_dim(static_cast<int>(phi.rows()), c.dim());
  if (phi.determinant() == Rational(0))
    throw Error("Singular", "push-forward requires an invertible map");
  return pullback(phi.inverse(), c);
}

CocycleClass class_product(const CocycleClass& a, const CocycleClass& b) {
  require_same_dim(a.dim(), b.dim());
  return CocycleClass(a.sigma() + b.sigma());
}

CocycleClass class_inverse(const CocycleClass& c) { return CocycleClass(-c.sigma()); }

}  // namespace nct
