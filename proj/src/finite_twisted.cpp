#include "nct/finite_twisted.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <utility>

#include "nct/error.hpp"

namespace nct {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_element(const FiniteCocycle& omega, const FiniteAlgebraElement& f) {
  if (f.k != omega.modulus() || f.n != omega.rank() || f.coeffs.size() != omega.size())
    throw Error("DimensionMismatch", "element does not match the algebra shape");
}

int positive_mod(long v, int k) {
  long r = v % k;
  return static_cast<int>(r < 0 ? r + k : r);
}

}  // namespace

FiniteCocycle::FiniteCocycle(int k, int n, Eigen::MatrixXi q) : k_(k), n_(n), q_(std::move(q)) {
  if (k_ < 2) throw Error("InvalidArgument", "modulus must be >= 2");
  if (n_ < 1) throw Error("InvalidArgument", "rank must be >= 1");
  if (q_.rows() != n_ || q_.cols() != n_)
    throw Error("InvalidArgument", "q must be n x n");
  size_ = 1;
  for (int i = 0; i < n_; ++i) {
    size_ *= k_;
    if (size_ > 10'000'000) throw Error("InvalidArgument", "group too large");
  }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) q_(i, j) = positive_mod(q_(i, j), k_);
  roots_.resize(static_cast<size_t>(k_));
  for (int j = 0; j < k_; ++j)
    roots_[static_cast<size_t>(j)] = std::polar(1.0, kTwoPi * j / k_);
}

Eigen::VectorXi FiniteCocycle::multi(long index) const {
  Eigen::VectorXi m(n_);
  for (int i = n_ - 1; i >= 0; --i) {
    m(i) = static_cast<int>(index % k_);
    index /= k_;
  }
  return m;
}

long FiniteCocycle::flat(const Eigen::VectorXi& m) const {
  long index = 0;
  for (int i = 0; i < n_; ++i) index = index * k_ + positive_mod(m(i), k_);
  return index;
}

long FiniteCocycle::add(long a, long b) const {
  Eigen::VectorXi ma = multi(a), mb = multi(b);
  for (int i = 0; i < n_; ++i) ma(i) = positive_mod(ma(i) + mb(i), k_);
  return flat(ma);
}

long FiniteCocycle::neg(long a) const {
  Eigen::VectorXi m = multi(a);
  for (int i = 0; i < n_; ++i) m(i) = positive_mod(-m(i), k_);
  return flat(m);
}

int FiniteCocycle::exponent(long a, long b) const {
  Eigen::VectorXi ma = multi(a), mb = multi(b);
  long e = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) e += static_cast<long>(ma(i)) * q_(i, j) * mb(j);
  return positive_mod(e, k_);
}

Complex FiniteCocycle::omega(long a, long b) const {
  return roots_[static_cast<size_t>(exponent(a, b))];
}

FiniteCocycle FiniteCocycle::example_third(int numerator) {
  Eigen::MatrixXi q(2, 2);
  q << 0, 0, numerator, 0;
  return FiniteCocycle(3, 2, q);
}

FiniteAlgebraElement delta(const FiniteCocycle& omega, long index) {
  FiniteAlgebraElement f{omega.modulus(), omega.rank(), CVector::Zero(omega.size())};
  f.coeffs(index) = Complex(1, 0);
  return f;
}

FiniteAlgebraElement convolve(const FiniteCocycle& omega, const FiniteAlgebraElement& f,
                              const FiniteAlgebraElement& g) {
  require_element(omega, f);
  require_element(omega, g);
  FiniteAlgebraElement out{f.k, f.n, CVector::Zero(omega.size())};
  for (long m = 0; m < omega.size(); ++m) {
    Complex acc(0, 0);
    for (long h = 0; h < omega.size(); ++h) {
      long diff = omega.add(m, omega.neg(h));
      acc += f.coeffs(h) * g.coeffs(diff) * omega.omega(h, diff);
    }
    out.coeffs(m) = acc;
  }
  return out;
}

FiniteAlgebraElement star(const FiniteCocycle& omega, const FiniteAlgebraElement& f) {
  require_element(omega, f);
  FiniteAlgebraElement out{f.k, f.n, CVector::Zero(omega.size())};
  for (long g = 0; g < omega.size(); ++g) {
    long ng = omega.neg(g);
    out.coeffs(g) = std::conj(omega.omega(g, ng) * f.coeffs(ng));
  }
  return out;
}

CMatrix regular_representation(const FiniteCocycle& omega, const FiniteAlgebraElement& f) {
  require_element(omega, f);
  CMatrix l = CMatrix::Zero(omega.size(), omega.size());
  for (long m = 0; m < omega.size(); ++m)
    for (long j = 0; j < omega.size(); ++j) {
      long h = omega.add(m, omega.neg(j));
      l(m, j) = f.coeffs(h) * omega.omega(h, j);
    }
  return l;
}

double operator_norm(const FiniteCocycle& omega, const FiniteAlgebraElement& f) {
  Eigen::JacobiSVD<CMatrix> svd(regular_representation(omega, f));
  return svd.singularValues()(0);
}

long center_dimension(const FiniteCocycle& omega, double tol) {
  // f is central iff supported where the pairing against every generator
  // is trivial; count those support points.
  long dim = 0;
  for (long h = 0; h < omega.size(); ++h) {
    bool central = true;
    for (int i = 0; i < omega.rank() && central; ++i) {
      Eigen::VectorXi gen = Eigen::VectorXi::Zero(omega.rank());
      gen(i) = 1;
      long a = omega.flat(gen);
      central = std::abs(omega.omega(a, h) - omega.omega(h, a)) <= tol;
    }
    if (central) ++dim;
  }
  return dim;
}

namespace {

bool is_example_third_algebra(const FiniteCocycle& omega) {
  if (omega.modulus() != 3 || omega.rank() != 2) return false;
  Eigen::MatrixXi expected(2, 2);
  expected << 0, 0, 1, 0;
  return omega.q() == expected;
}

}  // namespace

CMatrix tilde_iso(const FiniteCocycle& omega, const FiniteAlgebraElement& f) {
  if (!is_example_third_algebra(omega))
    throw Error("WrongAlgebra", "tilde_iso is defined on the 1/3-algebra over (Z/3)^2");
  require_element(omega, f);
  CMatrix out = CMatrix::Zero(3, 3);
  Eigen::VectorXi m(2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Complex acc(0, 0);
      for (int c = 0; c < 3; ++c) {
        m << c, positive_mod(b - a, 3);
        acc += f.coeffs(omega.flat(m)) * std::polar(1.0, kTwoPi * c * a / 3.0);
      }
      out(a, b) = acc;
    }
  return out;
}

CMatrix tilde_transfer_matrix(const FiniteCocycle& omega) {
  CMatrix t = CMatrix::Zero(9, 9);
  for (long j = 0; j < 9; ++j) {
    CMatrix image = tilde_iso(omega, delta(omega, j));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) t(3 * a + b, j) = image(a, b);
  }
  return t;
}

SymmetryGroup symmetry_group(const FiniteCocycle& omega) {
  const int k = omega.modulus();
  const int n = omega.rank();
  Eigen::MatrixXi p = omega.q() - Eigen::MatrixXi(omega.q().transpose());
  SymmetryGroup s{k, n, {}, {}};
  std::vector<bool> in_kernel(static_cast<size_t>(omega.size()), false);
  for (long idx = 0; idx < omega.size(); ++idx) {
    Eigen::VectorXi m = omega.multi(idx);
    bool zero = true;
    for (int i = 0; i < n && zero; ++i) {
      long acc = 0;
      for (int j = 0; j < n; ++j) acc += static_cast<long>(p(i, j)) * m(j);
      zero = positive_mod(acc, k) == 0;
    }
    if (zero) {
      in_kernel[static_cast<size_t>(idx)] = true;
      s.elements.push_back(std::move(m));
    }
  }
  // greedy generators: extend the generated subgroup until it fills S
  std::vector<bool> generated(static_cast<size_t>(omega.size()), false);
  generated[0] = true;
  long covered = 1;
  for (const Eigen::VectorXi& m : s.elements) {
    long idx = omega.flat(m);
    if (generated[static_cast<size_t>(idx)]) continue;
    s.generators.push_back(m);
    std::vector<long> members;
    for (long j = 0; j < omega.size(); ++j)
      if (generated[static_cast<size_t>(j)]) members.push_back(j);
    for (long base : members) {
      long cur = base;
      for (int step = 0; step < k; ++step) {
        cur = omega.add(cur, idx);
        if (!generated[static_cast<size_t>(cur)]) {
          generated[static_cast<size_t>(cur)] = true;
          ++covered;
        }
      }
    }
    if (covered == static_cast<long>(s.elements.size())) break;
  }
  return s;
}

ProjectiveRep::ProjectiveRep(int k, int n, std::vector<CMatrix> matrices, double tol)
    : k_(k), n_(n), matrices_(std::move(matrices)) {
  FiniteCocycle shape(k_, n_, Eigen::MatrixXi::Zero(n_, n_));
  if (static_cast<long>(matrices_.size()) != shape.size())
    throw Error("DimensionMismatch", "one unitary per group element required");
  const Eigen::Index d = matrices_.front().rows();
  for (const CMatrix& m : matrices_) {
    if (m.rows() != d || m.cols() != d)
      throw Error("DimensionMismatch", "all matrices must share one size");
    if (((m * m.adjoint()) - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol)
      throw Error("InvalidArgument", "matrices must be unitary");
  }
  for (long a = 0; a < shape.size(); ++a)
    for (long b = 0; b < shape.size(); ++b) {
      CMatrix prod = matrices_[static_cast<size_t>(a)] * matrices_[static_cast<size_t>(b)];
      const CMatrix& target = matrices_[static_cast<size_t>(shape.add(a, b))];
      Complex scalar = (target.adjoint() * prod).trace() / static_cast<double>(d);
      if ((prod - scalar * target).cwiseAbs().maxCoeff() > tol ||
          std::abs(std::abs(scalar) - 1.0) > tol)
        throw Error("InvalidArgument", "family is not projective within tolerance");
    }
}

bool CocycleTable::satisfies_cocycle_identity(double tol) const {
  FiniteCocycle shape(k, n, Eigen::MatrixXi::Zero(n, n));
  for (long a = 0; a < shape.size(); ++a)
    for (long b = 0; b < shape.size(); ++b)
      for (long c = 0; c < shape.size(); ++c) {
        Complex lhs = values(a, b) * values(shape.add(a, b), c);
        Complex rhs = values(b, c) * values(a, shape.add(b, c));
        if (std::abs(lhs - rhs) > tol) return false;
      }
  return true;
}

CocycleTable boundary(const ProjectiveRep& v, double tol) {
  FiniteCocycle shape(v.modulus(), v.rank(), Eigen::MatrixXi::Zero(v.rank(), v.rank()));
  CocycleTable out{v.modulus(), v.rank(), CMatrix::Zero(shape.size(), shape.size())};
  const double d = v.dim();
  for (long s = 0; s < shape.size(); ++s)
    for (long t = 0; t < shape.size(); ++t) {
      CMatrix m = v.at(t) * v.at(shape.add(s, t)).adjoint() * v.at(s);
      Complex scalar = m.trace() / d;
      if ((m - scalar * CMatrix::Identity(v.dim(), v.dim())).cwiseAbs().maxCoeff() > tol ||
          std::abs(std::abs(scalar) - 1.0) > tol) {
        std::ostringstream ctx;
        ctx << "s=" << s << " s'=" << t;
        throw Error("NotScalar", "triple product is not scalar within tolerance", ctx.str());
      }
      out.values(s, t) = scalar;
    }
  return out;
}

CocycleTable boundary(const ScalarCochain& c) {
  FiniteCocycle shape(c.k, c.n, Eigen::MatrixXi::Zero(c.n, c.n));
  if (c.values.size() != shape.size())
    throw Error("DimensionMismatch", "one value per group element required");
  CocycleTable out{c.k, c.n, CMatrix::Zero(shape.size(), shape.size())};
  for (long s = 0; s < shape.size(); ++s)
    for (long t = 0; t < shape.size(); ++t)
      out.values(s, t) = c.values(t) * std::conj(c.values(shape.add(s, t))) * c.values(s);
  return out;
}

long snap_phase(Complex z, long denom, double tol) {
  double phase = std::arg(z) / kTwoPi;  // in [-1/2, 1/2]
  long j = std::lround(phase * static_cast<double>(denom));
  j %= denom;
  if (j < 0) j += denom;
  Complex snapped = std::polar(1.0, kTwoPi * static_cast<double>(j) / static_cast<double>(denom));
  if (std::abs(z - snapped) > tol)
    throw Error("PhaseNotRootOfUnity",
                "value is not a root of unity of order " + std::to_string(denom) +
                    " within tolerance");
  return j;
}

PairingClass mackey_class(const CocycleTable& table, double tol) {
  if (!table.satisfies_cocycle_identity(tol))
    throw Error("NotACocycle", "table violates the cocycle identity");
  FiniteCocycle shape(table.k, table.n, Eigen::MatrixXi::Zero(table.n, table.n));
  PairingClass out{table.k, table.n, Eigen::MatrixXi::Zero(table.n, table.n)};
  for (int i = 0; i < table.n; ++i)
    for (int j = 0; j < table.n; ++j) {
      Eigen::VectorXi ei = Eigen::VectorXi::Zero(table.n), ej = Eigen::VectorXi::Zero(table.n);
      ei(i) = 1;
      ej(j) = 1;
      long a = shape.flat(ei), b = shape.flat(ej);
      Complex p = table.values(a, b) * std::conj(table.values(b, a));
      out.pairing(i, j) = static_cast<int>(snap_phase(p, table.k));
    }
  // the pairing of a cocycle is a bicharacter; check the generator matrix
  // reproduces the full table
  FiniteCocycle bil(table.k, table.n, out.pairing);
  for (long a = 0; a < shape.size(); ++a)
    for (long b = 0; b < shape.size(); ++b) {
      Complex p = table.values(a, b) * std::conj(table.values(b, a));
      if (std::abs(p - bil.omega(a, b)) > tol)
        throw Error("NotACocycle", "pairing is not the bicharacter of its generator matrix");
    }
  return out;
}

Rational PairingClass::torus_class() const {
  if (n != 2) throw Error("UnsupportedDimension", "torus_class requires n == 2");
  return mod_one(Rational(pairing(1, 0), k));
}

ProjectiveRep example_rep_third(int sign, const Rational& perturb) {
  FiniteCocycle shape(3, 2, Eigen::MatrixXi::Zero(2, 2));
  std::vector<CMatrix> mats;
  mats.reserve(9);
  const double eps = to_double(perturb);
  for (long idx = 0; idx < 9; ++idx) {
    Eigen::VectorXi cd = shape.multi(idx);
    const int c = cd(0), d = cd(1);
    CMatrix v = CMatrix::Zero(3, 3);
    for (int a = 0; a < 3; ++a) {
      int target = positive_mod(a + c, 3);
      double phase = -sign * kTwoPi * (1.0 / 3.0) * d * target + kTwoPi * eps * d * target;
      v(a, target) = std::polar(1.0, phase);
    }
    mats.push_back(std::move(v));
  }
  // a perturbed family is generally no longer projective; construct
  // loosely and let boundary() report the failure
  const double tol = perturb.is_zero() ? 1e-10 : 1e6;
  return ProjectiveRep(3, 2, std::move(mats), tol);
}

bool VerificationReport::all_pass() const {
  for (const StepReport& s : steps)
    if (!s.pass) return false;
  return !steps.empty();
}

namespace {

StepReport run_step(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
  StepReport r{name, false, ""};
  try {
    auto [ok, detail] = body();
    r.pass = ok;
    r.detail = detail;
  } catch (const Error& e) {
    r.pass = false;
    r.detail = std::string(e.code()) + ": " + e.what();
  }
  return r;
}

}  // namespace

VerificationReport verify_twisted_example(const VerifyOptions& options) {
  VerificationReport report;
  FiniteCocycle third = FiniteCocycle::example_third(1);
  FiniteCocycle two_thirds = FiniteCocycle::example_third(2);

  report.steps.push_back(run_step("symmetry-groups", [&]() -> std::pair<bool, std::string> {
    long s1 = symmetry_group(third).order();
    long s2 = symmetry_group(two_thirds).order();
    long c1 = center_dimension(third);
    long c2 = center_dimension(two_thirds);
    bool ok = s1 == 1 && s2 == 1 && c1 == 1 && c2 == 1;
    std::ostringstream os;
    os << "|S(1/3)|=" << s1 << " |S(2/3)|=" << s2 << " center dims " << c1 << "," << c2
       << "; both algebras simple of dimension 9";
    return {ok, os.str()};
  }));

  Rational ma_sigma;  // obstruction of the 1/3-side conjugation action
  report.steps.push_back(run_step("boundary-of-third-lift", [&]() -> std::pair<bool, std::string> {
    ProjectiveRep v = example_rep_third(+1, options.perturb_step2);
    CMatrix id_image = tilde_iso(third, delta(third, 0));
    if ((id_image - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() > 1e-12)
      return {false, "tilde of the unit is not the identity"};
    CocycleTable t = boundary(v);
    // expected table exp(2 pi i (1/3) d c') on s=(c,d), s'=(c',d')
    FiniteCocycle shape(3, 2, Eigen::MatrixXi::Zero(2, 2));
    for (long a = 0; a < 9; ++a)
      for (long b = 0; b < 9; ++b) {
        long expected = (static_cast<long>(shape.multi(a)(1)) * shape.multi(b)(0)) % 3;
        if (snap_phase(t.values(a, b), 3) != expected)
          return {false, "boundary table deviates from exp(2 pi i (1/3) d c')"};
      }
    Rational cls = mackey_class(t).torus_class();
    ma_sigma = mod_one(-cls);  // obstruction convention: negative of the boundary class
    bool ok = cls == Rational(1, 3) && ma_sigma == Rational(2, 3);
    std::ostringstream os;
    os << "[dV] = " << to_string(cls) << ", Ma = " << to_string(ma_sigma);
    return {ok, os.str()};
  }));

  Rational ma_restricted;  // obstruction of the rank-3 action, restricted
  report.steps.push_back(run_step("restricted-obstruction", [&]() -> std::pair<bool, std::string> {
    // omega(s,s') = exp(2 pi i 3 s_2 s'_1) on s = (c/3, d/3) is the table
    // exp(2 pi i (1/3) d c'), an obstruction cocycle given directly.
    CocycleTable t{3, 2, CMatrix::Zero(9, 9)};
    FiniteCocycle shape(3, 2, Eigen::MatrixXi::Zero(2, 2));
    for (long a = 0; a < 9; ++a)
      for (long b = 0; b < 9; ++b) {
        long e = (static_cast<long>(shape.multi(a)(1)) * shape.multi(b)(0)) % 3;
        t.values(a, b) = std::polar(1.0, kTwoPi * static_cast<double>(e) / 3.0);
      }
    ma_restricted = mackey_class(t).torus_class();
    return {ma_restricted == Rational(1, 3), "Ma = " + to_string(ma_restricted)};
  }));

  Rational ma_tau;  // obstruction of the 2/3-side conjugation action
  report.steps.push_back(run_step("boundary-of-conjugate-lift", [&]() -> std::pair<bool, std::string> {
    ProjectiveRep v = example_rep_third(-1);
    CocycleTable t = boundary(v);
    Rational cls = mackey_class(t).torus_class();
    ma_tau = mod_one(-cls);
    bool ok = ma_tau == Rational(1, 3) && ma_tau == mod_one(-ma_sigma);
    std::ostringstream os;
    os << "Ma = " << to_string(ma_tau) << " (inverse of " << to_string(ma_sigma) << ")";
    return {ok, os.str()};
  }));

  report.steps.push_back(run_step("obstruction-sum", [&]() -> std::pair<bool, std::string> {
    for (const StepReport& s : report.steps)
      if (!s.pass) return {false, "upstream step failed: " + s.name};
    Rational lhs = mod_one(ma_restricted + ma_tau);
    Rational rhs = mod_one(Rational(0) + ma_sigma);
    std::ostringstream os;
    os << to_string(ma_restricted) << " + " << to_string(ma_tau) << " = " << to_string(lhs)
       << " matches 0 + " << to_string(ma_sigma) << " (mod 1)";
    return {lhs == rhs && lhs == Rational(2, 3), os.str()};
  }));

  return report;
}

}  // namespace nct
