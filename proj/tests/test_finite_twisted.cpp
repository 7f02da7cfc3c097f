#include <doctest.h>

#include <numbers>
#include <random>

#include "nct/finite_twisted.hpp"

using namespace nct;

namespace {

FiniteAlgebraElement random_element(const FiniteCocycle& omega, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  FiniteAlgebraElement f{omega.modulus(), omega.rank(), CVector::Zero(omega.size())};
  for (long i = 0; i < omega.size(); ++i) f.coeffs(i) = Complex(unit(rng), unit(rng));
  return f;
}

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

Complex root_of_unity(long num, long den) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num) /
                             static_cast<double>(den));
}

}  // namespace

TEST_CASE("group indexing round trips") {
  FiniteCocycle omega(4, 3, Eigen::MatrixXi::Zero(3, 3));
  CHECK(omega.size() == 64);
  for (long i = 0; i < omega.size(); ++i) CHECK(omega.flat(omega.multi(i)) == i);
  Eigen::VectorXi a(3), b(3);
  a << 1, 2, 3;
  b << 3, 3, 2;
  CHECK(omega.add(omega.flat(a), omega.flat(b)) == omega.flat((a + b).unaryExpr([](int v) {
    return v % 4;
  })));
  CHECK(omega.add(omega.flat(a), omega.neg(omega.flat(a))) == 0);
}

TEST_CASE("delta at zero is the unit of the twisted algebra") {
  FiniteCocycle omega = FiniteCocycle::example_third();
  std::mt19937_64 rng(4001);
  FiniteAlgebraElement f = random_element(omega, rng);
  CHECK(max_abs((convolve(omega, delta(omega, 0), f).coeffs - f.coeffs)) < 1e-14);
  CHECK(max_abs((convolve(omega, f, delta(omega, 0)).coeffs - f.coeffs)) < 1e-14);
}

TEST_CASE("convolution of deltas picks up the cocycle phase") {
  FiniteCocycle omega = FiniteCocycle::example_third();
  for (long a = 0; a < omega.size(); ++a)
    for (long b = 0; b < omega.size(); ++b) {
      FiniteAlgebraElement prod = convolve(omega, delta(omega, a), delta(omega, b));
      for (long m = 0; m < omega.size(); ++m) {
        Complex expected = m == omega.add(a, b) ? omega.omega(a, b) : Complex(0, 0);
        CHECK(std::abs(prod.coeffs(m) - expected) < 1e-14);
      }
    }
}

TEST_CASE("convolution is associative") {
  FiniteCocycle omega = FiniteCocycle::example_third();
  std::mt19937_64 rng(4002);
  for (int trial = 0; trial < 50; ++trial) {
    FiniteAlgebraElement f = random_element(omega, rng);
    FiniteAlgebraElement g = random_element(omega, rng);
    FiniteAlgebraElement h = random_element(omega, rng);
    CVector lhs = convolve(omega, convolve(omega, f, g), h).coeffs;
    CVector rhs = convolve(omega, f, convolve(omega, g, h)).coeffs;
    CHECK(max_abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("star is an anti-multiplicative involution") {
  FiniteCocycle omega = FiniteCocycle::example_third();
  FiniteAlgebraElement unit_star = star(omega, delta(omega, 0));
  CHECK(max_abs(unit_star.coeffs - delta(omega, 0).coeffs) < 1e-14);

  for (long a = 0; a < omega.size(); ++a) {
    FiniteAlgebraElement s = star(omega, delta(omega, a));
    long na = omega.neg(a);
    for (long m = 0; m < omega.size(); ++m) {
      Complex expected = m == na ? std::conj(omega.omega(a, na)) : Complex(0, 0);
      CHECK(std::abs(s.coeffs(m) - expected) < 1e-14);
    }
  }

  std::mt19937_64 rng(4003);
  for (int trial = 0; trial < 50; ++trial) {
    FiniteAlgebraElement f = random_element(omega, rng);
    FiniteAlgebraElement g = random_element(omega, rng);
    CVector lhs = star(omega, convolve(omega, f, g)).coeffs;
    CVector rhs = convolve(omega, star(omega, g), star(omega, f)).coeffs;
    CHECK(max_abs(lhs - rhs) < 1e-12);
    CHECK(max_abs(star(omega, star(omega, f)).coeffs - f.coeffs) < 1e-12);
  }
}

TEST_CASE("the regular representation computes the operator norm") {
  FiniteCocycle omega = FiniteCocycle::example_third();
  CHECK(operator_norm(omega, delta(omega, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(omega, delta(omega, 5)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tilde maps the unit to the identity and is multiplicative") {
  FiniteCocycle omega = FiniteCocycle::example_third();
  CHECK(max_abs(tilde_iso(omega, delta(omega, 0)) - CMatrix::Identity(3, 3)) < 1e-14);

  std::mt19937_64 rng(4004);
  for (int trial = 0; trial < 50; ++trial) {
    FiniteAlgebraElement f = random_element(omega, rng);
    FiniteAlgebraElement g = random_element(omega, rng);
    CMatrix lhs = tilde_iso(omega, convolve(omega, f, g));
    CMatrix rhs = tilde_iso(omega, f) * tilde_iso(omega, g);
    CHECK(max_abs(lhs - rhs) < 1e-10);
    CMatrix star_lhs = tilde_iso(omega, star(omega, f));
    CMatrix star_rhs = tilde_iso(omega, f).adjoint();
    CHECK(max_abs(star_lhs - star_rhs) < 1e-10);
  }

  CHECK_THROWS_AS(tilde_iso(FiniteCocycle::example_third(2), delta(omega, 0)), Error);
}

TEST_CASE("tilde is a linear bijection of full rank") {
  CMatrix t = tilde_transfer_matrix(FiniteCocycle::example_third());
  CHECK(Eigen::FullPivLU<CMatrix>(t).rank() == 9);
}

TEST_CASE("the example unitaries implement the character action through tilde") {
  // sigma_s multiplies coefficients by the character <s, m>; under tilde it
  // must become conjugation by V(s)
  FiniteCocycle omega = FiniteCocycle::example_third();
  ProjectiveRep v = example_rep_third();
  std::mt19937_64 rng(4005);
  FiniteAlgebraElement f = random_element(omega, rng);
  for (long s = 0; s < 9; ++s) {
    Eigen::VectorXi cd = omega.multi(s);
    FiniteAlgebraElement acted{f.k, f.n, CVector::Zero(9)};
    for (long m = 0; m < 9; ++m) {
      Eigen::VectorXi mm = omega.multi(m);
      acted.coeffs(m) =
          f.coeffs(m) * root_of_unity(cd(0) * mm(0) + cd(1) * mm(1), 3);
    }
    CMatrix lhs = tilde_iso(omega, acted);
    CMatrix rhs = v.at(s) * tilde_iso(omega, f) * v.at(s).adjoint();
    CHECK(max_abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("symmetry group is the kernel of the antisymmetrized pairing") {
  FiniteCocycle trivial(3, 2, Eigen::MatrixXi::Zero(2, 2));
  CHECK(symmetry_group(trivial).order() == 9);

  FiniteCocycle third = FiniteCocycle::example_third();
  SymmetryGroup s = symmetry_group(third);
  CHECK(s.order() == 1);
  CHECK(center_dimension(third) == 1);  // simple, one block, M_3

  // antisymmetrized parameter d mod 6: brute-force kernel order must be
  // gcd(d, 6)^2 (each coordinate kernel is the gcd-index subgroup)
  for (int d = 0; d <= 5; ++d) {
    Eigen::MatrixXi q(2, 2);
    q << 0, d, 0, 0;
    FiniteCocycle omega(6, 2, q);
    long expected = std::gcd(d, 6) * std::gcd(d, 6);
    CHECK(symmetry_group(omega).order() == expected);
    CHECK(center_dimension(omega) == expected);
  }
  // in particular the antisym-2 cocycle mod 6 has kernel {0,3}^2, order 4,
  // and order 9 needs antisym part 3
  {
    Eigen::MatrixXi q(2, 2);
    q << 0, 2, 0, 0;
    CHECK(symmetry_group(FiniteCocycle(6, 2, q)).order() == 4);
    q << 0, 3, 0, 0;
    CHECK(symmetry_group(FiniteCocycle(6, 2, q)).order() == 9);
  }

  // generators generate: closure check on one non-trivial case
  Eigen::MatrixXi q(2, 2);
  q << 0, 2, 0, 0;
  SymmetryGroup sg = symmetry_group(FiniteCocycle(6, 2, q));
  CHECK_FALSE(sg.generators.empty());
}

TEST_CASE("boundary of a constant family is trivial") {
  std::vector<CMatrix> mats(9, CMatrix::Identity(2, 2));
  ProjectiveRep constant(3, 2, std::move(mats));
  CocycleTable t = boundary(constant);
  for (long a = 0; a < 9; ++a)
    for (long b = 0; b < 9; ++b) CHECK(std::abs(t.values(a, b) - Complex(1, 0)) < 1e-14);
  CHECK(t.satisfies_cocycle_identity());
}

TEST_CASE("boundary of the example unitaries is the stated table") {
  ProjectiveRep v = example_rep_third();
  CocycleTable t = boundary(v);
  FiniteCocycle shape(3, 2, Eigen::MatrixXi::Zero(2, 2));
  for (long a = 0; a < 9; ++a)
    for (long b = 0; b < 9; ++b) {
      long d = shape.multi(a)(1), cp = shape.multi(b)(0);
      CHECK(snap_phase(t.values(a, b), 3) == (d * cp) % 3);
    }
  // the same table arises from omega(s,s') = exp(2 pi i 3 s_2 s'_1) on the
  // representatives s = (c/3, d/3)
  for (long a = 0; a < 9; ++a)
    for (long b = 0; b < 9; ++b) {
      double s2 = shape.multi(a)(1) / 3.0, sp1 = shape.multi(b)(0) / 3.0;
      Complex direct = std::polar(1.0, 2.0 * std::numbers::pi * 3.0 * s2 * sp1);
      CHECK(std::abs(t.values(a, b) - direct) < 1e-12);
    }
}

TEST_CASE("boundary rejects non-scalar triple products") {
  // a loosely-validated family that is not projective
  std::vector<CMatrix> mats(9, CMatrix::Identity(2, 2));
  mats[1] << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 1);
  ProjectiveRep bad(3, 2, std::move(mats), 1e6);
  CHECK_THROWS_AS(boundary(bad), Error);
}

TEST_CASE("scalar cochain boundaries and pairing invariance") {
  FiniteCocycle shape(3, 2, Eigen::MatrixXi::Zero(2, 2));
  std::mt19937_64 rng(4006);
  std::uniform_int_distribution<int> digit(0, 8);

  // characters have trivial boundary
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXi a(2);
    a << digit(rng) % 3, digit(rng) % 3;
    ScalarCochain chi{3, 2, CVector::Zero(9)};
    for (long m = 0; m < 9; ++m) {
      Eigen::VectorXi mm = shape.multi(m);
      chi.values(m) = root_of_unity(a(0) * mm(0) + a(1) * mm(1), 3);
    }
    CocycleTable t = boundary(chi);
    for (long s = 0; s < 9; ++s)
      for (long u = 0; u < 9; ++u) CHECK(std::abs(t.values(s, u) - Complex(1, 0)) < 1e-12);
  }

  // multiplying a representation by any unit cochain changes the boundary
  // table but not its pairing class
  ProjectiveRep v = example_rep_third();
  Rational base_class = mackey_class(boundary(v)).torus_class();
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<CMatrix> twisted;
    for (long s = 0; s < 9; ++s)
      twisted.push_back(root_of_unity(digit(rng), 9) * v.at(s));
    ProjectiveRep vc(3, 2, std::move(twisted));
    CHECK(mackey_class(boundary(vc)).torus_class() == base_class);
  }
}

TEST_CASE("pairing classes snap to exact torus parameters") {
  FiniteCocycle shape(3, 2, Eigen::MatrixXi::Zero(2, 2));

  CocycleTable trivial{3, 2, CMatrix::Ones(9, 9)};
  PairingClass zero = mackey_class(trivial);
  CHECK(zero.pairing == Eigen::MatrixXi::Zero(2, 2));
  CHECK(zero.torus_class() == Rational(0));

  // class of the boundary table is 1/3; the obstruction convention negates
  // it to 2/3
  CocycleTable t = boundary(example_rep_third());
  Rational cls = mackey_class(t).torus_class();
  CHECK(cls == Rational(1, 3));
  CHECK(mod_one(-cls) == Rational(2, 3));

  // a non-cocycle table is rejected
  CocycleTable garbage{3, 2, CMatrix::Ones(9, 9)};
  garbage.values(1, 1) = Complex(0.0, 1.0);
  CHECK_THROWS_AS(mackey_class(garbage), Error);
}

TEST_CASE("snap_phase rejects off-lattice values") {
  CHECK(snap_phase(root_of_unity(2, 3), 3) == 2);
  CHECK(snap_phase(Complex(1.0, 1e-10), 3) == 0);
  CHECK_THROWS_AS(snap_phase(std::polar(1.0, 0.3), 3), Error);
}

TEST_CASE("the finite verification chain passes end to end") {
  VerificationReport report = verify_twisted_example();
  REQUIRE(report.steps.size() == 5);
  for (const StepReport& s : report.steps) {
    INFO(s.name, ": ", s.detail);
    CHECK(s.pass);
  }
  CHECK(report.all_pass());
}

TEST_CASE("a perturbed lift breaks the verification chain") {
  VerifyOptions options;
  options.perturb_step2 = Rational(1, 9);
  VerificationReport report = verify_twisted_example(options);
  CHECK_FALSE(report.all_pass());
  CHECK_FALSE(report.steps.back().pass);  // the obstruction sum cannot close
}
