#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "nct/rational.hpp"

namespace nct {

// Bundle-level data over the interval and the circle: sampled obstruction
// class-paths, transverse chart atlases with real lifts, the chart-wise
// duality map, winding numbers, and the K-monodromy obstruction. This
// module is 2-dimensional throughout: path values and chart lifts are the
// scalar parameters of 2x2 antisymmetric classes.

enum class BaseSpace { Interval, Circle };

struct PathSample {
  Rational t;      // in [0,1], strictly increasing across a path
  Rational value;  // torus class in [0,1)
};

/// Piecewise-linear obstruction function B -> H^2(Z^2, U(1)), sampled.
/// Consecutive values must differ by less than 1/2 mod 1, so the
/// continuous lift between samples is unambiguous.
class ClassPath {
 public:
  static ClassPath make(BaseSpace base, std::vector<PathSample> samples);

  BaseSpace base() const { return base_; }
  const std::vector<PathSample>& samples() const { return samples_; }

  /// Canonical lift increment per segment, each in (-1/2, 1/2).
  std::vector<Rational> lift_increments() const;

  /// Continuous lift at the samples, starting at value(0).
  std::vector<Rational> lift() const;

 private:
  ClassPath(BaseSpace base, std::vector<PathSample> samples)
      : base_(base), samples_(std::move(samples)) {}

  BaseSpace base_;
  std::vector<PathSample> samples_;
};

/// Sum of signed lift increments around the circle; an exact integer.
long winding_number(const ClassPath& p);

/// True iff every sample value is zero.
bool pointwise_commutative(const ClassPath& p);

struct MonodromyMatrix {
  Eigen::Matrix<long, 2, 2> m;

  bool is_identity() const;
};

/// w-th power of the gluing matrix [[1,1],[0,1]] of the K0-bundle.
MonodromyMatrix k_monodromy(long w);

/// True iff the winding number vanishes: the criterion for the bundle to
/// arise as the dual of a commutative polarisable pair.
bool commutative_origin_check(const ClassPath& p);

struct LiftSample {
  Rational t;      // unrolled coordinate (may exceed 1 on wrap-around arcs)
  Rational value;  // real lift, not reduced mod 1
};

/// Chart over a closed sub-arc [start, end] of the base, in unrolled
/// coordinates: 0 <= start < 1 and end <= start + 1; the arc crosses the
/// seam of a circle base iff end > 1. omega and omega_hat share one
/// strictly increasing t-grid spanning the arc and are pointwise transverse
/// at every sample.
struct Chart {
  Rational start;
  Rational end;
  std::vector<LiftSample> omega;
  std::vector<LiftSample> omega_hat;

  bool wraps() const { return end > Rational(1); }
};

class TransverseAtlas {
 public:
  /// Validates each chart and that chart interiors cover the base.
  static TransverseAtlas make(BaseSpace base, std::vector<Chart> charts);

  BaseSpace base() const { return base_; }
  const std::vector<Chart>& charts() const { return charts_; }

 private:
  TransverseAtlas(BaseSpace base, std::vector<Chart> charts)
      : base_(base), charts_(std::move(charts)) {}

  BaseSpace base_;
  std::vector<Chart> charts_;
};

/// Chart-wise, sample-wise duality: (theta, theta_hat) becomes
/// (theta |x theta_hat, theta_hat |x~ theta). Output charts are pointwise
/// transverse again; applying the map twice is the identity on the locus.
TransverseAtlas dualize_atlas(const TransverseAtlas& a);

enum class LiftStrategy {
  AxisLift,       // theta_hat = 0 per chart; always succeeds
  HyperbolaLift,  // per chart shift the lift into [1,2] or [-2,-1], theta_hat = 2/theta
};

/// Builds a transverse atlas witnessing local triviality of the path.
/// HyperbolaLift works at the granularity of the path's segments and
/// reports NoLift (naming the offending arc) when a segment's lift range
/// fits no admissible window.
TransverseAtlas build_transverse_atlas(const ClassPath& p, LiftStrategy strategy);

struct HeisenbergDescriptor {
  ClassPath theta;                    // the canonical winding-1 circle path
  ClassPath theta_hat;                // identically zero dual-side path
  TransverseAtlas commutative_atlas;  // charts (omega = 0, omega_hat = lift of s)
};

HeisenbergDescriptor heisenberg_descriptor(int segments = 4);

/// Two-chart atlas over the thickened circle, modelled as a circle whose
/// base splits into a moving part [0, moving_end] carrying the lift
/// theta(u) = 1 + (4/3) u and a constant tail at theta = 2 (lift 1 on the
/// wrap chart); theta_hat = 2/theta throughout, so theta * theta_hat = 2
/// exactly at every sample.
struct ThickenedCircleAtlas {
  TransverseAtlas atlas;
  ClassPath torus_path;  // underlying winding-1 class path
  Rational moving_end;   // = 3/4
};

ThickenedCircleAtlas twisted_heisenberg_atlas(int moving_segments = 8);

struct ChartArc {
  Rational start;
  Rational end;  // unrolled, as in Chart
};

struct BundleDescriptor {
  std::string name;
  ClassPath path;
  bool locally_omega_trivial = false;
  bool globally_omega_trivial = false;
  std::string gluing;
  std::vector<ChartArc> charts;
};

struct ExampleBundles {
  BundleDescriptor glued_equal_endpoints;   // circle path, endpoint classes agree
  BundleDescriptor glued_morita_endpoints;  // interval path, classes 0 and 1/2
};

ExampleBundles example_bundles();

}  // namespace nct
