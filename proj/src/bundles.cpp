#include "nct/bundles.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "nct/dim2.hpp"
#include "nct/error.hpp"
#include "nct/transversality.hpp"

namespace nct {

namespace {

Rational canonical_increment(const Rational& from, const Rational& to) {
  Rational d = mod_one(to - from);
  if (d == Rational(1, 2))
    throw Error("AmbiguousLift", "segment jump of exactly 1/2 has no canonical lift");
  return d < Rational(1, 2) ? d : d - Rational(1);
}

Rational ceil_of(const Rational& r) { return Rational(-floor_of(-r)); }

std::string arc_label(const Rational& a, const Rational& b) {
  return "[" + to_string(a) + ", " + to_string(b) + "]";
}

}  // namespace

ClassPath ClassPath::make(BaseSpace base, std::vector<PathSample> samples) {
  if (samples.size() < 2) throw Error("InvalidArgument", "a path needs at least two samples");
  if (samples.front().t != Rational(0) || samples.back().t != Rational(1))
    throw Error("InvalidArgument", "a path must be sampled from t=0 to t=1");
  for (size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].value < Rational(0) || samples[i].value >= Rational(1))
      throw Error("InvalidArgument", "path values must lie in [0,1)");
    if (i > 0 && !(samples[i - 1].t < samples[i].t))
      throw Error("InvalidArgument", "sample positions must increase strictly");
  }
  if (base == BaseSpace::Circle && samples.front().value != samples.back().value)
    throw Error("InvalidArgument", "a circle path must close up: value(0) != value(1)");
  ClassPath p(base, std::move(samples));
  p.lift_increments();  // rejects ambiguous jumps
  return p;
}

std::vector<Rational> ClassPath::lift_increments() const {
  std::vector<Rational> out;
  out.reserve(samples_.size() - 1);
  for (size_t i = 0; i + 1 < samples_.size(); ++i)
    out.push_back(canonical_increment(samples_[i].value, samples_[i + 1].value));
  return out;
}

std::vector<Rational> ClassPath::lift() const {
  std::vector<Rational> out;
  out.reserve(samples_.size());
  Rational cur = samples_.front().value;
  out.push_back(cur);
  for (const Rational& d : lift_increments()) {
    cur += d;
    out.push_back(cur);
  }
  return out;
}

long winding_number(const ClassPath& p) {
  if (p.base() != BaseSpace::Circle)
    throw Error("InvalidArgument", "winding number is defined over the circle");
  Rational total(0);
  for (const Rational& d : p.lift_increments()) total += d;
  if (!total.is_integer())
    throw Error("InvalidArgument", "lift increments of a closed path must sum to an integer");
  return static_cast<long>(total.num().convert_to<long long>());
}

bool pointwise_commutative(const ClassPath& p) {
  for (const PathSample& s : p.samples())
    if (!s.value.is_zero()) return false;
  return true;
}

bool MonodromyMatrix::is_identity() const {
  return m(0, 0) == 1 && m(0, 1) == 0 && m(1, 0) == 0 && m(1, 1) == 1;
}

MonodromyMatrix k_monodromy(long w) {
  MonodromyMatrix out;
  out.m << 1, w, 0, 1;
  return out;
}

bool commutative_origin_check(const ClassPath& p) { return winding_number(p) == 0; }

namespace {

void validate_chart(BaseSpace base, const Chart& c) {
  if (c.start < Rational(0) || c.start >= Rational(1) || !(c.end > c.start) ||
      c.end > c.start + Rational(1))
    throw Error("InvalidArgument", "chart arc must satisfy 0 <= start < 1, start < end <= start+1");
  if (base == BaseSpace::Interval && c.end > Rational(1))
    throw Error("InvalidArgument", "interval charts cannot wrap");
  if (c.omega.size() != c.omega_hat.size() || c.omega.size() < 2)
    throw Error("InvalidArgument", "chart lift paths need one shared grid of >= 2 samples");
  for (size_t i = 0; i < c.omega.size(); ++i) {
    if (c.omega[i].t != c.omega_hat[i].t)
      throw Error("InvalidArgument", "omega and omega_hat must share their grid");
    if (i > 0 && !(c.omega[i - 1].t < c.omega[i].t))
      throw Error("InvalidArgument", "chart grid must increase strictly");
    if (!transverse_locus(c.omega[i].value, c.omega_hat[i].value))
      throw Error("NotTransverse",
                  "chart is not pointwise transverse at t = " + to_string(c.omega[i].t));
  }
  if (c.omega.front().t != c.start || c.omega.back().t != c.end)
    throw Error("InvalidArgument", "chart grid must span the chart arc");
}

// Chart interiors must cover the base: every endpoint (mod 1) and every
// midpoint between consecutive endpoints lies in some open arc. The global
// endpoints of an interval base count as covered by charts touching them.
bool covered(BaseSpace base, const std::vector<Chart>& charts, const Rational& x) {
  for (const Chart& c : charts) {
    for (const Rational& probe : {x, x + Rational(1)}) {
      if (c.start < probe && probe < c.end) return true;
      if (base == BaseSpace::Interval) {
        if (c.start == Rational(0) && probe == Rational(0)) return true;
        if (c.end == Rational(1) && probe == Rational(1)) return true;
      }
    }
  }
  return false;
}

void validate_coverage(BaseSpace base, const std::vector<Chart>& charts) {
  std::vector<Rational> points{Rational(0)};
  if (base == BaseSpace::Interval) points.push_back(Rational(1));
  for (const Chart& c : charts) {
    points.push_back(mod_one(c.start));
    points.push_back(mod_one(c.end));
    if (c.end == Rational(1)) points.push_back(Rational(1));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rational> probes = points;
  for (size_t i = 0; i + 1 < points.size(); ++i)
    probes.push_back((points[i] + points[i + 1]) / Rational(2));
  for (const Rational& x : probes)
    if (!covered(base, charts, x))
      throw Error("InvalidArgument", "chart interiors do not cover the base near t = " +
                                         to_string(mod_one(x)));
}

}  // namespace

TransverseAtlas TransverseAtlas::make(BaseSpace base, std::vector<Chart> charts) {
  if (charts.empty()) throw Error("InvalidArgument", "an atlas needs at least one chart");
  for (const Chart& c : charts) validate_chart(base, c);
  validate_coverage(base, charts);
  return TransverseAtlas(base, std::move(charts));
}

TransverseAtlas dualize_atlas(const TransverseAtlas& a) {
  std::vector<Chart> out;
  out.reserve(a.charts().size());
  for (const Chart& c : a.charts()) {
    Chart d;
    d.start = c.start;
    d.end = c.end;
    d.omega.reserve(c.omega.size());
    d.omega_hat.reserve(c.omega.size());
    for (size_t i = 0; i < c.omega.size(); ++i) {
      CocycleClass w = CocycleClass::from_theta(c.omega[i].value);
      CocycleClass w_hat = CocycleClass::from_theta(c.omega_hat[i].value);
      d.omega.push_back({c.omega[i].t, semidirect(w, w_hat).theta()});
      d.omega_hat.push_back({c.omega[i].t, semidirect_bar(w_hat, w).theta()});
    }
    out.push_back(std::move(d));
  }
  return TransverseAtlas::make(a.base(), std::move(out));
}

namespace {

// Integer shift m with [lo, hi] + m inside [1,2] or [-2,-1], if any.
std::optional<Rational> window_shift(const Rational& lo, const Rational& hi) {
  for (int w : {1, -2}) {
    Rational m_min = ceil_of(Rational(w) - lo);
    Rational m_max = Rational(floor_of(Rational(w + 1) - hi));
    if (m_min <= m_max) return m_min;
  }
  return std::nullopt;
}

Chart make_axis_chart(const Rational& start, const Rational& end,
                      std::vector<LiftSample> omega) {
  Chart c;
  c.start = start;
  c.end = end;
  for (const LiftSample& s : omega) c.omega_hat.push_back({s.t, Rational(0)});
  c.omega = std::move(omega);
  return c;
}

Chart make_hyperbola_chart(const Rational& start, const Rational& end,
                           const std::vector<LiftSample>& lifts) {
  Rational lo = lifts.front().value, hi = lo;
  for (const LiftSample& s : lifts) {
    lo = std::min(lo, s.value);
    hi = std::max(hi, s.value);
  }
  std::optional<Rational> m = window_shift(lo, hi);
  if (!m)
    throw Error("NoLift", "no integer shift moves the lift range into [1,2] or [-2,-1]",
                "chart " + arc_label(start, end) + " lift range " + arc_label(lo, hi));
  Chart c;
  c.start = start;
  c.end = end;
  for (const LiftSample& s : lifts) {
    Rational theta = s.value + *m;
    c.omega.push_back({s.t, theta});
    c.omega_hat.push_back({s.t, Rational(2) / theta});
  }
  return c;
}

// Samples of the wrap-around chart made от the last and first segments.
std::vector<LiftSample> seam_samples(const ClassPath& p) {
  const auto& s = p.samples();
  std::vector<Rational> lift = p.lift();
  const size_t n = s.size();
  return {{s[n - 2].t, lift[n - 2]},
          {Rational(1), lift[n - 1]},
          {Rational(1) + s[1].t, lift[n - 1] + (lift[1] - lift[0])}};
}

ClassPath with_midpoint(const ClassPath& p) {
  if (p.samples().size() > 2) return p;
  Rational d = p.lift_increments().front();
  PathSample mid{Rational(1, 2), mod_one(p.samples().front().value + d / Rational(2))};
  return ClassPath::make(p.base(), {p.samples().front(), mid, p.samples().back()});
}

}  // namespace

TransverseAtlas build_transverse_atlas(const ClassPath& path, LiftStrategy strategy) {
  ClassPath p = path.base() == BaseSpace::Circle ? with_midpoint(path) : path;
  const auto& s = p.samples();
  std::vector<Rational> lift = p.lift();

  std::vector<Chart> charts;
  if (strategy == LiftStrategy::AxisLift) {
    std::vector<LiftSample> whole;
    for (size_t i = 0; i < s.size(); ++i) whole.push_back({s[i].t, lift[i]});
    charts.push_back(make_axis_chart(Rational(0), Rational(1), std::move(whole)));
    if (p.base() == BaseSpace::Circle)
      charts.push_back(make_axis_chart(s[s.size() - 2].t, Rational(1) + s[1].t, seam_samples(p)));
    return TransverseAtlas::make(p.base(), std::move(charts));
  }

  // HyperbolaLift: greedy runs of segments sharing one window shift,
  // overlapping by one segment so the interiors still cover.
  const size_t n = s.size();
  size_t run_start = 0;
  while (run_start + 1 < n) {
    Rational lo = lift[run_start], hi = lift[run_start];
    size_t end = run_start;
    while (end + 1 < n) {
      Rational nlo = std::min(lo, lift[end + 1]);
      Rational nhi = std::max(hi, lift[end + 1]);
      if (end > run_start && !window_shift(nlo, nhi)) break;
      lo = nlo;
      hi = nhi;
      ++end;
    }
    std::vector<LiftSample> run;
    for (size_t i = run_start; i <= end; ++i) run.push_back({s[i].t, lift[i]});
    charts.push_back(make_hyperbola_chart(s[run_start].t, s[end].t, run));
    if (end + 1 >= n) break;
    if (end == run_start + 1)
      throw Error("NoLift", "the lift crosses an integer; no overlapping charts exist",
                  "junction t = " + to_string(s[end].t));
    run_start = end - 1;  // one-segment overlap with the next run
  }
  if (p.base() == BaseSpace::Circle)
    charts.push_back(
        make_hyperbola_chart(s[n - 2].t, Rational(1) + s[1].t, seam_samples(p)));
  return TransverseAtlas::make(p.base(), std::move(charts));
}

HeisenbergDescriptor heisenberg_descriptor(int segments) {
  if (segments < 3) throw Error("InvalidArgument", "need at least three segments");
  std::vector<PathSample> theta_samples, zero_samples;
  for (int i = 0; i <= segments; ++i) {
    Rational t(i, segments);
    theta_samples.push_back({t, mod_one(t)});
    zero_samples.push_back({t, Rational(0)});
  }
  ClassPath theta = ClassPath::make(BaseSpace::Circle, std::move(theta_samples));
  ClassPath theta_hat = ClassPath::make(BaseSpace::Circle, std::move(zero_samples));

  // Charts of the commutative pair: the algebra side is trivial and the
  // action side carries the lift of s; a zero partner is transverse to
  // everything.
  std::vector<Rational> lift = theta.lift();
  std::vector<LiftSample> whole;
  for (int i = 0; i <= segments; ++i) whole.push_back({Rational(i, segments), lift[i]});
  Chart c1;
  c1.start = Rational(0);
  c1.end = Rational(1);
  for (const LiftSample& s : whole) {
    c1.omega.push_back({s.t, Rational(0)});
    c1.omega_hat.push_back(s);
  }
  Chart c2;
  c2.start = Rational(segments - 1, segments);
  c2.end = Rational(1) + Rational(1, segments);
  for (const LiftSample& s : seam_samples(theta)) {
    c2.omega.push_back({s.t, Rational(0)});
    c2.omega_hat.push_back(s);
  }
  TransverseAtlas atlas =
      TransverseAtlas::make(BaseSpace::Circle, {std::move(c1), std::move(c2)});
  return HeisenbergDescriptor{std::move(theta), std::move(theta_hat), std::move(atlas)};
}

ThickenedCircleAtlas twisted_heisenberg_atlas(int moving_segments) {
  if (moving_segments < 2) throw Error("InvalidArgument", "need at least two moving segments");
  const int m = moving_segments;
  const Rational moving_end(3, 4);

  auto base_of = [&](int j) { return moving_end * Rational(j, m); };  // j = 0..m

  std::vector<PathSample> samples;
  for (int j = 0; j <= m; ++j) samples.push_back({base_of(j), mod_one(Rational(j, m))});
  samples.push_back({Rational(7, 8), Rational(0)});
  samples.push_back({Rational(1), Rational(0)});
  ClassPath path = ClassPath::make(BaseSpace::Circle, std::move(samples));

  // Chart over the moving part plus half the constant tail: theta runs
  // 1 -> 2 and stays at 2.
  Chart u;
  u.start = Rational(0);
  u.end = Rational(7, 8);
  for (int j = 0; j <= m; ++j) {
    Rational theta = Rational(1) + Rational(j, m);
    u.omega.push_back({base_of(j), theta});
    u.omega_hat.push_back({base_of(j), Rational(2) / theta});
  }
  u.omega.push_back({Rational(7, 8), Rational(2)});
  u.omega_hat.push_back({Rational(7, 8), Rational(1)});

  // Wrap chart across the constant tail and the start of the moving part;
  // on the tail the lift is taken one lower, so it continues into 1 + j/m.
  Chart v;
  v.start = moving_end;
  v.omega.push_back({moving_end, Rational(1)});
  v.omega.push_back({Rational(7, 8), Rational(1)});
  v.omega.push_back({Rational(1), Rational(1)});
  int j_max = std::max(1, m / 2);
  for (int j = 1; j <= j_max; ++j)
    v.omega.push_back({Rational(1) + base_of(j), Rational(1) + Rational(j, m)});
  v.end = v.omega.back().t;
  for (const LiftSample& s : v.omega)
    v.omega_hat.push_back({s.t, Rational(2) / s.value});

  TransverseAtlas atlas = TransverseAtlas::make(BaseSpace::Circle, {std::move(u), std::move(v)});
  return ThickenedCircleAtlas{std::move(atlas), std::move(path), moving_end};
}

ExampleBundles example_bundles() {
  ExampleBundles out{
      BundleDescriptor{
          "glued-equal-endpoints",
          ClassPath::make(BaseSpace::Circle,
                          {{Rational(0), Rational(0)},
                           {Rational(1, 4), Rational(1, 4)},
                           {Rational(1, 2), Rational(1, 2)},
                           {Rational(3, 4), Rational(3, 4)},
                           {Rational(1), Rational(0)}}),
          true,
          false,
          "endpoint fibres share one torus class; glued by the canonical isomorphism",
          {},
      },
      BundleDescriptor{
          "glued-morita-endpoints",
          ClassPath::make(BaseSpace::Interval,
                          {{Rational(0), Rational(0)},
                           {Rational(1, 4), Rational(1, 8)},
                           {Rational(1, 2), Rational(1, 4)},
                           {Rational(3, 4), Rational(3, 8)},
                           {Rational(1), Rational(1, 2)}}),
          true,
          false,
          "endpoint fibres have classes 0 and 1/2; stably isomorphic (Morita), "
          "glued by a stable isomorphism",
          {ChartArc{Rational(1, 8), Rational(7, 8)},
           ChartArc{Rational(3, 4), Rational(5, 4)}},
      },
  };
  return out;
}

}  // namespace nct
