#include "nct/json_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "nct/error.hpp"

namespace nct {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("InvalidArgument", "malformed JSON: " + what);
}

std::string decimal(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  require(j.is_string(), "rational must be a string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

Json to_json(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMatrix rmatrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  require(j[0].is_array() && !j[0].empty(), "matrix rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    require(j[r].is_array() && static_cast<Eigen::Index>(j[r].size()) == cols,
            "matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const CocycleClass& c) { return Json{{"n", c.dim()}, {"sigma", to_json(c.sigma())}}; }

CocycleClass cocycle_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("sigma"), "cocycle needs n and sigma");
  RMatrix sigma = rmatrix_from_json(j.at("sigma"));
  require(j.at("n").is_number_integer() &&
              j.at("n").get<Eigen::Index>() == sigma.rows(),
          "n must match the matrix size");
  return CocycleClass(std::move(sigma));
}

Json to_json(const TorusClass& t) {
  Json entries = Json::array();
  for (const Rational& e : t.entries()) entries.push_back(to_json(e));
  return Json{{"n", t.dim()}, {"entries", std::move(entries)}};
}

TorusClass torus_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("entries"),
          "torus class needs n and entries");
  require(j.at("n").is_number_integer(), "n must be an integer");
  std::vector<Rational> entries;
  for (const Json& e : j.at("entries")) entries.push_back(rational_from_json(e));
  return TorusClass(j.at("n").get<int>(), std::move(entries));
}

Json to_json(const TransversePair& p) {
  return Json{{"s", to_json(p.s())}, {"s_hat", to_json(p.s_hat())}};
}

TransversePair pair_from_json(const Json& j) {
  require(j.is_object() && j.contains("s") && j.contains("s_hat"),
          "pair needs s and s_hat");
  return TransversePair::make(cocycle_from_json(j.at("s")), cocycle_from_json(j.at("s_hat")));
}

Json to_json(const System2D& s) {
  return Json{{"torus_class", to_json(s.torus_class)}, {"mackey", to_json(s.mackey)}};
}

namespace {

const char* base_name(BaseSpace b) { return b == BaseSpace::Circle ? "circle" : "interval"; }

BaseSpace base_from(const Json& j) {
  require(j.is_string(), "base must be \"circle\" or \"interval\"");
  std::string s = j.get<std::string>();
  if (s == "circle") return BaseSpace::Circle;
  if (s == "interval") return BaseSpace::Interval;
  throw Error("InvalidArgument", "malformed JSON: unknown base '" + s + "'");
}

}  // namespace

Json to_json(const ClassPath& p) {
  Json samples = Json::array();
  for (const PathSample& s : p.samples())
    samples.push_back(Json{{"t", to_json(s.t)}, {"value", to_json(s.value)}});
  return Json{{"base", base_name(p.base())}, {"samples", std::move(samples)}};
}

ClassPath path_from_json(const Json& j) {
  require(j.is_object() && j.contains("base") && j.contains("samples"),
          "path needs base and samples");
  std::vector<PathSample> samples;
  for (const Json& s : j.at("samples")) {
    require(s.is_object() && s.contains("t") && s.contains("value"),
            "path samples need t and value");
    samples.push_back({rational_from_json(s.at("t")), rational_from_json(s.at("value"))});
  }
  return ClassPath::make(base_from(j.at("base")), std::move(samples));
}

namespace {

Json lifts_to_json(const std::vector<LiftSample>& lifts) {
  Json out = Json::array();
  for (const LiftSample& s : lifts)
    out.push_back(Json{{"t", to_json(s.t)}, {"value", to_json(s.value)}});
  return out;
}

std::vector<LiftSample> lifts_from_json(const Json& j) {
  std::vector<LiftSample> out;
  for (const Json& s : j) {
    require(s.is_object() && s.contains("t") && s.contains("value"),
            "lift samples need t and value");
    out.push_back({rational_from_json(s.at("t")), rational_from_json(s.at("value"))});
  }
  return out;
}

}  // namespace

Json to_json(const Chart& c) {
  return Json{{"start", to_json(c.start)},
              {"end", to_json(c.end)},
              {"omega", lifts_to_json(c.omega)},
              {"omega_hat", lifts_to_json(c.omega_hat)}};
}

Chart chart_from_json(const Json& j) {
  require(j.is_object() && j.contains("start") && j.contains("end") && j.contains("omega") &&
              j.contains("omega_hat"),
          "chart needs start, end, omega, omega_hat");
  Chart c;
  c.start = rational_from_json(j.at("start"));
  c.end = rational_from_json(j.at("end"));
  c.omega = lifts_from_json(j.at("omega"));
  c.omega_hat = lifts_from_json(j.at("omega_hat"));
  return c;
}

Json to_json(const TransverseAtlas& a) {
  Json charts = Json::array();
  for (const Chart& c : a.charts()) charts.push_back(to_json(c));
  return Json{{"base", base_name(a.base())}, {"charts", std::move(charts)}};
}

TransverseAtlas atlas_from_json(const Json& j) {
  require(j.is_object() && j.contains("base") && j.contains("charts"),
          "atlas needs base and charts");
  std::vector<Chart> charts;
  for (const Json& c : j.at("charts")) charts.push_back(chart_from_json(c));
  return TransverseAtlas::make(base_from(j.at("base")), std::move(charts));
}

Json to_json(const BundleDescriptor& d) {
  Json charts = Json::array();
  for (const ChartArc& a : d.charts)
    charts.push_back(Json{{"start", to_json(a.start)}, {"end", to_json(a.end)}});
  return Json{{"name", d.name},
              {"path", to_json(d.path)},
              {"locally_omega_trivial", d.locally_omega_trivial},
              {"globally_omega_trivial", d.globally_omega_trivial},
              {"gluing", d.gluing},
              {"charts", std::move(charts)}};
}

Json to_json(const ExampleBundles& e) {
  return Json{{"glued_equal_endpoints", to_json(e.glued_equal_endpoints)},
              {"glued_morita_endpoints", to_json(e.glued_morita_endpoints)}};
}

Json to_json(const FiniteAlgebraElement& f) {
  Json coeffs = Json::array();
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i)
    coeffs.push_back(Json::array({decimal(f.coeffs(i).real()), decimal(f.coeffs(i).imag())}));
  return Json{{"k", f.k}, {"n", f.n}, {"coeffs", std::move(coeffs)}};
}

FiniteAlgebraElement element_from_json(const Json& j) {
  require(j.is_object() && j.contains("k") && j.contains("n") && j.contains("coeffs"),
          "element needs k, n, coeffs");
  FiniteAlgebraElement f;
  f.k = j.at("k").get<int>();
  f.n = j.at("n").get<int>();
  const Json& coeffs = j.at("coeffs");
  require(coeffs.is_array(), "coeffs must be an array of [re, im] pairs");
  f.coeffs = CVector::Zero(static_cast<Eigen::Index>(coeffs.size()));
  for (Eigen::Index i = 0; i < f.coeffs.size(); ++i) {
    const Json& pair = coeffs[static_cast<size_t>(i)];
    require(pair.is_array() && pair.size() == 2 && pair[0].is_string() && pair[1].is_string(),
            "coefficients are pairs of decimal strings");
    f.coeffs(i) = Complex(std::stod(pair[0].get<std::string>()),
                          std::stod(pair[1].get<std::string>()));
  }
  return f;
}

Json to_json(const VerificationReport& r) {
  Json steps = Json::array();
  for (const StepReport& s : r.steps)
    steps.push_back(Json{{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
  return Json{{"steps", std::move(steps)}, {"all_pass", r.all_pass()}};
}

}  // namespace nct
