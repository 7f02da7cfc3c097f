#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nct/cli.hpp"
#include "nct/json_io.hpp"

using namespace nct;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dual2d reproduces the worked duality step") {
  CliRun r = run({"dual2d", "--theta", "2/3", "--mackey", "3", "--lift", "2/3"});
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc.at("version") == kCliVersion);
  CHECK(doc.at("result").at("torus_class") == "0/1");
  CHECK(doc.at("result").at("mackey") == "-2/3");

  CliRun next = run({"dual2d", "--theta", "0", "--mackey", "-2/3", "--lift", "0"});
  REQUIRE(next.exit_code == 0);
  Json doc2 = Json::parse(next.out);
  CHECK(doc2.at("result").at("torus_class") == "1/3");
  CHECK(doc2.at("result").at("mackey") == "0/1");
}

TEST_CASE("transverse-check reports the determinant of phi") {
  std::string input =
      R"({"s":{"n":2,"sigma":[["0/1","1/2"],["-1/2","0/1"]]},)"
      R"("s_hat":{"n":2,"sigma":[["0/1","1/1"],["-1/1","0/1"]]}})";
  CliRun r = run({"transverse-check"}, input);
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc.at("result").at("transverse") == false);
  CHECK(doc.at("result").at("phi_det") == "1/4");  // det((1/2) I_2)
}

TEST_CASE("dual inverts the pairing matrix") {
  std::string input = R"({"n":2,"sigma":[["0/1","2/1"],["-2/1","0/1"]]})";
  CliRun r = run({"dual"}, input);
  REQUIRE(r.exit_code == 0);
  Json doc = Json::parse(r.out);
  CHECK(doc.at("result").at("sigma")[0][1] == "-1/2");
}

TEST_CASE("pair-dual round trips through JSON") {
  TransversePair p = TransversePair::make(CocycleClass::from_theta(Rational(2, 3)),
                                          CocycleClass::from_theta(Rational(3)));
  CliRun r = run({"pair-dual"}, to_json(p).dump());
  REQUIRE(r.exit_code == 0);
  TransversePair d = pair_from_json(Json::parse(r.out).at("result"));
  CHECK(d.s().theta() == Rational(-2, 3));
  CHECK(d.s_hat().theta() == Rational(-3));
}

TEST_CASE("classify2d summarizes the invariants") {
  CliRun r = run({"classify2d", "--theta", "2/3", "--mackey", "3", "--bound", "1"});
  REQUIRE(r.exit_code == 0);
  Json result = Json::parse(r.out).at("result");
  CHECK(result.at("restricted_mackey") == "0/1");
  CHECK(result.at("commutative_obstruction") == true);
  CHECK(result.at("theta_perp") == Json::array({"0/1"}));
  Json values = result.at("transverse_obstructions").at("values");
  CHECK(values == Json::array({"0/1", "-6/1", "3/1", "6/5"}));
}

TEST_CASE("polarize handles exact and float inputs") {
  CliRun exact = run({"polarize"},
                     R"({"matrix":[["0/1","5/3"],["-5/3","0/1"]]})");
  REQUIRE(exact.exit_code == 0);
  Json doc = Json::parse(exact.out);
  CHECK(doc.at("result").at("exact") == true);
  CHECK(doc.at("result").at("residual") == "0/1");

  CliRun flt = run({"polarize"}, R"({"matrix":[[0.0,1.25],[-1.25,0.0]]})");
  REQUIRE(flt.exit_code == 0);
  Json fdoc = Json::parse(flt.out);
  CHECK(fdoc.at("result").at("exact") == false);
  CHECK(fdoc.at("result").at("residual").get<double>() <= 1e-9);
}

TEST_CASE("finite-verify emits an all-pass report") {
  CliRun r = run({"finite-verify"});
  REQUIRE(r.exit_code == 0);
  Json result = Json::parse(r.out).at("result");
  CHECK(result.at("all_pass") == true);
  CHECK(result.at("steps").size() == 5);
}

TEST_CASE("bundle verbs") {
  CliRun examples = run({"bundle-examples"});
  REQUIRE(examples.exit_code == 0);
  Json result = Json::parse(examples.out).at("result");
  CHECK(result.at("glued_morita_endpoints").at("path").at("samples").back().at("value") ==
        "1/2");

  std::string path =
      R"({"base":"circle","samples":[{"t":"0/1","value":"0/1"},{"t":"1/4","value":"1/4"},)"
      R"({"t":"1/2","value":"1/2"},{"t":"3/4","value":"3/4"},{"t":"1/1","value":"0/1"}]})";
  CliRun check = run({"bundle-check"}, path);
  REQUIRE(check.exit_code == 0);
  Json cres = Json::parse(check.out).at("result");
  CHECK(cres.at("winding") == 1);
  CHECK(cres.at("commutative_origin") == false);
  CHECK(cres.at("monodromy") == Json::array({Json::array({1, 1}), Json::array({0, 1})}));

  ThickenedCircleAtlas t = twisted_heisenberg_atlas(4);
  CliRun dual = run({"bundle-dual"}, to_json(t.atlas).dump());
  REQUIRE(dual.exit_code == 0);
  TransverseAtlas back = atlas_from_json(Json::parse(dual.out).at("result"));
  CHECK(back.charts().size() == 2);
  CHECK(back.charts()[0].omega.front().value == Rational(-1));
}

TEST_CASE("identical inputs give identical output bytes") {
  std::string input = R"({"n":2,"sigma":[["0/1","2/1"],["-2/1","0/1"]]})";
  CliRun a = run({"dual"}, input);
  CliRun b = run({"dual"}, input);
  CHECK(a.out == b.out);

  CliRun c = run({"finite-verify"});
  CliRun d = run({"finite-verify"});
  CHECK(c.out == d.out);
}

TEST_CASE("domain errors exit 2 with a machine-readable object") {
  // phi singular: theta * theta_hat = 1
  std::string input =
      R"({"s":{"n":2,"sigma":[["0/1","1/1"],["-1/1","0/1"]]},)"
      R"("s_hat":{"n":2,"sigma":[["0/1","1/1"],["-1/1","0/1"]]}})";
  CliRun r = run({"pair-dual"}, input);
  CHECK(r.exit_code == 2);
  Json err = Json::parse(r.err);
  CHECK(err.at("error").at("code") == "NotTransverse");

  CliRun bad_lift = run({"dual2d", "--theta", "2/3", "--mackey", "3", "--lift", "1/3"});
  CHECK(bad_lift.exit_code == 2);
  CHECK(Json::parse(bad_lift.err).at("error").at("code") == "BadLift");
}

TEST_CASE("malformed input exits 1") {
  CliRun unparsable = run({"dual"}, "this is not json");
  CHECK(unparsable.exit_code == 1);

  CliRun missing = run({"dual"}, R"({"n":2})");
  CHECK(missing.exit_code == 1);

  CliRun bad_flag = run({"dual2d", "--theta", "2/3"});
  CHECK(bad_flag.exit_code == 1);

  CliRun unknown = run({"no-such-verb"});
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("file redirection and the polarize tolerance flag") {
  std::string dir = "/tmp/nct_cli_test";
  std::filesystem::create_directories(dir);
  std::string in_file = dir + "/in.json", out_file = dir + "/out.json";
  {
    std::ofstream f(in_file);
    f << R"({"matrix":[[0.0,0.5],[-0.5,0.0]]})";
  }
  CliRun r = run({"polarize", "--in", in_file, "--out", out_file, "--tolerance", "1e-12"});
  REQUIRE(r.exit_code == 0);
  std::ifstream f(out_file);
  Json doc = Json::parse(f);
  CHECK(doc.at("result").at("residual").get<double>() <= 1e-12);
  std::filesystem::remove_all(dir);
}

TEST_CASE("round trip: output documents re-parse to equal values") {
  ThickenedCircleAtlas t = twisted_heisenberg_atlas(6);
  Json doc = to_json(t.atlas);
  TransverseAtlas back = atlas_from_json(doc);
  CHECK(to_json(back) == doc);

  Json path_doc = to_json(t.torus_path);
  CHECK(to_json(path_from_json(path_doc)) == path_doc);

  CocycleClass c = CocycleClass::from_theta(Rational(-22, 7));
  CHECK(cocycle_from_json(to_json(c)) == c);

  TorusClass tc = restrict_to_torus(c);
  CHECK(torus_from_json(to_json(tc)) == tc);

  FiniteCocycle omega = FiniteCocycle::example_third();
  FiniteAlgebraElement f = delta(omega, 4);
  f.coeffs(2) = Complex(0.25, -1.5);
  FiniteAlgebraElement f2 = element_from_json(to_json(f));
  CHECK(f2.k == f.k);
  CHECK(f2.n == f.n);
  CHECK((f2.coeffs - f.coeffs).cwiseAbs().maxCoeff() == 0.0);
}
