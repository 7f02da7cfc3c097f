#include "nct/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nct/json_io.hpp"

namespace nct {

namespace {

struct CommonOpts {
  std::string in_file;
  std::string out_file;
};

Json envelope(Json result) {
  return Json{{"version", kCliVersion}, {"result", std::move(result)}};
}

Json error_envelope(const std::string& code, const std::string& message,
                    const std::string& context) {
  return Json{{"version", kCliVersion},
              {"error", Json{{"code", code}, {"message", message}, {"context", context}}}};
}

Json read_input(const CommonOpts& opts, std::istream& in) {
  if (!opts.in_file.empty()) {
    std::ifstream f(opts.in_file);
    if (!f) throw Error("InvalidArgument", "cannot open input file " + opts.in_file);
    return Json::parse(f);
  }
  return Json::parse(in);
}

void write_output(const CommonOpts& opts, std::ostream& out, const Json& doc) {
  if (!opts.out_file.empty()) {
    std::ofstream f(opts.out_file);
    if (!f) throw Error("InvalidArgument", "cannot open output file " + opts.out_file);
    f << doc.dump() << '\n';
    return;
  }
  out << doc.dump() << '\n';
}

Json run_polarize(const Json& input, double tolerance) {
  if (!input.is_object() || !input.contains("matrix"))
    throw Error("InvalidArgument", "polarize expects {\"matrix\": [[...]]}");
  const Json& rows = input.at("matrix");
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw Error("InvalidArgument", "matrix must be an array of rows");
  const bool exact = rows[0][0].is_string();
  if (exact) {
    RMatrix v = rmatrix_from_json(rows);
    RMatrix phi = polarize<Rational>(v, tolerance);
    return Json{{"exact", true}, {"phi", to_json(phi)}, {"residual", to_json(Rational(0))}};
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<Eigen::Index>(rows[i].size()) != n)
      throw Error("InvalidArgument", "matrix must be square");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!rows[i][j].is_number())
        throw Error("InvalidArgument", "matrix entries must be all numbers or all \"p/q\"");
      v(i, j) = rows[i][j].get<double>();
    }
  }
  Eigen::MatrixXd phi = polarize<double>(v, tolerance);
  Eigen::MatrixXd j2n = Eigen::MatrixXd::Zero(n, n);
  j2n.block(0, n / 2, n / 2, n / 2).setIdentity();
  j2n.block(n / 2, 0, n / 2, n / 2) = -Eigen::MatrixXd::Identity(n / 2, n / 2);
  double residual = (phi.transpose() * j2n * phi - v).cwiseAbs().maxCoeff();
  Json phi_json = Json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < n; ++j) row.push_back(phi(i, j));
    phi_json.push_back(std::move(row));
  }
  return Json{{"exact", false}, {"phi", std::move(phi_json)}, {"residual", residual}};
}

Json run_bundle_check(const ClassPath& path) {
  Json out{{"base", path.base() == BaseSpace::Circle ? "circle" : "interval"},
           {"pointwise_commutative", pointwise_commutative(path)}};
  if (path.base() == BaseSpace::Circle) {
    long w = winding_number(path);
    MonodromyMatrix m = k_monodromy(w);
    out["winding"] = w;
    out["commutative_origin"] = commutative_origin_check(path);
    out["monodromy"] = Json::array({Json::array({m.m(0, 0), m.m(0, 1)}),
                                    Json::array({m.m(1, 0), m.m(1, 1)})});
  }
  return out;
}

Json run_classify2d(const Rational& theta, const Rational& mackey, long bound) {
  System2D sys(mod_one(theta), mackey);
  Rational restricted = restricted_mackey_invariant(sys);
  ThetaPerpSet2D perp = theta_perp_set_2d(restricted);
  Json perp_json = Json::array();
  for (const Rational& v : perp.members) perp_json.push_back(to_json(v));
  TransverseObstructions obs = transverse_obstructions(sys.torus_class, bound);
  Json obs_json{{"all", obs.all}};
  if (!obs.all) {
    Json values = Json::array();
    for (const Rational& v : obs.values) values.push_back(to_json(v));
    obs_json["lift"] = to_json(obs.lift);
    obs_json["bound"] = obs.bound;
    obs_json["values"] = std::move(values);
  }
  return Json{{"torus_class", to_json(sys.torus_class)},
              {"mackey", to_json(sys.mackey)},
              {"restricted_mackey", to_json(restricted)},
              {"theta_perp", std::move(perp_json)},
              {"commutative_obstruction", is_commutative_obstruction(restricted)},
              {"transverse_obstructions", std::move(obs_json)}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact calculator for twisted-torus duality invariants"};
  app.require_subcommand(1);
  app.fallthrough();  // --in/--out may follow the verb
  CommonOpts common;
  app.add_option("--in", common.in_file, "read the input JSON document from FILE");
  app.add_option("--out", common.out_file, "write the output JSON document to FILE");

  auto* cmd_dual = app.add_subcommand("dual", "dual class of a totally skew cocycle class");
  auto* cmd_tcheck =
      app.add_subcommand("transverse-check", "decide transversality of a pair of classes");
  auto* cmd_pdual = app.add_subcommand("pair-dual", "dualize a transverse pair");
  auto* cmd_classify = app.add_subcommand("classify2d", "2-dimensional system invariants");
  auto* cmd_dual2d = app.add_subcommand("dual2d", "one 2-dimensional duality step");
  auto* cmd_polarize = app.add_subcommand("polarize", "factor v = phi^t J phi");
  auto* cmd_fverify = app.add_subcommand("finite-verify", "run the finite verification chain");
  auto* cmd_bdual = app.add_subcommand("bundle-dual", "dualize a transverse atlas chart-wise");
  auto* cmd_bcheck = app.add_subcommand("bundle-check", "winding and monodromy of a class path");
  auto* cmd_bexamples = app.add_subcommand("bundle-examples", "the worked bundle descriptors");

  std::string theta_str, mackey_str = "0", lift_str;
  long bound = 3;
  cmd_classify->add_option("--theta", theta_str, "torus class p/q")->required();
  cmd_classify->add_option("--mackey", mackey_str, "Mackey obstruction p/q");
  cmd_classify->add_option("--bound", bound, "enumeration bound for transverse obstructions");
  cmd_dual2d->add_option("--theta", theta_str, "torus class p/q")->required();
  cmd_dual2d->add_option("--mackey", mackey_str, "Mackey obstruction p/q")->required();
  cmd_dual2d->add_option("--lift", lift_str, "lift of theta used for the duality step")
      ->required();
  double tolerance = 1e-9;
  cmd_polarize->add_option("--tolerance", tolerance, "pivot/residual tolerance for floats");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_envelope("InvalidArgument", e.what(), "argument parsing").dump() << '\n';
    return 1;
  }

  try {
    Json result;
    if (cmd_dual->parsed()) {
      result = to_json(dual_class(cocycle_from_json(read_input(common, in))));
    } else if (cmd_tcheck->parsed()) {
      Json doc = read_input(common, in);
      if (!doc.is_object() || !doc.contains("s") || !doc.contains("s_hat"))
        throw Error("InvalidArgument", "expected {\"s\": class, \"s_hat\": class}");
      CocycleClass s = cocycle_from_json(doc.at("s"));
      CocycleClass s_hat = cocycle_from_json(doc.at("s_hat"));
      RMatrix phi = phi_of(s, s_hat);
      result = Json{{"transverse", is_transverse(s, s_hat)},
                    {"phi_det", to_json(Rational(phi.determinant()))}};
    } else if (cmd_pdual->parsed()) {
      result = to_json(dualize_pair(pair_from_json(read_input(common, in))));
    } else if (cmd_classify->parsed()) {
      result = run_classify2d(parse_rational(theta_str), parse_rational(mackey_str), bound);
    } else if (cmd_dual2d->parsed()) {
      System2D sys(parse_rational(theta_str), parse_rational(mackey_str));
      result = to_json(dual_system_2d(sys, parse_rational(lift_str)));
    } else if (cmd_polarize->parsed()) {
      result = run_polarize(read_input(common, in), tolerance);
    } else if (cmd_fverify->parsed()) {
      result = to_json(verify_twisted_example());
    } else if (cmd_bdual->parsed()) {
      result = to_json(dualize_atlas(atlas_from_json(read_input(common, in))));
    } else if (cmd_bcheck->parsed()) {
      result = run_bundle_check(path_from_json(read_input(common, in)));
    } else if (cmd_bexamples->parsed()) {
      result = to_json(example_bundles());
    }
    write_output(common, out, envelope(std::move(result)));
    return 0;
  } catch (const Error& e) {
    Json doc = error_envelope(e.code(), e.what(), e.context());
    err << doc.dump() << '\n';
    return e.code() == "InvalidArgument" ? 1 : 2;
  } catch (const Json::parse_error& e) {
    err << error_envelope("InvalidArgument", e.what(), "JSON parsing").dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << error_envelope("InvalidArgument", e.what(), "").dump() << '\n';
    return 1;
  }
}

}  // namespace nct
