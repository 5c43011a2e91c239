// Copyright 2026 The cremona-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cremona/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/cocycle.hpp"
#include "cremona/cremona_map.hpp"
#include "cremona/deformation.hpp"
#include "cremona/error.hpp"
#include "cremona/linear.hpp"
#include "cremona/text.hpp"
#include "cremona/verify.hpp"

namespace cremona {

namespace {

// File contents with '#' comment lines dropped.
std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  std::string line, text;
  while (std::getline(in, line)) {
    if (trim(line).starts_with("#")) continue;
    text += line;
    text += '\n';
  }
  return std::string(trim(text));
}

std::string flags_json_name(bool v) { return v ? "true" : "false"; }

std::string bool_list(const std::vector<bool>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + flags_json_name(v[k]);
  return out + "]";
}

void print_verdict(const DeformationFamily& family, const ExtendabilityVerdict& v, bool json,
                   std::ostream& out) {
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["extendable"] = v.extendable;
    j["p_i0_nonzero"] = v.p_i0_nonzero;
    j["q_i0_zero"] = v.q_i0_zero;
    j["jacobian_singular"] = v.jacobian_singular;
    j["limit"] = v.limit ? nlohmann::ordered_json(format_map(v.limit->to_map()))
                         : nlohmann::ordered_json(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  out << format_family(family);
  out << "extendable = " << (v.extendable ? "true" : "false") << "\n";
  out << "p_i0_nonzero = " << bool_list(v.p_i0_nonzero) << "\n";
  out << "q_i0_zero = " << bool_list(v.q_i0_zero) << "\n";
  out << "jacobian_singular = " << (v.jacobian_singular ? "true" : "false") << "\n";
  if (v.limit) out << "limit = " << format_map(v.limit->to_map()) << "\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Cremona transformations", "cremona"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_text = "Q";
  std::size_t dim = 2;
  app.add_option("--field", field_text, "Q, Qi or Fp:<prime>");
  app.add_option("--dim", dim, "dimension d for generated data")->check(CLI::Range(1, 8));

  std::string f_path, g_path, h_path, m_path, point_text, at_text, alpha_name = "id";
  std::string suite = "all";
  std::uint64_t prime = 0, seed = 0;
  std::size_t trials = 20;
  bool json = false, dual = false;

  auto* compose_cmd = app.add_subcommand("compose", "print f o g");
  compose_cmd->add_option("-f", f_path)->required();
  compose_cmd->add_option("-g", g_path)->required();

  auto* degree_cmd = app.add_subcommand("degree", "print the degree of f");
  degree_cmd->add_option("-f", f_path)->required();

  auto* apply_cmd = app.add_subcommand("apply", "print f(p)");
  apply_cmd->add_option("-f", f_path)->required();
  apply_cmd->add_option("--point", point_text)->required();

  auto* deform_cmd = app.add_subcommand("deform", "scaling family and its limit at t = 0");
  deform_cmd->add_option("-f", f_path)->required();
  deform_cmd->add_option("--at", at_text, "point moved to [1:0:...:0] first");
  deform_cmd->add_flag("--json", json);

  auto* dieudonne_cmd = app.add_subcommand("dieudonne", "print h (alpha g)[^dual] h^-1");
  dieudonne_cmd->set_help_flag("--help");  // frees -h for the inner automorphism
  dieudonne_cmd->add_option("--h", h_path)->required();
  dieudonne_cmd->add_option("--alpha", alpha_name)->check(CLI::IsMember({"id", "conj"}));
  dieudonne_cmd->add_flag("--dual", dual);
  dieudonne_cmd->add_option("-g", g_path)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "transvection factors of a det-1 matrix");
  decompose_cmd->add_option("-m", m_path)->required();

  auto* congruence_cmd = app.add_subcommand("congruence", "membership in Gamma_p");
  congruence_cmd->add_option("-m", m_path)->required();
  congruence_cmd->add_option("-p", prime)->required();

  auto* trivialize_cmd = app.add_subcommand("trivialize", "solve a^-1 nu(sigma) sigma(a) = 1");
  trivialize_cmd->add_option("--cocycle", m_path, "matrix of nu(sigma) over Qi")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a randomized property suite");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", trials);
  verify_cmd->add_flag("--json", json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const FieldSpec field = parse_field(field_text);
    if (compose_cmd->parsed()) {
      const CremonaMap f = parse_map(read_file(f_path), field);
      const CremonaMap g = parse_map(read_file(g_path), field);
      out << format_map(compose(f, g)) << "\n";
    } else if (degree_cmd->parsed()) {
      out << parse_map(read_file(f_path), field).degree() << "\n";
    } else if (apply_cmd->parsed()) {
      const CremonaMap f = parse_map(read_file(f_path), field);
      out << apply(f, parse_point(point_text, field)).to_string() << "\n";
    } else if (deform_cmd->parsed()) {
      CremonaMap f = parse_map(read_file(f_path), field);
      if (!at_text.empty()) {
        const ProjLinear a = move_point_to_origin(parse_point(at_text, field));
        f = compose(a.to_map(), compose(f, proj_inv(a).to_map()));
      }
      const DeformationFamily family = build_family(f);
      print_verdict(family, extendability(family), json, out);
    } else if (dieudonne_cmd->parsed()) {
      const ProjLinear h = ProjLinear::make(parse_matrix(read_file(h_path), field));
      const ProjLinear g = ProjLinear::make(parse_matrix(read_file(g_path), field));
      const FieldAutomorphism alpha = alpha_name == "conj" ? FieldAutomorphism::conjugation(field)
                                                           : FieldAutomorphism::identity(field);
      out << apply_dieudonne({h, alpha, dual}, g).to_string() << "\n";
    } else if (decompose_cmd->parsed()) {
      const Matrix a = parse_matrix(read_file(m_path), field);
      const auto factors = gauss_decompose(a);
      for (const auto& t : factors) out << t.to_string() << "\n";
      out << "count = " << factors.size() << " (bound " << decomposition_bound(a.rows() - 1)
          << ")\n";
    } else if (congruence_cmd->parsed()) {
      const bool member = in_congruence_subgroup(parse_int_matrix(read_file(m_path)), prime);
      out << (member ? "true" : "false") << "\n";
    } else if (trivialize_cmd->parsed()) {
      const Matrix nu = parse_matrix(read_file(m_path), FieldSpec::gaussian());
      out << trivialize(Cocycle::from_sigma(nu)).to_string() << "\n";
    } else if (verify_cmd->parsed()) {
      const SuiteReport report = run_suite(suite, {seed, trials, field, dim});
      out << (json ? report_to_json(report) + "\n" : report_summary(report));
      return report.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace cremona
