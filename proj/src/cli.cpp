#include "krchar/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "krchar/cache.hpp"
#include "krchar/charring.hpp"
#include "krchar/jacobitrudi.hpp"
#include "krchar/projchar.hpp"

namespace krc {

namespace {

struct Options {
  std::string type_str;
  std::string format = "table";
  std::string cache_dir;
  bool no_cache = false;

  std::string weight;
  int node = 0;
  int level = 1;
  int psi_node_opt = -1;
  std::string psi_xi;
  std::string psi_roots;
  std::string mode = "concrete";
  int bound = 2;
  bool dot = false;
};

std::string offset_str(const Weight& offset) {
  std::string s = "lambda";
  for (int i = 0; i < offset.rank(); ++i) {
    int c = offset.c[i];
    if (c == 0) continue;
    s += c > 0 ? "+" : "-";
    int a = c > 0 ? c : -c;
    if (a != 1) s += std::to_string(a);
    s += "w" + std::to_string(i + 1);
  }
  return s;
}

PsiSet psi_from_options(const Options& opt, const Weight& lambda,
                        const RootSystem& rs) {
  int given = (opt.psi_node_opt >= 0) + !opt.psi_xi.empty() +
              !opt.psi_roots.empty();
  if (given > 1)
    throw CLI::ValidationError("psi", "give at most one of --psi-node, --psi-xi, --psi-roots");
  if (opt.psi_node_opt >= 0) return psi_node(opt.psi_node_opt, rs);
  if (!opt.psi_xi.empty())
    return psi_from_xi(Weight::parse(opt.psi_xi, rs.rank), rs);
  if (!opt.psi_roots.empty()) {
    std::vector<RootVec> roots;
    std::stringstream ss(opt.psi_roots);
    std::string tok;
    while (std::getline(ss, tok, ';'))
      roots.push_back(RootVec(Weight::parse(tok, rs.rank).c));
    return psi_explicit(std::move(roots), rs);
  }
  const int il = i_lambda(lambda);
  return il >= 1 ? psi_node(il, rs) : PsiSet{};
}

void setup_cache(const Options& opt) {
  if (opt.no_cache) {
    set_cache_path(std::nullopt);
    return;
  }
  std::string dir = opt.cache_dir;
  if (dir.empty()) {
    const char* env = std::getenv("KRCHAR_CACHE_DIR");
    if (env) dir = env;
  }
  if (dir.empty()) {
    set_cache_path(std::nullopt);
    return;
  }
  std::filesystem::create_directories(dir);
  set_cache_path(std::filesystem::path(dir) / "charcache.ndjson");
}

nlohmann::json graded_to_json(const GradedCharacter& g) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& [deg, layer] : g.layers) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, m] : layer.terms())
      terms.push_back({{"weight", w.str()}, {"mult", m}});
    layers.push_back({{"degree", deg}, {"terms", terms}});
  }
  return layers;
}

void print_graded(const GradedCharacter& g, const RootSystem& rs,
                  std::ostream& out) {
  for (const auto& [deg, layer] : g.layers) {
    for (const auto& [w, m] : layer.terms()) {
      out << "  t^" << deg << "  ";
      if (m != 1) out << m << " ";
      out << "V(" << w.str() << ")\n";
    }
  }
  long long dim = 0;
  for (const auto& [deg, layer] : g.layers) dim += layer.dim(rs);
  out << "  dim at t=1: " << dim << "\n";
}

int cmd_char(const Options& opt, const RootSystem& rs, std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  const FormalCharacter& ch = simple_character(lam, rs);
  if (opt.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["lie_type"] = rs.type.str();
    j["lambda"] = lam.str();
    nlohmann::json mult = nlohmann::json::object();
    for (const auto& [w, m] : ch.dominant_mult()) mult[w.str()] = m;
    j["dominant_mult"] = mult;
    j["dim"] = ch.dim(rs);
    j["distinct_weights"] = ch.support_size(rs);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "ch V(" << lam.str() << ")  [" << rs.type.str() << "]\n";
  out << std::left << std::setw(18) << "  dominant weight" << "mult\n";
  for (const auto& [w, m] : ch.dominant_mult())
    out << "  " << std::left << std::setw(16) << w.str() << m << "\n";
  out << "  dim " << ch.dim(rs) << ", distinct weights " << ch.support_size(rs)
      << "\n";
  return 0;
}

int cmd_proj(const Options& opt, const RootSystem& rs, std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  PsiSet psi = psi_from_options(opt, lam, rs);
  ProjectiveCharacter p = projective_character(lam, psi, rs);
  if (opt.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["lie_type"] = rs.type.str();
    j["lambda"] = lam.str();
    j["psi_origin"] = psi.origin_str();
    j["layers"] = graded_to_json(p.graded);
    j["dim_t1"] = p.dim_at_t1(rs);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "ch_t P(" << lam.str() << ", 0)  [" << rs.type.str() << ", psi "
      << psi.origin_str() << ", |psi|=" << psi.size() << "]\n";
  print_graded(p.graded, rs, out);
  return 0;
}

int cmd_kr(const Options& opt, const RootSystem& rs, std::ostream& out) {
  ProjectiveCharacter p = kr_character(opt.node, opt.level, rs);
  if (opt.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["lie_type"] = rs.type.str();
    j["node"] = opt.node;
    j["level"] = opt.level;
    j["layers"] = graded_to_json(p.graded);
    j["dim_t1"] = p.dim_at_t1(rs);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "graded KR character, node " << opt.node << ", level " << opt.level
      << "  [" << rs.type.str() << "]\n";
  print_graded(p.graded, rs, out);
  return 0;
}

int cmd_gamma(const Options& opt, const RootSystem& rs, std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  PsiSet psi = psi_from_options(opt, lam, rs);
  GammaPoset g = gamma_set(lam, psi, rs);
  if (opt.dot) {
    out << to_dot(g);
    return 0;
  }
  if (opt.format == "json") {
    out << to_json_string(g) << "\n";
    return 0;
  }
  out << "Gamma(" << lam.str() << ", psi " << psi.origin_str() << ")  ["
      << rs.type.str() << "]: " << g.nodes.size() << " nodes, "
      << g.covers.size() << " covers\n";
  for (size_t i = 0; i < g.nodes.size(); ++i)
    out << "  [" << i << "] mu=" << g.nodes[i].mu.str() << " r="
        << g.nodes[i].grade << "\n";
  for (const auto& [lo, hi] : g.covers)
    out << "  " << lo << " -> " << hi << "\n";
  return 0;
}

int cmd_coeffs(const Options& opt, const RootSystem& rs, std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  std::vector<CoeffRow> rows = coefficient_rows(lam, rs);
  if (opt.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["lie_type"] = rs.type.str();
    j["lambda"] = lam.str();
    nlohmann::json arr = nlohmann::json::array();
    for (const CoeffRow& r : rows)
      arr.push_back({{"offset", r.offset.c},
                     {"mu", offset_str(r.offset)},
                     {"s", r.s},
                     {"c", r.c},
                     {"dominant", r.nu_dominant}});
    j["rows"] = arr;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "alternating-sum coefficients for lambda=" << lam.str() << "  ["
      << rs.type.str() << "]\n";
  out << "  " << std::left << std::setw(28) << "mu" << std::setw(4) << "s"
      << "c\n";
  for (const CoeffRow& r : rows) {
    if (r.c == 0) continue;
    out << "  " << std::left << std::setw(28) << offset_str(r.offset)
        << std::setw(4) << r.s << r.c << "\n";
  }
  return 0;
}

nlohmann::json verify_report(const RootSystem& rs, const std::string& check,
                             const std::string& lambda,
                             const std::string& psi_origin, bool pass) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["lie_type"] = rs.type.str();
  j["check"] = check;
  j["lambda"] = lambda;
  j["psi_origin"] = psi_origin;
  j["pass"] = pass;
  j["residual_is_zero"] = pass;
  return j;
}

int finish_verify(nlohmann::json j, const Options& opt, std::ostream& out,
                  const std::string& detail) {
  const bool pass = j["pass"].get<bool>();
  if (opt.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << j["check"].get<std::string>() << " " << j["lie_type"].get<std::string>()
        << " lambda=" << j["lambda"].get<std::string>() << " psi="
        << j["psi_origin"].get<std::string>() << ": "
        << (pass ? "pass" : "FAIL") << "\n";
    if (!pass && !detail.empty()) out << detail << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_verify_thm2(const Options& opt, const RootSystem& rs,
                    std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  PsiSet psi = psi_from_options(opt, lam, rs);
  GradedCharacter residual = verify_thm2(lam, psi, rs);
  nlohmann::json j =
      verify_report(rs, "thm2", lam.str(), psi.origin_str(), residual.is_zero());
  return finish_verify(j, opt, out, "residual: " + residual.str());
}

int cmd_verify_matrix(const Options& opt, const RootSystem& rs,
                      std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  PsiSet psi = psi_from_options(opt, lam, rs);
  auto [a, e] = gamma_matrices(lam, psi, rs);
  bool pass = matrix_identity_holds(a, e);
  nlohmann::json j = verify_report(rs, "matrix", lam.str(), psi.origin_str(), pass);
  nlohmann::json order = nlohmann::json::array();
  for (const GammaNode& n : a.order)
    order.push_back({{"mu", n.mu.str()}, {"r", n.grade}});
  nlohmann::json ma = nlohmann::json::array(), me = nlohmann::json::array();
  for (size_t r = 0; r < a.entry.size(); ++r) {
    nlohmann::json ra = nlohmann::json::array(), re = nlohmann::json::array();
    for (size_t c = 0; c < a.entry[r].size(); ++c) {
      ra.push_back(a.entry[r][c].str());
      re.push_back(e.entry[r][c].str());
    }
    ma.push_back(ra);
    me.push_back(re);
  }
  j["matrices"] = {{"order", order}, {"A", ma}, {"E", me}};
  return finish_verify(j, opt, out, "A(t)E(-t) != Id");
}

int cmd_verify_conjecture(const Options& opt, const RootSystem& rs,
                          std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  std::string detail;
  bool pass;
  if (opt.mode == "symbolic") {
    JTElement residual = verify_conjecture_symbolic(lam, rs);
    pass = residual.is_zero();
    detail = "residual: " + residual.str();
  } else if (opt.mode == "concrete") {
    DominantCharacter residual = verify_conjecture_concrete(lam, rs);
    pass = residual.is_zero();
    detail = "residual: " + residual.str();
  } else {
    throw CLI::ValidationError("mode", "mode must be concrete or symbolic");
  }
  nlohmann::json j = verify_report(rs, "conjecture", lam.str(),
                                   "node:" + std::to_string(i_lambda(lam)), pass);
  j["mode"] = opt.mode;
  return finish_verify(j, opt, out, detail);
}

int cmd_verify_stable(const Options& opt, const RootSystem& rs,
                      std::ostream& out) {
  Weight lam = Weight::parse(opt.weight, rs.rank);
  DominantCharacter residual = stable_formula_check(lam, rs);
  nlohmann::json j =
      verify_report(rs, "stable", lam.str(),
                    "node:" + std::to_string(i_lambda(lam)), residual.is_zero());
  return finish_verify(j, opt, out, "residual: " + residual.str());
}

int cmd_verify_rigidity(const Options& opt, const RootSystem& rs,
                        std::ostream& out) {
  Weight lam = opt.weight.empty() ? Weight::zero(rs.rank)
                                  : Weight::parse(opt.weight, rs.rank);
  PsiSet psi = psi_from_options(opt, lam, rs);
  RigidityReport rep = rigidity_check(psi, rs, opt.bound);
  nlohmann::json j = verify_report(rs, "rigidity", lam.str(), psi.origin_str(),
                                   rep.ok);
  j["bound"] = opt.bound;
  if (!rep.ok) j["violation"] = rep.violation;
  return finish_verify(j, opt, out, rep.violation);
}

int cmd_verify_kt(const Options& opt, const RootSystem& rs, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (int il = 1; il <= 3; ++il) {
    CalibrationResult res = calibrate_koike_terada(rs.type.family, il);
    rows.push_back({{"family", std::string(1, family_letter(rs.type.family))},
                    {"i_lambda", il},
                    {"pass", res.pass}});
    if (opt.format != "json") {
      out << "koike-terada " << family_letter(rs.type.family) << " i_lambda="
          << il << ": " << (res.pass ? "calibrated" : "MISCALIBRATED, route disabled")
          << "\n";
    }
  }
  if (opt.format == "json") {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["lie_type"] = rs.type.str();
    j["check"] = "kt-calibration";
    j["rows"] = rows;
    out << j.dump(2) << "\n";
  }
  return 0;  // a calibration report is informational
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"graded characters of projective covers, Kirillov-Reshetikhin "
               "modules and Jacobi-Trudi determinants for classical types"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--type", opt.type_str, "Lie type, e.g. B4, C3, D5")->required();
  app.add_option("--format", opt.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache-dir", opt.cache_dir,
                 "persistent cache directory (default: $KRCHAR_CACHE_DIR)");
  app.add_flag("--no-cache", opt.no_cache, "disable the persistent cache");

  auto add_weight = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--weight", opt.weight,
                              "weight in fundamental coordinates, e.g. 1,0,2");
    if (required) o->required();
  };
  auto add_psi = [&](CLI::App* cmd) {
    cmd->add_option("--psi-node", opt.psi_node_opt,
                    "psi = {roots with coefficient 2 at this node}");
    cmd->add_option("--psi-xi", opt.psi_xi, "psi = argmax of pairing with xi");
    cmd->add_option("--psi-roots", opt.psi_roots,
                    "explicit psi, simple-root coords, ';' separated");
  };

  CLI::App* c_char = app.add_subcommand("char", "weight multiplicities of V(lambda)");
  c_char->fallthrough();
  add_weight(c_char);

  CLI::App* c_proj = app.add_subcommand("proj", "graded character of a projective cover");
  c_proj->fallthrough();
  add_weight(c_proj);
  add_psi(c_proj);

  CLI::App* c_kr = app.add_subcommand("kr", "graded Kirillov-Reshetikhin character");
  c_kr->fallthrough();
  c_kr->add_option("--node", opt.node, "Dynkin node")->required();
  c_kr->add_option("--level", opt.level, "level m >= 1")->required();

  CLI::App* c_gamma = app.add_subcommand("gamma", "the finite poset Gamma(lambda, psi)");
  c_gamma->fallthrough();
  add_weight(c_gamma);
  add_psi(c_gamma);
  c_gamma->add_flag("--dot", opt.dot, "emit graphviz");

  CLI::App* c_coeffs = app.add_subcommand("coeffs", "alternating-sum coefficient table");
  c_coeffs->fallthrough();
  add_weight(c_coeffs);

  CLI::App* c_verify = app.add_subcommand("verify", "run a verification");
  c_verify->fallthrough();
  c_verify->require_subcommand(1);
  CLI::App* v_thm2 = c_verify->add_subcommand("thm2", "alternating character identity");
  v_thm2->fallthrough();
  add_weight(v_thm2);
  add_psi(v_thm2);
  CLI::App* v_matrix = c_verify->add_subcommand("matrix", "A(t)E(-t) = Id");
  v_matrix->fallthrough();
  add_weight(v_matrix);
  add_psi(v_matrix);
  CLI::App* v_conj = c_verify->add_subcommand("conjecture", "alternating Jacobi-Trudi identity");
  v_conj->fallthrough();
  add_weight(v_conj);
  v_conj->add_option("--mode", opt.mode, "concrete or symbolic")
      ->check(CLI::IsMember({"concrete", "symbolic"}));
  CLI::App* v_stable = c_verify->add_subcommand("stable", "subset alternating sum");
  v_stable->fallthrough();
  add_weight(v_stable);
  CLI::App* v_rigid = c_verify->add_subcommand("rigidity", "exchange property of psi");
  v_rigid->fallthrough();
  add_weight(v_rigid, false);
  add_psi(v_rigid);
  v_rigid->add_option("--bound", opt.bound, "total summand bound");
  CLI::App* v_kt = c_verify->add_subcommand("kt", "koike-terada calibration report");
  v_kt->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    RootSystem rs = build_root_system(LieType::parse(opt.type_str));
    setup_cache(opt);
    if (*c_char) return cmd_char(opt, rs, out);
    if (*c_proj) return cmd_proj(opt, rs, out);
    if (*c_kr) return cmd_kr(opt, rs, out);
    if (*c_gamma) return cmd_gamma(opt, rs, out);
    if (*c_coeffs) return cmd_coeffs(opt, rs, out);
    if (*c_verify) {
      if (*v_thm2) return cmd_verify_thm2(opt, rs, out);
      if (*v_matrix) return cmd_verify_matrix(opt, rs, out);
      if (*v_conj) return cmd_verify_conjecture(opt, rs, out);
      if (*v_stable) return cmd_verify_stable(opt, rs, out);
      if (*v_rigid) return cmd_verify_rigidity(opt, rs, out);
      if (*v_kt) return cmd_verify_kt(opt, rs, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace krc
