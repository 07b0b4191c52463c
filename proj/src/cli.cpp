#include "wops/cli.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "wops/errors.hpp"
#include "wops/recurrence.hpp"
#include "wops/semiclassical.hpp"
#include "wops/wops_basis.hpp"

namespace wops {

using nlohmann::json;

nlohmann::json rmatrix_to_json(const RMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json polymatrix_to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(render_mpoly(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RunConfig load_config(const json& j) {
  if (!j.is_object()) throw BadParameter("config must be a JSON object");
  if (!j.contains("functional"))
    throw BadParameter("config is missing \"functional\"");
  RunConfig cfg;
  cfg.functional = j.at("functional");
  if (j.contains("pair")) cfg.pair = j.at("pair");
  if (j.contains("max_degree")) {
    if (!j.at("max_degree").is_number_integer())
      throw BadParameter("max_degree must be an integer");
    cfg.max_degree = j.at("max_degree").get<int>();
  }
  if (cfg.max_degree < 1) throw BadParameter("max_degree must be >= 1");
  if (j.contains("mode")) cfg.mode = j.at("mode").get<std::string>();
  if (cfg.mode != "verify" && cfg.mode != "explore")
    throw BadParameter("mode must be \"verify\" or \"explore\"");
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw BadParameter(std::string("config is not valid JSON: ") + e.what());
  }
  return load_config(j);
}

FunctionalPtr config_functional(const RunConfig& cfg) {
  return functional_from_json(cfg.functional);
}

namespace {

const json* find_functional_node(const json& f, const std::string& type) {
  if (!f.is_object()) return nullptr;
  if (f.value("type", "") == type) return &f;
  if (f.value("type", "") == "sum" && f.contains("parts"))
    for (const auto& part : f.at("parts"))
      if (const json* hit = find_functional_node(part, type)) return hit;
  return nullptr;
}

std::vector<Rational> rational_list(const json& arr) {
  std::vector<Rational> out;
  for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

PearsonPair inline_pair(const json& node, int d) {
  if (!node.contains("phi") || !node.contains("psi"))
    throw BadParameter("inline pair needs \"phi\" and \"psi\"");
  const json& phi_j = node.at("phi");
  const json& psi_j = node.at("psi");
  if (!phi_j.is_array() || !psi_j.is_array())
    throw BadParameter("inline phi and psi must be arrays of polynomials");
  if (static_cast<int>(phi_j.size()) != d ||
      static_cast<int>(psi_j.size()) != d)
    throw BadParameter("inline pair dimension does not match the functional");
  PolyMatrix phi(d, d, d), psi(d, 1, d);
  for (int i = 0; i < d; ++i) {
    if (!phi_j.at(i).is_array() || static_cast<int>(phi_j.at(i).size()) != d)
      throw BadParameter("phi must be a d x d array of polynomials");
    for (int j = 0; j < d; ++j)
      phi(i, j) = parse_mpoly(phi_j.at(i).at(j).get<std::string>(), d);
    psi(i, 0) = parse_mpoly(psi_j.at(i).get<std::string>(), d);
  }
  return make_pearson_pair(std::move(phi), std::move(psi));
}

}  // namespace

PearsonPair config_pair(const RunConfig& cfg, int dimension) {
  const json& sel = cfg.pair;
  if (sel.is_null())
    throw BadParameter("this command needs a \"pair\" in the config");
  if (sel.is_object()) return inline_pair(sel, dimension);
  if (!sel.is_string()) throw BadParameter("pair selector must be a string");
  std::string name = sel.get<std::string>();

  if (name == "appell" || name.rfind("appell_type:", 0) == 0) {
    const json* node = find_functional_node(cfg.functional, "simplex_jacobi");
    if (!node)
      throw BadParameter("pair \"" + name +
                         "\" needs a simplex_jacobi functional");
    std::vector<Rational> alpha0 = rational_list(node->at("alpha"));
    Rational beta = parse_rational(node->at("beta").get<std::string>());
    if (static_cast<int>(alpha0.size()) != dimension)
      throw BadParameter("functional dimension mismatch");
    if (name == "appell") return appell_pair(dimension, alpha0, beta);
    int i = 0;
    try {
      i = std::stoi(name.substr(std::string("appell_type:").size()));
    } catch (...) {
      throw BadParameter("bad modification index in \"" + name + "\"");
    }
    return appell_type_pair(dimension, alpha0, beta, i);
  }
  if (name == "example2") {
    const json* node = find_functional_node(cfg.functional, "laguerre_jacobi");
    if (!node)
      throw BadParameter("pair \"example2\" needs a laguerre_jacobi functional");
    std::vector<Rational> a = rational_list(node->at("a"));
    if (static_cast<int>(a.size()) != dimension)
      throw BadParameter("functional dimension mismatch");
    return example2_pair(dimension, a);
  }
  throw BadParameter("unknown pair selector: " + name);
}

namespace {

json classify_body(const MomentFunctional& u, const PearsonPair& pr, int N) {
  SemiclassicalReport rep = is_semiclassical(u, pr, N);
  json body;
  body["p"] = rep.p;
  body["q"] = rep.q;
  body["s"] = rep.s;
  body["det_u_phi"] = to_string(rep.det_u_phi);
  body["det_nonzero"] = rep.det_nonzero;
  body["residuals_zero"] = rep.residuals_zero;
  json fails = json::array();
  for (const MultiIndex& alpha : rep.failing_monomials)
    fails.push_back(render_mpoly(MPoly::monomial(u.dimension(), alpha)));
  body["failing_monomials"] = fails;
  body["pass"] = rep.pass();
  return body;
}

void add_violation(json& violations, const std::string& check,
                   const std::string& detail) {
  violations.push_back({{"check", check}, {"detail", detail}});
}

}  // namespace

int run_classify(const RunConfig& cfg, std::ostream& out) {
  FunctionalPtr u = config_functional(cfg);
  PearsonPair pr = config_pair(cfg, u->dimension());
  json report;
  report["command"] = "classify";
  report["max_degree"] = cfg.max_degree;
  report["functional"] = u->descriptor();
  json body = classify_body(*u, pr, cfg.max_degree);
  bool pass = body["pass"].get<bool>();
  report.update(body);
  out << report.dump(2) << "\n";
  return pass ? 0 : 1;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  FunctionalPtr u = config_functional(cfg);
  PearsonPair pr = config_pair(cfg, u->dimension());
  const int N = cfg.max_degree;
  const bool strict = cfg.mode == "verify";

  json report;
  report["command"] = "verify";
  report["mode"] = cfg.mode;
  report["max_degree"] = N;
  report["functional"] = u->descriptor();
  json violations = json::array();
  json warnings = json::array();

  json body = classify_body(*u, pr, N);
  report.update(body);
  if (!body["residuals_zero"].get<bool>())
    add_violation(violations, "pearson_residual",
                  "nonzero weak residual on some monomial of degree <= " +
                      std::to_string(N));
  if (!body["det_nonzero"].get<bool>())
    add_violation(violations, "det_condition", "det<u, Phi> = 0");

  WopsBasis basis;
  bool have_basis = true;
  try {
    basis = build_monic_wops(*u, N);
  } catch (const NotQuasiDefinite& e) {
    have_basis = false;
    add_violation(violations, "quasi_definite",
                  std::string(e.what()) + " (degree " +
                      std::to_string(e.degree()) + ")");
  }

  if (have_basis) {
    try {
      RecurrenceData rec(*u, basis);
      for (int n = 0; n <= rec.max_degree(); ++n) forward_inverse(rec, n);
      for (int n = 1; n <= rec.max_degree(); ++n)
        for (int i = 1; i <= basis.dimension; ++i) backward_inverse(rec, n, i);
    } catch (const WopsError& e) {
      add_violation(violations, "recurrence", e.what());
    }

    for (int n = pr.s + 1; n <= N; ++n)
      for (int m = 0; m < n - pr.s; ++m)
        if (!gradient_gram(*u, pr, basis, m, n).is_zero())
          add_violation(violations, "gradient_quasi_orthogonality",
                        "Q_{" + std::to_string(m) + "," + std::to_string(n) +
                            "} != 0");

    for (int n = 1; n <= N - pr.p + 1; ++n) {
      try {
        StructureCoeffs sc = structure_coeffs(*u, pr, basis, n, strict);
        for (int j : sc.band_violations)
          warnings.push_back({{"check", "structure_band"},
                              {"detail", "F_" + std::to_string(j) + "^" +
                                             std::to_string(n) + " != 0"}});
      } catch (const WopsError& e) {
        add_violation(violations, "structure", e.what());
      }
    }

    for (int n = pr.s + 1; n <= std::min(N - 1, N - pr.p + 1); ++n) {
      try {
        compress_structure(pr, basis, n);
      } catch (const WopsError& e) {
        add_violation(violations, "compress_structure", e.what());
      }
    }

    for (int n = 0; n <= N - pr.s; ++n) {
      try {
        DdrCoeffs dc = ddr_coeffs(*u, pr, basis, n, strict);
        for (int i : dc.band_violations)
          warnings.push_back({{"check", "ddr_band"},
                              {"detail", "Lambda_" + std::to_string(i) + "^" +
                                             std::to_string(n) + " != 0"}});
      } catch (const WopsError& e) {
        add_violation(violations, "differential_difference", e.what());
      }
    }

    for (int n = pr.s + 1; n <= std::min(N - 1, N - pr.s); ++n) {
      try {
        compress_ddr(pr, basis, n);
      } catch (const WopsError& e) {
        add_violation(violations, "compress_ddr", e.what());
      }
    }
  }

  bool adjoint_zero = true;
  for (const Rational& v : L_star_moments(*u, pr, N))
    if (v != 0) adjoint_zero = false;
  if (!adjoint_zero)
    add_violation(violations, "adjoint", "<u, L[x^alpha]> != 0 for some alpha");

  report["violations"] = violations;
  report["warnings"] = warnings;
  report["pass"] = violations.empty();
  out << report.dump(2) << "\n";
  return violations.empty() ? 0 : 1;
}

int run_export(const RunConfig& cfg, const std::string& what,
               std::ostream& out) {
  FunctionalPtr u = config_functional(cfg);
  const int N = cfg.max_degree;
  const int d = u->dimension();
  json doc;
  doc["export"] = what;
  doc["max_degree"] = N;
  doc["functional"] = u->descriptor();

  if (what == "moments") {
    json m;
    for (int n = 0; n <= N; ++n)
      for (const MultiIndex& alpha : monomial_basis(d, n)) {
        std::string key = "m";
        for (int e : alpha) key += "_" + std::to_string(e);
        m[key] = to_string(u->moment(alpha));
      }
    doc["moments"] = m;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (what == "wops") {
    WopsBasis basis = build_monic_wops(*u, N);
    json P = json::array(), H = json::array();
    for (int n = 0; n <= N; ++n) {
      json col = json::array();
      for (int j = 0; j < basis.P[n].rows(); ++j)
        col.push_back(render_mpoly(basis.P[n](j, 0)));
      P.push_back(std::move(col));
      H.push_back(rmatrix_to_json(basis.H[n]));
    }
    doc["P"] = P;
    doc["H"] = H;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (what == "recurrence") {
    WopsBasis basis = build_monic_wops(*u, N);
    RecurrenceData rec(*u, basis);
    json A = json::array(), B = json::array(), C = json::array();
    for (int n = 0; n <= rec.max_degree(); ++n) {
      json An = json::array(), Bn = json::array(), Cn = json::array();
      for (int i = 1; i <= d; ++i) {
        const RecurrenceTriple& t = rec.at(n, i);
        An.push_back(rmatrix_to_json(t.A));
        Bn.push_back(rmatrix_to_json(t.B));
        Cn.push_back(rmatrix_to_json(t.C));
      }
      A.push_back(std::move(An));
      B.push_back(std::move(Bn));
      C.push_back(std::move(Cn));
    }
    doc["A"] = A;
    doc["B"] = B;
    doc["C"] = C;
    out << doc.dump(2) << "\n";
    return 0;
  }

  if (what == "structure" || what == "ddr") {
    PearsonPair pr = config_pair(cfg, d);
    WopsBasis basis = build_monic_wops(*u, N);
    if (what == "structure") {
      json F = json::array(), M1 = json::array(), M2 = json::array();
      for (int n = 1; n <= N - pr.p + 1; ++n) {
        StructureCoeffs sc = structure_coeffs(*u, pr, basis, n, false);
        json blocks = json::array();
        for (const RMatrix& f : sc.F) blocks.push_back(rmatrix_to_json(f));
        F.push_back({{"n", n}, {"blocks", blocks}});
      }
      for (int n = pr.s + 1; n <= std::min(N - 1, N - pr.p + 1); ++n) {
        auto [m1, m2] = compress_structure(pr, basis, n);
        M1.push_back({{"n", n}, {"value", polymatrix_to_json(m1)}});
        M2.push_back({{"n", n}, {"value", polymatrix_to_json(m2)}});
      }
      doc["F"] = F;
      doc["M1"] = M1;
      doc["M2"] = M2;
    } else {
      json L = json::array(), N1 = json::array(), N2 = json::array();
      for (int n = 0; n <= N - pr.s; ++n) {
        DdrCoeffs dc = ddr_coeffs(*u, pr, basis, n, false);
        json blocks = json::array();
        for (const RMatrix& l : dc.Lambda) blocks.push_back(rmatrix_to_json(l));
        L.push_back({{"n", n}, {"blocks", blocks}});
      }
      for (int n = pr.s + 1; n <= std::min(N - 1, N - pr.s); ++n) {
        auto [n1, n2] = compress_ddr(pr, basis, n);
        N1.push_back({{"n", n}, {"value", polymatrix_to_json(n1)}});
        N2.push_back({{"n", n}, {"value", polymatrix_to_json(n2)}});
      }
      doc["Lambda"] = L;
      doc["N1"] = N1;
      doc["N2"] = N2;
    }
    out << doc.dump(2) << "\n";
    return 0;
  }

  throw BadParameter("unknown export selector: " + what +
                     " (expected moments|wops|recurrence|structure|ddr)");
}

}  // namespace wops
