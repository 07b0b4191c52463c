// Acceptance gate: eleven exact (zero-tolerance) criteria, one per
// invocation argument; with no argument all run. Each prints a single
// "criterion N: PASS|FAIL" line plus sub-findings on failure.

#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wops/cli.hpp"
#include "wops/errors.hpp"
#include "wops/recurrence.hpp"
#include "wops/semiclassical.hpp"

using namespace wops;
using nlohmann::json;

namespace {

std::vector<Rational> zeros(int d) { return std::vector<Rational>(d, 0); }

std::shared_ptr<SimplexJacobi> triangle() {
  return std::make_shared<SimplexJacobi>(zeros(2), Rational(0));
}

FunctionalPtr triangle_plus_delta() {
  return sum_functional(triangle(),
                        std::make_shared<PointMass>(zeros(2), Rational(1)));
}

struct Checker {
  bool ok = true;
  std::ostringstream log;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "  failed: " << what << "\n";
    }
  }
};

bool degree_at_most(const PolyMatrix& m, int bound) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [alpha, c] : m(i, j).terms())
        if (total_degree(alpha) > bound) return false;
  return true;
}

// 1. Pearson verification for the simplex family.
bool criterion1(Checker& c) {
  auto u = triangle();
  PearsonPair ap = appell_pair(2, zeros(2), Rational(0));
  for (int n = 0; n <= 8; ++n)
    for (const MultiIndex& alpha : monomial_basis(2, n))
      c.expect(weak_residual(*u, ap, MPoly::monomial(2, alpha)).is_zero(),
               "weak residual at degree " + std::to_string(n));
  Rational d = det(pair_matrix(*u, ap.phi));
  c.expect(d == Rational(1) / 48, "det<u,Phi> = 1/48");
  c.expect(d != 0, "det<u,Phi> != 0");
  return c.ok;
}

// 2. Point-mass modification, both modification indices.
bool criterion2(Checker& c) {
  auto v = triangle_plus_delta();
  for (int i = 1; i <= 2; ++i) {
    PearsonPair at = appell_type_pair(2, zeros(2), Rational(0), i);
    for (int n = 0; n <= 8; ++n)
      for (const MultiIndex& alpha : monomial_basis(2, n))
        c.expect(weak_residual(*v, at, MPoly::monomial(2, alpha)).is_zero(),
                 "residual, index " + std::to_string(i) + ", degree " +
                     std::to_string(n));
    SemiclassicalReport rep = is_semiclassical(*v, at, 8);
    c.expect(rep.s == 1, "class number s = 1");
    c.expect(rep.pass(), "classify passes, index " + std::to_string(i));
  }
  return c.ok;
}

// 3. Gradient quasi-orthogonality with a strictness witness.
bool criterion3(Checker& c) {
  auto u = triangle();
  PearsonPair ap = appell_pair(2, zeros(2), Rational(0));
  WopsBasis ub = build_monic_wops(*u, 6);
  for (int n = 1; n <= 6; ++n)
    for (int m = 0; m < n; ++m)
      c.expect(gradient_gram(*u, ap, ub, m, n).is_zero(),
               "Q_{m,n} = 0 at s = 0, m=" + std::to_string(m) +
                   " n=" + std::to_string(n));

  auto v = triangle_plus_delta();
  PearsonPair at = appell_type_pair(2, zeros(2), Rational(0), 1);
  WopsBasis vb = build_monic_wops(*v, 6);
  for (int n = 2; n <= 6; ++n)
    for (int m = 0; m < n - 1; ++m)
      c.expect(gradient_gram(*v, at, vb, m, n).is_zero(),
               "Q_{m,n} = 0 at s = 1, m=" + std::to_string(m) +
                   " n=" + std::to_string(n));
  bool witness = false;
  for (int n = 2; n <= 6; ++n)
    witness = witness || !gradient_gram(*v, at, vb, n - 1, n).is_zero();
  c.expect(witness, "some in-band Q_{n-1,n} nonzero at s = 1");
  return c.ok;
}

// 4. Structure relation, bands, and compressed form on both families.
bool criterion4(Checker& c) {
  struct Family {
    FunctionalPtr u;
    PearsonPair pair;
    std::string name;
  };
  std::vector<Family> fams{
      {triangle(), appell_pair(2, zeros(2), Rational(0)), "simplex"},
      {triangle_plus_delta(), appell_type_pair(2, zeros(2), Rational(0), 1),
       "simplex+delta"}};
  for (const Family& fam : fams) {
    WopsBasis basis = build_monic_wops(*fam.u, 7);
    for (int n = 2; n <= 5; ++n) {
      try {
        StructureCoeffs sc = structure_coeffs(*fam.u, fam.pair, basis, n);
        for (int j = 0; j < static_cast<int>(sc.F.size()); ++j)
          if (j < n - fam.pair.s - 1 || j > n + fam.pair.p - 1)
            c.expect(sc.F[j].is_zero(),
                     fam.name + ": F_" + std::to_string(j) + "^" +
                         std::to_string(n) + " out of band");
      } catch (const WopsError& e) {
        c.expect(false, fam.name + ": " + e.what());
        continue;
      }
      if (n <= 5 && n + 1 <= basis.max_degree) {
        auto [m1, m2] = compress_structure(fam.pair, basis, n);
        c.expect(degree_at_most(m1, fam.pair.s),
                 fam.name + ": deg M_1 <= s, n=" + std::to_string(n));
        c.expect(degree_at_most(m2, fam.pair.s + 1),
                 fam.name + ": deg M_2 <= s+1, n=" + std::to_string(n));
        PolyMatrix id = PolyMatrix::identity(2, 2);
        c.expect(fam.pair.phi * grad_row(basis.P[n]) ==
                     kron(id, basis.P[n + 1].transpose()) * m1 +
                         kron(id, basis.P[n].transpose()) * m2,
                 fam.name + ": compressed reconstruction, n=" +
                     std::to_string(n));
      }
    }
  }
  return c.ok;
}

// 5. Differential-difference coefficients, the two-route identity for
// all m, bands, and the compressed form.
bool criterion5(Checker& c) {
  struct Family {
    FunctionalPtr u;
    PearsonPair pair;
    std::string name;
  };
  std::vector<Family> fams{
      {triangle(), appell_pair(2, zeros(2), Rational(0)), "simplex"},
      {triangle_plus_delta(), appell_type_pair(2, zeros(2), Rational(0), 1),
       "simplex+delta"}};
  for (const Family& fam : fams) {
    WopsBasis basis = build_monic_wops(*fam.u, 7);
    for (int n = 1; n <= 5; ++n) {
      PolyMatrix Ln = L_apply_row(fam.pair, basis.P[n].transpose());
      for (int m = 0; m <= 6; ++m) {
        RMatrix lhs = pair_matrix(*fam.u, basis.P[m] * Ln);
        RMatrix rhs = -gradient_gram(*fam.u, fam.pair, basis, m, n);
        c.expect(lhs == rhs, fam.name + ": identity (m=" +
                                 std::to_string(m) + ", n=" +
                                 std::to_string(n) + ")");
      }
      try {
        DdrCoeffs dc = ddr_coeffs(*fam.u, fam.pair, basis, n);
        c.expect(dc.Lambda[0].is_zero(),
                 fam.name + ": Lambda_0^" + std::to_string(n) + " = 0");
        if (n >= fam.pair.s + 1)
          for (int i = 0; i < static_cast<int>(dc.Lambda.size()); ++i)
            if (i < n - fam.pair.s || i > n + fam.pair.s)
              c.expect(dc.Lambda[i].is_zero(),
                       fam.name + ": band at n=" + std::to_string(n));
        if (fam.pair.s == 0)
          c.expect(Ln == basis.P[n].transpose() * dc.Lambda[n],
                   fam.name + ": classical collapse at n=" +
                       std::to_string(n));
      } catch (const WopsError& e) {
        c.expect(false, fam.name + ": " + e.what());
      }
      if (n >= fam.pair.s + 1 && n + 1 <= basis.max_degree) {
        auto [n1, n2] = compress_ddr(fam.pair, basis, n);
        if (fam.pair.s == 0)
          c.expect(n1.is_zero(), fam.name + ": N_1 = 0 at s = 0");
        c.expect(degree_at_most(n1, fam.pair.s - 1) &&
                     degree_at_most(n2, fam.pair.s),
                 fam.name + ": compressed degree bounds");
      }
    }
  }
  return c.ok;
}

// 6. Recurrence identities, inversions, and rank conditions.
bool criterion6(Checker& c) {
  auto u = triangle();
  WopsBasis basis = build_monic_wops(*u, 6);
  RecurrenceData rec(*u, basis);
  for (int n = 0; n <= 5; ++n) {
    for (int i = 1; i <= 2; ++i) {
      const RecurrenceTriple& t = rec.at(n, i);
      PolyMatrix lhs = basis.P[n] * MPoly::variable(2, i);
      PolyMatrix rhs = t.A * basis.P[n + 1] + t.B * basis.P[n];
      if (n > 0) rhs = rhs + t.C * basis.P[n - 1];
      c.expect(lhs == rhs, "(rr3t) at n=" + std::to_string(n) +
                               ", i=" + std::to_string(i));
      c.expect(rank(t.A) == homogeneous_dim(2, n),
               "rank A_{n,i} = r_n at n=" + std::to_string(n));
      if (n > 0)
        c.expect(rank(t.C) == homogeneous_dim(2, n - 1),
                 "rank C_{n,i} = r_{n-1} at n=" + std::to_string(n));
    }
    std::vector<RMatrix> stacked;
    for (int i = 1; i <= 2; ++i) stacked.push_back(rec.at(n, i).A);
    c.expect(rank(vstack(stacked)) == homogeneous_dim(2, n + 1),
             "rank of stacked A_n = r_{n+1} at n=" + std::to_string(n));
    try {
      ForwardInverse fi = forward_inverse(rec, n);  // verifies (rr3t1)
      PolyMatrix rebuilt(basis.P[n + 1].rows(), 1, 2);
      for (int i = 1; i <= 2; ++i)
        rebuilt = rebuilt + (fi.D_t[i - 1] * basis.P[n]) *
                      MPoly::variable(2, i);
      rebuilt = rebuilt + fi.E_n * basis.P[n];
      if (n > 0) rebuilt = rebuilt + fi.E_nm1 * basis.P[n - 1];
      c.expect(rebuilt == basis.P[n + 1],
               "(rr3t1) at n=" + std::to_string(n));
    } catch (const WopsError& e) {
      c.expect(false, std::string("(rr3t1): ") + e.what());
    }
    if (n >= 1)
      for (int i = 1; i <= 2; ++i) {
        try {
          backward_inverse(rec, n, i);  // verifies (rr3t2) internally
        } catch (const WopsError& e) {
          c.expect(false, std::string("(rr3t2): ") + e.what());
        }
      }
  }
  return c.ok;
}

// 7. The wedge example: the printed pair, the explicit product
// polynomials, and recovery of the printed Psi.
bool criterion7(Checker& c) {
  std::vector<Rational> a = zeros(2);
  LaguerreJacobi u(a);
  PearsonPair e2 = example2_pair(2, a);
  for (int n = 0; n <= 6; ++n)
    for (const MultiIndex& alpha : monomial_basis(2, n))
      c.expect(weak_residual(u, e2, MPoly::monomial(2, alpha)).is_zero(),
               "wedge pair residual at degree " + std::to_string(n));

  std::vector<MultiIndex> ks;
  for (int k1 = 0; k1 <= 4; ++k1)
    for (int k2 = 0; k2 <= k1; ++k2)
      if (k1 + k2 <= 4) ks.push_back({k1, k2});
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      MPoly p = example2_product_poly(a, ks[i]);
      MPoly q = example2_product_poly(a, ks[j]);
      c.expect(pair(u, p * q) == 0,
               "orthogonality of P_{" + std::to_string(ks[i][0]) + "," +
                   std::to_string(ks[i][1]) + "} and P_{" +
                   std::to_string(ks[j][0]) + "," +
                   std::to_string(ks[j][1]) + "}");
    }

  try {
    WopsBasis basis = build_monic_wops(u, 5);
    PolyMatrix psi = recover_psi(u, e2.phi, basis, e2.s);
    c.expect(psi == e2.psi, "recovered Psi matches the printed one");
  } catch (const WopsError& e) {
    c.expect(false, std::string("recover_psi: ") + e.what());
  }
  return c.ok;
}

// 8. Psi recovery on the three built-in families.
bool criterion8(Checker& c) {
  auto u = triangle();
  PearsonPair ap = appell_pair(2, zeros(2), Rational(0));
  WopsBasis ub = build_monic_wops(*u, 4);
  try {
    c.expect(recover_psi(*u, ap.phi, ub, ap.s) == ap.psi,
             "simplex family Psi");
  } catch (const WopsError& e) {
    c.expect(false, std::string("simplex family: ") + e.what());
  }

  auto v = triangle_plus_delta();
  PearsonPair at = appell_type_pair(2, zeros(2), Rational(0), 1);
  WopsBasis vb = build_monic_wops(*v, 4);
  try {
    c.expect(recover_psi(*v, at.phi, vb, at.s) == at.psi,
             "simplex+delta family Psi");
  } catch (const WopsError& e) {
    c.expect(false, std::string("simplex+delta family: ") + e.what());
  }

  LaguerreJacobi w(zeros(2));
  PearsonPair e2 = example2_pair(2, zeros(2));
  WopsBasis wb = build_monic_wops(w, 4);
  try {
    c.expect(recover_psi(w, e2.phi, wb, e2.s) == e2.psi, "wedge family Psi");
  } catch (const WopsError& e) {
    c.expect(false, std::string("wedge family: ") + e.what());
  }
  return c.ok;
}

// 9. Kronecker-extended equation, h = 2, matrix monomials to degree 4.
bool criterion9(Checker& c) {
  auto u = triangle();
  PearsonPair ap = appell_pair(2, zeros(2), Rational(0));
  for (int n = 0; n <= 4; ++n)
    for (const MultiIndex& alpha : monomial_basis(2, n))
      for (int slot = 0; slot < 2; ++slot) {
        PolyMatrix F(2, 1, 2);
        F(slot, 0) = MPoly::monomial(2, alpha);
        c.expect(kronecker_weak_residual(*u, ap, 2, F).is_zero(),
                 "h=2 residual, degree " + std::to_string(n) + ", slot " +
                     std::to_string(slot));
      }
  return c.ok;
}

// 10. Adjoint vanishing on every built-in family, plus a negative
// control.
bool criterion10(Checker& c) {
  auto u = triangle();
  PearsonPair ap = appell_pair(2, zeros(2), Rational(0));
  for (const Rational& v : L_star_moments(*u, ap, 6))
    c.expect(v == 0, "simplex adjoint moment");

  auto vpd = triangle_plus_delta();
  for (int i = 1; i <= 2; ++i) {
    PearsonPair at = appell_type_pair(2, zeros(2), Rational(0), i);
    for (const Rational& v : L_star_moments(*vpd, at, 6))
      c.expect(v == 0, "simplex+delta adjoint moment, index " +
                           std::to_string(i));
  }

  LaguerreJacobi w(zeros(2));
  PearsonPair e2 = example2_pair(2, zeros(2));
  for (const Rational& v : L_star_moments(w, e2, 6))
    c.expect(v == 0, "wedge adjoint moment");

  PolyMatrix bump(2, 1, 2);
  bump(0, 0) = MPoly::constant(2, Rational(1));
  PearsonPair perturbed = make_pearson_pair(ap.phi, ap.psi + bump);
  bool nonzero = false;
  for (const Rational& v : L_star_moments(*u, perturbed, 1))
    nonzero = nonzero || v != 0;
  c.expect(nonzero, "perturbed Psi produces a nonzero adjoint moment");
  return c.ok;
}

// 11. Degeneracy handling.
bool criterion11(Checker& c) {
  PointMass origin(zeros(2), Rational(1));
  try {
    build_monic_wops(origin, 2);
    c.expect(false, "point mass should not be quasi-definite");
  } catch (const NotQuasiDefinite& e) {
    c.expect(e.degree() == 1, "failing degree is 1");
  }

  RMatrix bad(3, 2);
  bad(0, 0) = 1;
  bad(0, 1) = 2;
  bad(1, 0) = 2;
  bad(1, 1) = 4;
  try {
    left_inverse(bad);
    c.expect(false, "rank-deficient C must be rejected");
  } catch (const RankDeficient&) {
  }

  // mismatched functional and pair through the full CLI path
  json cfg_json = {
      {"functional",
       {{"type", "simplex_jacobi"}, {"alpha", {"0", "0"}}, {"beta", "0"}}},
      {"pair",
       {{"phi", json::array({json::array({"x1^2 - x1 x2", "0"}),
                             json::array({"0", "x1^3 - x1^2 x2"})})},
        {"psi",
         json::array({"-x1^2 + x1 x2 + 2 x1 - x2", "-x1^2"})}}},
      {"max_degree", 4},
      {"mode", "verify"}};
  std::ostringstream out;
  int code = run_verify(load_config(cfg_json), out);
  c.expect(code == 1, "mismatched pair exits with code 1");
  json rep = json::parse(out.str());
  c.expect(rep.contains("violations") && !rep["violations"].empty(),
           "structured violation report present");
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::map<int, std::function<bool(Checker&)>> criteria{
      {1, criterion1}, {2, criterion2},  {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6},  {7, criterion7}, {8, criterion8},
      {9, criterion9}, {10, criterion10}, {11, criterion11}};

  std::vector<int> to_run;
  if (argc > 1) {
    int n = std::atoi(argv[1]);
    if (!criteria.count(n)) {
      std::cerr << "unknown criterion " << argv[1] << "\n";
      return 2;
    }
    to_run.push_back(n);
  } else {
    for (const auto& [n, fn] : criteria) to_run.push_back(n);
  }

  bool all_ok = true;
  for (int n : to_run) {
    Checker c;
    bool ok = false;
    try {
      ok = criteria[n](c);
    } catch (const std::exception& e) {
      c.log << "  exception: " << e.what() << "\n";
      ok = false;
    }
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok) std::cout << c.log.str();
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
