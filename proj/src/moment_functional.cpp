#include "wops/moment_functional.hpp"

#include <nlohmann/json.hpp>

#include "wops/errors.hpp"

namespace wops {

MomentFunctional::MomentFunctional(int dimension) : dim_(dimension) {
  if (dimension < 1) throw BadParameter("dimension must be >= 1");
}

Rational MomentFunctional::moment(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != dim_)
    throw DimensionMismatch("moment multi-index has wrong length");
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = cache_.find(alpha);
  if (it != cache_.end()) return it->second;
  Rational value = compute_moment(alpha);
  cache_.emplace(alpha, value);
  return value;
}

// ---------------------------------------------------------------------
// Simplex Jacobi

SimplexJacobi::SimplexJacobi(std::vector<Rational> alpha0, Rational beta)
    : MomentFunctional(static_cast<int>(alpha0.size())),
      alpha0_(std::move(alpha0)),
      beta_(std::move(beta)) {
  for (const auto& a : alpha0_)
    if (a <= -1) throw BadParameter("simplex parameter alpha0_i must be > -1");
  if (beta_ <= -1) throw BadParameter("simplex parameter beta must be > -1");
}

Rational SimplexJacobi::compute_moment(const MultiIndex& alpha) const {
  // m_alpha = prod_i (alpha0_i + 1)_{alpha_i} / (|alpha0| + beta + d + 1)_{|alpha|}
  Rational num(1);
  Rational abs_alpha0(0);
  for (std::size_t i = 0; i < alpha0_.size(); ++i) {
    num *= pochhammer(alpha0_[i] + 1, alpha[i]);
    abs_alpha0 += alpha0_[i];
  }
  Rational den =
      pochhammer(abs_alpha0 + beta_ + dimension() + 1, total_degree(alpha));
  return num / den;
}

nlohmann::json SimplexJacobi::descriptor() const {
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& a : alpha0_) alpha.push_back(to_string(a));
  return {{"type", "simplex_jacobi"}, {"alpha", alpha},
          {"beta", to_string(beta_)}};
}

// ---------------------------------------------------------------------
// Point mass

PointMass::PointMass(std::vector<Rational> location, Rational weight)
    : MomentFunctional(static_cast<int>(location.size())),
      location_(std::move(location)),
      weight_(std::move(weight)) {}

Rational PointMass::compute_moment(const MultiIndex& alpha) const {
  Rational value = weight_;
  for (std::size_t i = 0; i < location_.size(); ++i)
    for (int e = 0; e < alpha[i]; ++e) value *= location_[i];
  return value;
}

nlohmann::json PointMass::descriptor() const {
  nlohmann::json loc = nlohmann::json::array();
  for (const auto& x : location_) loc.push_back(to_string(x));
  return {{"type", "point_mass"}, {"location", loc},
          {"weight", to_string(weight_)}};
}

// ---------------------------------------------------------------------
// Laguerre x Jacobi wedge family

LaguerreJacobi::LaguerreJacobi(std::vector<Rational> a)
    : MomentFunctional(static_cast<int>(a.size())), a_(std::move(a)) {
  if (dimension() < 2)
    throw BadParameter("laguerre_jacobi requires dimension >= 2");
  for (const auto& ai : a_)
    if (ai <= -1) throw BadParameter("laguerre_jacobi parameter must be > -1");
}

namespace {

// J(k, a) / J(0, a) with J(k, a) = int_{-1}^{1} t^k (1-t)^a dt;
// the 2^{a+1} factor cancels in the ratio.
Rational jacobi_ratio(int k, const Rational& a) {
  Rational sum(0);
  Rational pow(1);  // (-2)^j
  for (int j = 0; j <= k; ++j) {
    sum += Rational(binomial(k, j)) * pow / (a + j + 1);
    pow *= -2;
  }
  return (a + 1) * sum;
}

}  // namespace

Rational LaguerreJacobi::compute_moment(const MultiIndex& k) const {
  // After x_d = x_1 t the x_1 integral is Gamma(a_1 + k_1 + k_d + 2),
  // the middle ones Gamma(a_i + k_i + 1); normalization leaves pure
  // Pochhammer ratios times the rational J-ratio.
  int d = dimension();
  Rational m = pochhammer(a_[0] + 2, k[0] + k[d - 1]);
  for (int i = 1; i < d - 1; ++i) m *= pochhammer(a_[i] + 1, k[i]);
  m *= jacobi_ratio(k[d - 1], a_[d - 1]);
  return m;
}

nlohmann::json LaguerreJacobi::descriptor() const {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& ai : a_) a.push_back(to_string(ai));
  return {{"type", "laguerre_jacobi"}, {"a", a}};
}

// ---------------------------------------------------------------------
// Sums

SumFunctional::SumFunctional(std::vector<FunctionalPtr> parts)
    : MomentFunctional(parts.empty() ? 1 : parts.front()->dimension()),
      parts_(std::move(parts)) {
  if (parts_.empty()) throw BadParameter("sum of zero functionals");
  for (const auto& p : parts_)
    if (p->dimension() != dimension())
      throw DimensionMismatch("summands live in different dimensions");
}

Rational SumFunctional::compute_moment(const MultiIndex& alpha) const {
  Rational total(0);
  for (const auto& p : parts_) total += p->moment(alpha);
  return total;
}

nlohmann::json SumFunctional::descriptor() const {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : parts_) parts.push_back(p->descriptor());
  return {{"type", "sum"}, {"parts", parts}};
}

FunctionalPtr sum_functional(FunctionalPtr u, FunctionalPtr v) {
  return std::make_shared<SumFunctional>(
      std::vector<FunctionalPtr>{std::move(u), std::move(v)});
}

FunctionalPtr functional_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw BadParameter("functional descriptor must be an object with a type");
  std::string type = j.at("type").get<std::string>();
  auto rational_list = [](const nlohmann::json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
    return out;
  };
  if (type == "simplex_jacobi") {
    return std::make_shared<SimplexJacobi>(
        rational_list(j.at("alpha")),
        parse_rational(j.at("beta").get<std::string>()));
  }
  if (type == "point_mass") {
    return std::make_shared<PointMass>(
        rational_list(j.at("location")),
        parse_rational(j.at("weight").get<std::string>()));
  }
  if (type == "laguerre_jacobi") {
    return std::make_shared<LaguerreJacobi>(rational_list(j.at("a")));
  }
  if (type == "sum") {
    std::vector<FunctionalPtr> parts;
    for (const auto& p : j.at("parts")) parts.push_back(functional_from_json(p));
    return std::make_shared<SumFunctional>(std::move(parts));
  }
  throw BadParameter("unknown functional type '" + type + "'");
}

// ---------------------------------------------------------------------
// Pairing

Rational pair(const MomentFunctional& u, const MPoly& f) {
  if (f.dimension() != u.dimension())
    throw DimensionMismatch("polynomial and functional dimensions differ");
  Rational total(0);
  for (const auto& [alpha, c] : f.terms()) total += c * u.moment(alpha);
  return total;
}

RMatrix pair_matrix(const MomentFunctional& u, const PolyMatrix& m) {
  RMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = pair(u, m(i, j));
  return r;
}

// ---------------------------------------------------------------------
// Univariate classical polynomials

MPoly laguerre_1d(int k, const Rational& a) {
  if (k < 0) throw BadParameter("degree must be >= 0");
  if (a <= -1) throw BadParameter("Laguerre parameter must be > -1");
  MPoly t = MPoly::variable(1, 1);
  MPoly prev = MPoly::constant(1, Rational(1));  // L_0
  if (k == 0) return prev;
  MPoly curr = MPoly::constant(1, a + 1) - t;    // L_1
  for (int m = 1; m < k; ++m) {
    // (m+1) L_{m+1} = (2m + 1 + a - t) L_m - (m + a) L_{m-1}
    MPoly next = (MPoly::constant(1, a + 2 * m + 1) - t) * curr -
                 prev * Rational(a + m);
    next = next * (Rational(1) / Rational(m + 1));
    prev = curr;
    curr = next;
  }
  return curr;
}

MPoly jacobi_1d(int k, const Rational& a, const Rational& b) {
  if (k < 0) throw BadParameter("degree must be >= 0");
  if (a <= -1 || b <= -1) throw BadParameter("Jacobi parameters must be > -1");
  MPoly t = MPoly::variable(1, 1);
  MPoly prev = MPoly::constant(1, Rational(1));  // P_0
  if (k == 0) return prev;
  MPoly curr = t * ((a + b + 2) / Rational(2)) +
               MPoly::constant(1, (a - b) / Rational(2));  // P_1
  for (int m = 2; m <= k; ++m) {
    Rational c = 2 * m + a + b;
    Rational denom = Rational(2) * m * (m + a + b) * (c - 2);
    MPoly next = (t * ((c - 1) * c * (c - 2)) +
                  MPoly::constant(1, (c - 1) * (a * a - b * b))) *
                     curr -
                 prev * (Rational(2) * (m + a - 1) * (m + b - 1) * c);
    next = next * (Rational(1) / denom);
    prev = curr;
    curr = next;
  }
  return curr;
}

MPoly example2_product_poly(const std::vector<Rational>& a,
                            const MultiIndex& k) {
  int d = static_cast<int>(k.size());
  if (d < 2) throw BadParameter("product polynomials require dimension >= 2");
  if (static_cast<int>(a.size()) != d)
    throw DimensionMismatch("parameter vector has wrong length");
  for (int e : k)
    if (e < 0) throw BadIndex("negative index entry");
  int kd = k[d - 1];
  if (k[0] < kd) throw BadIndex("product polynomial requires k_1 >= k_d");

  MPoly f = MPoly::embed_univariate(
      laguerre_1d(k[0] - kd, a[0] + 2 * kd + 1), d, 1);
  for (int i = 2; i <= d - 1; ++i)
    f = f * MPoly::embed_univariate(laguerre_1d(k[i - 1], a[i - 1]), d, i);

  // x1^{kd} P_{kd}^{(ad,0)}(x_d/x_1): substitute t = x_d/x_1 and clear
  // denominators, which is exact because deg P = kd.
  MPoly jac = jacobi_1d(kd, a[d - 1], Rational(0));
  MPoly hom(d);
  for (const auto& [alpha, c] : jac.terms()) {
    int m = alpha[0];
    MultiIndex beta(d, 0);
    beta[0] = kd - m;
    beta[d - 1] = m;
    hom.add_term(beta, c);
  }
  return f * hom;
}

}  // namespace wops
