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

#include "cremona/verify.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "cremona/affine_auto.hpp"
#include "cremona/cocycle.hpp"
#include "cremona/corpus.hpp"
#include "cremona/deformation.hpp"
#include "cremona/error.hpp"
#include "cremona/random.hpp"
#include "cremona/text.hpp"

namespace cremona {

namespace {

using Json = nlohmann::ordered_json;

// ---- printing ---------------------------------------------------------------

std::string str(const Polynomial& p) { return format_polynomial(p); }
std::string str(const CremonaMap& f) { return format_map(f); }
std::string str(const Matrix& m) { return m.to_string(); }
std::string str(const ProjLinear& m) { return m.to_string(); }
std::string str(const ProjPoint& p) { return p.to_string(); }
std::string str(const PolyAuto& f) { return format_auto(f); }
std::string str(const Scalar& s) { return s.to_string(); }
std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const std::string& s) { return s; }

std::string str(const std::vector<bool>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + str(static_cast<bool>(v[k]));
  return out + "]";
}

std::string str(const std::vector<RationalFunction>& fs) {
  std::string out = "(";
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) out += ", ";
    out += "(" + format_polynomial(fs[k].numerator(), 1) + ")/(" +
           format_polynomial(fs[k].denominator(), 1) + ")";
  }
  return out + ")";
}

std::string str(const std::vector<Polynomial>& ps) {
  std::string out = "(";
  for (std::size_t k = 0; k < ps.size(); ++k) out += (k ? "; " : "") + format_polynomial(ps[k], 1);
  return out + ")";
}

// ---- trial bookkeeping ---------------------------------------------------------

class Trial {
 public:
  Trial(std::string id, std::uint64_t seed, const SuiteOptions& options)
      : rng(seed), options(options), id_(std::move(id)) {}

  Rng rng;
  const SuiteOptions& options;

  // Records the first failing property of the trial.
  template <class T>
  bool equal(std::string_view property, const T& expected, const T& actual,
             const std::function<std::string()>& inputs) {
    if (expected == actual) return true;
    fail(property, inputs(), str(expected), str(actual));
    return false;
  }

  bool holds(std::string_view property, bool ok, const std::function<std::string()>& inputs) {
    if (ok) return true;
    fail(property, inputs(), "true", "false");
    return false;
  }

  void fail(std::string_view property, std::string inputs, std::string expected,
            std::string actual) {
    if (failure_) return;
    failure_ = SuiteFailure{id_ + "/" + std::string(property), std::move(inputs),
                            std::move(expected), std::move(actual)};
  }

  const std::optional<SuiteFailure>& failure() const { return failure_; }

 private:
  std::string id_;
  std::optional<SuiteFailure> failure_;
};

using TrialBody = std::function<void(Trial&)>;

SuiteReport run_trials(const std::string& suite, const SuiteOptions& options,
                       const TrialBody& body) {
  SuiteReport report;
  report.suite = suite;
  report.seed = options.seed;
  report.trials = options.trials;
  for (std::size_t k = 0; k < options.trials; ++k) {
    Trial trial(suite + "/" + std::to_string(k), Rng::mix(options.seed, k), options);
    try {
      body(trial);
    } catch (const Error& e) {
      trial.fail("exception", "", "no error", e.what());
    }
    if (trial.failure()) {
      report.failures.push_back(*trial.failure());
    } else {
      ++report.passed;
    }
  }
  return report;
}

std::vector<Scalar> random_point(FieldSpec field, std::size_t n, Rng& rng) {
  std::vector<Scalar> x;
  for (std::size_t k = 0; k < n; ++k) x.push_back(random_scalar(field, rng));
  return x;
}

std::optional<ProjPoint> random_proj_point(FieldSpec field, std::size_t dim, Rng& rng) {
  auto x = random_point(field, dim + 1, rng);
  for (const auto& c : x) {
    if (!c.is_zero()) return ProjPoint(std::move(x));
  }
  return std::nullopt;
}

// ---- polynomials --------------------------------------------------------------

void polynomial_trial(Trial& t) {
  const FieldSpec field = t.options.field;
  const std::size_t n = t.options.dim + 1;
  Rng& rng = t.rng;
  const Polynomial a = random_polynomial(field, n, 3, 5, rng);
  const Polynomial b = random_polynomial(field, n, 3, 5, rng);
  const Polynomial c = random_polynomial(field, n, 2, 4, rng);
  auto in3 = [&] { return str(a) + " | " + str(b) + " | " + str(c); };

  if (!t.equal("add_assoc", (a + b) + c, a + (b + c), in3)) return;
  if (!t.equal("mul_assoc", (a * b) * c, a * (b * c), in3)) return;
  if (!t.equal("mul_comm", a * b, b * a, in3)) return;
  if (!t.equal("distrib", a * (b + c), a * b + a * c, in3)) return;

  Polynomial sum(field, n);
  for (const auto& [deg, part] : a.homogeneous_components()) {
    if (!t.holds("component_homogeneous",
                 part.is_homogeneous() && *part.total_degree() == deg,
                 [&] { return str(a); })) {
      return;
    }
    sum += part;
  }
  if (!t.equal("components_sum", a, sum, [&] { return str(a); })) return;

  const auto x = random_point(field, n, rng);
  if (!t.equal("eval_mul", a.evaluate(x) * b.evaluate(x), (a * b).evaluate(x), in3)) return;
  if (!t.equal("eval_add", a.evaluate(x) + b.evaluate(x), (a + b).evaluate(x), in3)) return;

  if (!c.is_zero() && !a.is_zero() && !b.is_zero()) {
    const Polynomial ga = c * a, gb = c * b;
    const Polynomial d = multivariate_gcd(ga, gb);
    if (!t.holds("gcd_divisible_by_factor", exact_quotient(d, c).has_value(), in3)) return;
    const Polynomial coprime = multivariate_gcd(exact_divide(ga, d), exact_divide(gb, d));
    if (!t.equal("gcd_cofactors_coprime", Polynomial::one(field, n), coprime, in3)) return;
  }

  // Chain rule J(f o g)(x) = J(f)(g(x)) J(g)(x) for maps A^n -> A^n.
  std::vector<Polynomial> f, g;
  for (std::size_t k = 0; k < n; ++k) {
    f.push_back(random_polynomial(field, n, 2, 3, rng));
    g.push_back(random_polynomial(field, n, 2, 3, rng));
  }
  std::vector<Scalar> gx;
  for (const auto& gi : g) gx.push_back(gi.evaluate(x));
  std::vector<Polynomial> fg;
  for (const auto& fi : f) fg.push_back(fi.substitute(g));
  if (!t.equal("chain_rule", jacobian(std::span<const Polynomial>(f), gx) *
                                 jacobian(std::span<const Polynomial>(g), x),
               jacobian(std::span<const Polynomial>(fg), x),
               [&] { return str(f) + " o " + str(g); })) {
    return;
  }

  t.equal("text_round_trip", a, parse_polynomial(format_polynomial(a), field, n, 0),
          [&] { return str(a); });
}

// ---- cremona -------------------------------------------------------------------

void cremona_trial(Trial& t) {
  const FieldSpec field = t.options.field;
  const std::size_t dim = t.options.dim;
  Rng& rng = t.rng;
  const CremonaMap f = random_birational_map(field, dim, rng, 3);
  const CremonaMap g = random_birational_map(field, dim, rng, 3);
  const CremonaMap h = random_birational_map(field, dim, rng, 2);
  auto in2 = [&] { return str(f) + " | " + str(g); };

  const CremonaMap fg = compose(f, g);
  if (!t.holds("degree_bound", fg.degree() <= f.degree() * g.degree(), in2)) return;
  if (!t.equal("associative", compose(fg, h), compose(f, compose(g, h)),
               [&] { return in2() + " | " + str(h); })) {
    return;
  }
  if (!t.equal("make_idempotent", f, CremonaMap::make(f.components()), in2)) return;

  if (auto p = random_proj_point(field, dim, rng);
      p && !is_indeterminate(g, *p) && !is_indeterminate(f, apply(g, *p)) &&
      !is_indeterminate(fg, *p)) {
    if (!t.equal("apply_compose", apply(f, apply(g, *p)), apply(fg, *p),
                 [&] { return in2() + " at " + str(*p); })) {
      return;
    }
  }

  const ProjLinear l = random_proj_linear(field, dim, rng);
  if (auto p = random_proj_point(field, dim, rng)) {
    if (!t.holds("linear_local_iso", is_local_isomorphism(l.to_map(), *p),
                 [&] { return str(l) + " at " + str(*p); })) {
      return;
    }
  }

  if (!f.component(0).is_zero()) {
    if (!t.equal("chart_round_trip", f, from_chart(to_chart(f)), in2)) return;
  }
  t.equal("text_round_trip", f, parse_map(format_map(f), field), in2);
}

// ---- deformation ---------------------------------------------------------------

// P_i0 != 0 and Q_i0 == 0 straight from the homogeneous tuple: after dividing
// f_i and f_0 by their gcd, the chart constant terms are the values at p.
void homogeneous_flags(const CremonaMap& f, std::vector<bool>& p_flags,
                       std::vector<bool>& q_flags) {
  const ProjPoint p = ProjPoint::origin(f.field(), f.dim());
  p_flags.assign(f.dim(), false);
  q_flags.assign(f.dim(), false);
  for (std::size_t i = 1; i <= f.dim(); ++i) {
    const Polynomial g = multivariate_gcd(f.component(i), f.component(0));
    p_flags[i - 1] = !exact_divide(f.component(i), g).evaluate(p.coords()).is_zero();
    q_flags[i - 1] = exact_divide(f.component(0), g).evaluate(p.coords()).is_zero();
  }
}

// diag(1, J) with J_ik = (d f_i / d x_k)(p) / f_0(p): the derivative of f_i/f_0
// at a fixed point p, where f_i(p) = 0 for i >= 1.
ProjLinear homogeneous_linear_part(const CremonaMap& f) {
  const std::size_t d = f.dim();
  const auto p = ProjPoint::origin(f.field(), d).coords();
  const Scalar inv = f.component(0).evaluate(p).inverse();
  Matrix m = Matrix::identity(f.field(), d + 1);
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t k = 1; k <= d; ++k) {
      m(i, k) = f.component(i).derivative(k).evaluate(p) * inv;
    }
  }
  return ProjLinear::make(m);
}

void deformation_trial(Trial& t, std::size_t index) {
  static constexpr CorpusKind kKinds[] = {CorpusKind::kRegularFixed, CorpusKind::kBasePoint,
                                          CorpusKind::kMovesPoint, CorpusKind::kContracting};
  const FieldSpec field = t.options.field;
  const std::size_t dim = t.options.dim;
  Rng& rng = t.rng;
  const CorpusEntry entry = random_corpus_entry(field, dim, kKinds[index % 4], rng, 6);
  const CremonaMap& f = entry.map;
  auto in = [&] { return entry.recipe + ": " + str(f); };
  const ProjPoint p = ProjPoint::origin(field, dim);

  const DeformationFamily family = build_family(f);
  const ExtendabilityVerdict v = extendability(family);
  std::vector<bool> p_flags, q_flags;
  homogeneous_flags(f, p_flags, q_flags);
  if (!t.equal("p_i0_flags", p_flags, v.p_i0_nonzero, in)) return;
  if (!t.equal("q_i0_flags", q_flags, v.q_i0_zero, in)) return;

  const bool lemma = is_fixed_point(f, p) && is_local_isomorphism(f, p);
  if (!t.equal("lemma_equivalence", lemma, v.extendable, in)) return;
  if (entry.kind == CorpusKind::kRegularFixed &&
      !t.holds("regular_fixed_extends", v.extendable, in)) {
    return;
  }
  if (v.extendable) {
    if (!t.equal("limit_is_linear_part", homogeneous_linear_part(f), *v.limit, in)) return;
    if (!t.holds("limit_vs_jacobian", limit_vs_jacobian(f), in)) return;
  }

  const Scalar t0 = random_nonzero_scalar(field, rng);
  const CremonaMap conj =
      compose(compose(scaling_map(dim, t0.inverse()), f), scaling_map(dim, t0));
  if (!t.equal("specialization", chart_functions(conj), family.specialize(t0),
               [&] { return in() + " at t = " + str(t0); })) {
    return;
  }

  const Scalar s = random_nonzero_scalar(field, rng);
  t.equal("scaling_group_law", scaling_map(dim, s * t0),
          compose(scaling_map(dim, s), scaling_map(dim, t0)),
          [&] { return str(s) + ", " + str(t0); });
}

// ---- linear --------------------------------------------------------------------

std::vector<FieldAutomorphism> automorphisms(FieldSpec field) {
  std::vector<FieldAutomorphism> out = {FieldAutomorphism::identity(field)};
  if (field.is_gaussian()) out.push_back(FieldAutomorphism::conjugation(field));
  return out;
}

std::vector<ProjPoint> all_points(FieldSpec field, std::size_t dim) {
  const long p = static_cast<long>(field.characteristic());
  std::vector<ProjPoint> out;
  // Points [0:..:0:1:*:..:*] by pivot position.
  for (std::size_t pivot = 0; pivot <= dim; ++pivot) {
    const std::size_t free = dim - pivot;
    std::vector<long> c(free, 0);
    while (true) {
      std::vector<Scalar> x(dim + 1, Scalar::zero(field));
      x[pivot] = Scalar::one(field);
      for (std::size_t k = 0; k < free; ++k) x[pivot + 1 + k] = Scalar(field, c[k]);
      out.emplace_back(std::move(x));
      std::size_t k = 0;
      while (k < free && ++c[k] == p) c[k++] = 0;
      if (k == free) break;
    }
  }
  return out;
}

void linear_trial(Trial& t) {
  const FieldSpec field = t.options.field;
  const std::size_t dim = t.options.dim;
  const std::size_t n = dim + 1;
  Rng& rng = t.rng;
  const ProjLinear g = random_proj_linear(field, dim, rng);
  const ProjLinear h = random_proj_linear(field, dim, rng);
  auto in = [&] { return str(g) + " | " + str(h); };

  if (!t.equal("dual_involution", g, transpose_inverse(transpose_inverse(g)), in)) return;
  if (!t.equal("dual_homomorphism", proj_mul(transpose_inverse(g), transpose_inverse(h)),
               transpose_inverse(proj_mul(g, h)), in)) {
    return;
  }
  for (const auto& alpha : automorphisms(field)) {
    if (!t.equal("twist_homomorphism", proj_mul(twist(g, alpha), twist(h, alpha)),
                 twist(proj_mul(g, h), alpha), in)) {
      return;
    }
    if (!t.equal("twist_twice", g, twist(twist(g, alpha), alpha), in)) return;
    for (const bool dual : {false, true}) {
      const DieudonneAutomorphism phi{random_proj_linear(field, dim, rng), alpha, dual};
      if (!t.equal("dieudonne_" + alpha.name() + (dual ? "_dual" : ""),
                   proj_mul(apply_dieudonne(phi, g), apply_dieudonne(phi, h)),
                   apply_dieudonne(phi, proj_mul(g, h)),
                   [&] { return in() + " h=" + str(phi.h); })) {
        return;
      }
    }
  }

  std::vector<Transvection> word;
  const std::size_t len = 1 + rng.index(20);
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    word.push_back({i, j, random_nonzero_scalar(field, rng)});
  }
  const Matrix a = product(word, field, n);
  const auto factors = gauss_decompose(a);
  if (!t.equal("gauss_reconstructs", a, product(factors, field, n), [&] { return str(a); })) {
    return;
  }
  if (!t.holds("gauss_bound", factors.size() <= decomposition_bound(dim),
               [&] { return str(a) + " gave " + std::to_string(factors.size()); })) {
    return;
  }

  // Gamma_3: products of 3-scaled integer transvections.
  auto gamma = [&] {
    IntMatrix m = IntMatrix::identity(n);
    for (int k = 0; k < 4; ++k) {
      const std::size_t i = rng.index(n);
      std::size_t j = rng.index(n - 1);
      if (j >= i) ++j;
      IntMatrix e = IntMatrix::identity(n);
      e(i, j) = 3 * rng.uniform(-3, 3);
      m = m * e;
    }
    return m;
  };
  const IntMatrix u = gamma(), w = gamma();
  if (!t.holds("congruence_closed",
               in_congruence_subgroup(u * w, 3) && in_congruence_subgroup(u.inverse(), 3),
               [&] { return str(u.to_matrix()) + " | " + str(w.to_matrix()); })) {
    return;
  }

  // Two fixed points. Over F_2 no eigenvalue outside {0, 1} exists.
  if (field.is_prime_field() && field.characteristic() == 2) return;
  auto p = random_proj_point(field, dim, rng);
  auto q = random_proj_point(field, dim, rng);
  if (!p || !q || *p == *q) return;
  Scalar lambda = random_nonzero_scalar(field, rng);
  while (lambda.is_one()) lambda = random_nonzero_scalar(field, rng);
  const ProjLinear alpha = two_fixed_point_automorphism(*p, *q, lambda);
  auto in_pq = [&] { return str(*p) + ", " + str(*q) + ", " + str(lambda); };
  if (!t.equal("fixes_p", *p, alpha.apply(*p), in_pq)) return;
  if (!t.equal("fixes_q", *q, alpha.apply(*q), in_pq)) return;
  const Matrix& m = alpha.matrix();
  const Matrix one = Matrix::identity(field, n);
  // The eigenvalue of p may be any scalar multiple: read it off.
  Scalar mu = Scalar::zero(field);
  {
    std::vector<Scalar> image(n, Scalar::zero(field));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) image[r] += m(r, c) * p->coords()[c];
    }
    mu = image[p->pivot()];
  }
  Scalar nu = Scalar::zero(field);
  {
    std::vector<Scalar> image(n, Scalar::zero(field));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) image[r] += m(r, c) * q->coords()[c];
    }
    nu = image[q->pivot()];
  }
  const Matrix m_mu = m + Scalar(field, -1L) * mu * one;
  const Matrix m_nu = m + Scalar(field, -1L) * nu * one;
  Matrix annihilator = m_nu;
  for (std::size_t k = 0; k < dim; ++k) annihilator = annihilator * m_mu;
  const bool eigen_ok = m_mu.rank() == dim && m_nu.rank() == dim &&
                        annihilator == Matrix(field, n, n) && !(mu == nu);
  if (!t.holds("eigen_structure", eigen_ok, in_pq)) return;
  if (field.is_prime_field()) {
    std::size_t points = 1;
    for (std::size_t k = 0; k <= dim; ++k) points *= field.characteristic();
    if (points <= 4096) {
      std::size_t fixed = 0;
      for (const auto& x : all_points(field, dim)) fixed += alpha.apply(x) == x;
      t.equal("exactly_two_fixed", std::string("2"), std::to_string(fixed), in_pq);
    }
  }
}

// ---- affine automorphisms --------------------------------------------------------

PolyAuto random_affine_factor(FieldSpec field, std::size_t dim, Rng& rng) {
  switch (rng.index(3)) {
    case 0: {
      const std::size_t i = rng.index(dim);
      Polynomial p(field, dim);
      const Polynomial raw = random_polynomial(field, dim, 2, 3, rng);
      for (const auto& [e, c] : raw.terms()) {
        if (e[i] == 0) p.add_term(e, c);
      }
      return triangular(dim, i, p);
    }
    case 1: {
      const auto b = random_point(field, dim, rng);
      return affine(random_invertible_matrix(field, dim, rng, 3), b);
    }
    default: {
      std::vector<std::size_t> sigma(dim);
      for (std::size_t k = 0; k < dim; ++k) sigma[k] = k;
      for (std::size_t k = dim; k > 1; --k) std::swap(sigma[k - 1], sigma[rng.index(k)]);
      return permutation(field, sigma);
    }
  }
}

void affine_trial(Trial& t) {
  const FieldSpec field = t.options.field;
  const std::size_t dim = t.options.dim;
  Rng& rng = t.rng;
  const PolyAuto f = compose_auto(random_affine_factor(field, dim, rng),
                                  random_affine_factor(field, dim, rng));
  const PolyAuto g = random_affine_factor(field, dim, rng);
  auto in = [&] { return str(f) + " | " + str(g); };

  const PolyAuto fg = compose_auto(f, g);
  if (!t.equal("inverse_structural", compose_auto(g.inverted(), f.inverted()).forward(),
               fg.inverse(), in)) {
    return;
  }
  if (!t.holds("degree_bound", degree_auto(fg) <= degree_auto(f) * degree_auto(g), in)) return;

  std::vector<std::size_t> sigma(dim);
  for (std::size_t k = 0; k < dim; ++k) sigma[k] = k;
  for (std::size_t k = dim; k > 1; --k) std::swap(sigma[k - 1], sigma[rng.index(k)]);
  std::vector<Scalar> a;
  for (std::size_t k = 0; k < dim; ++k) a.push_back(random_nonzero_scalar(field, rng));
  const PolyAuto perm = permutation(field, sigma);
  if (!t.equal("permutation_conjugates_torus", torus(permute_diagonal(sigma, a)),
               compose_auto(compose_auto(perm, torus(a)), perm.inverted()),
               [&] { return str(perm) + " | " + str(torus(a)); })) {
    return;
  }

  // Distinct torus entries need at least dim + 1 nonzero field elements.
  const bool roomy = !field.is_prime_field() || field.characteristic() > dim + 2;
  if (roomy) {
    const PolyAuto monomial = compose_auto(perm, torus(a));
    if (!t.holds("monomial_normalizes", normalizes_torus(monomial, 3, rng.next()),
                 [&] { return str(monomial); })) {
      return;
    }
    const PolyAuto shifted =
        compose_auto(monomial, translation(dim, rng.index(dim), random_nonzero_scalar(field, rng)));
    if (!t.holds("non_monomial_fails", !normalizes_torus(shifted, 16, rng.next()),
                 [&] { return str(shifted); })) {
      return;
    }
  }

  const std::vector<Scalar> params = {random_nonzero_scalar(field, rng)};
  const AffineLemmaReport lemma = affine_lemma_suite(field, dim, params);
  for (const auto& check : lemma.checks) {
    if (!t.holds("affine_lemma_" + check.name, check.ok(),
                 [&] { return "a = " + str(params[0]); })) {
      return;
    }
  }
}

// ---- cocycles --------------------------------------------------------------------

void cocycle_trial(Trial& t) {
  // Always over Q(i): the only Galois action implemented.
  const FieldSpec field = FieldSpec::gaussian();
  Rng& rng = t.rng;
  const std::size_t d = 1 + rng.index(std::max<std::size_t>(t.options.dim + 1, 1));
  const Matrix a0 = random_invertible_matrix(field, d, rng, 3);
  auto in = [&] { return str(a0); };
  const Cocycle nu = coboundary(a0);
  if (!t.holds("coboundary_validates", validate_cocycle(nu), in)) return;
  const Matrix a = trivialize(nu, rng.next());
  if (!t.holds("trivialize_invertible", a.is_invertible(), in)) return;
  if (!t.holds("trivializes", trivializes(a, nu), [&] { return in() + " -> " + str(a); })) return;
  const Matrix f = random_invertible_matrix(field, d, rng, 3);
  t.holds("descent_cocycle_validates", validate_cocycle(descent_cocycle(f)),
          [&] { return str(f); });
}

SuiteReport run_single(std::string_view name, const SuiteOptions& options) {
  const std::string suite(name);
  if (name == "polynomials") return run_trials(suite, options, polynomial_trial);
  if (name == "cremona") return run_trials(suite, options, cremona_trial);
  if (name == "linear") return run_trials(suite, options, linear_trial);
  if (name == "affineauto") return run_trials(suite, options, affine_trial);
  if (name == "cocycles") return run_trials(suite, options, cocycle_trial);
  if (name == "deformation") {
    std::size_t index = 0;
    return run_trials(suite, options, [&](Trial& t) { deformation_trial(t, index++); });
  }
  fail(ErrorCode::kInvalidArgument, "unknown suite '" + suite + "'");
}

Json failure_json(const SuiteFailure& f) {
  return Json{{"case_id", f.case_id},
              {"inputs", f.inputs},
              {"expected", f.expected},
              {"actual", f.actual}};
}

Json report_json(const SuiteReport& r) {
  Json j;
  j["schema"] = 1;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["failures"] = Json::array();
  for (const auto& f : r.failures) j["failures"].push_back(failure_json(f));
  if (!r.parts.empty()) {
    j["parts"] = Json::array();
    for (const auto& p : r.parts) j["parts"].push_back(report_json(p));
  }
  return j;
}

SuiteReport report_from(const Json& j) {
  SuiteReport r;
  if (j.at("schema").get<int>() != 1) fail(ErrorCode::kParseError, "unsupported schema");
  r.suite = j.at("suite").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trials = j.at("trials").get<std::size_t>();
  r.passed = j.at("passed").get<std::size_t>();
  for (const auto& f : j.at("failures")) {
    r.failures.push_back({f.at("case_id").get<std::string>(), f.at("inputs").get<std::string>(),
                          f.at("expected").get<std::string>(), f.at("actual").get<std::string>()});
  }
  if (j.contains("parts")) {
    for (const auto& p : j.at("parts")) r.parts.push_back(report_from(p));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "polynomials", "cremona", "deformation", "linear", "affineauto", "cocycles", "all"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name != "all") return run_single(name, options);
  SuiteReport all;
  all.suite = "all";
  all.seed = options.seed;
  for (const auto& suite : suite_names()) {
    if (suite == "all") continue;
    SuiteReport part = run_single(suite, options);
    all.trials += part.trials;
    all.passed += part.passed;
    all.failures.insert(all.failures.end(), part.failures.begin(), part.failures.end());
    all.parts.push_back(std::move(part));
  }
  return all;
}

std::string report_to_json(const SuiteReport& report) { return report_json(report).dump(2); }

SuiteReport report_from_json(std::string_view text) {
  try {
    return report_from(Json::parse(text));
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, e.what());
  }
}

std::string report_summary(const SuiteReport& report) {
  std::ostringstream out;
  out << report.suite << ": " << report.passed << "/" << report.trials << " passed (seed "
      << report.seed << ")\n";
  for (const auto& part : report.parts) {
    out << "  " << part.suite << ": " << part.passed << "/" << part.trials << "\n";
  }
  for (const auto& f : report.failures) {
    out << "FAIL " << f.case_id << "\n  inputs:   " << f.inputs << "\n  expected: " << f.expected
        << "\n  actual:   " << f.actual << "\n";
  }
  return out.str();
}

}  // namespace cremona
