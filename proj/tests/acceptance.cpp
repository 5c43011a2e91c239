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


// Acceptance checks, one line per criterion. Every expected value is rebuilt
// here from matrices and polynomials directly rather than taken from the
// library routine under test. Exit status is nonzero if any check fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/affine_auto.hpp"
#include "cremona/cli.hpp"
#include "cremona/cocycle.hpp"
#include "cremona/corpus.hpp"
#include "cremona/cremona_map.hpp"
#include "cremona/deformation.hpp"
#include "cremona/error.hpp"
#include "cremona/linear.hpp"
#include "cremona/random.hpp"
#include "cremona/text.hpp"

namespace {

using namespace cremona;

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kQi = FieldSpec::gaussian();
const FieldSpec kF5 = FieldSpec::prime(5);

struct Result {
  bool ok = true;
  std::string detail;

  // Records the first failure only.
  bool expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
    return cond;
  }
};

// ---- local oracles ------------------------------------------------------------

Scalar q(long n, long d = 1) { return Scalar(kQ, mpq_class(n, d)); }

Matrix transvection(FieldSpec field, std::size_t n, std::size_t i, std::size_t j, const Scalar& c) {
  Matrix m = Matrix::identity(field, n);
  m(i, j) = c;
  return m;
}

Matrix conj_entries(const Matrix& m) {
  return m.map_entries([](const Scalar& s) { return s.conjugate(); });
}

Matrix power(const Matrix& m, std::size_t e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  for (std::size_t k = 0; k < e; ++k) r = r * m;
  return r;
}

bool is_zero_matrix(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) return false;
    }
  }
  return true;
}

// Evaluation of a homogeneous component at [1:0:...:0].
Scalar at_origin(const Polynomial& f) {
  return f.evaluate(ProjPoint::origin(f.field(), f.nvars() - 1).coords());
}

// Flags read off the homogeneous tuple: f_i / f_0 in lowest terms has
// numerator a and denominator b; the t^-1 term survives iff a(p) != 0 and the
// denominator dies at t = 0 iff b(p) == 0.
void oracle_flags(const CremonaMap& f, std::vector<bool>& p_flags, std::vector<bool>& q_flags) {
  p_flags.clear();
  q_flags.clear();
  for (std::size_t i = 1; i <= f.dim(); ++i) {
    const Polynomial g = multivariate_gcd(f.component(i), f.component(0));
    p_flags.push_back(!at_origin(*exact_quotient(f.component(i), g)).is_zero());
    q_flags.push_back(at_origin(*exact_quotient(f.component(0), g)).is_zero());
  }
}

// J_ik = (d f_i / d x_k)(p) / f_0(p) for i, k >= 1, embedded as diag(1, J).
Matrix oracle_jacobian(const CremonaMap& f) {
  const std::size_t d = f.dim();
  const Scalar inv = at_origin(f.component(0)).inverse();
  Matrix m = Matrix::identity(f.field(), d + 1);
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t k = 1; k <= d; ++k) m(i, k) = at_origin(f.component(i).derivative(k)) * inv;
  }
  return m;
}

// [x0 : t x1 : ... : t xd]
CremonaMap scaling(std::size_t dim, const Scalar& t) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i <= dim; ++i) {
    Exponents e(dim + 1, 0);
    e[i] = 1;
    comps.push_back(Polynomial::monomial(i == 0 ? Scalar::one(t.field()) : t, e));
  }
  return CremonaMap::make(std::move(comps));
}

CremonaMap involution(std::size_t dim) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i <= dim; ++i) {
    Exponents e(dim + 1, 1);
    e[i] = 0;
    comps.push_back(Polynomial::monomial(Scalar::one(kQ), e));
  }
  return CremonaMap::make(std::move(comps));
}

std::vector<ProjPoint> all_points(FieldSpec field, std::size_t dim) {
  const long p = static_cast<long>(field.characteristic());
  std::vector<ProjPoint> out;
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

// Eigenvalue of m on the projective point p (m p = lambda p assumed).
Scalar eigenvalue(const Matrix& m, const ProjPoint& p) {
  const auto& x = p.coords();
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (x[r].is_zero()) continue;
    Scalar y = Scalar::zero(m.field());
    for (std::size_t c = 0; c < x.size(); ++c) y = y + m(r, c) * x[c];
    return y * x[r].inverse();
  }
  return Scalar::zero(m.field());
}

// ---- criteria -------------------------------------------------------------------

Result deformation_lemma() {
  Result r;
  std::size_t maps = 0, extendable = 0, base_points = 0, moved = 0, singular = 0, lifted = 0;
  for (const std::size_t dim : {2u, 3u}) {
    for (const CorpusEntry& entry : deformation_corpus(kQ, dim, 120, 1000 + dim, 6)) {
      const CremonaMap& f = entry.map;
      const ProjPoint p = ProjPoint::origin(kQ, dim);
      const std::string id = std::string(corpus_kind_name(entry.kind)) + " " + format_map(f);
      ++maps;
      r.expect(f.degree() <= 6, "degree above 6: " + id);

      bool base = true, fixed = !at_origin(f.component(0)).is_zero();
      for (std::size_t i = 0; i <= dim; ++i) base = base && at_origin(f.component(i)).is_zero();
      for (std::size_t i = 1; i <= dim; ++i) fixed = fixed && at_origin(f.component(i)).is_zero();
      const bool iso = fixed && oracle_jacobian(f).is_invertible();

      const ExtendabilityVerdict v = extendability(build_family(f));
      std::vector<bool> p_flags, q_flags;
      oracle_flags(f, p_flags, q_flags);
      r.expect(v.p_i0_nonzero == p_flags, "p_i0 flags: " + id);
      r.expect(v.q_i0_zero == q_flags, "q_i0 flags: " + id);
      r.expect(v.extendable == (fixed && iso), "extendable verdict: " + id);
      r.expect(v.extendable == (is_fixed_point(f, p) && is_local_isomorphism(f, p)),
               "lemma equivalence: " + id);
      r.expect(v.jacobian_singular == (fixed && !iso), "jacobian flag: " + id);
      if (entry.kind == CorpusKind::kRegularFixed) r.expect(v.extendable, "regular map: " + id);
      if (v.extendable) {
        ++extendable;
        r.expect(v.limit && *v.limit == ProjLinear::make(oracle_jacobian(f)), "limit: " + id);
      } else {
        const bool flagged = v.jacobian_singular ||
                             std::find(p_flags.begin(), p_flags.end(), true) != p_flags.end() ||
                             std::find(q_flags.begin(), q_flags.end(), true) != q_flags.end();
        r.expect(flagged && !v.limit, "refusal without a flag: " + id);
      }
      if (base) ++base_points;
      if (!base && !fixed) ++moved;
      if (fixed && !iso) ++singular;
      if (base && v.extendable) ++lifted;
    }
  }
  r.expect(lifted == 0, "a map with a base point was declared extendable");
  r.expect(maps >= 200 && extendable >= 50 && base_points >= 30 && moved >= 30 && singular >= 30,
           "category counts too small");
  if (r.ok) {
    r.detail = std::to_string(maps) + " maps: " + std::to_string(extendable) + " extendable, " +
               std::to_string(base_points) + " base point, " + std::to_string(moved) +
               " not fixed, " + std::to_string(singular) + " singular Jacobian";
  }
  return r;
}

Result specialization() {
  Result r;
  static constexpr CorpusKind kKinds[] = {CorpusKind::kRegularFixed, CorpusKind::kBasePoint,
                                          CorpusKind::kMovesPoint, CorpusKind::kContracting};
  std::size_t checked = 0;
  for (std::uint64_t k = 0; k < 120; ++k) {
    Rng rng(Rng::mix(77, k));
    const std::size_t dim = 2 + k % 2;
    const CremonaMap f = random_corpus_entry(kQ, dim, kKinds[k % 4], rng, 6).map;
    const Scalar t0 = random_nonzero_scalar(kQ, rng, 9);
    const CremonaMap three_way = compose(compose(scaling(dim, t0.inverse()), f), scaling(dim, t0));
    r.expect(build_family(f).specialize(t0) == chart_functions(three_way),
             format_map(f) + " at t = " + t0.to_string());
    ++checked;
  }
  if (r.ok) r.detail = std::to_string(checked) + " (f, t0) pairs";
  return r;
}

Result involution_golden() {
  Result r;
  for (const std::size_t dim : {2u, 3u}) {
    const CremonaMap s = involution(dim);
    r.expect(s.degree() == dim, "degree of the involution");
    // Unreduced substitution has degree dim^2; the common factor has degree dim^2 - 1.
    std::vector<Polynomial> raw;
    for (const Polynomial& c : s.components()) raw.push_back(c.substitute(s.components()));
    Polynomial g = raw[0];
    for (const Polynomial& c : raw) {
      r.expect(c.is_homogeneous() && c.total_degree() == dim * dim, "unreduced degree");
      g = multivariate_gcd(g, c);
    }
    r.expect(g.total_degree() == dim * dim - 1, "common factor degree");
    const CremonaMap ss = compose(s, s);
    r.expect(ss == CremonaMap::identity(kQ, dim) && ss.degree() == 1, "sigma o sigma");
  }
  if (r.ok) r.detail = "d = 2: 2*2 = 4 -> 1, d = 3: 3*3 = 9 -> 1";
  return r;
}

Result dieudonne() {
  Result r;
  std::size_t combos = 0, pairs = 0;
  for (const FieldSpec field : {kQi, kF5}) {
    const std::vector<FieldAutomorphism> alphas =
        field.is_gaussian()
            ? std::vector<FieldAutomorphism>{FieldAutomorphism::identity(field),
                                             FieldAutomorphism::conjugation(field)}
            : std::vector<FieldAutomorphism>{FieldAutomorphism::identity(field),
                                             FieldAutomorphism::frobenius_power(field, 1)};
    for (const std::size_t n : {2u, 3u}) {
      for (const FieldAutomorphism& alpha : alphas) {
        for (const bool dual : {false, true}) {
          ++combos;
          Rng rng(Rng::mix(combos, 4));
          for (int k = 0; k < 200; ++k, ++pairs) {
            const Matrix h0 = random_invertible_matrix(field, n, rng);
            const Matrix g = random_invertible_matrix(field, n, rng);
            const Matrix h = random_invertible_matrix(field, n, rng);
            const DieudonneAutomorphism phi{ProjLinear::make(h0), alpha, dual};
            auto local = [&](const Matrix& m) {
              Matrix a = m.map_entries([&](const Scalar& s) { return alpha(s); });
              if (dual) a = a.inverse().transpose();
              return ProjLinear::make(h0 * a * h0.inverse());
            };
            const ProjLinear pg = ProjLinear::make(g), ph = ProjLinear::make(h);
            const std::string id = field.name() + " " + g.to_string() + " " + h.to_string();
            r.expect(apply_dieudonne(phi, pg) == local(g), "form: " + id);
            r.expect(apply_dieudonne(phi, proj_mul(pg, ph)) ==
                         proj_mul(apply_dieudonne(phi, pg), apply_dieudonne(phi, ph)),
                     "homomorphism: " + id);
            r.expect(transpose_inverse(transpose_inverse(pg)) == pg, "double dual: " + id);
            r.expect(transpose_inverse(pg) == ProjLinear::make(g.inverse().transpose()),
                     "dual: " + id);
          }
        }
      }
    }
  }
  if (r.ok) r.detail = std::to_string(pairs) + " pairs over " + std::to_string(combos) + " combinations";
  return r;
}

Result gauss() {
  Result r;
  Rng rng(5);
  std::size_t worst = 0;
  for (int k = 0; k < 200; ++k) {
    Matrix a = Matrix::identity(kQ, 3);
    const std::size_t len = 1 + rng.index(20);
    for (std::size_t w = 0; w < len; ++w) {
      const std::size_t i = rng.index(3), j = (i + 1 + rng.index(2)) % 3;
      a = a * transvection(kQ, 3, i, j, random_nonzero_scalar(kQ, rng));
    }
    const auto factors = gauss_decompose(a);
    Matrix back = Matrix::identity(kQ, 3);
    for (const Transvection& t : factors) {
      r.expect(t.i != t.j, "diagonal factor");
      back = back * transvection(kQ, 3, t.i, t.j, t.c);
    }
    r.expect(back == a, "reconstruction: " + a.to_string());
    r.expect(factors.size() <= 15 && decomposition_bound(2) == 15, "factor count: " + a.to_string());
    worst = std::max(worst, factors.size());
  }

  // Members of Gamma_3: words in 3-scaled transvections and their conjugates
  // by integral transvection words.
  auto member = [&] {
    Matrix m = Matrix::identity(kQ, 3);
    const std::size_t len = 1 + rng.index(6);
    for (std::size_t w = 0; w < len; ++w) {
      const std::size_t i = rng.index(3), j = (i + 1 + rng.index(2)) % 3;
      const long c = 3 * (rng.chance(1, 2) ? 1 : -1) * static_cast<long>(1 + rng.index(2));
      Matrix g = transvection(kQ, 3, i, j, q(c));
      if (rng.chance(1, 2)) {
        const std::size_t a = rng.index(3), b = (a + 1 + rng.index(2)) % 3;
        const Matrix u = transvection(kQ, 3, a, b, q(static_cast<long>(rng.index(5)) - 2));
        g = u * g * u.inverse();
      }
      m = m * g;
    }
    return m;
  };
  auto congruent = [](const Matrix& m) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const mpz_class v = m(i, j).real().get_num() - (i == j ? 1 : 0);
        if (v % 3 != 0) return false;
      }
    }
    return true;
  };
  for (int k = 0; k < 100; ++k) {
    const Matrix a = member(), b = member();
    r.expect(congruent(a) && congruent(a * b), "witness construction");
    const IntMatrix ia = IntMatrix::from_matrix(a), ib = IntMatrix::from_matrix(b);
    r.expect(in_congruence_subgroup(ia, 3), "member: " + a.to_string());
    r.expect(in_congruence_subgroup(ia * ib, 3), "product: " + (a * b).to_string());
    r.expect(in_congruence_subgroup(ia.inverse(), 3), "inverse: " + a.to_string());
    const IntMatrix outside = IntMatrix::from_matrix(a * transvection(kQ, 3, 0, 1, q(1)));
    r.expect(!in_congruence_subgroup(outside, 3), "non-member accepted");
  }
  if (r.ok) r.detail = "200 words, max " + std::to_string(worst) + " factors (bound 15); 100 Gamma_3 products";
  return r;
}

Result two_fixed_points() {
  Result r;
  const auto pts = all_points(kF5, 2);
  r.expect(pts.size() == 31, "P^2(F_5) has 31 points");
  auto scan = [&](const ProjPoint& p, const ProjPoint& q0, long lambda) {
    const ProjLinear a = two_fixed_point_automorphism(p, q0, Scalar(kF5, lambda));
    std::vector<ProjPoint> fixed;
    for (const ProjPoint& x : pts) {
      if (a.apply(x) == x) fixed.push_back(x);
    }
    r.expect(fixed.size() == 2 && (fixed[0] == p || fixed[1] == p) && (fixed[0] == q0 || fixed[1] == q0),
             "fixed points for " + p.to_string() + ", " + q0.to_string());
  };
  scan(ProjPoint({Scalar(kF5, 1), Scalar(kF5, 0), Scalar(kF5, 0)}),
       ProjPoint({Scalar(kF5, 0), Scalar(kF5, 0), Scalar(kF5, 1)}), 2);
  Rng rng(6);
  std::size_t scans = 1;
  for (int k = 0; k < 40; ++k) {
    const ProjPoint& p = pts[rng.index(pts.size())];
    const ProjPoint& q0 = pts[rng.index(pts.size())];
    if (p == q0) continue;
    scan(p, q0, static_cast<long>(2 + rng.index(3)));
    ++scans;
  }

  // Over Q: eigenvalues nu at p and mu at q, each with a line of eigenvectors,
  // and (A - nu)^d (A - mu) = 0, so the only rational fixed points are p, q.
  std::size_t eigen = 0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t dim = 2 + k % 2;
    std::vector<Scalar> x, y;
    for (std::size_t i = 0; i <= dim; ++i) {
      x.push_back(random_scalar(kQ, rng));
      y.push_back(random_scalar(kQ, rng));
    }
    if (std::all_of(x.begin(), x.end(), [](const Scalar& s) { return s.is_zero(); }) ||
        std::all_of(y.begin(), y.end(), [](const Scalar& s) { return s.is_zero(); })) {
      continue;
    }
    const ProjPoint p(x), q0(y);
    if (p == q0) continue;
    Scalar lambda = random_nonzero_scalar(kQ, rng);
    if (lambda.is_one()) lambda = q(3);
    const Matrix a = two_fixed_point_automorphism(p, q0, lambda).matrix();
    const Matrix id = Matrix::identity(kQ, dim + 1);
    const Scalar nu = eigenvalue(a, p), mu = eigenvalue(a, q0);
    const std::string tag = p.to_string() + ", " + q0.to_string();
    r.expect(ProjLinear::make(a).apply(p) == p && ProjLinear::make(a).apply(q0) == q0, "fixes: " + tag);
    r.expect(mu == lambda * nu, "eigenvalue ratio: " + tag);
    const Matrix an = a + Scalar(kQ, -1L) * nu * id;
    const Matrix am = a + Scalar(kQ, -1L) * mu * id;
    r.expect(an.rank() == dim && am.rank() == dim, "eigenspaces are lines: " + tag);
    r.expect(is_zero_matrix(power(an, dim) * am), "annihilator: " + tag);
    ++eigen;
  }
  if (r.ok) {
    r.detail = std::to_string(scans) + " scans of P^2(F_5), " + std::to_string(eigen) +
               " eigen-structure checks over Q";
  }
  return r;
}

Result affine_identities() {
  Result r;
  std::vector<Scalar> params;
  for (long a = 1; a <= 20; ++a) params.push_back(q(a % 2 ? a : -a, 1 + a % 3));
  for (const std::size_t dim : {2u, 3u}) {
    const std::string rest = dim == 2 ? "x2" : "x2; x3";
    for (const Scalar& a : params) {
      const std::string s = "(" + a.to_string() + ")";
      const std::string s2 = "(" + (a + a).to_string() + ")";
      const PolyAuto f = parse_auto("A^" + std::to_string(dim) + ": (x1 + " + s + "; " + rest +
                                        ") inv (x1 - " + s + "; " + rest + ")",
                                    kQ);
      const PolyAuto f2 = parse_auto("A^" + std::to_string(dim) + ": (x1 + " + s2 + "; " + rest +
                                         ") inv (x1 - " + s2 + "; " + rest + ")",
                                     kQ);
      const PolyAuto t = parse_auto("A^" + std::to_string(dim) + ": (2*x1; " + rest +
                                        ") inv (1/2*x1; " + rest + ")",
                                    kQ);
      const PolyAuto h = parse_auto("A^" + std::to_string(dim) + ": (x1 + x2; " + rest +
                                        ") inv (x1 - x2; " + rest + ")",
                                    kQ);
      const PolyAuto fh = parse_auto("A^" + std::to_string(dim) + ": (x1 + x2 + " + s + "; " +
                                         rest + ") inv (x1 - x2 - " + s + "; " + rest + ")",
                                     kQ);
      r.expect(compose_auto(t, compose_auto(f, t.inverted())) == f2, "t f t^-1 = f^2 at a = " + s);
      r.expect(compose_auto(f, f) == f2, "f^2 at a = " + s);
      r.expect(compose_auto(f, h) == fh && compose_auto(h, f) == fh, "f h = h f at a = " + s);
    }
    const AffineLemmaReport report = affine_lemma_suite(kQ, dim, params);
    for (const IdentityCheck& c : report.checks) {
      r.expect(c.ok() && c.checked >= 20, "library identity " + c.name);
    }
  }
  const FieldSpec f2 = FieldSpec::prime(2);
  const PolyAuto f = parse_auto("A^2: (x1 + 1; x2) inv (x1 + 1; x2)", f2);
  r.expect(compose_auto(f, f) == PolyAuto::identity(f2, 2), "f^2 = id over F_2");
  const std::vector<Scalar> one = {Scalar::one(f2)};
  r.expect(affine_lemma_suite(f2, 2, one).all_passed(), "library identities over F_2");
  if (r.ok) r.detail = std::to_string(params.size()) + " parameters, d = 2 and 3; F_2 involution";
  return r;
}

Result hilbert90() {
  Result r;
  Rng rng(8);
  const Matrix one = Matrix::identity(kQi, 1);
  for (int k = 0; k < 120; ++k) {
    const std::size_t d = 1 + k % 3;
    const Matrix a = random_invertible_matrix(kQi, d, rng);
    // nu(sigma) = a conj(a)^-1 is a coboundary.
    const Matrix nu = a * conj_entries(a).inverse();
    const Matrix id = Matrix::identity(kQi, d);
    r.expect(nu * conj_entries(nu) == id, "witness is a cocycle");
    r.expect(coboundary(a).at_sigma == nu, "coboundary convention: " + a.to_string());
    const Matrix b = trivialize(Cocycle::from_sigma(nu));
    r.expect(b.inverse() * nu * conj_entries(b) == id, "trivialize: " + nu.to_string());
  }
  const Matrix i_mat = Matrix::from_rows({{Scalar::gaussian(0, 1)}});
  const Matrix expected = Matrix::from_rows({{Scalar::gaussian(1, 1)}});
  r.expect(expected.inverse() * i_mat * conj_entries(expected) == one, "1+i solves nu = i");
  r.expect(trivialize(Cocycle::from_sigma(i_mat)) == expected, "worked instance nu = i");
  if (r.ok) r.detail = "120 coboundaries, d = 1..3; nu = i -> a = 1+i";
  return r;
}

Result determinism() {
  Result r;
  const std::vector<std::string> args = {"verify", "--suite", "all", "--seed", "42", "--json"};
  std::ostringstream out1, out2, err;
  const int c1 = run_command(args, out1, err);
  const int c2 = run_command(args, out2, err);
  r.expect(c1 == 0 && c2 == 0, "verify exit codes " + std::to_string(c1) + ", " + std::to_string(c2));
  r.expect(!out1.str().empty() && out1.str() == out2.str(), "outputs differ");
  const auto j = nlohmann::json::parse(out1.str());
  r.expect(j.at("schema") == 1 && j.at("seed") == 42, "report header");
  if (r.ok) r.detail = std::to_string(out1.str().size()) + " identical bytes";
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Result()> run;
    double budget;  // seconds
  };
  const std::vector<Criterion> criteria = {
      {"deformation lemma corpus", deformation_lemma, 60},
      {"specialization identity", specialization, 30},
      {"involution golden test", involution_golden, 0},
      {"Dieudonne homomorphisms", dieudonne, 0},
      {"Gauss decomposition and Gamma_3", gauss, 0},
      {"two-fixed-point automorphism", two_fixed_points, 0},
      {"affine identities", affine_identities, 0},
      {"Hilbert 90 round trip", hilbert90, 0},
      {"verify determinism", determinism, 0},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[k].run();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[k].budget > 0 && secs > criteria[k].budget) {
      r.ok = false;
      r.detail = "over the " + std::to_string(static_cast<int>(criteria[k].budget)) + " s budget";
    }
    failed += !r.ok;
    std::printf("[%s] AC%zu %s: %s (%.2f s)\n", r.ok ? "PASS" : "FAIL", k + 1, criteria[k].name,
                r.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
