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

// Brown's dense modular gcd. Over F_p the last variable is evaluated away
// and the images are interpolated back (small p borrows evaluation points
// from an extension field); over Q and Q(i) the
// F_p images for several word-sized primes are combined by CRT and rational
// reconstruction. Every answer is confirmed by trial division.

#include "modular_gcd.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "cremona/error.hpp"

namespace cremona::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Lex order with variable 0 most significant.
struct LexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

using MPoly = std::map<Exponents, u64, LexGreater>;
using Uni = std::vector<u64>;  // dense, index = degree, no trailing zeros

// ---- coefficient fields -----------------------------------------------------
// Elements are encoded as integers in [0, size()); 0 and 1 are the usual
// constants and the prime subfield sits at 0..p-1.

struct PrimeOps {
  u64 p;
  u64 size() const { return p; }
  u64 add(u64 a, u64 b) const { return addmod(a, b, p); }
  u64 sub(u64 a, u64 b) const { return submod(a, b, p); }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p); }
  u64 inv(u64 a) const { return invmod(a, p); }
};

// F_{p^k} for small p: base-p digit vectors, multiplication through
// discrete log tables built from a primitive polynomial.
struct ExtTables {
  u64 p = 0;
  unsigned k = 0;
  u64 q = 0;
  std::vector<std::uint32_t> exp;  // exp[j] = x^j, j < q - 1
  std::vector<std::uint32_t> log;  // log[exp[j]] = j
};

// Smallest extension with at least this many elements.
constexpr u64 kExtensionSize = 4096;

std::vector<u64> digits(u64 v, u64 p, unsigned k) {
  std::vector<u64> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

u64 undigits(const std::vector<u64>& d, u64 p) {
  u64 v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

std::optional<ExtTables> build_tables(u64 p) {
  ExtTables t;
  t.p = p;
  t.q = 1;
  while (t.q < kExtensionSize) {
    t.q *= p;
    ++t.k;
  }
  const unsigned k = t.k;
  // Candidate x^k + m(x), tried in increasing encoding until x has order q - 1.
  for (u64 low = 1; low < t.q; ++low) {
    const std::vector<u64> m = digits(low, p, k);
    if (m[0] == 0) continue;
    t.exp.assign(t.q - 1, 0);
    std::vector<u64> cur(k, 0);
    cur[0] = 1;
    bool primitive = true;
    for (u64 j = 0; j < t.q - 1; ++j) {
      const u64 code = undigits(cur, p);
      if (j > 0 && code == 1) {
        primitive = false;
        break;
      }
      t.exp[j] = static_cast<std::uint32_t>(code);
      // cur *= x, reducing x^k = -m(x).
      const u64 top = cur[k - 1];
      for (unsigned i = k - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (unsigned i = 0; i < k; ++i) cur[i] = submod(cur[i], mulmod(top, m[i], p), p);
    }
    if (!primitive || undigits(cur, p) != 1) continue;
    t.log.assign(t.q, 0);
    for (u64 j = 0; j < t.q - 1; ++j) t.log[t.exp[j]] = static_cast<std::uint32_t>(j);
    return t;
  }
  return std::nullopt;  // unreachable: primitive polynomials always exist
}

// Null when no table could be built.
const ExtTables* tables_for(u64 p) {
  static std::mutex mutex;
  static std::map<u64, std::optional<ExtTables>> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, build_tables(p)).first;
  return it->second ? &*it->second : nullptr;
}

struct ExtOps {
  const ExtTables* t;
  u64 size() const { return t->q; }
  u64 add(u64 a, u64 b) const {
    if (t->p == 2) return a ^ b;
    u64 r = 0, scale = 1;
    for (unsigned i = 0; i < t->k; ++i, scale *= t->p) {
      r += addmod(a % t->p, b % t->p, t->p) * scale;
      a /= t->p;
      b /= t->p;
    }
    return r;
  }
  u64 sub(u64 a, u64 b) const {
    if (t->p == 2) return a ^ b;
    u64 r = 0, scale = 1;
    for (unsigned i = 0; i < t->k; ++i, scale *= t->p) {
      r += submod(a % t->p, b % t->p, t->p) * scale;
      a /= t->p;
      b /= t->p;
    }
    return r;
  }
  u64 mul(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    u64 l = u64{t->log[a]} + t->log[b];
    if (l >= t->q - 1) l -= t->q - 1;
    return t->exp[l];
  }
  u64 inv(u64 a) const {
    const u64 l = t->log[a];
    return t->exp[l == 0 ? 0 : t->q - 1 - l];
  }
};

template <class F>
u64 power(const F& f, u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = f.mul(r, a);
    a = f.mul(a, a);
    e >>= 1;
  }
  return r;
}

// ---- univariate helpers ----------------------------------------------------

void trim(Uni& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

template <class F>
u64 uni_eval(const Uni& u, u64 a, const F& f) {
  u64 r = 0;
  for (std::size_t k = u.size(); k-- > 0;) r = f.add(f.mul(r, a), u[k]);
  return r;
}

template <class F>
Uni uni_mul(const Uni& a, const Uni& b, const F& f) {
  if (a.empty() || b.empty()) return {};
  Uni r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

// a mod b, b nonzero.
template <class F>
Uni uni_rem(Uni a, const Uni& b, const F& f) {
  const u64 inv = f.inv(b.back());
  while (a.size() >= b.size()) {
    const u64 c = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[shift + k] = f.sub(a[shift + k], f.mul(c, b[k]));
    }
    trim(a);
  }
  return a;
}

template <class F>
Uni uni_monic(Uni a, const F& f) {
  if (a.empty()) return a;
  const u64 inv = f.inv(a.back());
  for (u64& c : a) c = f.mul(c, inv);
  return a;
}

template <class F>
Uni uni_gcd(Uni a, Uni b, const F& f) {
  while (!b.empty()) {
    Uni r = uni_rem(std::move(a), b, f);
    a = std::move(b);
    b = std::move(r);
  }
  return uni_monic(std::move(a), f);
}

// ---- multivariate helpers ---------------------------------------------------

template <class F>
void add_term(MPoly& g, const Exponents& e, u64 c, const F& f) {
  if (c == 0) return;
  auto [it, inserted] = g.try_emplace(e, c);
  if (!inserted) {
    it->second = f.add(it->second, c);
    if (it->second == 0) g.erase(it);
  }
}

bool involves(const MPoly& f, std::size_t var) {
  for (const auto& [e, c] : f) {
    if (e[var] != 0) return true;
  }
  return false;
}

unsigned degree_in(const MPoly& f, std::size_t var) {
  unsigned d = 0;
  for (const auto& [e, c] : f) d = std::max(d, e[var]);
  return d;
}

// Coefficients of f as a polynomial in variables 0..k-1 over F[x_k].
std::map<Exponents, Uni, LexGreater> split_last(const MPoly& f, std::size_t k) {
  std::map<Exponents, Uni, LexGreater> out;
  for (const auto& [e, c] : f) {
    Exponents main = e;
    main[k] = 0;
    Uni& u = out[main];
    if (u.size() <= e[k]) u.resize(e[k] + 1, 0);
    u[e[k]] = c;
  }
  return out;
}

template <class F>
MPoly times_uni(const MPoly& g, const Uni& u, std::size_t k, const F& f) {
  MPoly r;
  for (const auto& [e, c] : g) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j] == 0) continue;
      Exponents m = e;
      m[k] += static_cast<std::uint32_t>(j);
      add_term(r, m, f.mul(c, u[j]), f);
    }
  }
  return r;
}

template <class F>
MPoly eval_last(const MPoly& g, std::size_t k, u64 a, const F& f) {
  MPoly r;
  for (const auto& [e, c] : g) {
    Exponents m = e;
    m[k] = 0;
    add_term(r, m, f.mul(c, power(f, a, e[k])), f);
  }
  return r;
}

template <class F>
MPoly scale(MPoly g, u64 c, const F& f) {
  for (auto& [e, v] : g) v = f.mul(v, c);
  return g;
}

// Exact quotient in lex order; nullopt on a nonzero remainder.
template <class F>
std::optional<MPoly> divide(MPoly a, const MPoly& b, const F& f) {
  const Exponents& lb = b.begin()->first;
  const u64 inv = f.inv(b.begin()->second);
  MPoly q;
  while (!a.empty()) {
    const Exponents la = a.begin()->first;
    Exponents m(la.size());
    for (std::size_t k = 0; k < la.size(); ++k) {
      if (la[k] < lb[k]) return std::nullopt;
      m[k] = la[k] - lb[k];
    }
    const u64 c = f.mul(a.begin()->second, inv);
    q.emplace(m, c);
    for (const auto& [e, v] : b) {
      Exponents t = e;
      for (std::size_t k = 0; k < t.size(); ++k) t[k] += m[k];
      add_term(a, t, f.sub(0, f.mul(v, c)), f);
    }
  }
  return q;
}

MPoly from_uni(const Uni& u, std::size_t n, std::size_t k) {
  MPoly r;
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] == 0) continue;
    Exponents e(n, 0);
    e[k] = static_cast<std::uint32_t>(j);
    r.emplace(std::move(e), u[j]);
  }
  return r;
}

template <class F>
Uni content_last(const MPoly& g, std::size_t k, const F& f) {
  Uni c;
  for (auto& [main, u] : split_last(g, k)) {
    c = uni_gcd(std::move(c), u, f);
    if (c.size() == 1) break;
  }
  return c;
}

// Leading coefficient in variables 0..k-1, as a polynomial in x_k.
Uni lead_last(const MPoly& f, std::size_t k) {
  auto parts = split_last(f, k);
  return parts.begin()->second;
}

Exponents lead_main(const MPoly& f, std::size_t k) {
  Exponents e = f.begin()->first;
  e[k] = 0;
  return e;
}

template <class F>
MPoly monic(MPoly g, const F& f) {
  const u64 inv = f.inv(g.begin()->second);
  return scale(std::move(g), inv, f);
}

// Lex-monic gcd of nonzero a, b involving only variables 0..k. nullopt when
// the field has too few evaluation points.
template <class F>
std::optional<MPoly> brown(const MPoly& a, const MPoly& b, std::size_t k, std::size_t n,
                           const F& f) {
  if (k == 0) {
    Uni ua(degree_in(a, 0) + 1, 0), ub(degree_in(b, 0) + 1, 0);
    for (const auto& [e, c] : a) ua[e[0]] = c;
    for (const auto& [e, c] : b) ub[e[0]] = c;
    return from_uni(uni_gcd(ua, ub, f), n, 0);
  }
  if (!involves(a, k) && !involves(b, k)) return brown(a, b, k - 1, n, f);

  const Uni ca = content_last(a, k, f);
  const Uni cb = content_last(b, k, f);
  const Uni c = uni_gcd(ca, cb, f);
  const MPoly a1 = *divide(a, from_uni(ca, n, k), f);
  const MPoly b1 = *divide(b, from_uni(cb, n, k), f);
  const Uni la = lead_last(a1, k);
  const Uni lb = lead_last(b1, k);
  const Uni g = uni_gcd(la, lb, f);
  const std::size_t bound =
      std::min(degree_in(a1, k), degree_in(b1, k)) + (g.size() - 1);

  std::optional<MPoly> h;
  std::optional<Exponents> lead;
  Uni modulus = {1};
  std::size_t count = 0;
  for (u64 point = 1; point < f.size(); ++point) {
    const u64 ga = uni_eval(g, point, f);
    if (ga == 0 || uni_eval(la, point, f) == 0 || uni_eval(lb, point, f) == 0) continue;
    auto image = brown(eval_last(a1, k, point, f), eval_last(b1, k, point, f), k - 1, n, f);
    if (!image) return std::nullopt;
    const Exponents le = lead_main(*image, k);
    if (std::all_of(le.begin(), le.end(), [](std::uint32_t v) { return v == 0; })) {
      // Coprime primitive parts.
      return monic(from_uni(c, n, k), f);
    }
    MPoly gi = scale(std::move(*image), ga, f);
    if (lead && LexGreater{}(le, *lead)) continue;  // unlucky point
    const Uni factor = {f.sub(0, point), 1};
    if (!lead || LexGreater{}(*lead, le)) {
      h = std::move(gi);
      lead = le;
      modulus = factor;
      count = 1;
    } else {
      // Newton step: h += (gi - h(point)) * modulus / modulus(point).
      MPoly diff = std::move(gi);
      for (const auto& [e, v] : eval_last(*h, k, point, f)) add_term(diff, e, f.sub(0, v), f);
      if (!diff.empty()) {
        const u64 s = f.inv(uni_eval(modulus, point, f));
        for (const auto& [e, v] : times_uni(diff, modulus, k, f)) {
          add_term(*h, e, f.mul(v, s), f);
        }
      }
      modulus = uni_mul(modulus, factor, f);
      ++count;
    }
    if (count > bound) {
      const MPoly pp = *divide(*h, from_uni(content_last(*h, k, f), n, k), f);
      if (divide(a1, pp, f) && divide(b1, pp, f)) {
        return monic(times_uni(pp, c, k, f), f);
      }
    }
  }
  return std::nullopt;
}

std::size_t top_variable(const MPoly& a, const MPoly& b, std::size_t n) {
  for (std::size_t v = n; v-- > 0;) {
    if (involves(a, v) || involves(b, v)) return v;
  }
  return 0;
}

template <class F>
std::optional<MPoly> image_gcd(const MPoly& a, const MPoly& b, std::size_t n, const F& f) {
  if (a.empty() || b.empty()) return std::nullopt;
  return brown(a, b, top_variable(a, b, n), n, f);
}

// ---- conversions ------------------------------------------------------------

MPoly reduce_prime_field(const Polynomial& f) {
  MPoly r;
  for (const auto& [e, c] : f.terms()) r.emplace(e, c.residue());
  return r;
}

Polynomial lift_prime_field(const MPoly& f, FieldSpec field, std::size_t n) {
  Polynomial r(field, n);
  for (const auto& [e, c] : f) r.add_term(e, Scalar(field, static_cast<long>(c)));
  return r;
}

u64 mpz_mod(const mpz_class& z, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

mpz_class to_mpz(u64 v) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_class(static_cast<unsigned long>(v));
}

// Primes below 2^62, largest first; `gaussian` keeps only p = 1 mod 4.
u64 next_prime_below(u64 start, bool gaussian) {
  for (u64 p = start - 1;; --p) {
    if ((p & 1) == 0) continue;
    if (gaussian && p % 4 != 1) continue;
    if (is_prime(p)) return p;
  }
}

// r / s with |r|, s <= sqrt(m / 2) and r = s u mod m.
std::optional<mpq_class> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, s0 = 0, s1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, s1);
  out.canonicalize();
  return out;
}

// CRT accumulator for a polynomial whose coefficients live in a number field
// of rank 1 (Q) or 2 (Q(i)).
struct CrtState {
  std::optional<Exponents> lead;  // grevlex leading exponent of the images
  mpz_class modulus = 1;
  std::map<Exponents, std::vector<mpz_class>> coeffs;

  void reset() {
    lead.reset();
    modulus = 1;
    coeffs.clear();
  }

  // Folds in one image (coefficient vectors mod p). Returns false when the
  // image was rejected as unlucky.
  bool add(const Exponents& image_lead,
           const std::map<Exponents, std::vector<u64>>& image, u64 p) {
    if (lead && GrevlexGreater{}(image_lead, *lead)) return false;
    if (!lead || GrevlexGreater{}(*lead, image_lead)) reset();
    lead = image_lead;
    const mpz_class pz = to_mpz(p);
    mpz_class inv;  // modulus^{-1} mod p
    mpz_invert(inv.get_mpz_t(), mpz_class(modulus % pz).get_mpz_t(), pz.get_mpz_t());
    const std::size_t rank = image.empty() ? (coeffs.empty() ? 1 : coeffs.begin()->second.size())
                                           : image.begin()->second.size();
    std::map<Exponents, std::vector<mpz_class>> merged;
    auto fold = [&](const Exponents& e, const std::vector<mpz_class>& old,
                    const std::vector<u64>& fresh) {
      std::vector<mpz_class> out(rank);
      for (std::size_t j = 0; j < rank; ++j) {
        // x = old + modulus * ((fresh - old) * inv mod p)
        mpz_class t = to_mpz(fresh[j]) - old[j];
        t = t * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
        out[j] = old[j] + modulus * t;
      }
      merged.emplace(e, std::move(out));
    };
    const std::vector<mpz_class> zero_old(rank, 0);
    const std::vector<u64> zero_fresh(rank, 0);
    for (const auto& [e, old] : coeffs) {
      auto it = image.find(e);
      fold(e, old, it == image.end() ? zero_fresh : it->second);
    }
    for (const auto& [e, fresh] : image) {
      if (!coeffs.count(e)) fold(e, zero_old, fresh);
    }
    coeffs = std::move(merged);
    modulus *= pz;
    return true;
  }

  std::optional<Polynomial> reconstruct(FieldSpec field, std::size_t n) const {
    Polynomial r(field, n);
    for (const auto& [e, parts] : coeffs) {
      std::vector<mpq_class> q;
      for (const auto& part : parts) {
        auto v = rational_reconstruct(part, modulus);
        if (!v) return std::nullopt;
        q.push_back(*v);
      }
      r.add_term(e, q.size() == 1 ? Scalar(field, q[0]) : Scalar::gaussian(q[0], q[1]));
    }
    return r;
  }
};

// Clears denominators so every coefficient (and both parts over Q(i)) is an
// integer.
mpz_class common_denominator(const Polynomial& f) {
  mpz_class l = 1;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.real().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.imag().get_den_mpz_t());
  }
  return l;
}

// Image of the integral polynomial l * f in F_p, with i -> root.
MPoly reduce_integral(const Polynomial& f, const mpz_class& l, u64 p, u64 root) {
  MPoly r;
  for (const auto& [e, c] : f.terms()) {
    const mpz_class re = c.real().get_num() * (l / c.real().get_den());
    u64 v = mpz_mod(re, p);
    if (sgn(c.imag()) != 0) {
      const mpz_class im = c.imag().get_num() * (l / c.imag().get_den());
      v = addmod(v, mulmod(mpz_mod(im, p), root, p), p);
    }
    if (v != 0) r.emplace(e, v);
  }
  return r;
}

// Grevlex-monic image gcd over F_p, as exponent -> residue.
std::map<Exponents, u64> grevlex_monic(const MPoly& g, u64 p) {
  Exponents best = g.begin()->first;
  for (const auto& [e, c] : g) {
    if (GrevlexGreater{}(e, best)) best = e;
  }
  const u64 inv = invmod(g.at(best), p);
  std::map<Exponents, u64> out;
  for (const auto& [e, c] : g) out.emplace(e, mulmod(c, inv, p));
  return out;
}

Exponents grevlex_lead(const std::map<Exponents, u64>& g) {
  Exponents best = g.begin()->first;
  for (const auto& [e, c] : g) {
    if (GrevlexGreater{}(e, best)) best = e;
  }
  return best;
}

bool is_constant_image(const std::map<Exponents, u64>& g) {
  return g.size() == 1 &&
         std::all_of(g.begin()->first.begin(), g.begin()->first.end(),
                     [](std::uint32_t v) { return v == 0; });
}

u64 sqrt_minus_one(u64 p) {
  for (u64 g = 2;; ++g) {
    const u64 r = powmod(g, (p - 1) / 4, p);
    if (mulmod(r, r, p) == p - 1) return r;
  }
}

bool divides_both(const Polynomial& g, const Polynomial& a, const Polynomial& b) {
  return exact_quotient(a, g).has_value() && exact_quotient(b, g).has_value();
}

constexpr u64 kPrimeStart = u64{1} << 62;
constexpr int kMaxPrimes = 400;

std::optional<Polynomial> gcd_over_q(const Polynomial& a, const Polynomial& b) {
  const FieldSpec field = a.field();
  const std::size_t n = a.nvars();
  const bool gaussian = field.is_gaussian();
  const mpz_class la = common_denominator(a);
  const mpz_class lb = common_denominator(b);
  CrtState state;
  u64 p = kPrimeStart;
  for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
    p = next_prime_below(p, gaussian);
    const u64 root = gaussian ? sqrt_minus_one(p) : 0;
    std::vector<u64> roots = {root};
    if (gaussian) roots.push_back(p - root);

    std::vector<std::map<Exponents, u64>> images;
    bool usable = true;
    for (const u64 r : roots) {
      const MPoly ap = reduce_integral(a, la, p, r);
      const MPoly bp = reduce_integral(b, lb, p, r);
      // The leading terms must survive reduction.
      if (!ap.count(a.leading_exponents()) || !bp.count(b.leading_exponents())) {
        usable = false;
        break;
      }
      auto g = image_gcd(ap, bp, n, PrimeOps{p});
      if (!g) {
        usable = false;
        break;
      }
      images.push_back(grevlex_monic(*g, p));
    }
    if (!usable) continue;
    for (const auto& img : images) {
      if (is_constant_image(img)) return Polynomial::one(field, n);
    }
    const Exponents lead = grevlex_lead(images[0]);
    if (gaussian && grevlex_lead(images[1]) != lead) continue;

    std::map<Exponents, std::vector<u64>> combined;
    if (!gaussian) {
      for (const auto& [e, c] : images[0]) combined[e] = {c};
    } else {
      // u + v s and u - v s give back u and v.
      const u64 half = invmod(2, p);
      const u64 inv_2s = invmod(mulmod(2, root, p), p);
      std::map<Exponents, std::pair<u64, u64>> both;
      for (const auto& [e, c] : images[0]) both[e].first = c;
      for (const auto& [e, c] : images[1]) both[e].second = c;
      for (const auto& [e, pair] : both) {
        const u64 u = mulmod(addmod(pair.first, pair.second, p), half, p);
        const u64 v = mulmod(submod(pair.first, pair.second, p), inv_2s, p);
        combined[e] = {u, v};
      }
    }
    if (!state.add(lead, combined, p)) continue;
    if (auto candidate = state.reconstruct(field, n)) {
      if (!candidate->is_zero() && divides_both(*candidate, a, b)) return candidate->monic();
    }
  }
  return std::nullopt;
}

// Below this, F_p itself is too small to supply evaluation points and the
// images are taken in an extension field instead.
constexpr u64 kMinPrimeModulus = 1024;

std::optional<Polynomial> gcd_over_prime_field(const Polynomial& a, const Polynomial& b) {
  const FieldSpec field = a.field();
  const u64 p = field.characteristic();
  const std::size_t n = a.nvars();
  const MPoly ap = reduce_prime_field(a);
  const MPoly bp = reduce_prime_field(b);
  std::optional<MPoly> g;
  if (p >= kMinPrimeModulus) {
    g = image_gcd(ap, bp, n, PrimeOps{p});
  } else {
    const ExtTables* tables = tables_for(p);
    if (!tables) return std::nullopt;
    const ExtOps ops{tables};
    g = image_gcd(ap, bp, n, ops);
    // The monic gcd over F_{p^k} of polynomials over F_p has F_p coefficients.
    if (g && std::any_of(g->begin(), g->end(), [p](const auto& t) { return t.second >= p; })) {
      return std::nullopt;
    }
  }
  if (!g) return std::nullopt;
  return lift_prime_field(*g, field, n).monic();
}

}  // namespace

std::optional<Polynomial> modular_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.field().is_prime_field()) return gcd_over_prime_field(a, b);
  return gcd_over_q(a, b);
}

}  // namespace cremona::detail
