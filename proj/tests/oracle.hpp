#pragma once

// Brute-force reference computations over F_p using plain machine integers.
// Nothing here calls into the library, so tests can compare against it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

struct Fp {
  u64 p;
  u64 norm(long long x) const { return static_cast<u64>(((x % (long long)p) + (long long)p) % (long long)p); }
  u64 add(u64 x, u64 y) const { return (x + y) % p; }
  u64 sub(u64 x, u64 y) const { return (x + p - y) % p; }
  u64 mul(u64 x, u64 y) const { return (x * y) % p; }
  u64 neg(u64 x) const { return (p - x) % p; }
  u64 pow(u64 x, u64 e) const {
    u64 r = 1;
    for (; e; e >>= 1, x = mul(x, x))
      if (e & 1) r = mul(r, x);
    return r;
  }
  u64 inv(u64 x) const { return pow(x, p - 2); }
};

struct Cover {
  u64 a, b, c, d;
  bool fat() const { return a == 0 && b == 0 && c == 0 && d == 0; }
};

using Pt = std::pair<u64, u64>;        // (z, w)
using Dir = std::pair<u64, u64>;       // canonical [1:t] or [0:1]

inline Dir canon(const Fp& F, u64 u, u64 v) {
  if (u != 0) return {1, F.mul(v, F.inv(u))};
  return {0, 1};
}

// z^2 = az + bw + 2(a^2 - bd) and so on, written out directly.
inline bool on_cover(const Fp& F, const Cover& k, u64 z, u64 w) {
  long long a = k.a, b = k.b, c = k.c, d = k.d, Z = z, W = w;
  long long P = F.p;
  auto m = [&](long long x) { return ((x % P) + P) % P; };
  long long e1 = m(Z * Z - a * Z - b * W - 2 * m(a * a - b * d));
  long long e2 = m(Z * W + d * Z + a * W - m(b * c - a * d));
  long long e3 = m(W * W - c * Z - d * W - 2 * m(d * d - a * c));
  return e1 == 0 && e2 == 0 && e3 == 0;
}

// b u^3 - 3a u^2 v + 3d u v^2 - c v^3
inline u64 cubic(const Fp& F, const Cover& k, u64 u, u64 v) {
  long long U = u, V = v, P = F.p;
  __int128 s = (__int128)k.b * U % P * U % P * U - (__int128)3 * k.a % P * U % P * U % P * V +
               (__int128)3 * k.d % P * U % P * V % P * V - (__int128)k.c * V % P * V % P * V;
  long long r = (long long)(s % P);
  return F.norm(r);
}

inline std::vector<Dir> line(const Fp& F) {
  std::vector<Dir> out;
  for (u64 t = 0; t < F.p; ++t) out.push_back({1, t});
  out.push_back({0, 1});
  return out;
}

inline std::vector<Pt> x_fiber(const Fp& F, const Cover& k) {
  std::vector<Pt> out;
  for (u64 z = 0; z < F.p; ++z)
    for (u64 w = 0; w < F.p; ++w)
      if (on_cover(F, k, z, w)) out.push_back({z, w});
  return out;
}

inline std::vector<Dir> z_fiber(const Fp& F, const Cover& k) {
  std::vector<Dir> out;
  for (auto q : line(F))
    if (cubic(F, k, q.first, q.second) == 0) out.push_back(q);
  return out;
}

// First of [z+a : b], [c : w+d], [w-2d : z-2a] that is not [0:0].
inline std::optional<Dir> psi(const Fp& F, const Cover& k, Pt x) {
  auto [z, w] = x;
  std::array<std::pair<u64, u64>, 3> e = {{
      {F.add(z, k.a), k.b},
      {k.c, F.add(w, k.d)},
      {F.sub(w, F.mul(2, k.d)), F.sub(z, F.mul(2, k.a))},
  }};
  for (auto [u, v] : e)
    if (u || v) return canon(F, u, v);
  return std::nullopt;
}

// Solve the row equations for (z, w) given the direction.
inline Pt lift(const Fp& F, const Cover& k, Dir q) {
  auto [u, v] = q;
  u64 z = v == 0 ? F.mul(2, k.a) : F.sub(F.mul(k.b, F.mul(u, F.inv(v))), k.a);
  u64 w = u == 0 ? F.mul(2, k.d) : F.sub(F.mul(k.c, F.mul(v, F.inv(u))), k.d);
  return {z, w};
}

// Dense univariate helpers, coefficients low to high.
using Uni = std::vector<u64>;

inline void trim(Uni& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline u64 eval(const Fp& F, const Uni& f, u64 t) {
  u64 r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = F.add(F.mul(r, t), *it);
  return r;
}

// Divide by (x - t), assuming t is a root.
inline Uni deflate(const Fp& F, const Uni& f, u64 t) {
  Uni q(f.size() - 1);
  u64 carry = 0;
  for (std::size_t i = f.size(); i-- > 1;) {
    carry = F.add(f[i], F.mul(carry, t));
    q[i - 1] = carry;
  }
  return q;
}

// f(t) = F(1, t).
inline Uni dehomogenize(const Fp& F, const Cover& k) {
  Uni f = {k.b, F.neg(F.mul(3, k.a)), F.mul(3, k.d), F.neg(k.c)};
  trim(f);
  return f;
}

struct Roots {
  std::vector<std::pair<Dir, int>> rational;  // root and multiplicity
  Uni rest;                                    // product of non-rational factors, monic
};

// Rational roots of the cubic form by repeated deflation, infinity from the
// degree deficit. Requires a nonzero form.
inline Roots roots(const Fp& F, const Cover& k) {
  Roots r;
  Uni f = dehomogenize(F, k);
  int deficit = 3 - (static_cast<int>(f.size()) - 1);
  for (u64 t = 0; t < F.p; ++t) {
    int m = 0;
    while (f.size() > 1 && eval(F, f, t) == 0) {
      f = deflate(F, f, t);
      ++m;
    }
    if (m) r.rational.push_back({{1, t}, m});
  }
  if (deficit > 0) r.rational.push_back({{0, 1}, deficit});
  u64 lead = F.inv(f.back());
  for (auto& x : f) x = F.mul(x, lead);
  r.rest = f;
  return r;
}

inline std::vector<int> pattern(const Fp& F, const Cover& k) {
  auto r = roots(F, k);
  std::vector<int> ms;
  for (auto& [q, m] : r.rational) ms.push_back(m);
  for (std::size_t i = 1; i < r.rest.size(); ++i) ms.push_back(1);  // irreducible rest is squarefree
  std::sort(ms.rbegin(), ms.rend());
  return ms;
}

// Sum of (z, w) over all geometric fiber points, weighted by multiplicity.
// Rational points are added directly; a non-rational irreducible factor
// g = x^n + ... + g1 x + g0 contributes traces via Vieta:
// sum t = -g_{n-1}, sum 1/t = -g1/g0 for z = b/t - a, w = c t - d.
inline Pt geometric_weighted_sum(const Fp& F, const Cover& k) {
  auto r = roots(F, k);
  u64 sz = 0, sw = 0;
  for (auto& [q, m] : r.rational) {
    auto [z, w] = lift(F, k, q);
    sz = F.add(sz, F.mul(m, z));
    sw = F.add(sw, F.mul(m, w));
  }
  const auto& g = r.rest;
  if (g.size() > 1) {
    u64 n = g.size() - 1;
    u64 sum_t = F.neg(g[n - 1]);
    u64 sum_inv = F.neg(F.mul(g[1], F.inv(g[0])));
    sz = F.add(sz, F.sub(F.mul(k.b, sum_inv), F.mul(n % F.p, k.a)));
    sw = F.add(sw, F.sub(F.mul(k.c, sum_t), F.mul(n % F.p, k.d)));
  }
  return {sz, sw};
}

// Coefficients (c3, c2, c1, c0) of lambda * prod (beta u - alpha v) over roots [alpha:beta].
inline std::array<u64, 4> cubic_from_roots(const Fp& F, const std::array<Dir, 3>& rs, u64 lambda) {
  Uni f = {lambda};  // f[i] is the coefficient of u^i v^(deg - i)
  for (auto [alpha, beta] : rs) {
    Uni next(f.size() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], F.mul(f[i], beta));
      next[i] = F.sub(next[i], F.mul(f[i], alpha));
    }
    f = next;
  }
  return {f[3], f[2], f[1], f[0]};
}

// b = c3, a = -c2/3, d = c1/3, c = -c0.
inline Cover cover_from_cubic(const Fp& F, const std::array<u64, 4>& c) {
  u64 third = F.inv(3);
  return {F.neg(F.mul(c[1], third)), c[0], F.neg(c[3]), F.mul(c[2], third)};
}

inline long long discriminant(const Fp& F, const Cover& k) {
  long long P = F.p;
  long long p = k.b, q = F.neg(F.mul(3, k.a)), r = F.mul(3, k.d), s = F.neg(k.c);
  auto m = [&](__int128 x) { return (long long)(((x % P) + P) % P); };
  __int128 v = (__int128)18 * p % P * q % P * r % P * s % P;
  v -= (__int128)4 * m((__int128)q * q % P * q) % P * s % P;
  v += (__int128)m((__int128)q * q) * m((__int128)r * r) % P;
  v -= (__int128)4 * p % P * m((__int128)r * r % P * r) % P;
  v -= (__int128)27 * m((__int128)p * p) % P * m((__int128)s * s) % P;
  return m(v);
}

}  // namespace oracle
