#pragma once

// Test-only generators and oracles. Nothing here calls the routines it is
// used to check: determinants are Leibniz expansions, signatures come from
// Descartes' rule on a Faddeev-LeVerrier characteristic polynomial, and
// random Seifert matrices are assembled entry by entry.

#include "sequiv/intlin.hpp"
#include "sequiv/seifert.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace sequiv::testing {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  int sign() { return uniform(0, 1) ? 1 : -1; }
  std::mt19937_64 &engine() { return engine_; }

private:
  std::mt19937_64 engine_;
};

inline IntMatrix random_matrix(Rng &rng, std::size_t n, long long bound) {
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = rng.uniform(-bound, bound);
  return m;
}

/// I + s e_i e_j^T.
inline IntMatrix elementary(std::size_t n, std::size_t i, std::size_t j, int s) {
  IntMatrix e = IntMatrix::identity(n);
  e(i, j) += s;
  return e;
}

/// Product of `steps` random elementary matrices, with its inverse built in
/// reverse order from the inverse factors.
struct UnimodularPair {
  IntMatrix matrix;
  IntMatrix inverse;
};

inline UnimodularPair random_unimodular(Rng &rng, std::size_t n, std::size_t steps) {
  UnimodularPair p{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n < 2)
    return p;
  for (std::size_t k = 0; k < steps; ++k) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 2));
    if (j >= i)
      ++j;
    const int s = rng.sign();
    p.matrix = elementary(n, i, j, s) * p.matrix;
    p.inverse = p.inverse * elementary(n, i, j, -s);
  }
  return p;
}

/// X_g written out directly.
inline IntMatrix symplectic_block(std::size_t g) {
  IntMatrix x(2 * g);
  for (std::size_t b = 0; b < g; ++b) {
    x(2 * b, 2 * b + 1) = 1;
    x(2 * b + 1, 2 * b) = -1;
  }
  return x;
}

/// Product of random symplectic transvections x -> x + s (x^T X v) v.
inline IntMatrix random_symplectic(Rng &rng, std::size_t g, std::size_t steps) {
  const std::size_t n = 2 * g;
  const IntMatrix xt = symplectic_block(g).transpose();
  IntMatrix c = IntMatrix::identity(n);
  for (std::size_t k = 0; k < steps; ++k) {
    IntMatrix outer(n);
    std::vector<long long> v(n);
    for (auto &x : v)
      x = rng.uniform(-1, 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q)
        outer(r, q) = v[r] * v[q];
    IntMatrix t = outer * xt;
    const int s = rng.sign();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t q = 0; q < n; ++q)
        t(r, q) = (r == q ? 1 : 0) + s * t(r, q);
    c = t * c;
  }
  return c;
}

/// Random N with N - N^T = X_g and |entries| <= bound.
inline IntMatrix random_standard_form(Rng &rng, std::size_t g, long long bound) {
  const std::size_t n = 2 * g;
  IntMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c <= r; ++c) {
      const bool dual = (c % 2 == 0) && r == c + 1;
      m(r, c) = rng.uniform(-bound, dual ? bound - 1 : bound);
    }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c)
      m(r, c) = m(c, r) + ((r % 2 == 0 && c == r + 1) ? 1 : 0);
  return m;
}

/// Random valid Seifert matrix of genus g with |entries| <= bound: a
/// standard form pushed through random elementary congruences that keep the
/// entry bound.
inline SeifertMatrix random_seifert(Rng &rng, std::size_t g, long long bound,
                                    std::size_t moves = 6) {
  IntMatrix m = random_standard_form(rng, g, bound);
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < moves && n >= 2; ++k) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(n) - 2));
    if (j >= i)
      ++j;
    const IntMatrix e = elementary(n, i, j, rng.sign());
    IntMatrix next = e * m * e.transpose();
    if (next.max_abs_entry() <= bound)
      m = std::move(next);
  }
  return SeifertMatrix(m);
}

/// Leibniz expansion over all permutations.
inline Integer leibniz_det(const IntMatrix &m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Integer total = 0;
  do {
    int parity = 1;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b])
          parity = -parity;
    Integer term = parity;
    for (std::size_t r = 0; r < n && term != 0; ++r)
      term *= m(r, perm[r]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Characteristic polynomial det(xI - A) as coefficients c_0..c_n (constant
/// first) by Faddeev-LeVerrier; every division is exact over Z.
inline std::vector<Integer> characteristic_polynomial(const IntMatrix &a) {
  const std::size_t n = a.size();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix mk(n); // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i)
      next(i, i) += c[n - k + 1];
    mk = next;
    const IntMatrix am = a * mk;
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      trace += am(i, i);
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

/// Signature from sign changes of the characteristic polynomial; exact for a
/// symmetric matrix because all its roots are real.
inline int descartes_signature(const IntMatrix &q) {
  std::vector<Integer> c = characteristic_polynomial(q);
  std::size_t zero_roots = 0;
  while (zero_roots < c.size() && c[zero_roots] == 0)
    ++zero_roots;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zero_roots));
  auto changes = [](const std::vector<Integer> &p) {
    int count = 0, last = 0;
    for (const auto &x : p) {
      if (x == 0)
        continue;
      const int s = x > 0 ? 1 : -1;
      if (last != 0 && s != last)
        ++count;
      last = s;
    }
    return count;
  };
  std::vector<Integer> reflected = c;
  for (std::size_t k = 1; k < reflected.size(); k += 2)
    reflected[k] = -reflected[k];
  return changes(c) - changes(reflected);
}

} // namespace sequiv::testing
