#pragma once

// Knots given as closed Artin braids: the Seifert matrix of the surface
// Seifert's algorithm builds on the closure diagram, and an independent
// Alexander polynomial from the reduced Burau representation.

#include "sequiv/intlin.hpp"
#include "sequiv/laurent_poly.hpp"
#include "sequiv/seifert.hpp"

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace sequiv {

/// sigma_|v|^sign(v) letters on n >= 2 strands.
class ArtinBraidWord {
public:
  ArtinBraidWord(std::size_t strands, std::vector<int> letters)
      : n_(strands), letters_(std::move(letters)) {
    if (n_ < 2)
      throw precondition_error("ArtinBraidWord: need at least 2 strands");
    for (int v : letters_)
      if (v == 0 || static_cast<std::size_t>(v < 0 ? -v : v) >= n_)
        throw precondition_error("ArtinBraidWord: generator " + std::to_string(v) +
                                 " out of range for " + std::to_string(n_) + " strands");
  }

  std::size_t strands() const noexcept { return n_; }
  const std::vector<int> &letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }

  ArtinBraidWord reversed() const {
    return ArtinBraidWord(n_, std::vector<int>(letters_.rbegin(), letters_.rend()));
  }

  ArtinBraidWord mirrored() const {
    std::vector<int> out;
    for (int v : letters_)
      out.push_back(-v);
    return ArtinBraidWord(n_, std::move(out));
  }

  /// Markov stabilization: one more strand and a trailing sigma_n^sign.
  ArtinBraidWord stabilized(int sign = 1) const {
    std::vector<int> out = letters_;
    out.push_back(sign * static_cast<int>(n_));
    return ArtinBraidWord(n_ + 1, std::move(out));
  }

  friend bool operator==(const ArtinBraidWord &, const ArtinBraidWord &) = default;

private:
  std::size_t n_;
  std::vector<int> letters_;
};

/// perm[p] is where the strand starting at position p (0-based) ends.
inline std::vector<std::size_t> closure_permutation(const ArtinBraidWord &w) {
  std::vector<std::size_t> at(w.strands()); // at[position] = strand currently there
  std::iota(at.begin(), at.end(), std::size_t{0});
  for (int v : w.letters()) {
    const std::size_t i = static_cast<std::size_t>(v < 0 ? -v : v) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<std::size_t> perm(w.strands());
  for (std::size_t pos = 0; pos < at.size(); ++pos)
    perm[at[pos]] = pos;
  return perm;
}

inline std::size_t closure_components(const ArtinBraidWord &w) {
  const auto perm = closure_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  std::size_t cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s])
      continue;
    ++cycles;
    for (std::size_t x = s; !seen[x]; x = perm[x])
      seen[x] = true;
  }
  return cycles;
}

inline bool is_knot_closure(const ArtinBraidWord &w) { return closure_components(w) == 1; }

/// Seifert matrix of the closure. The surface is n stacked disks joined by
/// one half-twisted band per letter; for each generator index the loops run
/// through consecutive bands of that index, in word order.
inline SeifertMatrix seifert_matrix(const ArtinBraidWord &w) {
  const std::vector<int> &x = w.letters();
  for (std::size_t g = 1; g < w.strands(); ++g) {
    bool present = false;
    for (int v : x)
      present = present || static_cast<std::size_t>(v < 0 ? -v : v) == g;
    if (!present)
      throw precondition_error("seifert_matrix: generator " + std::to_string(g) +
                               " never occurs, so the surface is disconnected");
  }
  if (const std::size_t comps = closure_components(w); comps != 1)
    throw precondition_error("seifert_matrix: closure has " + std::to_string(comps) +
                             " components, not a knot");

  const std::size_t c = x.size();
  const auto column = [&](std::size_t p) { return x[p] < 0 ? -x[p] : x[p]; };
  const auto sgn = [&](std::size_t p) { return x[p] < 0 ? -1 : 1; };

  // next[p]: the following occurrence of the same generator, or c if none.
  std::vector<std::size_t> next(c, c);
  for (std::size_t p = 0; p < c; ++p)
    for (std::size_t q = p + 1; q < c; ++q)
      if (column(q) == column(p)) {
        next[p] = q;
        break;
      }

  std::vector<std::size_t> loops; // loop starts at crossing p and ends at next[p]
  for (std::size_t p = 0; p < c; ++p)
    if (next[p] < c)
      loops.push_back(p);

  const std::size_t size = loops.size();
  IntMatrix m(size);
  for (std::size_t r = 0; r < size; ++r) {
    const std::size_t p = loops[r], pe = next[p];
    // Both ends positive: -1; both negative: +1; mixed: 0.
    m(r, r) = -(sgn(p) + sgn(pe)) / 2;
    for (std::size_t s = r + 1; s < size; ++s) {
      const std::size_t q = loops[s], qe = next[q];
      if (pe < q || pe > qe)
        continue; // disjoint in time, or loop s nested inside loop r
      if (pe == q) {
        // consecutive loops of one column sharing crossing q
        if (sgn(q) > 0)
          m(s, r) = 1;
        else
          m(r, s) = -1;
        continue;
      }
      // interleaved: q < pe < qe
      const int dc = column(q) - column(p);
      if (dc == 1)
        m(r, s) = 1;
      else if (dc == -1)
        m(s, r) = -1;
    }
  }
  if (size != c - w.strands() + 1)
    throw std::logic_error("seifert_matrix: loop count is not c - n + 1");
  return SeifertMatrix(std::move(m));
}

/// Reduced Burau matrix of sigma_i^sign, (n-1)x(n-1) over Z[t, 1/t].
inline PolyMatrix burau_generator(std::size_t n, std::size_t i, int sign) {
  const std::size_t d = n - 1;
  PolyMatrix m(d, std::vector<LaurentPoly>(d));
  for (std::size_t k = 0; k < d; ++k)
    m[k][k] = LaurentPoly(1);
  const std::size_t c = i - 1; // 0-based position of the -t entry
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly tinv = LaurentPoly::monomial(1, -1);
  if (sign > 0) {
    m[c][c] = -t;
    if (c > 0)
      m[c - 1][c] = t;
    if (c + 1 < d)
      m[c + 1][c] = LaurentPoly(1);
  } else {
    m[c][c] = -tinv;
    if (c > 0)
      m[c - 1][c] = LaurentPoly(1);
    if (c + 1 < d)
      m[c + 1][c] = tinv;
  }
  return m;
}

inline PolyMatrix multiply(const PolyMatrix &a, const PolyMatrix &b) {
  const std::size_t n = a.size();
  PolyMatrix out(n, std::vector<LaurentPoly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[r][k].is_zero())
        continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!b[k][c].is_zero())
          out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

inline PolyMatrix burau_matrix(const ArtinBraidWord &w) {
  const std::size_t d = w.strands() - 1;
  PolyMatrix acc(d, std::vector<LaurentPoly>(d));
  for (std::size_t k = 0; k < d; ++k)
    acc[k][k] = LaurentPoly(1);
  for (int v : w.letters())
    acc = multiply(acc, burau_generator(w.strands(), static_cast<std::size_t>(v < 0 ? -v : v),
                                        v < 0 ? -1 : 1));
  return acc;
}

/// Multiplies by the unit +-t^m that makes p palindromic with p(1) = 1.
inline LaurentPoly normalize_alexander(const LaurentPoly &p) {
  if (p.is_zero())
    throw precondition_error("normalize_alexander: zero polynomial");
  const long long span = p.highest_exponent() - p.lowest_exponent();
  if (span % 2 != 0)
    throw std::logic_error("normalize_alexander: odd span " + p.to_string());
  LaurentPoly q = p.shifted(-p.lowest_exponent() - span / 2);
  if (q.evaluate(1) == -1)
    q = -q;
  if (q.evaluate(1) != 1 || !q.is_palindromic())
    throw std::logic_error("normalize_alexander: not an Alexander polynomial: " + q.to_string());
  return q;
}

/// Delta = det(I - B(w)) (1 - t) / (1 - t^n), normalized.
inline LaurentPoly burau_alexander(const ArtinBraidWord &w) {
  if (const std::size_t comps = closure_components(w); comps != 1)
    throw precondition_error("burau_alexander: closure has " + std::to_string(comps) +
                             " components, not a knot");
  PolyMatrix m = burau_matrix(w);
  const std::size_t d = m.size();
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      m[r][c] = (r == c ? LaurentPoly(1) : LaurentPoly()) - m[r][c];
  const LaurentPoly numerator = det(std::move(m));
  std::vector<Integer> ones(w.strands(), Integer(1));
  const LaurentPoly divisor(0, std::move(ones)); // 1 + t + ... + t^(n-1)
  auto quotient = exact_divide(numerator, divisor);
  if (!quotient)
    throw std::logic_error("burau_alexander: " + numerator.to_string() +
                           " not divisible by " + divisor.to_string());
  return normalize_alexander(*quotient);
}

} // namespace sequiv
