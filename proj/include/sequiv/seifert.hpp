#pragma once

// Seifert matrices, their abelian invariants, and the matrix moves that
// generate S-equivalence (unimodular congruence, row/column enlargement and
// the matching reductions).

#include "sequiv/integer.hpp"
#include "sequiv/intlin.hpp"
#include "sequiv/laurent_poly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sequiv {

/// Integer matrix M of even size 2g with det(M - M^T) = 1.
class SeifertMatrix {
public:
  /// The genus-0 (unknot) Seifert matrix.
  SeifertMatrix() = default;

  /// Checks both invariants; throws precondition_error otherwise.
  explicit SeifertMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.size() % 2 != 0)
      throw precondition_error("Seifert matrix must have even size, got " +
                               std::to_string(m_.size()));
    const Integer d = det(m_ - m_.transpose());
    if (d != 1)
      throw precondition_error("Seifert matrix needs det(M - M^T) = 1, got " + d.str());
  }

  const IntMatrix &matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.size(); }
  std::size_t genus() const noexcept { return m_.size() / 2; }

  friend bool operator==(const SeifertMatrix &, const SeifertMatrix &) = default;

private:
  IntMatrix m_;
};

inline SeifertMatrix validate(const IntMatrix &m) { return SeifertMatrix(m); }

inline bool is_valid_seifert(const IntMatrix &m) {
  return m.size() % 2 == 0 && det(m - m.transpose()) == 1;
}

/// det(M - t M^T) as a polynomial in t (no normalization).
inline LaurentPoly raw_alexander(const IntMatrix &m) {
  const std::size_t n = m.size();
  const LaurentPoly t = LaurentPoly::t();
  PolyMatrix a(n, std::vector<LaurentPoly>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = LaurentPoly(m(r, c)) - t * LaurentPoly(m(c, r));
  return det(std::move(a));
}

/// Alexander polynomial t^-g det(M - t M^T); Delta(1) = 1 and Delta(1/t) = Delta(t).
inline LaurentPoly alexander(const SeifertMatrix &m) {
  LaurentPoly delta = raw_alexander(m.matrix()).shifted(-static_cast<long long>(m.genus()));
  if (delta.evaluate(1) != 1 || !delta.is_palindromic())
    throw std::logic_error("alexander: normalization failed for " + delta.to_string());
  return delta;
}

inline bool is_alexander_trivial(const SeifertMatrix &m) { return alexander(m) == LaurentPoly(1); }

inline int knot_signature(const SeifertMatrix &m) {
  return signature(m.matrix() + m.matrix().transpose());
}

/// |det(M + M^T)|, cross-checked against |Delta(-1)|.
inline Integer knot_determinant(const SeifertMatrix &m) {
  const Integer d = abs_value(det(m.matrix() + m.matrix().transpose()));
  if (d != abs_value(alexander(m).evaluate(-1)))
    throw std::logic_error("knot_determinant: |det(M + M^T)| disagrees with |Delta(-1)|");
  return d;
}

/// 0 when Delta(-1) = +-1 mod 8, else 1.
inline int arf(const SeifertMatrix &m) {
  Integer r = alexander(m).evaluate(-1) % 8;
  if (r < 0)
    r += 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

/// The four abelian invariants compared by S-equivalence checks.
struct Invariants {
  LaurentPoly alexander;
  int signature = 0;
  Integer determinant;
  int arf = 0;

  friend bool operator==(const Invariants &, const Invariants &) = default;
};

inline Invariants invariants(const SeifertMatrix &m) {
  return {alexander(m), knot_signature(m), knot_determinant(m), arf(m)};
}

/// [[M, xi, 0], [0, x, 1], [0, 0, 0]].
inline SeifertMatrix column_enlarge(const SeifertMatrix &m, std::span<const Integer> xi,
                                    const Integer &x) {
  const std::size_t n = m.size();
  if (xi.size() != n)
    throw precondition_error("column_enlarge: column length " + std::to_string(xi.size()) +
                             " does not match size " + std::to_string(n));
  IntMatrix out(n + 2);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = m.matrix()(r, c);
    out(r, n) = xi[r];
  }
  out(n, n) = x;
  out(n, n + 1) = 1;
  return SeifertMatrix(std::move(out));
}

/// [[M, 0, 0], [eta, x, 0], [0, 1, 0]].
inline SeifertMatrix row_enlarge(const SeifertMatrix &m, std::span<const Integer> eta,
                                 const Integer &x) {
  const std::size_t n = m.size();
  if (eta.size() != n)
    throw precondition_error("row_enlarge: row length " + std::to_string(eta.size()) +
                             " does not match size " + std::to_string(n));
  IntMatrix out(n + 2);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out(r, c) = m.matrix()(r, c);
  for (std::size_t c = 0; c < n; ++c)
    out(n, c) = eta[c];
  out(n, n) = x;
  out(n + 1, n) = 1;
  return SeifertMatrix(std::move(out));
}

namespace detail {

// Column-enlargement shape on the index pair (u, v): row v vanishes, column v
// is the unit vector e_u, and row u is zero outside columns u and v.
inline bool has_column_pattern(const IntMatrix &m, std::size_t u, std::size_t v) {
  const std::size_t n = m.size();
  for (std::size_t c = 0; c < n; ++c)
    if (m(v, c) != 0)
      return false;
  for (std::size_t r = 0; r < n; ++r)
    if (m(r, v) != (r == u ? 1 : 0))
      return false;
  for (std::size_t c = 0; c < n; ++c)
    if (c != u && c != v && m(u, c) != 0)
      return false;
  return true;
}

} // namespace detail

/// Which enlargement pattern a reduction strips, and where.
struct ReductionSite {
  enum class Form { column, row };
  Form form = Form::column;
  std::size_t u = 0; ///< index carrying the x entry
  std::size_t v = 0; ///< index of the vanishing row (column form) or column (row form)

  friend bool operator==(const ReductionSite &, const ReductionSite &) = default;
};

/// Locates a column or row enlargement block, first at the trailing pair
/// (size-2, size-1) and then on any index pair (u, v) in lexicographic order,
/// i.e. up to a simultaneous permutation congruence.
inline std::optional<ReductionSite> find_reduction(const IntMatrix &a) {
  const std::size_t n = a.size();
  if (n < 2)
    return std::nullopt;
  const IntMatrix at = a.transpose();
  auto attempt = [&](std::size_t u, std::size_t v) -> std::optional<ReductionSite> {
    if (detail::has_column_pattern(a, u, v))
      return ReductionSite{ReductionSite::Form::column, u, v};
    if (detail::has_column_pattern(at, u, v))
      return ReductionSite{ReductionSite::Form::row, u, v};
    return std::nullopt;
  };
  if (auto r = attempt(n - 2, n - 1))
    return r;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v)
        if (auto r = attempt(u, v))
          return r;
  return std::nullopt;
}

/// Strips one enlargement block if the matrix visibly carries one.
inline std::optional<SeifertMatrix> try_reduce(const SeifertMatrix &m) {
  if (auto site = find_reduction(m.matrix()))
    return SeifertMatrix(m.matrix().without({site->u, site->v}));
  return std::nullopt;
}

} // namespace sequiv
