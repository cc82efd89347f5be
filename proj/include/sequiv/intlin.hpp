#pragma once

// Exact integer linear algebra on square matrices: Bareiss determinants,
// unimodular congruence, symmetric signatures and the integral symplectic
// basis reduction for unimodular skew-symmetric forms.

#include "sequiv/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace sequiv {

/// Square matrix of arbitrary-precision integers, stored row-major.
/// The 0x0 matrix is a legal value.
class IntMatrix {
public:
  IntMatrix() = default;

  explicit IntMatrix(std::size_t size) : size_(size), entries_(size * size) {}

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : size_(rows.size()), entries_() {
    entries_.reserve(size_ * size_);
    for (const auto &row : rows) {
      if (row.size() != size_) {
        throw precondition_error("IntMatrix: rows must form a square array");
      }
      for (long long v : row) {
        entries_.emplace_back(v);
      }
    }
  }

  static IntMatrix identity(std::size_t size) {
    IntMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  Integer &operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return entries_[r * size_ + c];
  }

  const std::vector<Integer> &entries() const noexcept { return entries_; }

  IntMatrix transpose() const {
    IntMatrix t(size_);
    for (std::size_t r = 0; r < size_; ++r)
      for (std::size_t c = 0; c < size_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Integer &x) { return x == 0; });
  }

  bool is_symmetric() const { return *this == transpose(); }

  bool is_skew_symmetric() const {
    for (std::size_t r = 0; r < size_; ++r)
      for (std::size_t c = r; c < size_; ++c)
        if ((*this)(r, c) != -(*this)(c, r))
          return false;
    return true;
  }

  Integer max_abs_entry() const {
    Integer best = 0;
    for (const auto &x : entries_)
      best = std::max(best, abs_value(x));
    return best;
  }

  /// Principal submatrix with the listed rows/columns removed, order of the rest kept.
  IntMatrix without(std::initializer_list<std::size_t> drop) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < size_; ++i)
      if (std::find(drop.begin(), drop.end(), i) == drop.end())
        keep.push_back(i);
    IntMatrix out(keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
      for (std::size_t c = 0; c < keep.size(); ++c)
        out(r, c) = (*this)(keep[r], keep[c]);
    return out;
  }

  /// The (size-1)x(size-1) matrix with row r and column c deleted.
  IntMatrix minor(std::size_t r, std::size_t c) const {
    IntMatrix out(size_ - 1);
    for (std::size_t i = 0, oi = 0; i < size_; ++i) {
      if (i == r)
        continue;
      for (std::size_t j = 0, oj = 0; j < size_; ++j) {
        if (j == c)
          continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  friend std::ostream &operator<<(std::ostream &os, const IntMatrix &m) {
    os << '[';
    for (std::size_t r = 0; r < m.size_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.size_; ++c)
        os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

  friend IntMatrix operator+(const IntMatrix &a, const IntMatrix &b) {
    require_same_size(a, b);
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
      out.entries_[i] += b.entries_[i];
    return out;
  }

  friend IntMatrix operator-(const IntMatrix &a, const IntMatrix &b) {
    require_same_size(a, b);
    IntMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i)
      out.entries_[i] -= b.entries_[i];
    return out;
  }

  friend IntMatrix operator-(const IntMatrix &a) {
    IntMatrix out = a;
    for (auto &x : out.entries_)
      x = -x;
    return out;
  }

  friend IntMatrix operator*(const IntMatrix &a, const IntMatrix &b) {
    require_same_size(a, b);
    const std::size_t n = a.size_;
    IntMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const Integer &lhs = a(r, k);
        if (lhs == 0)
          continue;
        for (std::size_t c = 0; c < n; ++c)
          out(r, c) += lhs * b(k, c);
      }
    return out;
  }

private:
  static void require_same_size(const IntMatrix &a, const IntMatrix &b) {
    if (a.size_ != b.size_)
      throw precondition_error("IntMatrix: size mismatch");
  }

  std::size_t size_ = 0;
  std::vector<Integer> entries_;
};

/// Exact determinant by Bareiss fraction-free elimination. det of 0x0 is 1.
inline Integer det(const IntMatrix &m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int parity = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0)
        ++swap_row;
      if (swap_row == n)
        return 0;
      for (std::size_t c = 0; c < n; ++c)
        std::swap(a(k, c), a(swap_row, c));
      parity = -parity;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        a(r, c) = (a(k, k) * a(r, c) - a(r, k) * a(k, c)) / previous;
      }
      a(r, k) = 0;
    }
    previous = a(k, k);
  }
  return parity * a(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix &a) {
  const Integer d = det(a);
  return d == 1 || d == -1;
}

/// Inverse of a unimodular matrix through its adjugate; always integral.
inline IntMatrix unimodular_inverse(const IntMatrix &a) {
  const Integer d = det(a);
  if (d != 1 && d != -1)
    throw precondition_error("unimodular_inverse: determinant is not +-1");
  const std::size_t n = a.size();
  IntMatrix inv(n);
  if (n == 1) {
    inv(0, 0) = d;
    return inv;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Integer minor = det(a.minor(r, c));
      const Integer cofactor = ((r + c) % 2 == 0) ? minor : Integer(-minor);
      // adj(A) = cofactor matrix transposed; d is a unit so d^-1 = d.
      inv(c, r) = cofactor * d;
    }
  return inv;
}

/// A * M * A^T for a unimodular basis change A.
inline IntMatrix congruent(const IntMatrix &m, const IntMatrix &a) {
  if (m.size() != a.size())
    throw precondition_error("congruent: size mismatch");
  if (!is_unimodular(a))
    throw precondition_error("congruent: basis change is not unimodular");
  return a * m * a.transpose();
}

/// X_g: g copies of [[0,1],[-1,0]] down the diagonal.
inline IntMatrix standard_symplectic(std::size_t genus) {
  IntMatrix x(2 * genus);
  for (std::size_t b = 0; b < genus; ++b) {
    x(2 * b, 2 * b + 1) = 1;
    x(2 * b + 1, 2 * b) = -1;
  }
  return x;
}

inline bool is_symplectic(const IntMatrix &c) {
  if (c.size() % 2 != 0)
    return false;
  const IntMatrix x = standard_symplectic(c.size() / 2);
  return c * x * c.transpose() == x;
}

namespace detail {

/// Tracks W = A * S * A^T while applying paired row/column operations to W
/// and the matching row operation to A.
struct CongruenceTracker {
  IntMatrix form;
  IntMatrix basis;

  // row k += q * row l, then column k += q * column l.
  void add_multiple(std::size_t k, std::size_t l, const Integer &q) {
    if (q == 0)
      return;
    const std::size_t n = form.size();
    for (std::size_t c = 0; c < n; ++c) {
      form(k, c) += q * form(l, c);
      basis(k, c) += q * basis(l, c);
    }
    for (std::size_t r = 0; r < n; ++r)
      form(r, k) += q * form(r, l);
  }

  void swap(std::size_t k, std::size_t l) {
    if (k == l)
      return;
    const std::size_t n = form.size();
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(form(k, c), form(l, c));
      std::swap(basis(k, c), basis(l, c));
    }
    for (std::size_t r = 0; r < n; ++r)
      std::swap(form(r, k), form(r, l));
  }
};

// Floor division for arbitrary-precision integers.
inline Integer floor_div(const Integer &a, const Integer &b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    q -= 1;
  return q;
}

} // namespace detail

/// Unimodular A with A * S * A^T = X_g for a skew-symmetric S with det(S) = 1.
/// Pivots on the minimal nonzero |entry| (row-major first on ties) of the
/// trailing block, clears its two rows, then recurses on the remainder.
inline IntMatrix skew_standardize(const IntMatrix &s) {
  if (!s.is_skew_symmetric())
    throw precondition_error("skew_standardize: input is not skew-symmetric");
  if (s.size() % 2 != 0)
    throw precondition_error("skew_standardize: odd size");
  if (det(s) != 1)
    throw precondition_error("skew_standardize: determinant is not 1");

  const std::size_t n = s.size();
  detail::CongruenceTracker t{s, IntMatrix::identity(n)};
  for (std::size_t p = 0; p < n; p += 2) {
    const std::size_t q = p + 1;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      Integer best;
      for (std::size_t r = p; r < n; ++r)
        for (std::size_t c = p; c < n; ++c) {
          const Integer &v = t.form(r, c);
          if (v != 0 && (!pivot || abs_value(v) < best)) {
            pivot = {r, c};
            best = abs_value(v);
          }
        }
      // det(S) = 1 keeps the trailing block nonsingular.
      if (!pivot)
        throw precondition_error("skew_standardize: singular trailing block");

      t.swap(p, pivot->first);
      // pivot->second may have been the row just displaced.
      const std::size_t col = pivot->second == p ? pivot->first : pivot->second;
      t.swap(q, col);

      const Integer v = t.form(p, q);
      bool clean = true;
      for (std::size_t k = q + 1; k < n; ++k) {
        // W(p,k) changes by m*v under column k += m*column q.
        t.add_multiple(k, q, -detail::floor_div(t.form(p, k), v));
        // W(q,k) changes by -m*v under column k += m*column p.
        t.add_multiple(k, p, detail::floor_div(t.form(q, k), v));
        if (t.form(p, k) != 0 || t.form(q, k) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (t.form(p, q) == -1)
      t.swap(p, q);
  }

  if (t.form != standard_symplectic(n / 2))
    throw std::logic_error("skew_standardize: reduction did not reach X_g");
  return t.basis;
}

/// Signature (positive minus negative inertia) of a symmetric matrix by exact
/// symmetric elimination over the rationals.
inline int signature(const IntMatrix &q) {
  if (!q.is_symmetric())
    throw precondition_error("signature: input is not symmetric");
  const std::size_t n = q.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = Rational(q(r, c));

  std::vector<bool> alive(n, true);
  int result = 0;
  for (;;) {
    std::optional<std::size_t> diag;
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i = 0; i < n && !diag; ++i)
      if (alive[i] && a[i][i] != 0)
        diag = i;
    if (!diag) {
      for (std::size_t i = 0; i < n && !pair; ++i)
        for (std::size_t j = i + 1; j < n && !pair; ++j)
          if (alive[i] && alive[j] && a[i][j] != 0)
            pair = {i, j};
    }
    if (diag) {
      const std::size_t i = *diag;
      const Rational pivot = a[i][i];
      result += pivot > 0 ? 1 : -1;
      alive[i] = false;
      for (std::size_t r = 0; r < n; ++r) {
        if (!alive[r] || a[r][i] == 0)
          continue;
        const Rational factor = a[r][i] / pivot;
        for (std::size_t c = 0; c < n; ++c)
          if (alive[c])
            a[r][c] -= factor * a[i][c];
      }
    } else if (pair) {
      // All live diagonals vanish: the block [[0,b],[b,0]] has inertia (1,1).
      const auto [i, j] = *pair;
      const Rational b = a[i][j];
      alive[i] = alive[j] = false;
      // Schur complement with block inverse [[0,1/b],[1/b,0]].
      for (std::size_t r = 0; r < n; ++r) {
        if (!alive[r])
          continue;
        const Rational ri = a[r][i], rj = a[r][j];
        if (ri == 0 && rj == 0)
          continue;
        for (std::size_t c = 0; c < n; ++c)
          if (alive[c])
            a[r][c] -= (ri * a[j][c] + rj * a[i][c]) / b;
      }
    } else {
      break;
    }
  }
  return result;
}

} // namespace sequiv
