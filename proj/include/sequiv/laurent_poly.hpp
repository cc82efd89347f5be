#pragma once

#include "sequiv/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace sequiv {

/// Integer Laurent polynomial sum_k coeffs[k] * t^(lo + k).
/// Stored trimmed: first and last coefficients are nonzero; zero has no coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;

  LaurentPoly(const Integer &constant) {
    if (constant != 0)
      coeffs_.push_back(constant);
  }
  LaurentPoly(long long constant) : LaurentPoly(Integer(constant)) {}

  LaurentPoly(long long lowest_exponent, std::vector<Integer> coeffs)
      : lo_(lowest_exponent), coeffs_(std::move(coeffs)) {
    trim();
  }

  LaurentPoly(long long lowest_exponent, std::initializer_list<long long> coeffs)
      : lo_(lowest_exponent) {
    for (long long c : coeffs)
      coeffs_.emplace_back(c);
    trim();
  }

  /// The monomial c * t^e.
  static LaurentPoly monomial(const Integer &c, long long e) {
    return LaurentPoly(e, std::vector<Integer>{c});
  }
  static LaurentPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long long lowest_exponent() const noexcept { return is_zero() ? 0 : lo_; }
  long long highest_exponent() const noexcept {
    return is_zero() ? 0 : lo_ + static_cast<long long>(coeffs_.size()) - 1;
  }
  const std::vector<Integer> &coefficients() const noexcept { return coeffs_; }

  Integer coefficient(long long e) const {
    if (is_zero() || e < lo_ || e > highest_exponent())
      return 0;
    return coeffs_[static_cast<std::size_t>(e - lo_)];
  }

  const Integer &leading() const { return coeffs_.back(); }

  /// Multiply by t^e.
  LaurentPoly shifted(long long e) const {
    LaurentPoly out = *this;
    out.lo_ += e;
    return out;
  }

  /// p(t^-1).
  LaurentPoly reflected() const {
    if (is_zero())
      return {};
    std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-highest_exponent(), std::move(rev));
  }

  bool is_palindromic() const { return *this == reflected(); }

  Integer evaluate(const Integer &x) const {
    if (is_zero())
      return 0;
    if (x == 0) {
      if (lo_ < 0)
        throw precondition_error("LaurentPoly::evaluate: negative power of zero");
      return coefficient(0);
    }
    if (lo_ < 0 && x != 1 && x != -1)
      throw precondition_error("LaurentPoly::evaluate: non-integral value at negative power");
    // Horner over the ordinary polynomial part, then the unit factor x^lo.
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    if (lo_ >= 0)
      return acc * boost::multiprecision::pow(x, static_cast<unsigned>(lo_));
    // x is a unit here.
    return (x == -1 && (-lo_) % 2 == 1) ? Integer(-acc) : acc;
  }

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.coeffs_ != b.coeffs_)
      return false;
    return a.is_zero() || a.lo_ == b.lo_;
  }

  friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero())
      return b;
    if (b.is_zero())
      return a;
    const long long lo = std::min(a.lo_, b.lo_);
    const long long hi = std::max(a.highest_exponent(), b.highest_exponent());
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      out[static_cast<std::size_t>(a.lo_ - lo) + k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
      out[static_cast<std::size_t>(b.lo_ - lo) + k] += b.coeffs_[k];
    return LaurentPoly(lo, std::move(out));
  }

  friend LaurentPoly operator-(const LaurentPoly &a) {
    LaurentPoly out = a;
    for (auto &c : out.coeffs_)
      c = -c;
    return out;
  }

  friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly(a.lo_ + b.lo_, std::move(out));
  }

  LaurentPoly &operator+=(const LaurentPoly &o) { return *this = *this + o; }
  LaurentPoly &operator-=(const LaurentPoly &o) { return *this = *this - o; }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  /// Exact quotient a / b in Z[t, t^-1], or nothing when b does not divide a.
  friend std::optional<LaurentPoly> exact_divide(const LaurentPoly &a, const LaurentPoly &b) {
    if (b.is_zero())
      return std::nullopt;
    if (a.is_zero())
      return LaurentPoly{};
    // Both stored with nonzero constant term once their lowest powers are
    // factored out, so ordinary long division from the top decides divisibility.
    std::vector<Integer> rem = a.coeffs_;
    const std::vector<Integer> &div = b.coeffs_;
    if (rem.size() < div.size())
      return std::nullopt;
    std::vector<Integer> quot(rem.size() - div.size() + 1);
    const Integer &lead = div.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Integer &top = rem[k + div.size() - 1];
      if (top == 0)
        continue;
      if (top % lead != 0)
        return std::nullopt;
      const Integer q = top / lead;
      quot[k] = q;
      for (std::size_t j = 0; j < div.size(); ++j)
        rem[k + j] -= q * div[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer &x) { return x != 0; }))
      return std::nullopt;
    return LaurentPoly(a.lo_ - b.lo_, std::move(quot));
  }

  /// Renders as "lo=<lowest exponent>; coeffs=<c_lo ... c_hi>"; zero renders as "lo=0; coeffs=0".
  std::string to_string() const {
    std::string out = "lo=" + std::to_string(lowest_exponent()) + "; coeffs=";
    if (is_zero())
      return out + "0";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k)
        out += ' ';
      out += coeffs_[k].str();
    }
    return out;
  }

  friend std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) {
    return os << p.to_string();
  }

private:
  void trim() {
    std::size_t first = 0;
    while (first < coeffs_.size() && coeffs_[first] == 0)
      ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      lo_ = 0;
      return;
    }
    std::size_t last = coeffs_.size();
    while (coeffs_[last - 1] == 0)
      --last;
    coeffs_ = std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                   coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    lo_ += static_cast<long long>(first);
  }

  long long lo_ = 0;
  std::vector<Integer> coeffs_;
};

/// Square matrix over Z[t, t^-1].
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Determinant over Z[t, t^-1] by Bareiss elimination with exact Laurent division.
inline LaurentPoly det(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0)
    return LaurentPoly(1);
  LaurentPoly previous(1);
  int parity = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k].is_zero())
        ++swap_row;
      if (swap_row == n)
        return {};
      std::swap(a[k], a[swap_row]);
      parity = -parity;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        auto q = exact_divide(a[k][k] * a[r][c] - a[r][k] * a[k][c], previous);
        if (!q)
          throw std::logic_error("Bareiss step over Z[t,1/t] was not exact");
        a[r][c] = std::move(*q);
      }
      a[r][k] = {};
    }
    previous = a[k][k];
  }
  return parity == 1 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

} // namespace sequiv
