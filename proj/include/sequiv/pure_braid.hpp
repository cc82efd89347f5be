#pragma once

// Words in the pure braid group P_n on the standard generators p_{i,j}, their
// linking-number abelianization, and the delta-move commutator relator.

#include "sequiv/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sequiv {

/// p_{i,j}^e with 1 <= i < j <= n and e = +-1.
struct PureLetter {
  std::size_t i = 1;
  std::size_t j = 2;
  int e = 1;

  PureLetter inverse() const { return {i, j, -e}; }

  friend bool operator==(const PureLetter &, const PureLetter &) = default;
};

class PureBraidWord {
public:
  explicit PureBraidWord(std::size_t strands, std::vector<PureLetter> letters = {})
      : n_(strands), letters_(std::move(letters)) {
    if (n_ < 1)
      throw precondition_error("PureBraidWord: strand count must be positive");
    for (const auto &l : letters_)
      check(l);
  }

  std::size_t strands() const noexcept { return n_; }
  const std::vector<PureLetter> &letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Appends p_{i,j}^e; accepts the indices in either order.
  PureBraidWord &push_back(std::size_t i, std::size_t j, int e) {
    if (i > j)
      std::swap(i, j);
    PureLetter l{i, j, e};
    check(l);
    letters_.push_back(l);
    return *this;
  }

  PureBraidWord inverse() const {
    std::vector<PureLetter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      out.push_back(it->inverse());
    return PureBraidWord(n_, std::move(out));
  }

  /// Cancels adjacent x x^-1 pairs until none remain.
  PureBraidWord free_reduced() const {
    std::vector<PureLetter> stack;
    for (const auto &l : letters_) {
      if (!stack.empty() && stack.back() == l.inverse())
        stack.pop_back();
      else
        stack.push_back(l);
    }
    return PureBraidWord(n_, std::move(stack));
  }

  friend PureBraidWord operator*(const PureBraidWord &a, const PureBraidWord &b) {
    if (a.n_ != b.n_)
      throw precondition_error("PureBraidWord: strand-count mismatch in product");
    std::vector<PureLetter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return PureBraidWord(a.n_, std::move(out));
  }

  friend bool operator==(const PureBraidWord &, const PureBraidWord &) = default;

private:
  void check(const PureLetter &l) const {
    if (l.i < 1 || l.j > n_ || l.i >= l.j)
      throw precondition_error("pure braid letter p(" + std::to_string(l.i) + "," +
                               std::to_string(l.j) + ") out of range for " +
                               std::to_string(n_) + " strands");
    if (l.e != 1 && l.e != -1)
      throw precondition_error("pure braid letter exponent must be +-1");
  }

  std::size_t n_;
  std::vector<PureLetter> letters_;
};

/// Pairwise linking numbers lk(i,j), symmetric with zero diagonal; 1-based access.
class LinkingMatrix {
public:
  explicit LinkingMatrix(std::size_t n) : n_(n), lk_(n * n, 0) {}

  std::size_t strands() const noexcept { return n_; }

  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return lk_[(i - 1) * n_ + (j - 1)];
  }

  /// Adds delta to lk(i,j) and lk(j,i); i == j is ignored.
  void add(std::size_t i, std::size_t j, std::int64_t delta) {
    if (i == j)
      return;
    lk_[(i - 1) * n_ + (j - 1)] += delta;
    lk_[(j - 1) * n_ + (i - 1)] += delta;
  }

  bool is_zero() const {
    for (auto v : lk_)
      if (v != 0)
        return false;
    return true;
  }

  /// First (i, j) with i < j and nonzero linking, if any.
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const {
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j)
        if ((*this)(i, j) != 0)
          return std::pair{i, j};
    return std::nullopt;
  }

  friend LinkingMatrix operator+(const LinkingMatrix &a, const LinkingMatrix &b) {
    if (a.n_ != b.n_)
      throw precondition_error("LinkingMatrix: size mismatch");
    LinkingMatrix out = a;
    for (std::size_t k = 0; k < out.lk_.size(); ++k)
      out.lk_[k] += b.lk_[k];
    return out;
  }

  friend LinkingMatrix operator-(const LinkingMatrix &a) {
    LinkingMatrix out = a;
    for (auto &v : out.lk_)
      v = -v;
    return out;
  }

  friend bool operator==(const LinkingMatrix &, const LinkingMatrix &) = default;

private:
  std::size_t n_;
  std::vector<std::int64_t> lk_;
};

/// Image under the abelianization P_n -> Z^(n choose 2): lk(i,j) is the
/// exponent sum of p_{i,j}. p_{i,j} counts +1.
inline LinkingMatrix linking_matrix(const PureBraidWord &w) {
  LinkingMatrix lk(w.strands());
  for (const auto &l : w.letters())
    lk.add(l.i, l.j, l.e);
  return lk;
}

/// p_{i,j} p_{j,k} p_{i,j}^-1 p_{j,k}^-1 on n strands.
inline PureBraidWord delta_relator(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
  if (!(1 <= i && i < j && j < k && k <= n))
    throw precondition_error("delta_relator: need 1 <= i < j < k <= n");
  return PureBraidWord(n, {{i, j, 1}, {j, k, 1}, {i, j, -1}, {j, k, -1}});
}

/// Delta-trivial exactly when every linking number vanishes.
inline bool is_delta_trivial(const PureBraidWord &w) { return linking_matrix(w).is_zero(); }

inline bool delta_equivalent(const PureBraidWord &a, const PureBraidWord &b) {
  if (a.strands() != b.strands())
    throw precondition_error("delta_equivalent: strand-count mismatch");
  return linking_matrix(a) == linking_matrix(b);
}

/// Splices conjugator * relator * conjugator^-1 into w before letter `position`.
inline PureBraidWord insert_relator(const PureBraidWord &w, std::size_t position,
                                    const PureBraidWord &relator,
                                    const PureBraidWord &conjugator) {
  if (position > w.length())
    throw precondition_error("insert_relator: position " + std::to_string(position) +
                             " past end of word of length " + std::to_string(w.length()));
  if (relator.strands() != w.strands() || conjugator.strands() != w.strands())
    throw precondition_error("insert_relator: strand-count mismatch");
  const PureBraidWord piece = conjugator * relator * conjugator.inverse();
  std::vector<PureLetter> out(w.letters().begin(),
                              w.letters().begin() + static_cast<std::ptrdiff_t>(position));
  out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  out.insert(out.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(position),
             w.letters().end());
  return PureBraidWord(w.strands(), std::move(out));
}

} // namespace sequiv
