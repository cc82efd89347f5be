#pragma once

// Framed string links presented as a pure braid on k*n strands: string-link
// strand i passes through the braid k times, alternating direction, and the
// a-th pass is braid strand position_of({i, a}).

#include "sequiv/pure_braid.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sequiv {

/// (i, a): the a-th braid pass of string-link strand i, both 1-based.
struct DoubleIndex {
  std::size_t strand = 1;
  std::size_t pass = 1;

  friend bool operator==(const DoubleIndex &, const DoubleIndex &) = default;
  friend auto operator<=>(const DoubleIndex &, const DoubleIndex &) = default;
};

inline std::string to_string(const DoubleIndex &x) {
  return std::to_string(x.strand) + "." + std::to_string(x.pass);
}

/// Braid position of (i, a): odd passes run left to right, even passes right to left.
inline std::size_t position_of(DoubleIndex x, std::size_t n, std::size_t k) {
  if (x.strand < 1 || x.strand > n || x.pass < 1 || x.pass > k)
    throw precondition_error("double index " + to_string(x) + " out of range for n=" +
                             std::to_string(n) + " k=" + std::to_string(k));
  return x.pass % 2 == 1 ? (x.pass - 1) * n + x.strand : x.pass * n - x.strand + 1;
}

inline DoubleIndex index_at(std::size_t position, std::size_t n, std::size_t k) {
  if (n == 0 || position < 1 || position > n * k)
    throw precondition_error("braid position " + std::to_string(position) + " out of range");
  const std::size_t pass = (position - 1) / n + 1;
  const std::size_t offset = (position - 1) % n + 1;
  return {pass % 2 == 1 ? offset : n - offset + 1, pass};
}

/// +1 when the braid orientation of pass a agrees with the string-link orientation.
inline int orientation_sign(std::size_t pass) {
  if (pass < 1)
    throw precondition_error("orientation_sign: pass index must be positive");
  return pass % 2 == 1 ? 1 : -1;
}

class DoubledStringLink {
public:
  DoubledStringLink(std::size_t n, std::size_t k, PureBraidWord braid,
                    std::vector<std::int64_t> framings)
      : n_(n), k_(k), braid_(std::move(braid)), framings_(std::move(framings)) {
    if (n_ < 1 || k_ < 1)
      throw precondition_error("DoubledStringLink: need n >= 1 and k >= 1");
    if (braid_.strands() != n_ * k_)
      throw precondition_error("DoubledStringLink: braid has " +
                               std::to_string(braid_.strands()) + " strands, expected k*n = " +
                               std::to_string(n_ * k_));
    if (framings_.size() != n_)
      throw precondition_error("DoubledStringLink: expected " + std::to_string(n_) +
                               " framings");
  }

  /// Unknotted, unlinked representative with zero framings.
  static DoubledStringLink trivial(std::size_t n, std::size_t k) {
    return DoubledStringLink(n, k, PureBraidWord(n * k), std::vector<std::int64_t>(n, 0));
  }

  std::size_t strands() const noexcept { return n_; }
  std::size_t depth() const noexcept { return k_; }
  const PureBraidWord &braid() const noexcept { return braid_; }
  const std::vector<std::int64_t> &framings() const noexcept { return framings_; }

  std::size_t position(DoubleIndex x) const { return position_of(x, n_, k_); }

  /// Braid-level lk between two passes (through position_of).
  std::int64_t braid_linking(const LinkingMatrix &lk, DoubleIndex x, DoubleIndex y) const {
    return lk(position(x), position(y));
  }

  DoubledStringLink with_braid(PureBraidWord braid) const {
    return DoubledStringLink(n_, k_, std::move(braid), framings_);
  }

  friend bool operator==(const DoubledStringLink &, const DoubledStringLink &) = default;

private:
  std::size_t n_;
  std::size_t k_;
  PureBraidWord braid_;
  std::vector<std::int64_t> framings_;
};

/// lk_SL(i,j) = sum over passes a, b of (-1)^(a+b) lk((i,a),(j,b)) for i != j.
inline LinkingMatrix pairwise_linking(const DoubledStringLink &link) {
  const std::size_t n = link.strands(), k = link.depth();
  const LinkingMatrix braid_lk = linking_matrix(link.braid());
  LinkingMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::int64_t total = 0;
      for (std::size_t a = 1; a <= k; ++a)
        for (std::size_t b = 1; b <= k; ++b)
          total += orientation_sign(a) * orientation_sign(b) *
                   link.braid_linking(braid_lk, {i, a}, {j, b});
      out.add(i, j, total);
    }
  return out;
}

/// The word (p_{(i,a)(j,b)} p_{(i,a)(j,b+1)})^sign on k*n strands, where the
/// generator between a strand and itself is the identity.
inline PureBraidWord stabilizer_word(const DoubledStringLink &link, DoubleIndex x,
                                     std::size_t strand, std::size_t b, int sign) {
  const std::size_t here = link.position(x);
  const std::size_t first = link.position({strand, b});
  const std::size_t second = link.position({strand, b + 1});
  PureBraidWord word(link.braid().strands());
  for (std::size_t other : {first, second})
    if (other != here)
      word.push_back(here, other, 1);
  return sign > 0 ? word : word.inverse();
}

/// Replaces the braid p by w p (b even) or p w (b odd) with
/// w = (p_{(i,a)(j,b)} p_{(i,a)(j,b+1)})^sign; the string link is unchanged.
/// With i = j and a in {b, b+1} one factor is trivial and only lk((i,b),(i,b+1)) moves.
inline DoubledStringLink stabilizing_multiply(const DoubledStringLink &link, std::size_t i,
                                              std::size_t a, std::size_t j, std::size_t b,
                                              int sign) {
  if (sign != 1 && sign != -1)
    throw precondition_error("stabilizing_multiply: sign must be +-1");
  if (b < 1 || b >= link.depth())
    throw precondition_error("stabilizing_multiply: need 1 <= b < k, got b=" +
                             std::to_string(b));
  const DoubleIndex x{i, a};
  link.position(x);
  link.position({j, b});
  const PureBraidWord w = stabilizer_word(link, x, j, b, sign);
  return link.with_braid(b % 2 == 0 ? w * link.braid() : link.braid() * w);
}

/// Multiplies by stabilizers until every braid-level linking number vanishes.
///
/// Braid passes are processed from the last pass down to pass 2. For each
/// strand y = (j, c) of the current pass and every other strand x, lk(x, y)
/// is cleared by |lk| stabilizers on (x; (j, c-1), (j, c)), which moves the
/// amount onto lk(x, (j, c-1)). Entries touching an already processed strand
/// are never disturbed again, so afterwards only pass-1 pairs
/// lk((i,1),(j,1)) can be nonzero, and for those the sum defining
/// pairwise_linking reduces to the single term, which is zero by hypothesis.
inline DoubledStringLink normalize_linking(const DoubledStringLink &link) {
  const LinkingMatrix sl = pairwise_linking(link);
  if (auto bad = sl.first_nonzero())
    throw precondition_error("normalize_linking: string-link strands " +
                             std::to_string(bad->first) + " and " +
                             std::to_string(bad->second) + " have linking number " +
                             std::to_string(sl(bad->first, bad->second)));

  const std::size_t n = link.strands(), k = link.depth();
  DoubledStringLink current = link;
  LinkingMatrix lk = linking_matrix(current.braid());
  for (std::size_t c = k; c >= 2; --c) {
    for (std::size_t j = 1; j <= n; ++j) {
      const DoubleIndex y{j, c};
      for (std::size_t pos = 1; pos <= n * k; ++pos) {
        const DoubleIndex x = index_at(pos, n, k);
        if (x == y)
          continue;
        const std::int64_t amount = current.braid_linking(lk, x, y);
        const int sign = amount > 0 ? -1 : 1;
        for (std::int64_t step = 0; step < (amount > 0 ? amount : -amount); ++step)
          current = stabilizing_multiply(current, x.strand, x.pass, j, c - 1, sign);
        if (amount != 0)
          lk = linking_matrix(current.braid());
      }
    }
  }

  if (!linking_matrix(current.braid()).is_zero())
    throw std::logic_error("normalize_linking: braid linking did not vanish");
  return current;
}

/// Same pairwise linking numbers and the same framings.
inline bool delta_equivalent_links(const DoubledStringLink &a, const DoubledStringLink &b) {
  if (a.strands() != b.strands())
    throw precondition_error("delta_equivalent_links: strand-count mismatch");
  return pairwise_linking(a) == pairwise_linking(b) && a.framings() == b.framings();
}

} // namespace sequiv
