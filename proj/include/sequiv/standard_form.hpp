#pragma once

// Standardized Seifert matrices (N - N^T = X_g), the disk-band data they
// encode, and the symplectic transition between two standardizations.

#include "sequiv/intlin.hpp"
#include "sequiv/seifert.hpp"
#include "sequiv/string_link.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace sequiv {

/// Genus-g disk with 2g bands: one framing per band and the pairwise band
/// linking numbers lk(i,j), i < j, 1-based. Absent pairs have lk = 0.
struct DiskBandForm {
  std::size_t genus = 0;
  std::vector<Integer> framings;
  std::map<std::pair<std::size_t, std::size_t>, Integer> linking;

  Integer lk(std::size_t i, std::size_t j) const {
    if (i > j)
      std::swap(i, j);
    auto it = linking.find({i, j});
    return it == linking.end() ? Integer(0) : it->second;
  }

  void set_lk(std::size_t i, std::size_t j, const Integer &value) {
    if (i > j)
      std::swap(i, j);
    if (i == j || i < 1 || j > 2 * genus)
      throw precondition_error("DiskBandForm: band pair (" + std::to_string(i) + "," +
                               std::to_string(j) + ") out of range");
    if (value == 0)
      linking.erase({i, j});
    else
      linking[{i, j}] = value;
  }

  friend bool operator==(const DiskBandForm &, const DiskBandForm &) = default;
};

inline bool is_standardized(const IntMatrix &n) {
  return n.size() % 2 == 0 && n - n.transpose() == standard_symplectic(n.size() / 2);
}

struct Standardization {
  IntMatrix basis;    ///< A, unimodular
  SeifertMatrix form; ///< N = A M A^T with N - N^T = X_g
};

inline Standardization standardize(const SeifertMatrix &m) {
  const IntMatrix a = skew_standardize(m.matrix() - m.matrix().transpose());
  SeifertMatrix n(congruent(m.matrix(), a));
  if (!is_standardized(n.matrix()))
    throw std::logic_error("standardize: N - N^T is not X_g");
  return {a, std::move(n)};
}

/// Framings from the diagonal of N, band linking from its lower triangle.
inline DiskBandForm to_disk_band(const SeifertMatrix &n) {
  if (!is_standardized(n.matrix()))
    throw precondition_error("to_disk_band: matrix is not standardized (N - N^T != X_g)");
  DiskBandForm d;
  d.genus = n.genus();
  const std::size_t size = n.size();
  for (std::size_t i = 0; i < size; ++i)
    d.framings.push_back(n.matrix()(i, i));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j)
      d.set_lk(i + 1, j + 1, n.matrix()(j, i));
  return d;
}

/// Rebuilds N: lower triangle from the band linking, upper triangle forced by N - N^T = X_g.
inline SeifertMatrix from_disk_band(const DiskBandForm &d) {
  const std::size_t size = 2 * d.genus;
  if (d.framings.size() != size)
    throw precondition_error("from_disk_band: expected " + std::to_string(size) + " framings");
  for (const auto &[pair, value] : d.linking)
    if (pair.first < 1 || pair.first >= pair.second || pair.second > size)
      throw precondition_error("from_disk_band: band pair out of range");
  const IntMatrix x = standard_symplectic(d.genus);
  IntMatrix n(size);
  for (std::size_t i = 0; i < size; ++i) {
    n(i, i) = d.framings[i];
    for (std::size_t j = i + 1; j < size; ++j) {
      n(j, i) = d.lk(i + 1, j + 1);
      n(i, j) = n(j, i) + x(i, j);
    }
  }
  return SeifertMatrix(std::move(n));
}

/// Realizes the band data as a framed string link on 2g strands (k = 1):
/// band i is strand i, and the braid is the product of p_{i,j}^lk(i,j) in
/// lexicographic order of (i, j).
inline DoubledStringLink to_string_link(const DiskBandForm &d) {
  const std::size_t size = 2 * d.genus;
  if (size == 0)
    throw precondition_error("to_string_link: genus 0 has no bands");
  PureBraidWord braid(size);
  for (const auto &[pair, value] : d.linking) {
    const int e = value > 0 ? 1 : -1;
    for (Integer count = abs_value(value); count > 0; --count)
      braid.push_back(pair.first, pair.second, e);
  }
  std::vector<std::int64_t> framings;
  for (const auto &f : d.framings)
    framings.push_back(static_cast<std::int64_t>(f));
  return DoubledStringLink(size, 1, std::move(braid), std::move(framings));
}

/// C = A1 A2^-1, checked to satisfy C X_g C^T = X_g.
inline IntMatrix transition(const IntMatrix &a1, const IntMatrix &a2) {
  if (a1.size() != a2.size() || a1.size() % 2 != 0)
    throw precondition_error("transition: need two matrices of the same even size");
  if (!is_unimodular(a1) || !is_unimodular(a2))
    throw precondition_error("transition: basis changes must be unimodular");
  IntMatrix c = a1 * unimodular_inverse(a2);
  if (!is_symplectic(c))
    throw precondition_error("transition: C = A1 A2^-1 is not symplectic; the two basis "
                             "changes do not standardize congruent forms of one matrix");
  return c;
}

struct TheoremAWitness {
  IntMatrix transition;       ///< C, symplectic
  SeifertMatrix n1;           ///< A1 M A1^T
  SeifertMatrix n2;           ///< A2 M A2^T
  SeifertMatrix n2_rebased;   ///< C N2 C^T, equal to N1
  DiskBandForm form1;
  DiskBandForm form2;         ///< disk-band data of N2 in its own basis
  DiskBandForm form2_rebased; ///< disk-band data of C N2 C^T
  bool framings_match = false;
  bool linking_match = false;
  bool string_links_delta_equivalent = false;
};

/// Matrix-level content of the doubled-delta argument for two
/// standardizations N1 = A1 M A1^T and N2 = A2 M A2^T of one Seifert matrix.
inline TheoremAWitness theorem_a_witness(const SeifertMatrix &m, const IntMatrix &a1,
                                         const IntMatrix &a2) {
  if (a1.size() != m.size() || a2.size() != m.size())
    throw precondition_error("theorem_a_witness: basis changes must match the matrix size");
  SeifertMatrix n1(congruent(m.matrix(), a1));
  SeifertMatrix n2(congruent(m.matrix(), a2));
  if (!is_standardized(n1.matrix()))
    throw precondition_error("theorem_a_witness: A1 M A1^T is not standardized");
  if (!is_standardized(n2.matrix()))
    throw precondition_error("theorem_a_witness: A2 M A2^T is not standardized");

  IntMatrix c = transition(a1, a2);
  SeifertMatrix rebased(c * n2.matrix() * c.transpose());
  DiskBandForm f1 = to_disk_band(n1);
  DiskBandForm f2 = to_disk_band(n2);
  DiskBandForm f2r = to_disk_band(rebased);

  TheoremAWitness w{std::move(c), n1, n2, rebased, f1, f2, f2r};
  w.framings_match = f1.framings == f2r.framings;
  w.linking_match = f1.linking == f2r.linking;
  if (f1.genus == 0)
    w.string_links_delta_equivalent = true;
  else
    w.string_links_delta_equivalent =
        delta_equivalent_links(to_string_link(f1), to_string_link(f2r));
  if (rebased != n1 || !w.framings_match || !w.linking_match ||
      !w.string_links_delta_equivalent)
    throw std::logic_error("theorem_a_witness: rebased standard forms disagree");
  return w;
}

} // namespace sequiv
