#pragma once

// Bounded breadth-first search for a move sequence between two Seifert
// matrices. Invariant mismatches give a definite "distinct"; exhausting the
// budget gives an honest "unknown".

#include "sequiv/intlin.hpp"
#include "sequiv/seifert.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sequiv {

/// One step of a witness. Indices are 0-based.
struct Move {
  enum class Kind {
    reduce,          ///< strip the enlargement block find_reduction() reports
    add,             ///< row i += s * row j, column i += s * column j
    swap,            ///< exchange index i with index j
    enlarge_column,  ///< column_enlarge with a zero column and diagonal x
    enlarge_row,     ///< row_enlarge with a zero row and diagonal x
  };
  Kind kind = Kind::reduce;
  std::size_t i = 0;
  std::size_t j = 0;
  int value = 0; ///< s for add, x for the enlargements

  friend bool operator==(const Move &, const Move &) = default;

  std::string describe() const {
    const auto idx = [](std::size_t k) { return std::to_string(k + 1); };
    switch (kind) {
    case Kind::reduce:
      return "reduce";
    case Kind::add:
      return "congruence E(" + idx(i) + "," + idx(j) + "," + (value > 0 ? "+1" : "-1") + ")";
    case Kind::swap:
      return "congruence P(" + idx(i) + "," + idx(j) + ")";
    case Kind::enlarge_column:
      return "enlarge column x=" + std::to_string(value);
    case Kind::enlarge_row:
      return "enlarge row x=" + std::to_string(value);
    }
    return "?";
  }
};

struct SearchBudget {
  std::size_t max_size = 0;   ///< 0: two more than the larger input
  Integer max_entry = 0;      ///< 0: one more than the largest input entry
  std::size_t max_nodes = 200000;
};

struct SequivVerdict {
  enum class Status { equivalent, distinct, unknown };
  Status status = Status::unknown;
  std::vector<Move> witness;  ///< filled when equivalent
  std::string reason;         ///< differing invariant when distinct, budget note when unknown
  std::size_t nodes = 0;
};

/// Applies one move to a matrix; returns nothing when the move does not apply.
inline std::optional<IntMatrix> apply_move(const IntMatrix &m, const Move &move) {
  const std::size_t n = m.size();
  switch (move.kind) {
  case Move::Kind::reduce: {
    auto site = find_reduction(m);
    if (!site)
      return std::nullopt;
    return m.without({site->u, site->v});
  }
  case Move::Kind::add: {
    if (move.i >= n || move.j >= n || move.i == move.j)
      return std::nullopt;
    IntMatrix out = m;
    for (std::size_t c = 0; c < n; ++c)
      out(move.i, c) += move.value * out(move.j, c);
    for (std::size_t r = 0; r < n; ++r)
      out(r, move.i) += move.value * out(r, move.j);
    return out;
  }
  case Move::Kind::swap: {
    if (move.i >= n || move.j >= n || move.i == move.j)
      return std::nullopt;
    IntMatrix out = m;
    for (std::size_t c = 0; c < n; ++c)
      std::swap(out(move.i, c), out(move.j, c));
    for (std::size_t r = 0; r < n; ++r)
      std::swap(out(r, move.i), out(r, move.j));
    return out;
  }
  case Move::Kind::enlarge_column:
  case Move::Kind::enlarge_row: {
    IntMatrix out(n + 2);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) = m(r, c);
    out(n, n) = move.value;
    if (move.kind == Move::Kind::enlarge_column)
      out(n, n + 1) = 1;
    else
      out(n + 1, n) = 1;
    return out;
  }
  }
  return std::nullopt;
}

/// Replays a witness; the result equals the search target for every
/// "equivalent" verdict.
inline IntMatrix replay(const IntMatrix &start, const std::vector<Move> &moves) {
  IntMatrix current = start;
  for (const auto &move : moves) {
    auto next = apply_move(current, move);
    if (!next)
      throw precondition_error("replay: move '" + move.describe() + "' does not apply");
    current = std::move(*next);
  }
  return current;
}

/// Name of the first invariant (alexander, signature, determinant, arf) that
/// differs, or nothing when all four agree.
inline std::optional<std::string> differing_invariant(const SeifertMatrix &a,
                                                      const SeifertMatrix &b) {
  if (alexander(a) != alexander(b))
    return "alexander";
  if (knot_signature(a) != knot_signature(b))
    return "signature";
  if (knot_determinant(a) != knot_determinant(b))
    return "determinant";
  if (arf(a) != arf(b))
    return "arf";
  return std::nullopt;
}

namespace detail {

inline std::string matrix_key(const IntMatrix &m) {
  std::string key = std::to_string(m.size());
  for (const auto &x : m.entries()) {
    key += ',';
    key += x.str();
  }
  return key;
}

// Moves out of a node in canonical order: reduce, E(i,j,+1), E(i,j,-1),
// P(i,j), column enlargements, row enlargements (x = -1, 0, 1).
inline std::vector<Move> move_alphabet(std::size_t n, bool can_enlarge) {
  std::vector<Move> moves;
  moves.push_back({Move::Kind::reduce});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        moves.push_back({Move::Kind::add, i, j, +1});
        moves.push_back({Move::Kind::add, i, j, -1});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      moves.push_back({Move::Kind::swap, i, j, 0});
  if (can_enlarge) {
    for (int x : {-1, 0, 1})
      moves.push_back({Move::Kind::enlarge_column, 0, 0, x});
    for (int x : {-1, 0, 1})
      moves.push_back({Move::Kind::enlarge_row, 0, 0, x});
  }
  return moves;
}

} // namespace detail

/// Breadth-first search from m1 toward m2. Single-threaded with a fixed move
/// order, so the first witness found is the lexicographically least among
/// the shortest ones.
inline SequivVerdict bounded_sequiv_search(const SeifertMatrix &m1, const SeifertMatrix &m2,
                                           SearchBudget budget = {}) {
  SequivVerdict verdict;
  if (auto which = differing_invariant(m1, m2)) {
    verdict.status = SequivVerdict::Status::distinct;
    verdict.reason = *which + " differs";
    return verdict;
  }
  if (budget.max_size == 0)
    budget.max_size = std::max(m1.size(), m2.size()) + 2;
  if (budget.max_entry == 0)
    budget.max_entry =
        std::max(m1.matrix().max_abs_entry(), m2.matrix().max_abs_entry()) + 1;

  const IntMatrix &target = m2.matrix();
  if (m1.matrix() == target) {
    verdict.status = SequivVerdict::Status::equivalent;
    return verdict;
  }

  struct Node {
    IntMatrix matrix;
    std::size_t parent;
    Move via;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;

  nodes.push_back({m1.matrix(), 0, {}});
  seen.emplace(detail::matrix_key(m1.matrix()), 0);
  queue.push_back(0);

  auto path_to = [&](std::size_t index) {
    std::vector<Move> moves;
    for (; index != 0; index = nodes[index].parent)
      moves.push_back(nodes[index].via);
    return std::vector<Move>(moves.rbegin(), moves.rend());
  };

  while (!queue.empty()) {
    const std::size_t current = queue.front();
    queue.pop_front();
    const std::size_t n = nodes[current].matrix.size();
    for (const Move &move : detail::move_alphabet(n, n + 2 <= budget.max_size)) {
      auto next = apply_move(nodes[current].matrix, move);
      if (!next || next->size() > budget.max_size || next->max_abs_entry() > budget.max_entry)
        continue;
      auto [it, fresh] = seen.emplace(detail::matrix_key(*next), nodes.size());
      if (!fresh)
        continue;
      const bool hit = (*next == target);
      nodes.push_back({std::move(*next), current, move});
      if (hit) {
        verdict.status = SequivVerdict::Status::equivalent;
        verdict.witness = path_to(nodes.size() - 1);
        verdict.nodes = nodes.size();
        return verdict;
      }
      if (nodes.size() >= budget.max_nodes) {
        verdict.reason = "node budget of " + std::to_string(budget.max_nodes) + " exhausted";
        verdict.nodes = nodes.size();
        return verdict;
      }
      queue.push_back(nodes.size() - 1);
    }
  }
  verdict.reason = "search space within size/entry limits exhausted";
  verdict.nodes = nodes.size();
  return verdict;
}

} // namespace sequiv
