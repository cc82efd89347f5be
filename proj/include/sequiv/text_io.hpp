#pragma once

// Line-based text formats.
//
//   matrix        "m", then m rows of m integers ("0" alone is the empty matrix)
//   alexander     "lo=<lowest exponent>; coeffs=<c_lo ... c_hi>"
//   pure braid    "n <strands>", then one "i j e" line per letter
//   string link   "n <n> k <k>", "framings f1 ... fn", then "i.a j.b e" lines
//   disk band     "g <g>", "framings f1 ... f2g", then "i j lk" for nonzero lk
//   artin braid   "n <strands>", then one line of signed generators
//
// Blank lines and text after '#' are ignored everywhere.

#include "sequiv/braid_closure.hpp"
#include "sequiv/intlin.hpp"
#include "sequiv/laurent_poly.hpp"
#include "sequiv/pure_braid.hpp"
#include "sequiv/standard_form.hpp"
#include "sequiv/string_link.hpp"

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace sequiv::text {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;)
      line.tokens.push_back(w);
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void fail(const Line &line, const std::string &what) {
  throw parse_error("line " + std::to_string(line.number) + ": " + what);
}

inline Integer to_integer(const Line &line, const std::string &token) {
  std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (start == token.size())
    fail(line, "expected an integer, got '" + token + "'");
  for (std::size_t k = start; k < token.size(); ++k)
    if (token[k] < '0' || token[k] > '9')
      fail(line, "expected an integer, got '" + token + "'");
  return Integer(token[0] == '+' ? token.substr(1) : token);
}

inline long long to_int64(const Line &line, const std::string &token) {
  const Integer v = to_integer(line, token);
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(line, "integer '" + token + "' out of range");
  return static_cast<long long>(v);
}

inline std::size_t to_count(const Line &line, const std::string &token) {
  const long long v = to_int64(line, token);
  if (v < 0)
    fail(line, "expected a non-negative count, got '" + token + "'");
  return static_cast<std::size_t>(v);
}

inline void expect_keyword(const Line &line, std::size_t at, std::string_view word) {
  if (line.tokens.size() <= at || line.tokens[at] != word)
    fail(line, "expected '" + std::string(word) + "'");
}

inline void expect_width(const Line &line, std::size_t width) {
  if (line.tokens.size() != width)
    fail(line, "expected " + std::to_string(width) + " fields, got " +
                   std::to_string(line.tokens.size()));
}

inline DoubleIndex to_double_index(const Line &line, const std::string &token) {
  const auto dot = token.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == token.size())
    fail(line, "expected a double index 'i.a', got '" + token + "'");
  return {to_count(line, token.substr(0, dot)), to_count(line, token.substr(dot + 1))};
}

// Converts library precondition failures into parse errors tagged with a line.
template <class F> auto guarded(const Line &line, F &&f) {
  try {
    return f();
  } catch (const precondition_error &e) {
    fail(line, e.what());
  }
}

} // namespace detail

inline std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// ---- matrices ------------------------------------------------------------

inline std::string format_matrix(const IntMatrix &m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m.size(); ++c) {
      if (c)
        out += ' ';
      out += m(r, c).str();
    }
    out += '\n';
  }
  return out;
}

inline IntMatrix parse_matrix(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty())
    throw parse_error("matrix: empty input");
  detail::expect_width(lines[0], 1);
  const std::size_t m = detail::to_count(lines[0], lines[0].tokens[0]);
  if (lines.size() != m + 1)
    throw parse_error("matrix: expected " + std::to_string(m) + " rows, got " +
                      std::to_string(lines.size() - 1));
  IntMatrix out(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto &line = lines[r + 1];
    detail::expect_width(line, m);
    for (std::size_t c = 0; c < m; ++c)
      out(r, c) = detail::to_integer(line, line.tokens[c]);
  }
  return out;
}

// ---- Laurent polynomials -------------------------------------------------

inline std::string format_poly(const LaurentPoly &p) { return p.to_string(); }

inline LaurentPoly parse_poly(std::string_view text) {
  std::string s(text);
  const auto semi = s.find(';');
  if (s.rfind("lo=", 0) != 0 || semi == std::string::npos)
    throw parse_error("alexander: expected 'lo=<int>; coeffs=<ints>'");
  const detail::Line line{1, {}};
  const long long lo = detail::to_int64(line, s.substr(3, semi - 3));
  std::string rest = s.substr(semi + 1);
  const auto eq = rest.find("coeffs=");
  if (eq == std::string::npos)
    throw parse_error("alexander: missing 'coeffs='");
  std::istringstream words(rest.substr(eq + 7));
  std::vector<Integer> coeffs;
  for (std::string w; words >> w;)
    coeffs.push_back(detail::to_integer(line, w));
  return LaurentPoly(lo, std::move(coeffs));
}

// ---- pure braids ---------------------------------------------------------

inline std::string format_pure_braid(const PureBraidWord &w) {
  std::string out = "n " + std::to_string(w.strands()) + "\n";
  for (const auto &l : w.letters())
    out += std::to_string(l.i) + " " + std::to_string(l.j) + " " + std::to_string(l.e) + "\n";
  return out;
}

inline PureBraidWord parse_pure_braid(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty())
    throw parse_error("pure braid: empty input");
  detail::expect_width(lines[0], 2);
  detail::expect_keyword(lines[0], 0, "n");
  const std::size_t n = detail::to_count(lines[0], lines[0].tokens[1]);
  PureBraidWord w = detail::guarded(lines[0], [&] { return PureBraidWord(n); });
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto &line = lines[k];
    detail::expect_width(line, 3);
    const std::size_t i = detail::to_count(line, line.tokens[0]);
    const std::size_t j = detail::to_count(line, line.tokens[1]);
    const long long e = detail::to_int64(line, line.tokens[2]);
    if (e != 1 && e != -1)
      detail::fail(line, "exponent must be 1 or -1");
    if (i >= j)
      detail::fail(line, "letter must satisfy i < j");
    detail::guarded(line, [&] { return &w.push_back(i, j, static_cast<int>(e)); });
  }
  return w;
}

// ---- string links --------------------------------------------------------

inline std::string format_string_link(const DoubledStringLink &l) {
  const std::size_t n = l.strands(), k = l.depth();
  std::string out = "n " + std::to_string(n) + " k " + std::to_string(k) + "\nframings";
  for (auto f : l.framings())
    out += " " + std::to_string(f);
  out += '\n';
  for (const auto &letter : l.braid().letters())
    out += to_string(index_at(letter.i, n, k)) + " " + to_string(index_at(letter.j, n, k)) +
           " " + std::to_string(letter.e) + "\n";
  return out;
}

inline DoubledStringLink parse_string_link(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.size() < 2)
    throw parse_error("string link: expected header and framings lines");
  const auto &head = lines[0];
  detail::expect_width(head, 4);
  detail::expect_keyword(head, 0, "n");
  detail::expect_keyword(head, 2, "k");
  const std::size_t n = detail::to_count(head, head.tokens[1]);
  const std::size_t k = detail::to_count(head, head.tokens[3]);
  if (n < 1 || k < 1)
    detail::fail(head, "n and k must be positive");
  const auto &fr = lines[1];
  detail::expect_keyword(fr, 0, "framings");
  detail::expect_width(fr, n + 1);
  std::vector<std::int64_t> framings;
  for (std::size_t i = 1; i <= n; ++i)
    framings.push_back(detail::to_int64(fr, fr.tokens[i]));
  PureBraidWord braid(n * k);
  for (std::size_t idx = 2; idx < lines.size(); ++idx) {
    const auto &line = lines[idx];
    detail::expect_width(line, 3);
    const DoubleIndex x = detail::to_double_index(line, line.tokens[0]);
    const DoubleIndex y = detail::to_double_index(line, line.tokens[1]);
    const long long e = detail::to_int64(line, line.tokens[2]);
    if (e != 1 && e != -1)
      detail::fail(line, "exponent must be 1 or -1");
    if (x == y)
      detail::fail(line, "a letter needs two distinct strands");
    detail::guarded(line, [&] {
      return &braid.push_back(position_of(x, n, k), position_of(y, n, k), static_cast<int>(e));
    });
  }
  return DoubledStringLink(n, k, std::move(braid), std::move(framings));
}

// ---- disk-band forms -----------------------------------------------------

inline std::string format_disk_band(const DiskBandForm &d) {
  std::string out = "g " + std::to_string(d.genus) + "\nframings";
  for (const auto &f : d.framings)
    out += " " + f.str();
  out += '\n';
  for (const auto &[pair, value] : d.linking)
    out += std::to_string(pair.first) + " " + std::to_string(pair.second) + " " + value.str() +
           "\n";
  return out;
}

inline DiskBandForm parse_disk_band(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.size() < 2)
    throw parse_error("disk band: expected 'g' and 'framings' lines");
  detail::expect_width(lines[0], 2);
  detail::expect_keyword(lines[0], 0, "g");
  DiskBandForm d;
  d.genus = detail::to_count(lines[0], lines[0].tokens[1]);
  const auto &fr = lines[1];
  detail::expect_keyword(fr, 0, "framings");
  detail::expect_width(fr, 2 * d.genus + 1);
  for (std::size_t i = 1; i < fr.tokens.size(); ++i)
    d.framings.push_back(detail::to_integer(fr, fr.tokens[i]));
  for (std::size_t idx = 2; idx < lines.size(); ++idx) {
    const auto &line = lines[idx];
    detail::expect_width(line, 3);
    const std::size_t i = detail::to_count(line, line.tokens[0]);
    const std::size_t j = detail::to_count(line, line.tokens[1]);
    if (i >= j)
      detail::fail(line, "band pair must satisfy i < j");
    if (d.linking.count({i, j}))
      detail::fail(line, "duplicate band pair");
    const Integer v = detail::to_integer(line, line.tokens[2]);
    detail::guarded(line, [&] {
      d.set_lk(i, j, v);
      return 0;
    });
  }
  return d;
}

// ---- Artin braids --------------------------------------------------------

inline std::string format_artin_braid(const ArtinBraidWord &w) {
  std::string out = "n " + std::to_string(w.strands()) + "\n";
  for (std::size_t k = 0; k < w.length(); ++k) {
    if (k)
      out += ' ';
    out += std::to_string(w.letters()[k]);
  }
  return out + "\n";
}

inline ArtinBraidWord parse_artin_braid(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty())
    throw parse_error("braid: empty input");
  detail::expect_width(lines[0], 2);
  detail::expect_keyword(lines[0], 0, "n");
  const std::size_t n = detail::to_count(lines[0], lines[0].tokens[1]);
  std::vector<int> letters;
  for (std::size_t idx = 1; idx < lines.size(); ++idx)
    for (const auto &tok : lines[idx].tokens) {
      const long long v = detail::to_int64(lines[idx], tok);
      if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
        detail::fail(lines[idx], "generator out of range");
      letters.push_back(static_cast<int>(v));
    }
  return detail::guarded(lines[0], [&] { return ArtinBraidWord(n, std::move(letters)); });
}

} // namespace sequiv::text
