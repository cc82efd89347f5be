#pragma once

// Command-line front end. Every subcommand prints a human-readable block
// followed by a "[machine]" block of key=value lines whose keys are stable.
//
// Exit codes: 0 success or decided, 1 invalid input, 2 undecided (bounded
// S-equivalence search ran out of budget).

#include "sequiv/braid_closure.hpp"
#include "sequiv/corpus.hpp"
#include "sequiv/pure_braid.hpp"
#include "sequiv/seifert.hpp"
#include "sequiv/sequiv_search.hpp"
#include "sequiv/standard_form.hpp"
#include "sequiv/string_link.hpp"
#include "sequiv/text_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sequiv::cli {

enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_undecided = 2 };

/// Outcome of one subcommand.
struct Verdict {
  enum class Status { ok, distinct, equivalent, unknown, invalid_input };
  Status status = Status::ok;
  std::vector<std::string> detail;
  std::vector<std::pair<std::string, std::string>> machine;

  void add(const std::string &key, const std::string &value) {
    detail.push_back(key + ": " + value);
    machine.emplace_back(key, value);
  }

  /// Multi-line payload (a matrix or file body): shown verbatim, kept out of the machine block.
  void attach(const std::string &title, const std::string &body) {
    detail.push_back(title + ":");
    std::istringstream in(body);
    for (std::string line; std::getline(in, line);)
      detail.push_back("  " + line);
  }
};

inline const char *status_name(Verdict::Status s) {
  switch (s) {
  case Verdict::Status::ok:
    return "ok";
  case Verdict::Status::distinct:
    return "distinct";
  case Verdict::Status::equivalent:
    return "equivalent";
  case Verdict::Status::unknown:
    return "unknown";
  case Verdict::Status::invalid_input:
    return "invalid-input";
  }
  return "?";
}

inline void print(const Verdict &v, std::ostream &out) {
  out << "status: " << status_name(v.status) << '\n';
  for (const auto &line : v.detail)
    out << line << '\n';
  out << "\n[machine]\nstatus=" << status_name(v.status) << '\n';
  for (const auto &[k, value] : v.machine)
    out << k << '=' << value << '\n';
}

namespace detail {

inline SeifertMatrix load_seifert(const std::string &path) {
  return SeifertMatrix(text::parse_matrix(text::read_file(path)));
}

inline void write_file(const std::string &path, const std::string &body) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot write '" + path + "'");
  out << body;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void add_invariants(Verdict &v, const SeifertMatrix &m) {
  v.add("valid", "yes");
  v.add("genus", std::to_string(m.genus()));
  v.add("alexander", alexander(m).to_string());
  v.add("signature", std::to_string(knot_signature(m)));
  v.add("determinant", knot_determinant(m).str());
  v.add("arf", std::to_string(arf(m)));
  v.add("alexander_trivial", yes_no(is_alexander_trivial(m)));
}

inline std::string linking_table(const LinkingMatrix &lk) {
  std::string out;
  for (std::size_t i = 1; i <= lk.strands(); ++i)
    for (std::size_t j = i + 1; j <= lk.strands(); ++j) {
      if (!out.empty())
        out += ' ';
      out += std::to_string(i) + "," + std::to_string(j) + ":" + std::to_string(lk(i, j));
    }
  return out.empty() ? "-" : out;
}

inline std::vector<Integer> parse_vector(const std::string &text) {
  std::istringstream in(text);
  std::vector<Integer> out;
  const text::detail::Line line{1, {}};
  for (std::string tok; in >> tok;)
    out.push_back(text::detail::to_integer(line, tok));
  return out;
}

} // namespace detail

inline const char *formats_help = R"(File formats (blank lines and '#' comments are ignored):
  matrix       first line the size m, then m rows of m integers; "0" is the empty matrix
                 2
                 -1 1
                 0 -1
  pure braid   "n <strands>", then one "i j e" line per letter p_{i,j}^e (i < j, e = 1 or -1)
                 n 3
                 1 2 1
  string link  "n <n> k <k>", "framings f1 ... fn", then "i.a j.b e" letters on double indices
                 n 2 k 2
                 framings 0 0
                 1.1 2.2 1
  disk band    "g <g>", "framings f1 ... f2g", then "i j lk" lines for nonzero band linking
                 g 1
                 framings -1 -1
  braid word   "n <strands>", then one line of signed generators (1 1 1 = sigma_1^3, -2 = sigma_2^-1)
                 n 2
                 1 1 1
  alexander    printed as "lo=<lowest exponent>; coeffs=<space-separated integers>"
Exit codes: 0 decided/success, 1 invalid input, 2 undecided (sequiv search budget exhausted).
)";

/// Runs the tool on argv-style arguments (without the program name).
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact S-equivalence toolkit for Seifert matrices, pure braids, string links "
               "and braid closures",
               "sequiv"};
  app.footer(formats_help);
  app.require_subcommand(1);

  std::function<Verdict()> action;

  // ---- mat ---------------------------------------------------------------
  auto *mat = app.add_subcommand("mat", "Seifert matrix invariants and S-equivalence moves");
  mat->require_subcommand(1);

  std::string file1, file2, file3;
  auto *inv = mat->add_subcommand("invariants", "Alexander polynomial, signature, determinant, Arf");
  inv->add_option("file", file1, "matrix file")->required();
  inv->callback([&] {
    action = [&] {
      Verdict v;
      detail::add_invariants(v, detail::load_seifert(file1));
      return v;
    };
  });

  std::string out_a, out_n;
  auto *stdz = mat->add_subcommand("standardize", "unimodular A and N = A M A^T with N - N^T = X_g");
  stdz->add_option("file", file1, "matrix file")->required();
  stdz->add_option("--out-a", out_a, "write A to this file");
  stdz->add_option("--out-n", out_n, "write N to this file");
  stdz->callback([&] {
    action = [&] {
      const auto s = standardize(detail::load_seifert(file1));
      Verdict v;
      v.add("genus", std::to_string(s.form.genus()));
      v.attach("A", text::format_matrix(s.basis));
      v.attach("N", text::format_matrix(s.form.matrix()));
      if (!out_a.empty())
        detail::write_file(out_a, text::format_matrix(s.basis));
      if (!out_n.empty())
        detail::write_file(out_n, text::format_matrix(s.form.matrix()));
      return v;
    };
  });

  std::string form = "column", vec;
  long long diag = 0;
  auto *enl = mat->add_subcommand("enlarge", "column or row enlargement by two");
  enl->add_option("file", file1, "matrix file")->required();
  enl->add_option("--form", form, "column or row")->check(CLI::IsMember({"column", "row"}));
  enl->add_option("--vector", vec, "the new column (xi) or row (eta), space separated; default 0");
  enl->add_option("--x", diag, "new diagonal entry");
  enl->callback([&] {
    action = [&] {
      const SeifertMatrix m = detail::load_seifert(file1);
      std::vector<Integer> v = detail::parse_vector(vec);
      if (vec.empty())
        v.assign(m.size(), 0);
      const SeifertMatrix e = form == "column" ? column_enlarge(m, v, diag) : row_enlarge(m, v, diag);
      Verdict verdict;
      verdict.add("size", std::to_string(e.size()));
      verdict.attach("matrix", text::format_matrix(e.matrix()));
      return verdict;
    };
  });

  auto *red = mat->add_subcommand("reduce", "strip one visible enlargement block");
  red->add_option("file", file1, "matrix file")->required();
  red->callback([&] {
    action = [&] {
      const SeifertMatrix m = detail::load_seifert(file1);
      Verdict v;
      auto site = find_reduction(m.matrix());
      v.add("reducible", detail::yes_no(site.has_value()));
      if (site) {
        v.add("form", site->form == ReductionSite::Form::column ? "column" : "row");
        v.add("pair", std::to_string(site->u + 1) + "," + std::to_string(site->v + 1));
        v.attach("matrix", text::format_matrix(m.matrix().without({site->u, site->v})));
      }
      return v;
    };
  });

  std::size_t max_size = 0, max_nodes = 200000;
  long long max_entry = 0;
  auto *seq = mat->add_subcommand("sequiv", "bounded search for an S-equivalence witness");
  seq->add_option("file1", file1, "first matrix")->required();
  seq->add_option("file2", file2, "second matrix")->required();
  seq->add_option("--max-size", max_size, "largest matrix size explored (0: inputs + 2)");
  seq->add_option("--max-entry", max_entry, "largest |entry| explored (0: inputs + 1)");
  seq->add_option("--max-nodes", max_nodes, "node budget");
  seq->callback([&] {
    action = [&] {
      SearchBudget budget{max_size, Integer(max_entry), max_nodes};
      const auto r =
          bounded_sequiv_search(detail::load_seifert(file1), detail::load_seifert(file2), budget);
      Verdict v;
      switch (r.status) {
      case SequivVerdict::Status::distinct:
        v.status = Verdict::Status::distinct;
        v.detail.push_back("distinct (" + r.reason + ")");
        v.machine.emplace_back("reason", r.reason);
        break;
      case SequivVerdict::Status::equivalent:
        v.status = Verdict::Status::equivalent;
        v.add("steps", std::to_string(r.witness.size()));
        for (std::size_t k = 0; k < r.witness.size(); ++k)
          v.add("move" + std::to_string(k + 1), r.witness[k].describe());
        break;
      case SequivVerdict::Status::unknown:
        v.status = Verdict::Status::unknown;
        v.add("reason", r.reason);
        break;
      }
      v.add("nodes", std::to_string(r.nodes));
      return v;
    };
  });

  // ---- braid -------------------------------------------------------------
  auto *braid = app.add_subcommand("braid", "pure braid words and delta moves");
  braid->require_subcommand(1);
  auto *blk = braid->add_subcommand("lk", "pairwise linking numbers");
  blk->add_option("file", file1, "pure braid file")->required();
  blk->callback([&] {
    action = [&] {
      const auto w = text::parse_pure_braid(text::read_file(file1));
      Verdict v;
      v.add("strands", std::to_string(w.strands()));
      v.add("linking", detail::linking_table(linking_matrix(w)));
      return v;
    };
  });
  auto *btriv = braid->add_subcommand("delta-trivial", "undoable by delta moves?");
  btriv->add_option("file", file1, "pure braid file")->required();
  btriv->callback([&] {
    action = [&] {
      const auto w = text::parse_pure_braid(text::read_file(file1));
      Verdict v;
      v.add("delta_trivial", detail::yes_no(is_delta_trivial(w)));
      return v;
    };
  });
  auto *beq = braid->add_subcommand("delta-equiv", "related by delta moves?");
  beq->add_option("file1", file1, "first pure braid")->required();
  beq->add_option("file2", file2, "second pure braid")->required();
  beq->callback([&] {
    action = [&] {
      const auto a = text::parse_pure_braid(text::read_file(file1));
      const auto b = text::parse_pure_braid(text::read_file(file2));
      Verdict v;
      v.add("delta_equivalent", detail::yes_no(delta_equivalent(a, b)));
      return v;
    };
  });

  // ---- slink -------------------------------------------------------------
  auto *slink = app.add_subcommand("slink", "doubled string links");
  slink->require_subcommand(1);
  auto *slk = slink->add_subcommand("lk", "string-link pairwise linking numbers");
  slk->add_option("file", file1, "string link file")->required();
  slk->callback([&] {
    action = [&] {
      const auto l = text::parse_string_link(text::read_file(file1));
      Verdict v;
      v.add("linking", detail::linking_table(pairwise_linking(l)));
      v.add("braid_linking", detail::linking_table(linking_matrix(l.braid())));
      return v;
    };
  });
  auto *snorm = slink->add_subcommand("normalize", "clear all braid-level linking numbers");
  snorm->add_option("file", file1, "string link file")->required();
  snorm->callback([&] {
    action = [&] {
      const auto l = normalize_linking(text::parse_string_link(text::read_file(file1)));
      Verdict v;
      v.add("delta_trivial", detail::yes_no(is_delta_trivial(l.braid())));
      v.add("letters", std::to_string(l.braid().length()));
      v.attach("string link", text::format_string_link(l));
      return v;
    };
  });
  auto *seq2 = slink->add_subcommand("delta-equiv", "related by delta moves (with framings)?");
  seq2->add_option("file1", file1, "first string link")->required();
  seq2->add_option("file2", file2, "second string link")->required();
  seq2->callback([&] {
    action = [&] {
      const auto a = text::parse_string_link(text::read_file(file1));
      const auto b = text::parse_string_link(text::read_file(file2));
      Verdict v;
      v.add("delta_equivalent", detail::yes_no(delta_equivalent_links(a, b)));
      return v;
    };
  });

  // ---- std ---------------------------------------------------------------
  auto *stdf = app.add_subcommand("std", "standard disk-band form");
  stdf->require_subcommand(1);
  auto *todb = stdf->add_subcommand("to-disk-band", "standardized matrix to disk-band data");
  todb->add_option("file", file1, "standardized matrix file")->required();
  todb->callback([&] {
    action = [&] {
      const auto d = to_disk_band(detail::load_seifert(file1));
      Verdict v;
      v.add("genus", std::to_string(d.genus));
      v.attach("disk band", text::format_disk_band(d));
      return v;
    };
  });
  auto *fromdb = stdf->add_subcommand("from-disk-band", "disk-band data to standardized matrix");
  fromdb->add_option("file", file1, "disk band file")->required();
  fromdb->callback([&] {
    action = [&] {
      const auto n = from_disk_band(text::parse_disk_band(text::read_file(file1)));
      Verdict v;
      v.add("genus", std::to_string(n.genus()));
      v.attach("matrix", text::format_matrix(n.matrix()));
      return v;
    };
  });
  auto *wit = stdf->add_subcommand("witness", "symplectic transition between two standardizations");
  wit->add_option("m", file1, "Seifert matrix M")->required();
  wit->add_option("a1", file2, "first basis change A1")->required();
  wit->add_option("a2", file3, "second basis change A2")->required();
  wit->callback([&] {
    action = [&] {
      const auto w = theorem_a_witness(detail::load_seifert(file1),
                                       text::parse_matrix(text::read_file(file2)),
                                       text::parse_matrix(text::read_file(file3)));
      Verdict v;
      v.add("symplectic", "yes");
      v.add("framings_match", detail::yes_no(w.framings_match));
      v.add("linking_match", detail::yes_no(w.linking_match));
      v.add("string_links_delta_equivalent", detail::yes_no(w.string_links_delta_equivalent));
      v.attach("C", text::format_matrix(w.transition));
      v.attach("disk band (N1)", text::format_disk_band(w.form1));
      v.attach("disk band (C N2 C^T)", text::format_disk_band(w.form2_rebased));
      return v;
    };
  });

  // ---- closure -----------------------------------------------------------
  auto *clo = app.add_subcommand("closure", "knots as closed braids");
  clo->require_subcommand(1);
  auto *cs = clo->add_subcommand("seifert", "Seifert matrix of the closure");
  cs->add_option("file", file1, "braid word file")->required();
  cs->callback([&] {
    action = [&] {
      const auto m = seifert_matrix(text::parse_artin_braid(text::read_file(file1)));
      Verdict v;
      detail::add_invariants(v, m);
      v.attach("matrix", text::format_matrix(m.matrix()));
      return v;
    };
  });
  auto *ca = clo->add_subcommand("alexander", "Alexander polynomial by both routes");
  ca->add_option("file", file1, "braid word file")->required();
  ca->callback([&] {
    action = [&] {
      const auto w = text::parse_artin_braid(text::read_file(file1));
      const auto via_seifert = alexander(seifert_matrix(w));
      const auto via_burau = burau_alexander(w);
      Verdict v;
      v.add("seifert", via_seifert.to_string());
      v.add("burau", via_burau.to_string());
      v.add("agree", detail::yes_no(via_seifert == via_burau));
      return v;
    };
  });

  // ---- corpus ------------------------------------------------------------
  CorpusOptions corpus_opts;
  auto *corpus = app.add_subcommand("corpus", "deterministic braid-closure corpus");
  corpus->require_subcommand(1);
  auto *gen = corpus->add_subcommand("generate", "knot-closure braid words with invariants");
  gen->add_option("--n", corpus_opts.max_strands, "largest strand count");
  gen->add_option("--maxlen", corpus_opts.max_length, "largest word length");
  gen->add_option("--count", corpus_opts.count, "number of distinct words");
  gen->add_option("--seed", corpus_opts.seed, "64-bit seed")
      ->default_str(std::to_string(default_corpus_seed));
  gen->callback([&] {
    action = [&] {
      const auto words = generate_corpus(corpus_opts);
      Verdict v;
      std::size_t agree = 0;
      std::string table = "n\tword\tsize\talexander\tsignature\tdeterminant\tarf\tagree\n";
      for (const auto &w : words) {
        const auto m = seifert_matrix(w);
        const auto delta = alexander(m);
        const bool same = delta == burau_alexander(w);
        agree += same ? 1 : 0;
        std::string letters;
        for (int x : w.letters())
          letters += (letters.empty() ? "" : " ") + std::to_string(x);
        table += std::to_string(w.strands()) + "\t" + letters + "\t" + std::to_string(m.size()) +
                 "\t" + delta.to_string() + "\t" + std::to_string(knot_signature(m)) + "\t" +
                 knot_determinant(m).str() + "\t" + std::to_string(arf(m)) + "\t" +
                 detail::yes_no(same) + "\n";
      }
      v.add("seed", std::to_string(corpus_opts.seed));
      v.add("words", std::to_string(words.size()));
      v.add("agreeing", std::to_string(agree));
      v.attach("table", table);
      return v;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return exit_invalid;
  }

  try {
    const Verdict v = action();
    print(v, out);
    return v.status == Verdict::Status::unknown ? exit_undecided : exit_ok;
  } catch (const precondition_error &e) {
    err << "error: " << e.what() << '\n';
  } catch (const parse_error &e) {
    err << "error: " << e.what() << '\n';
  }
  Verdict bad;
  bad.status = Verdict::Status::invalid_input;
  print(bad, out);
  return exit_invalid;
}

} // namespace sequiv::cli
