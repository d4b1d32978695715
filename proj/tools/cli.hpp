#pragma once

// bqtool front end. run() is kept separate from main() so tests can drive it
// with in-memory streams.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bq/bq.hpp"

namespace bqtool {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bq::ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "m,s,t"
inline std::array<std::int64_t, 3> parse_alexander_params(const std::string& text) {
  std::array<std::int64_t, 3> out{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) throw bq::ParseError("--alexander takes exactly m,s,t");
    try {
      std::size_t used = 0;
      out[k] = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw bq::ParseError("--alexander: '" + item + "' is not an integer");
    }
    ++k;
  }
  if (k != 3) throw bq::ParseError("--alexander takes exactly m,s,t");
  return out;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biquandle invariants of virtual braids and presentations", "bqtool"};
  app.require_subcommand(1);

  std::string braid, presentation_file, tables_file, alexander, op;
  bool down = false, force = false, kishino = false, verbose = false;
  std::int64_t prime = 3, quaternionic = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 0;

  auto* present = app.add_subcommand("present", "print the closure presentation of a braid");
  present->add_option("--braid", braid, "braid word, e.g. \"n=2; v1 s1\"")->required();
  present->add_flag("--down", down, "read the braid with the downward morphisms");

  auto* gapc = app.add_subcommand("gap", "print the normalized generalized Alexander polynomial");
  auto* gap_braid = gapc->add_option("--braid", braid, "braid word");
  auto* gap_pres = gapc->add_option("--presentation", presentation_file, "presentation file");
  gap_braid->excludes(gap_pres);
  gapc->require_option(1);

  auto* axioms = app.add_subcommand("axioms", "check the biquandle axioms on a finite biquandle");
  auto* ax_alex = axioms->add_option("--alexander", alexander, "Z_m with units s,t, as m,s,t");
  auto* ax_quat = axioms->add_option("--quaternionic", quaternionic, "quaternions over Z_p");
  auto* ax_tab = axioms->add_option("--tables", tables_file, "JSON operation tables");
  ax_alex->excludes(ax_quat)->excludes(ax_tab);
  ax_quat->excludes(ax_tab);
  axioms->require_option(1, 2);
  axioms->add_flag("--force", force, "run the cubic axiom-5 check on large carriers");

  auto* qcheck = app.add_subcommand("qcheck", "quaternionic mod-p module triviality test");
  auto* q_pres = qcheck->add_option("--presentation", presentation_file, "presentation file");
  auto* q_kish = qcheck->add_flag("--kishino", kishino, "run the built-in Kishino certificate");
  qcheck->add_option("--prime", prime, "odd prime (default 3)");
  qcheck->add_flag("--verbose", verbose, "print the relations and intermediate steps");
  q_pres->excludes(q_kish);

  auto* inv = app.add_subcommand("invariance", "random walk of equivalence moves, checking G_K");
  inv->add_option("--braid", braid, "starting braid word")->required();
  inv->add_option("--trials", trials, "number of moves (default 100)");
  inv->add_option("--seed", seed, "random seed")->required();

  auto* conv = app.add_subcommand("convert", "transform a braid word");
  conv->add_option("--braid", braid, "braid word")->required();
  conv->add_option("--op", op, "transformation")
      ->required()
      ->check(CLI::IsMember({"invert", "mirror", "ad", "reduce"}));

  std::vector<const char*> argv{"bqtool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (present->parsed()) {
      const auto w = bq::parse_braid_word(braid);
      out << bq::render_presentation(down ? bq::presentation_from_braid_down(w) : bq::presentation_from_braid(w));
    } else if (gapc->parsed()) {
      if (!gap_braid->empty())
        out << bq::gap(bq::parse_braid_word(braid)) << '\n';
      else
        out << bq::gap(bq::parse_presentation(read_file(presentation_file))) << '\n';
    } else if (axioms->parsed()) {
      bq::FiniteBiquandle B = !ax_alex->empty()   ? [&] {
        const auto [m, s, t] = parse_alexander_params(alexander);
        return bq::finite_alexander_biquandle(m, s, t);
      }()
                              : !ax_quat->empty() ? bq::finite_quaternionic_biquandle(quaternionic)
                                                  : bq::parse_finite_biquandle_json(read_file(tables_file));
      bq::AxiomOptions opts;
      opts.force = force;
      out << bq::render_axiom_report(bq::check_axioms(B, opts));
    } else if (qcheck->parsed()) {
      if (kishino) {
        const auto cert = bq::kishino_certificate(prime);
        out << (verbose ? bq::render_kishino_certificate(cert) : bq::render_module_verdict(cert.module) + "\n");
      } else if (!q_pres->empty()) {
        const auto p = bq::parse_presentation(read_file(presentation_file));
        const auto rels = bq::q_relations_from_presentation(p);
        const auto report = bq::module_report(rels, prime);
        if (verbose) out << bq::render_q_relations(bq::reduce_mod_p(rels, prime));
        out << bq::render_module_verdict(report) << '\n';
      } else {
        err << "qcheck: one of --presentation or --kishino is required\n";
        return 1;
      }
    } else if (inv->parsed()) {
      const auto w = bq::parse_braid_word(braid);
      const auto r = bq::check_gap_invariance(w, trials, seed);
      if (!r.failure) {
        out << "PASS " << r.moves << " moves, G = " << r.baseline << '\n';
      } else {
        const auto& f = *r.failure;
        out << "FAIL at move " << f.step << " (" << f.move << ")\n"
            << "  before: " << bq::render_braid_word(f.before) << '\n'
            << "  after:  " << bq::render_braid_word(f.after) << '\n'
            << "  expected G = " << f.expected << '\n'
            << "  got G = " << f.got << '\n';
        return 2;
      }
    } else if (conv->parsed()) {
      const auto w = bq::parse_braid_word(braid);
      const auto r = op == "invert"   ? bq::invert_braid(w)
                     : op == "mirror" ? bq::vertical_mirror(w)
                     : op == "ad"     ? bq::ad_inversion(w)
                                      : bq::free_reduce(w);
      out << bq::render_braid_word(r) << '\n';
    }
  } catch (const bq::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const bq::DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

} // namespace bqtool
