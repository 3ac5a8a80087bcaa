#include "cli_impl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quiverpath/fock.hpp"
#include "quiverpath/json_io.hpp"
#include "quiverpath/multisegments.hpp"
#include "quiverpath/partitions.hpp"
#include "quiverpath/paths.hpp"
#include "quiverpath/quiverlab.hpp"
#include "quiverpath/verify.hpp"
#include "quiverpath/weights.hpp"

namespace quiverpath::cli {
namespace {

Json read_json_input(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(file),
                std::istreambuf_iterator<char>());
  }
  return Json::parse(text);
}

bool weakly_increasing(const std::vector<long long>& charges) {
  return std::is_sorted(charges.begin(), charges.end());
}

struct EnumerateConfig {
  int n = 1;
  std::vector<long long> charges = {0};
  long long max_energy = 0;
  long long max_size = 0;
  bool gl = false;
  bool inf = false;
  std::string format = "tsv";
};

int cmd_enumerate(const EnumerateConfig& cfg, std::ostream& out) {
  if (cfg.inf) {
    std::vector<std::vector<YoungDiagram>> by_size;
    for (long long s = 0; s <= cfg.max_size; ++s)
      by_size.push_back(partitions_of(static_cast<int>(s)));
    std::vector<MayaTuple> rows;
    std::vector<ChargedMaya> entries(cfg.charges.size());
    std::function<void(std::size_t, long long)> rec = [&](std::size_t j,
                                                          long long left) {
      if (j == cfg.charges.size()) {
        MayaTuple m(SegmentMode::infinite(), entries);
        if (tuple_is_chain(m)) rows.push_back(std::move(m));
        return;
      }
      for (long long s = 0; s <= left; ++s)
        for (const YoungDiagram& y : by_size[static_cast<std::size_t>(s)]) {
          entries[j] = ChargedMaya(y, cfg.charges[j]);
          rec(j + 1, left - s);
        }
    };
    rec(0, cfg.max_size);
    std::sort(rows.begin(), rows.end(),
              [](const MayaTuple& a, const MayaTuple& b) {
                if (a.total_size() != b.total_size())
                  return a.total_size() < b.total_size();
                return a < b;
              });
    if (cfg.format == "json") {
      Json arr = Json::array();
      for (const MayaTuple& m : rows)
        arr.push_back({{"tuple", to_json(m)}, {"size", m.total_size()}});
      out << arr.dump() << "\n";
    } else {
      for (const MayaTuple& m : rows)
        out << to_json(m).dump() << "\t" << m.total_size() << "\n";
    }
    return 0;
  }

  const HighestWeight hw(cfg.n, cfg.charges);
  const std::vector<MayaTuple> rows =
      enumerate_components(hw, cfg.max_energy, !cfg.gl);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const MayaTuple& m : rows) {
      const DimVector v = dim_vector(segments_of_tuple(m));
      arr.push_back({{"tuple", to_json(m)},
                     {"weight", to_json(geometric_weight(hw, v))},
                     {"energy", v.at(0)}});
    }
    out << arr.dump() << "\n";
  } else {
    for (const MayaTuple& m : rows) {
      const DimVector v = dim_vector(segments_of_tuple(m));
      out << to_json(m).dump() << "\t" << geometric_weight(hw, v).tsv() << "\t"
          << v.at(0) << "\n";
    }
  }
  return 0;
}

struct CharacterConfig {
  int n = 1;
  std::vector<long long> charges = {0};
  long long max_energy = 0;
  std::string format = "tsv";
};

int cmd_character(const CharacterConfig& cfg, std::ostream& out,
                  std::ostream& err) {
  const HighestWeight hw(cfg.n, cfg.charges);
  std::map<AffineWeight, long long> tuple_side;
  for (const MayaTuple& m : enumerate_components(hw, cfg.max_energy, true))
    ++tuple_side[geometric_weight(hw, dim_vector(segments_of_tuple(m)))];
  std::map<AffineWeight, long long> path_side;
  for (const LevelPath& eta : enumerate_paths(hw, cfg.max_energy))
    ++path_side[path_weight(eta)];

  if (tuple_side != path_side) {
    std::map<AffineWeight, std::pair<long long, long long>> merged;
    for (const auto& [w, count] : tuple_side) merged[w].first = count;
    for (const auto& [w, count] : path_side) merged[w].second = count;
    for (const auto& [w, counts] : merged)
      if (counts.first != counts.second) {
        err << "character tables disagree at weight " << w.tsv()
            << ": tuples=" << counts.first << " paths=" << counts.second
            << "\n";
        return 1;
      }
  }

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& [w, count] : tuple_side)
      arr.push_back({{"weight", to_json(w)}, {"multiplicity", count}});
    out << arr.dump() << "\n";
  } else {
    for (const auto& [w, count] : tuple_side)
      out << w.tsv() << "\t" << count << "\n";
  }
  return 0;
}

struct VerifyConfig {
  std::uint64_t seed = 1;
  int jobs = 1;
  bool corrupt = false;
  std::string format = "tsv";
};

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  verify::Options opts;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  if (cfg.corrupt)
    opts.diagonal_override = [](const YoungDiagram& y, int rank, long long k) {
      return -delta_weight(y, rank, k);
    };
  const std::vector<verify::PropertyResult> results = verify::run_all(opts);
  bool all_pass = true;
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const verify::PropertyResult& r : results) {
      Json row = {{"property", r.name}, {"pass", r.pass}, {"cases", r.cases}};
      if (!r.pass) row["counterexample"] = r.counterexample;
      arr.push_back(std::move(row));
      all_pass = all_pass && r.pass;
    }
    out << arr.dump() << "\n";
  } else {
    for (const verify::PropertyResult& r : results) {
      out << r.name << "\t" << (r.pass ? "pass" : "fail") << "\t" << r.cases;
      if (!r.pass) out << "\t" << r.counterexample;
      out << "\n";
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

struct FockConfig {
  std::vector<std::string> word;
  std::string start_path;
  std::string format = "tsv";
};

bool parse_fock_token(const std::string& token, char& op, long long& k) {
  if (token.size() < 2) return false;
  op = token[0];
  if (op != 'E' && op != 'F' && op != 'H') return false;
  errno = 0;
  char* end = nullptr;
  const long long value = std::strtoll(token.c_str() + 1, &end, 10);
  if (end == nullptr || *end != '\0' || end == token.c_str() + 1 ||
      errno == ERANGE)
    return false;
  k = value;
  return true;
}

int cmd_fock(const FockConfig& cfg, std::istream& in, std::ostream& out,
             std::ostream& err) {
  FockVector v = cfg.start_path.empty()
                     ? FockVector::basis(YoungDiagram())
                     : fock_from_json(read_json_input(cfg.start_path, in));
  for (auto it = cfg.word.rbegin(); it != cfg.word.rend(); ++it) {
    char op = 0;
    long long k = 0;
    if (!parse_fock_token(*it, op, k)) {
      err << "bad operator token \"" << *it
          << "\", expected E, F or H followed by an integer\n";
      return 2;
    }
    if (op == 'E')
      v = e_op(k, v);
    else if (op == 'F')
      v = f_op(k, v);
    else
      v = h_op(k, v);
  }
  if (cfg.format == "json") {
    out << to_json(v).dump() << "\n";
  } else {
    for (const auto& [y, coeff] : v.terms())
      out << to_json(y).dump() << "\t" << coeff.get_str() << "\n";
  }
  return 0;
}

int cmd_lift(const std::string& input, std::istream& in, std::ostream& out) {
  const LevelPath eta = path_from_json(read_json_input(input, in));
  out << to_json(highest_lift(eta)).dump() << "\n";
  return 0;
}

int cmd_reduce(int n, const std::string& input, std::istream& in,
               std::ostream& out) {
  const MayaTuple m =
      tuple_from_json(read_json_input(input, in), SegmentMode::cyclic(n));
  out << to_json(n_reduce(m)).dump() << "\n";
  return 0;
}

struct QuiverCheckConfig {
  std::string input = "-";
  std::vector<long long> charges = {0};
  std::uint64_t seed = 1;
  std::string format = "tsv";
};

int cmd_quiver_check(const QuiverCheckConfig& cfg, std::istream& in,
                     std::ostream& out) {
  const SegmentMultiset f = segments_from_json(read_json_input(cfg.input, in));
  const std::optional<MayaTuple> decomposed = canonical_tuple(f, cfg.charges);
  DimVector w = f.mode().is_cyclic() ? DimVector::cyclic(f.mode().rank())
                                     : DimVector::infinite();
  for (const long long g : cfg.charges) w.add(g, 1);

  const QuiverRep base = build_rep(f);
  std::vector<std::pair<std::uint64_t, bool>> verdicts;
  std::optional<QuiverRep> first_sample;
  int stable_count = 0;
  for (int k = 1; k <= 20; ++k) {
    const std::uint64_t seed =
        (cfg.seed - 1) * 20 + static_cast<std::uint64_t>(k);
    QuiverRep x = conormal_sample(base, seed);
    const bool stable = stability_test(x, w);
    if (stable) ++stable_count;
    verdicts.emplace_back(seed, stable);
    if (!first_sample) first_sample = std::move(x);
  }

  if (cfg.format == "json") {
    Json seeds = Json::array();
    for (const auto& [seed, stable] : verdicts)
      seeds.push_back({{"seed", seed}, {"stable", stable}});
    const Json report = {{"charges", cfg.charges},
                         {"decomposes", decomposed.has_value()},
                         {"stable_seeds", stable_count},
                         {"seeds", std::move(seeds)},
                         {"sample", to_json(*first_sample)}};
    out << report.dump() << "\n";
  } else {
    for (const auto& [seed, stable] : verdicts)
      out << "sample\t" << seed << "\t" << (stable ? "stable" : "unstable")
          << "\n";
    out << "summary\tdecomposes\t" << (decomposed ? "yes" : "no") << "\n";
    out << "summary\tstable_majority\t" << (stable_count >= 11 ? "yes" : "no")
        << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Affine type A basis toolkit: path model enumeration, Fock operators "
      "and quiver variety checks."};
  app.require_subcommand(1);

  EnumerateConfig ecfg;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate",
      "List basis elements as Maya tuples. TSV columns: tuple JSON, weight "
      "u_0,...,u_n;deg, energy. With --inf: tuple JSON, total size.");
  enumerate->add_option("--n", ecfg.n, "cyclic rank, vertex count n+1")
      ->check(CLI::PositiveNumber);
  enumerate
      ->add_option("--charges", ecfg.charges,
                   "weakly increasing charge list, one per level")
      ->delimiter(',');
  CLI::Option* e_energy =
      enumerate
          ->add_option("--max-energy", ecfg.max_energy,
                       "energy bound for cyclic enumeration")
          ->check(CLI::NonNegativeNumber);
  CLI::Option* e_size =
      enumerate
          ->add_option("--max-size", ecfg.max_size,
                       "total size bound, infinite mode only")
          ->check(CLI::NonNegativeNumber);
  CLI::Option* e_gl = enumerate->add_flag(
      "--gl", ecfg.gl, "enumerate all chain tuples, not only reduced ones");
  CLI::Option* e_reduced = enumerate->add_flag(
      "--reduced", "enumerate reduced chain tuples (the default)");
  e_gl->excludes(e_reduced);
  CLI::Option* e_inf = enumerate->add_flag(
      "--inf", ecfg.inf, "infinite chain mode, bounded by --max-size");
  enumerate->add_option("--format", ecfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  CharacterConfig ccfg;
  CLI::App* character = app.add_subcommand(
      "character",
      "Per-weight multiplicity table, computed from tuples and from paths "
      "and compared. TSV columns: weight u_0,...,u_n;deg, multiplicity.");
  character->add_option("--n", ccfg.n, "cyclic rank")
      ->check(CLI::PositiveNumber);
  character
      ->add_option("--charges", ccfg.charges,
                   "weakly increasing charge list, one per level")
      ->delimiter(',');
  character
      ->add_option("--max-energy", ccfg.max_energy, "energy bound")
      ->check(CLI::NonNegativeNumber);
  character->add_option("--format", ccfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  VerifyConfig vcfg;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify",
      "Run the named property suites. TSV columns: property, pass or fail, "
      "cases checked, counterexample when failing.");
  verify_cmd->add_option("--seed", vcfg.seed, "base seed for sampled suites")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--jobs", vcfg.jobs, "suites run concurrently")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--corrupt", vcfg.corrupt,
                       "flip the sign of the diagonal eigenvalue, a fault "
                       "injection self test");
  verify_cmd->add_option("--format", vcfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  FockConfig fcfg;
  CLI::App* fock = app.add_subcommand(
      "fock",
      "Apply an operator word, rightmost factor first, to the vacuum or to "
      "--start. Tokens look like F0, E-1, H2. TSV columns: diagram JSON, "
      "rational coefficient.");
  fock->add_option("word", fcfg.word, "operator tokens, leftmost applied last")
      ->required()
      ->expected(-1);
  fock->add_option("--start", fcfg.start_path,
                   "JSON file with the start vector, - for stdin");
  fock->add_option("--format", fcfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string lift_input = "-";
  CLI::App* lift = app.add_subcommand(
      "lift",
      "Read a level path as JSON and print its highest lift as a Maya tuple.");
  lift->add_option("input", lift_input, "JSON file, - for stdin");

  int reduce_n = 0;
  std::string reduce_input = "-";
  CLI::App* reduce = app.add_subcommand(
      "reduce",
      "Read a cyclic Maya tuple as a bare JSON entry array and print its "
      "reduction.");
  reduce->add_option("--n", reduce_n, "cyclic rank of the tuple")
      ->required()
      ->check(CLI::PositiveNumber);
  reduce->add_option("input", reduce_input, "JSON file, - for stdin");

  QuiverCheckConfig qcfg;
  CLI::App* quiver_check = app.add_subcommand(
      "quiver-check",
      "Sample conormal points of a segment multiset and test stability "
      "against the framing of the given charges. TSV columns: kind, key, "
      "value.");
  quiver_check->add_option("input", qcfg.input,
                           "segment multiset JSON file, - for stdin");
  quiver_check
      ->add_option("--charges", qcfg.charges, "weakly increasing charge list")
      ->delimiter(',');
  quiver_check->add_option("--seed", qcfg.seed, "base seed for the 20 samples")
      ->check(CLI::PositiveNumber);
  quiver_check->add_option("--format", qcfg.format, "output format")
      ->check(CLI::IsMember({"tsv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) {
      if (!weakly_increasing(ecfg.charges)) {
        err << "charges must be weakly increasing\n";
        return 2;
      }
      if (ecfg.inf) {
        if (e_gl->count() > 0 || e_reduced->count() > 0) {
          err << "reduction flags apply to cyclic mode only\n";
          return 2;
        }
        if (e_energy->count() > 0) {
          err << "infinite mode is bounded by --max-size, not --max-energy\n";
          return 2;
        }
        if (e_size->count() == 0) {
          err << "infinite mode requires --max-size\n";
          return 2;
        }
      } else if (e_size->count() > 0) {
        err << "--max-size applies to infinite mode only\n";
        return 2;
      }
      return cmd_enumerate(ecfg, out);
    }
    if (character->parsed()) {
      if (!weakly_increasing(ccfg.charges)) {
        err << "charges must be weakly increasing\n";
        return 2;
      }
      return cmd_character(ccfg, out, err);
    }
    if (verify_cmd->parsed()) return cmd_verify(vcfg, out);
    if (fock->parsed()) return cmd_fock(fcfg, in, out, err);
    if (lift->parsed()) return cmd_lift(lift_input, in, out);
    if (reduce->parsed()) return cmd_reduce(reduce_n, reduce_input, in, out);
    if (quiver_check->parsed()) {
      if (!weakly_increasing(qcfg.charges)) {
        err << "charges must be weakly increasing\n";
        return 2;
      }
      return cmd_quiver_check(qcfg, in, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n";
  return 2;
}

}  // namespace quiverpath::cli
