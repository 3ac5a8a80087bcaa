#include "quiverpath/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiverpath/fock.hpp"
#include "quiverpath/multisegments.hpp"
#include "quiverpath/partitions.hpp"
#include "quiverpath/paths.hpp"
#include "quiverpath/quiverlab.hpp"
#include "quiverpath/weights.hpp"

namespace quiverpath::verify {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string parts_str(const YoungDiagram& y) {
  std::string out = "[";
  for (int i = 1; i <= y.rows(); ++i) {
    if (i > 1) out += ",";
    out += std::to_string(y.part(i));
  }
  return out + "]";
}

std::string segments_str(const SegmentMultiset& f) {
  std::string out = "{";
  bool first = true;
  for (const auto& [seg, mult] : f.support()) {
    if (!first) out += ", ";
    first = false;
    out += "[" + std::to_string(seg.lo) + "," + std::to_string(seg.hi) + "]";
    if (mult > 1) out += "x" + std::to_string(mult);
  }
  return out + "}";
}

std::string charges_str(const std::vector<long long>& charges) {
  std::string out = "(";
  for (std::size_t i = 0; i < charges.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(charges[i]);
  }
  return out + ")";
}

std::string steps_str(const LevelPath& eta) {
  std::string out;
  for (long long k = 0; k < eta.agreement_bound(); ++k) {
    if (k > 0) out += " ";
    const PathStep step = eta.step(k);
    out += "{";
    for (std::size_t i = 0; i < step.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(step[i]);
    }
    out += "}";
  }
  return out.empty() ? "ground" : out;
}

std::string tuple_str(const MayaTuple& m) {
  std::string out = "(";
  for (int j = 0; j < m.level(); ++j) {
    if (j > 0) out += ", ";
    out += parts_str(m.entries()[j].shape()) + "@" +
           std::to_string(m.entries()[j].charge());
  }
  return out + ")";
}

// Every multiset over the given segment types with total length at most
// budget, multiplicities varied in type order.
void for_each_multiset(SegmentMode mode, const std::vector<Segment>& types,
                       long long budget,
                       const std::function<void(const SegmentMultiset&)>& visit) {
  std::vector<long long> mult(types.size(), 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i,
                                                        long long left) {
    if (i == types.size()) {
      SegmentMultiset f(mode);
      for (std::size_t j = 0; j < types.size(); ++j)
        if (mult[j] > 0) f.add(types[j], mult[j]);
      visit(f);
      return;
    }
    const long long len = types[i].length();
    for (long long c = 0; c * len <= left; ++c) {
      mult[i] = c;
      rec(i + 1, left - c * len);
    }
    mult[i] = 0;
  };
  rec(0, budget);
}

std::vector<Segment> cyclic_types(int rank, long long budget) {
  std::vector<Segment> types;
  for (long long lo = 0; lo <= rank; ++lo)
    for (long long len = 1; len <= budget; ++len)
      types.emplace_back(lo, lo + len - 1);
  return types;
}

std::vector<Segment> window_types(long long wlo, long long whi) {
  std::vector<Segment> types;
  for (long long lo = wlo; lo <= whi; ++lo)
    for (long long hi = lo; hi <= whi; ++hi) types.emplace_back(lo, hi);
  return types;
}

bool inside_window(const SegmentMultiset& f, long long wlo, long long whi) {
  for (const auto& [seg, mult] : f.support())
    if (seg.lo < wlo || seg.hi > whi) return false;
  return true;
}

DimVector framing_vector(const HighestWeight& hw) {
  DimVector w = DimVector::cyclic(hw.rank());
  const std::vector<long long> counts = hw.residue_counts();
  for (std::size_t k = 0; k < counts.size(); ++k)
    w.add(static_cast<long long>(k), counts[k]);
  return w;
}

DimVector framing_vector_inf(const std::vector<long long>& charges) {
  DimVector w = DimVector::infinite();
  for (long long g : charges) w.add(g, 1);
  return w;
}

}  // namespace

PropertyResult energy_matches_base_dimension(const Options&) {
  PropertyResult r;
  r.name = "energy-matches-base-dimension";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const std::vector<YoungDiagram> shapes = partitions_up_to(16);
  for (int n = 1; n <= 3 && r.pass; ++n) {
    for (const YoungDiagram& y : shapes) {
      if (!y.is_n_reduced(n)) continue;
      ++r.cases;
      const long long omega = energy_level1(y, n);
      const long long v0 = dim_vector_level1(y, n).at(0);
      if (omega != v0) {
        r.pass = false;
        r.counterexample = "n=" + std::to_string(n) + " Y=" + parts_str(y) +
                           " energy=" + std::to_string(omega) +
                           " v_0=" + std::to_string(v0);
        break;
      }
    }
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult diagonal_matches_cartan_pairing(const Options& opts) {
  PropertyResult r;
  r.name = "diagonal-matches-cartan-pairing";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const std::vector<YoungDiagram> shapes = partitions_up_to(16);
  for (int n = 1; n <= 3 && r.pass; ++n) {
    const HighestWeight hw(n, {0});
    const std::vector<long long> base = hw.residue_counts();
    for (const YoungDiagram& y : shapes) {
      if (!y.is_n_reduced(n)) continue;
      const std::vector<long long> cv =
          cartan_apply(n, dim_vector_level1(y, n).residues());
      bool bad = false;
      for (long long k = 0; k <= n; ++k) {
        ++r.cases;
        const long long lhs = opts.diagonal_override
                                  ? opts.diagonal_override(y, n, k)
                                  : delta_weight(y, n, k);
        const long long rhs = base[static_cast<std::size_t>(k)] -
                              cv[static_cast<std::size_t>(k)];
        if (lhs != rhs) {
          r.pass = false;
          r.counterexample = "n=" + std::to_string(n) +
                             " k=" + std::to_string(k) + " Y=" + parts_str(y) +
                             " delta=" + std::to_string(lhs) +
                             " pairing=" + std::to_string(rhs);
          bad = true;
          break;
        }
      }
      if (bad) break;
    }
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult fock_commutation_relations(const Options&) {
  PropertyResult r;
  r.name = "fock-commutation-relations";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const std::vector<YoungDiagram> shapes = partitions_up_to(10);
  for (const YoungDiagram& y : shapes) {
    const FockVector v = FockVector::basis(y);
    for (long long k = -6; k <= 6 && r.pass; ++k) {
      const FockVector hv = h_op(k, v);
      for (long long l = -6; l <= 6; ++l) {
        ++r.cases;
        const FockVector ev = e_op(l, v);
        const FockVector ef_commutator = e_op(k, f_op(l, v)) - f_op(l, e_op(k, v));
        const FockVector diagonal = (k == l) ? hv : FockVector();
        if (ef_commutator != diagonal) {
          r.pass = false;
          r.counterexample = "[E,F] k=" + std::to_string(k) +
                             " l=" + std::to_string(l) + " Y=" + parts_str(y);
          break;
        }
        const FockVector he_commutator = h_op(k, ev) - e_op(l, hv);
        const FockVector scaled =
            mpq_class(static_cast<int>(cartan_inf(k, l))) * ev;
        if (he_commutator != scaled) {
          r.pass = false;
          r.counterexample = "[H,E] k=" + std::to_string(k) +
                             " l=" + std::to_string(l) + " Y=" + parts_str(y);
          break;
        }
      }
    }
    if (!r.pass) break;
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult single_charge_classification(const Options&) {
  PropertyResult r;
  r.name = "single-charge-classification";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const long long budget = 10;
  const std::vector<YoungDiagram> shapes =
      partitions_up_to(static_cast<int>(budget));

  struct Domain {
    SegmentMode mode;
    std::vector<Segment> types;
    std::vector<long long> single_charges;
    long long wlo = 0, whi = 0;  // infinite mode only
  };
  std::vector<Domain> domains;
  domains.push_back({SegmentMode::cyclic(1), cyclic_types(1, budget), {0, 1}});
  domains.push_back(
      {SegmentMode::cyclic(2), cyclic_types(2, budget), {0, 1, 2}});
  domains.push_back(
      {SegmentMode::infinite(), window_types(-2, 2), {0, 1}, -2, 2});

  for (const Domain& dom : domains) {
    for (const long long g : dom.single_charges) {
      // Decomposable multisets inside the domain, keyed by their segment
      // support; the row multiset determines the diagram, so the map is
      // injective.
      std::map<std::map<Segment, long long>, YoungDiagram> expected;
      for (const YoungDiagram& y : shapes) {
        const SegmentMultiset a = segments_of_charged_young(y, g, dom.mode);
        if (!dom.mode.is_cyclic() && !inside_window(a, dom.wlo, dom.whi))
          continue;
        expected.emplace(a.support(), y);
      }
      bool failed = false;
      for_each_multiset(dom.mode, dom.types, budget,
                        [&](const SegmentMultiset& f) {
        if (failed) return;
        ++r.cases;
        const auto it = expected.find(f.support());
        const bool member = it != expected.end();
        const std::optional<MayaTuple> got = canonical_tuple(f, {g});
        const std::string where =
            (dom.mode.is_cyclic() ? "n=" + std::to_string(dom.mode.rank())
                                  : std::string("inf")) +
            " g=" + std::to_string(g) + " f=" + segments_str(f);
        if (got.has_value() != member) {
          failed = true;
          r.counterexample = where + (member ? " decomposition missed"
                                             : " spurious decomposition");
          return;
        }
        if (!got) return;
        const YoungDiagram& shape = got->entries()[0].shape();
        if (shape != it->second) {
          failed = true;
          r.counterexample = where + " decomposed to " + parts_str(shape) +
                             " expected " + parts_str(it->second);
          return;
        }
        if (dom.mode.is_cyclic() &&
            is_aperiodic(f) != shape.is_n_reduced(dom.mode.rank())) {
          failed = true;
          r.counterexample =
              where + " aperiodicity disagrees with reduction of " +
              parts_str(shape);
        }
      });
      if (failed) {
        r.pass = false;
        r.seconds = elapsed_since(start);
        return r;
      }
    }
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult highest_lift_calculus(const Options&) {
  PropertyResult r;
  r.name = "highest-lift-calculus";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const int n = 1;
  // Exact-size partition lists, grown on demand.
  std::vector<std::vector<YoungDiagram>> by_size;
  const auto parts_of_size =
      [&by_size](long long s) -> const std::vector<YoungDiagram>& {
    while (static_cast<long long>(by_size.size()) <= s)
      by_size.push_back(partitions_of(static_cast<int>(by_size.size())));
    return by_size[static_cast<std::size_t>(s)];
  };

  const std::vector<std::vector<long long>> charge_lists = {{0, 0}, {0, 1}};
  for (const std::vector<long long>& charges : charge_lists) {
    const HighestWeight hw(n, charges);
    for (const LevelPath& eta : enumerate_paths(hw, 4)) {
      const std::string where =
          "charges=" + charges_str(charges) + " path=" + steps_str(eta);
      const MayaTuple top = highest_lift(eta);
      // Any lift reaches the reduced one by removing full runs of n+1 rows,
      // so lift sizes step by n+1; two extra runs of length one already give
      // strictly larger lifts when any exist.
      const long long cap = top.total_size() + 2 * (n + 1);
      std::vector<MayaTuple> lifts;
      for (long long s1 = 0; s1 <= cap; ++s1)
        for (const YoungDiagram& y1 : parts_of_size(s1))
          for (long long s2 = 0; s1 + s2 <= cap; ++s2)
            for (const YoungDiagram& y2 : parts_of_size(s2)) {
              MayaTuple m(SegmentMode::cyclic(n),
                          {ChargedMaya(y1, charges[0]),
                           ChargedMaya(y2, charges[1])});
              if (is_lift(m, eta)) lifts.push_back(std::move(m));
            }
      r.cases += static_cast<long long>(lifts.size());

      const MayaTuple* maximum = nullptr;
      int maxima = 0;
      for (const MayaTuple& m : lifts) {
        bool dominates_all = true;
        for (const MayaTuple& other : lifts)
          if (!tuple_leq(other, m)) {
            dominates_all = false;
            break;
          }
        if (dominates_all) {
          ++maxima;
          maximum = &m;
        }
      }
      if (maxima != 1) {
        r.pass = false;
        r.counterexample = where + " lifts=" + std::to_string(lifts.size()) +
                           " maxima=" + std::to_string(maxima);
        break;
      }
      if (*maximum != top) {
        r.pass = false;
        r.counterexample = where + " maximum " + tuple_str(*maximum) +
                           " differs from highest lift " + tuple_str(top);
        break;
      }
      if (!is_n_reduced_tuple(top) || !tuple_is_chain(top)) {
        r.pass = false;
        r.counterexample =
            where + " highest lift " + tuple_str(top) + " not reduced chain";
        break;
      }
      bool bad = false;
      for (const MayaTuple& m : lifts) {
        const MayaTuple reduced = n_reduce(m);
        if (!is_lift(reduced, eta) || !tuple_leq(m, reduced) ||
            reduced != top) {
          r.pass = false;
          r.counterexample =
              where + " reduction of " + tuple_str(m) + " misbehaves";
          bad = true;
          break;
        }
      }
      if (bad) break;
    }
    if (!r.pass) break;
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult weight_preserving_bijection(const Options&) {
  PropertyResult r;
  r.name = "weight-preserving-bijection";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const int n = 1;
  const std::vector<std::vector<long long>> charge_lists = {{0, 0}, {0, 1}};
  for (const std::vector<long long>& charges : charge_lists) {
    const HighestWeight hw(n, charges);
    const std::vector<MayaTuple> comps = enumerate_components(hw, 4, true);
    const std::vector<LevelPath> paths = enumerate_paths(hw, 4);
    const std::string where = "charges=" + charges_str(charges);

    std::map<AffineWeight, long long> comp_counts;
    for (const MayaTuple& m : comps)
      ++comp_counts[geometric_weight(hw, dim_vector(segments_of_tuple(m)))];
    const std::set<MayaTuple> comp_set(comps.begin(), comps.end());

    std::map<AffineWeight, long long> path_counts;
    for (const LevelPath& eta : paths) {
      ++r.cases;
      const AffineWeight w = path_weight(eta);
      ++path_counts[w];
      const MayaTuple top = highest_lift(eta);
      if (geometric_weight(hw, dim_vector(segments_of_tuple(top))) != w) {
        r.pass = false;
        r.counterexample = where + " path=" + steps_str(eta) +
                           " weight differs from its highest lift";
        break;
      }
      if (comp_set.find(top) == comp_set.end()) {
        r.pass = false;
        r.counterexample = where + " path=" + steps_str(eta) +
                           " highest lift " + tuple_str(top) +
                           " missing from components";
        break;
      }
    }
    if (!r.pass) break;
    if (comps.size() != paths.size()) {
      r.pass = false;
      r.counterexample = where + " components=" + std::to_string(comps.size()) +
                         " paths=" + std::to_string(paths.size());
      break;
    }
    if (comp_counts != path_counts) {
      r.pass = false;
      for (const auto& [w, count] : comp_counts) {
        const auto it = path_counts.find(w);
        const long long other = it == path_counts.end() ? 0 : it->second;
        if (count != other) {
          r.counterexample = where + " weight " + w.tsv() + " components=" +
                             std::to_string(count) +
                             " paths=" + std::to_string(other);
          break;
        }
      }
      if (r.counterexample.empty())
        r.counterexample = where + " per-weight counts differ";
      break;
    }
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult unreduced_enumeration_count(const Options&) {
  PropertyResult r;
  r.name = "unreduced-enumeration-count";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const HighestWeight hw(1, {0});
  const std::vector<MayaTuple> comps = enumerate_components(hw, 3, false);

  std::map<AffineWeight, long long> comp_counts;
  std::multiset<YoungDiagram> comp_shapes;
  for (const MayaTuple& m : comps) {
    ++comp_counts[geometric_weight(hw, dim_vector(segments_of_tuple(m)))];
    comp_shapes.insert(m.entries()[0].shape());
  }

  // Independent census: v_0 <= 3 bounds the whole diagram, since every odd
  // numbered row starts a residue 0 box (so at most six rows) and each row
  // has residue imbalance at most one (so |Y| <= 2 v_0 + rows <= 12).
  std::map<AffineWeight, long long> brute_counts;
  std::multiset<YoungDiagram> brute_shapes;
  for (const YoungDiagram& y : partitions_up_to(13)) {
    const DimVector v = dim_vector_level1(y, 1);
    if (v.at(0) > 3) continue;
    ++r.cases;
    ++brute_counts[geometric_weight(hw, v)];
    brute_shapes.insert(y);
  }

  if (comp_shapes != brute_shapes) {
    r.pass = false;
    r.counterexample = "component shapes differ from the diagram census, " +
                       std::to_string(comp_shapes.size()) + " vs " +
                       std::to_string(brute_shapes.size());
  } else if (comp_counts != brute_counts) {
    r.pass = false;
    for (const auto& [w, count] : brute_counts) {
      const auto it = comp_counts.find(w);
      const long long other = it == comp_counts.end() ? 0 : it->second;
      if (count != other) {
        r.counterexample = "weight " + w.tsv() + " census=" +
                           std::to_string(count) +
                           " components=" + std::to_string(other);
        break;
      }
    }
    if (r.counterexample.empty()) r.counterexample = "per-weight counts differ";
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult moment_map_exactness(const Options& opts) {
  PropertyResult r;
  r.name = "moment-map-exactness";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const long long budget = 7;

  struct Domain {
    SegmentMode mode;
    std::vector<Segment> types;
    std::string label;
  };
  std::vector<Domain> domains;
  domains.push_back({SegmentMode::cyclic(1), cyclic_types(1, budget), "n=1"});
  domains.push_back({SegmentMode::cyclic(2), cyclic_types(2, budget), "n=2"});
  domains.push_back({SegmentMode::infinite(), window_types(-1, 1), "inf"});

  for (const Domain& dom : domains) {
    bool failed = false;
    for_each_multiset(dom.mode, dom.types, budget,
                      [&](const SegmentMultiset& f) {
      if (failed) return;
      const QuiverRep base = build_rep(f);
      const long long nilpotency_length = base.total_dim() + 1;
      // Off the cycle every representation is nilpotent; on it exactly the
      // aperiodic multisets give components made of nilpotent elements.
      const bool expect_all_nilpotent =
          !dom.mode.is_cyclic() || is_aperiodic(f);
      int nilpotent_count = 0;
      for (int k = 1; k <= 20; ++k) {
        ++r.cases;
        const std::uint64_t seed =
            (opts.seed - 1) * 20 + static_cast<std::uint64_t>(k);
        const QuiverRep x = conormal_sample(base, seed);
        if (!moment_map(x).is_zero()) {
          failed = true;
          r.counterexample = dom.label + " f=" + segments_str(f) +
                             " seed=" + std::to_string(seed) +
                             " moment map nonzero";
          return;
        }
        if (is_nilpotent(x, nilpotency_length)) ++nilpotent_count;
      }
      if (expect_all_nilpotent && nilpotent_count != 20) {
        failed = true;
        r.counterexample = dom.label + " aperiodic f=" + segments_str(f) +
                           " nilpotent on " + std::to_string(nilpotent_count) +
                           "/20 seeds";
      } else if (!expect_all_nilpotent && nilpotent_count == 20) {
        failed = true;
        r.counterexample = dom.label + " periodic f=" + segments_str(f) +
                           " nilpotent on every seed";
      }
    });
    if (failed) {
      r.pass = false;
      break;
    }
  }
  r.seconds = elapsed_since(start);
  return r;
}

PropertyResult stability_agreement(const Options& opts) {
  PropertyResult r;
  r.name = "stability-agreement";
  r.pass = true;
  const Clock::time_point start = Clock::now();
  const long long budget = 7;
  const std::vector<std::vector<long long>> charge_lists = {
      {0}, {1}, {0, 0}, {0, 1}, {1, 1}};

  struct Domain {
    SegmentMode mode;
    std::vector<Segment> types;
    std::string label;
  };
  std::vector<Domain> domains;
  domains.push_back({SegmentMode::infinite(), window_types(-1, 1), "inf"});
  domains.push_back({SegmentMode::cyclic(1), cyclic_types(1, budget), "n=1"});

  for (const Domain& dom : domains) {
    for (const std::vector<long long>& charges : charge_lists) {
      const DimVector w = dom.mode.is_cyclic()
                              ? framing_vector(HighestWeight(1, charges))
                              : framing_vector_inf(charges);
      bool failed = false;
      for_each_multiset(dom.mode, dom.types, budget,
                        [&](const SegmentMultiset& f) {
        if (failed) return;
        const std::optional<MayaTuple> decomposed = canonical_tuple(f, charges);
        bool expected = decomposed.has_value();
        if (dom.mode.is_cyclic()) {
          // Periodic multisets are skipped: their conormal samples are
          // generically non nilpotent, so they leave the variety the
          // stability criterion classifies.  On the cycle survival further
          // needs the decomposition reduced.
          if (!is_aperiodic(f)) return;
          expected = expected && is_n_reduced_tuple(*decomposed);
        }
        ++r.cases;
        const QuiverRep base = build_rep(f);
        int agree = 0;
        for (int k = 1; k <= 20; ++k) {
          const std::uint64_t seed =
              (opts.seed - 1) * 20 + static_cast<std::uint64_t>(k);
          const QuiverRep x = conormal_sample(base, seed);
          if (stability_test(x, w) == expected) ++agree;
        }
        if (agree < 11) {
          failed = true;
          r.counterexample = dom.label + " charges=" + charges_str(charges) +
                             " f=" + segments_str(f) + " agree=" +
                             std::to_string(agree) + "/20 survives=" +
                             (expected ? "yes" : "no");
        }
      });
      if (failed) {
        r.pass = false;
        r.seconds = elapsed_since(start);
        return r;
      }
    }
  }
  r.seconds = elapsed_since(start);
  return r;
}

std::vector<PropertyResult> run_all(const Options& opts) {
  using SuiteFn = PropertyResult (*)(const Options&);
  static constexpr std::array<SuiteFn, 9> suites = {
      &energy_matches_base_dimension,
      &diagonal_matches_cartan_pairing,
      &fock_commutation_relations,
      &single_charge_classification,
      &highest_lift_calculus,
      &weight_preserving_bijection,
      &unreduced_enumeration_count,
      &moment_map_exactness,
      &stability_agreement,
  };
  std::vector<PropertyResult> results;
  const std::size_t wave = static_cast<std::size_t>(std::max(1, opts.jobs));
  for (std::size_t begin = 0; begin < suites.size(); begin += wave) {
    const std::size_t end = std::min(suites.size(), begin + wave);
    std::vector<std::future<PropertyResult>> futures;
    for (std::size_t i = begin; i < end; ++i)
      futures.push_back(
          std::async(std::launch::async, suites[i], std::cref(opts)));
    for (std::future<PropertyResult>& f : futures)
      results.push_back(f.get());
  }
  return results;
}

}  // namespace quiverpath::verify
