#include "quiverpath/multisegments.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace quiverpath;

namespace {

const SegmentMode kInf = SegmentMode::infinite();

YoungDiagram yd(std::vector<int> parts) { return YoungDiagram(std::move(parts)); }

SegmentMultiset make(SegmentMode mode,
                     std::vector<std::pair<Segment, long long>> items) {
  SegmentMultiset f(mode);
  for (auto& [s, m] : items) f.add(s, m);
  return f;
}

// All segment multisets over the given segment flavors with total length
// at most budget, by depth-first multiplicity assignment.
void enumerate_multisets(const std::vector<Segment>& flavors, size_t idx,
                         long long budget, SegmentMultiset& acc,
                         std::vector<SegmentMultiset>& out) {
  if (idx == flavors.size()) {
    out.push_back(acc);
    return;
  }
  enumerate_multisets(flavors, idx + 1, budget, acc, out);
  long long len = flavors[idx].length();
  long long taken = 0;
  SegmentMultiset saved = acc;
  while (budget - taken >= len) {
    acc.add(flavors[idx]);
    taken += len;
    enumerate_multisets(flavors, idx + 1, budget - taken, acc, out);
  }
  acc = saved;
}

std::vector<SegmentMultiset> all_multisets(SegmentMode mode, long long lo_min,
                                           long long lo_max, long long budget) {
  std::vector<Segment> flavors;
  for (long long lo = lo_min; lo <= lo_max; ++lo)
    for (long long hi = lo; hi - lo + 1 <= budget; ++hi) flavors.push_back({lo, hi});
  std::vector<SegmentMultiset> out;
  SegmentMultiset acc(mode);
  enumerate_multisets(flavors, 0, budget, acc, out);
  return out;
}

}  // namespace

TEST_CASE("segment and mode basics") {
  CHECK_THROWS_AS(Segment(2, 1), std::invalid_argument);
  CHECK(Segment(0, 3).length() == 4);
  CHECK_THROWS_AS(SegmentMode::cyclic(0), std::invalid_argument);
  CHECK(SegmentMode::cyclic(2).period() == 3);
  CHECK_FALSE(kInf.is_cyclic());

  SegmentMultiset f(SegmentMode::cyclic(1));
  f.add(Segment(-1, 0));  // canonical lo 1
  CHECK(f.count(Segment(1, 2)) == 1);
  CHECK(f.count(Segment(3, 4)) == 1);
  CHECK(f.count(Segment(0, 1)) == 0);
  CHECK(f.total_length() == 2);
}

TEST_CASE("segments of a charged diagram") {
  CHECK(segments_of_charged_young(yd({}), 5, kInf).empty());
  auto f1 = segments_of_charged_young(yd({1}), 0, kInf);
  CHECK(f1 == make(kInf, {{{0, 0}, 1}}));
  auto f2 = segments_of_charged_young(yd({3, 1}), 2, kInf);
  CHECK(f2 == make(kInf, {{{2, 4}, 1}, {{1, 1}, 1}}));
}

TEST_CASE("segments of a tuple; the two level-2 decompositions share one multiset") {
  MayaTuple trivial(kInf, {ChargedMaya(yd({}), 0), ChargedMaya(yd({}), 1)});
  CHECK(segments_of_tuple(trivial).empty());

  MayaTuple m(kInf, {ChargedMaya(yd({3, 2, 1}), -1), ChargedMaya(yd({4, 3, 2, 1}), 1)});
  MayaTuple m2(kInf, {ChargedMaya(yd({2, 1}), -1), ChargedMaya(yd({4, 3, 3, 2, 1}), 1)});
  auto f = segments_of_tuple(m);
  CHECK(f == segments_of_tuple(m2));
  long long support_total = 0;
  for (const auto& [s, mult] : f.support()) support_total += mult;
  CHECK(support_total == 7);

  auto fc = segments_of_tuple(MayaTuple(SegmentMode::cyclic(1), {ChargedMaya(yd({1}), 0)}));
  CHECK(fc.count(Segment(0, 0)) == 1);
  CHECK(fc.total_length() == 1);
}

TEST_CASE("aperiodicity") {
  CHECK(is_aperiodic(SegmentMultiset(SegmentMode::cyclic(1))));
  auto periodic = make(SegmentMode::cyclic(1), {{{0, 0}, 1}, {{1, 1}, 1}});
  CHECK_FALSE(is_aperiodic(periodic));
  auto mixed = make(SegmentMode::cyclic(1), {{{0, 1}, 1}, {{1, 1}, 1}});
  CHECK(is_aperiodic(mixed));
  CHECK_THROWS_AS(is_aperiodic(SegmentMultiset(kInf)), std::logic_error);
}

TEST_CASE("dimension vectors of multisets") {
  CHECK(dim_vector(SegmentMultiset(SegmentMode::cyclic(1))).total() == 0);
  auto f = make(SegmentMode::cyclic(1), {{{0, 2}, 1}});
  CHECK(dim_vector(f).residues() == std::vector<long long>{2, 1});
  auto f3 = make(SegmentMode::cyclic(2), {{{0, 0}, 3}});
  CHECK(dim_vector(f3).residues() == std::vector<long long>{3, 0, 0});
  auto finf = make(kInf, {{{-1, 1}, 2}});
  CHECK(dim_vector(finf).at(-1) == 2);
  CHECK(dim_vector(finf).at(0) == 2);
  CHECK(dim_vector(finf).at(2) == 0);
}

TEST_CASE("dimension vector is additive over tuple entries") {
  std::vector<MayaTuple> tuples = {
      MayaTuple(kInf, {ChargedMaya(yd({3, 2, 1}), -1), ChargedMaya(yd({4, 3, 2, 1}), 1)}),
      MayaTuple(SegmentMode::cyclic(2), {ChargedMaya(yd({2, 2}), 0), ChargedMaya(yd({5, 1}), 3)}),
  };
  for (const auto& m : tuples) {
    DimVector v = dim_vector(segments_of_tuple(m));
    std::map<long long, long long> expect;
    for (const auto& e : m.entries())
      for (auto& [c, k] : oracle::content_counts(e.shape().parts(), e.charge()))
        expect[c] += k;
    if (m.mode().is_cyclic()) {
      auto res = oracle::residue_counts(expect, m.mode().rank());
      for (long long r = 0; r <= m.mode().rank(); ++r) CHECK(v.at(r) == res[r]);
    } else {
      for (auto& [c, k] : expect) CHECK(v.at(c) == k);
    }
  }
}

TEST_CASE("greedy decomposition: fixed examples") {
  MayaTuple want(kInf, {ChargedMaya(yd({3, 2, 1}), -1), ChargedMaya(yd({4, 3, 2, 1}), 1)});
  auto f = segments_of_tuple(want);
  auto got = canonical_tuple(f, {-1, 1});
  REQUIRE(got.has_value());
  CHECK(*got == want);

  auto ground = canonical_tuple(SegmentMultiset(kInf), {0, 0});
  REQUIRE(ground.has_value());
  CHECK(*ground == MayaTuple(kInf, {ChargedMaya(yd({}), 0), ChargedMaya(yd({}), 0)}));

  CHECK_FALSE(canonical_tuple(make(kInf, {{{1, 1}, 1}}), {0}).has_value());

  // Exhaustible but with rows out of order: no decomposition exists.
  CHECK_FALSE(canonical_tuple(make(kInf, {{{0, 0}, 1}, {{-1, 1}, 1}}), {0}).has_value());
}

TEST_CASE("greedy decomposition inverts segments_of_tuple on chain tuples") {
  auto diagrams = partitions_up_to(6);
  std::vector<std::vector<long long>> charge_sets = {{0}, {0, 0}, {0, 1}, {-1, 1}};
  for (SegmentMode mode : {kInf, SegmentMode::cyclic(1), SegmentMode::cyclic(2)}) {
    for (const auto& charges : charge_sets) {
      for (const auto& y1 : diagrams) {
        if (charges.size() == 1) {
          MayaTuple m(mode, {ChargedMaya(y1, charges[0])});
          if (!tuple_is_chain(m)) continue;
          auto back = canonical_tuple(segments_of_tuple(m), charges);
          REQUIRE(back.has_value());
          CHECK(*back == m);
          continue;
        }
        for (const auto& y2 : diagrams) {
          MayaTuple m(mode, {ChargedMaya(y1, charges[0]), ChargedMaya(y2, charges[1])});
          if (!tuple_is_chain(m)) continue;
          auto back = canonical_tuple(segments_of_tuple(m), charges);
          REQUIRE(back.has_value());
          CHECK(*back == m);
        }
      }
    }
  }
}

TEST_CASE("single-charge classification: successes are exactly the row multisets of diagrams") {
  // Infinite mode, charge 0.  Budget 8, lo down to -4: a diagram multiset
  // A_Y with |Y| <= 8 and a row below lo -4 would need more than 5 rows of
  // total length > 8, so the family is exhaustive for this budget.
  std::set<std::map<Segment, long long>> diagram_sets;
  for (const auto& y : partitions_up_to(8)) {
    if (y.rows() > 5) continue;
    diagram_sets.insert(segments_of_charged_young(y, 0, kInf).support());
  }
  long long successes = 0;
  for (const auto& f : all_multisets(kInf, -4, 0, 8)) {
    if (f.support().empty()) continue;
    bool in_family = true;
    for (const auto& [s, m] : f.support())
      if (s.lo < -4 || s.lo > 0) in_family = false;
    REQUIRE(in_family);
    auto got = canonical_tuple(f, {0});
    bool expect = diagram_sets.count(f.support()) > 0;
    CHECK(got.has_value() == expect);
    if (got) {
      ++successes;
      CHECK(segments_of_tuple(*got) == f);
    }
  }
  CHECK(successes > 20);

  // Segments with positive leftmost vertex can never be taken for charge 0.
  CHECK_FALSE(canonical_tuple(make(kInf, {{{2, 3}, 1}}), {0}).has_value());
}

TEST_CASE("single-charge classification, cyclic mode with the reduced filter") {
  for (int n : {1, 2}) {
    SegmentMode mode = SegmentMode::cyclic(n);
    std::set<std::map<Segment, long long>> all_y, reduced_y;
    for (const auto& y : partitions_up_to(6)) {
      auto f = segments_of_charged_young(y, 0, mode);
      all_y.insert(f.support());
      if (y.is_n_reduced(n)) reduced_y.insert(f.support());
    }
    for (const auto& f : all_multisets(mode, 0, n, 6)) {
      auto got = canonical_tuple(f, {0});
      CHECK(got.has_value() == (all_y.count(f.support()) > 0));
      if (got)
        CHECK(is_n_reduced_tuple(*got) == (reduced_y.count(f.support()) > 0));
    }
  }
}

TEST_CASE("aperiodicity matches tuple reduction on decomposed multisets") {
  for (int n : {1, 2}) {
    SegmentMode mode = SegmentMode::cyclic(n);
    std::vector<std::vector<long long>> charge_sets = {{0}, {0, 1}, {0, 0}};
    auto diagrams = partitions_up_to(5);
    for (const auto& charges : charge_sets) {
      for (const auto& y1 : diagrams) {
        for (const auto& y2 : diagrams) {
          if (charges.size() < 2 && y2.rows() > 0) continue;
          std::vector<ChargedMaya> entries{ChargedMaya(y1, charges[0])};
          if (charges.size() == 2) entries.emplace_back(y2, charges[1]);
          MayaTuple m(mode, std::move(entries));
          if (!tuple_is_chain(m)) continue;
          CHECK(is_aperiodic(segments_of_tuple(m)) == is_n_reduced_tuple(m));
        }
      }
    }
  }
}

TEST_CASE("row multisets") {
  CHECK(row_multiset(MayaTuple(kInf, {ChargedMaya(yd({}), 0)})).support().empty());

  RowMultiset r1 = row_multiset(MayaTuple(kInf, {ChargedMaya(yd({1, 1}), 0)}));
  RowMultiset want1;
  want1.add(0, 1);
  want1.add(-1, 1);
  CHECK(r1 == want1);

  RowMultiset r2 = row_multiset(MayaTuple(kInf, {ChargedMaya(yd({2}), 3)}));
  RowMultiset want2;
  want2.add(3, 2);
  CHECK(r2 == want2);
}

TEST_CASE("tuple reduction predicate") {
  SegmentMode c1 = SegmentMode::cyclic(1);
  CHECK(is_n_reduced_tuple(
      MayaTuple(c1, {ChargedMaya(yd({}), 0), ChargedMaya(yd({}), 1)})));
  CHECK_FALSE(is_n_reduced_tuple(MayaTuple(c1, {ChargedMaya(yd({1, 1}), 0)})));
  CHECK(is_n_reduced_tuple(MayaTuple(c1, {ChargedMaya(yd({2, 1}), 0)})));
  // Run split across two entries: rows (0,1) and (1,1).
  CHECK_FALSE(is_n_reduced_tuple(
      MayaTuple(c1, {ChargedMaya(yd({1}), 0), ChargedMaya(yd({1}), 1)})));
}

TEST_CASE("tuple chain predicate") {
  CHECK(tuple_is_chain(MayaTuple(kInf, {ChargedMaya(yd({}), 0), ChargedMaya(yd({}), 0)})));
  CHECK(tuple_is_chain(
      MayaTuple(kInf, {ChargedMaya(yd({3, 2, 1}), -1), ChargedMaya(yd({4, 3, 2, 1}), 1)})));
  // Equal charges force containment of the first shape over the second.
  CHECK_FALSE(tuple_is_chain(
      MayaTuple(kInf, {ChargedMaya(yd({}), 0), ChargedMaya(yd({1}), 0)})));
  CHECK(tuple_is_chain(MayaTuple(kInf, {ChargedMaya(yd({1}), 0), ChargedMaya(yd({}), 0)})));
  // Cyclic wrap: the last entry must stay below the first shifted by n+1.
  // (([2,2],0),([1],1)) is a chain on the infinite vertex set but fails the
  // wrap, since row 1 of [1] cannot cover row 2 of [2,2].
  SegmentMode c1 = SegmentMode::cyclic(1);
  CHECK(tuple_is_chain(MayaTuple(c1, {ChargedMaya(yd({}), 0), ChargedMaya(yd({}), 1)})));
  std::vector<ChargedMaya> wrap{ChargedMaya(yd({2, 2}), 0), ChargedMaya(yd({1}), 1)};
  CHECK(tuple_is_chain(MayaTuple(kInf, wrap)));
  CHECK_FALSE(tuple_is_chain(MayaTuple(c1, wrap)));
}
