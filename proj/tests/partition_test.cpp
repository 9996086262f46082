#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "printers.hpp"
#include "schmidt/partition.hpp"

using namespace schmidt;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<ResidueSet> all_residue_sets(int m) {
  std::vector<ResidueSet> out;
  for (unsigned mask = 0; mask < (1u << (m - 1)); ++mask) {
    std::vector<int> members{1};
    for (int r = 2; r <= m; ++r) {
      if (mask & (1u << (r - 2))) members.push_back(r);
    }
    out.emplace_back(m, members);
  }
  return out;
}

int weight_by_rows(const oracle::Parts& p, const ResidueSet& s) {
  int total = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    int row = static_cast<int>(k) + 1;
    int r = (row - 1) % s.modulus() + 1;
    if (std::find(s.members().begin(), s.members().end(), r) != s.members().end()) total += p[k];
  }
  return total;
}

}  // namespace

TEST_CASE("partition construction and accessors") {
  auto p = P({7, 5, 4, 4, 2, 1});
  CHECK(p.size() == 23);
  CHECK(p.length() == 6);
  CHECK(p.largest() == 7);
  CHECK(p.part(1) == 7);
  CHECK(p.part(6) == 1);
  CHECK(p.part(7) == 0);
  CHECK(p.part(0) == 0);
  CHECK(p.multiplicity(4) == 2);
  CHECK(p.multiplicity(3) == 0);
  CHECK(Partition().empty());

  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(P({-1}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 0, 3, 2}) == P({3, 2, 1}));
}

TEST_CASE("partition text form") {
  CHECK(to_string(P({7, 5, 4, 4, 2, 1})) == "7,5,4,4,2,1");
  CHECK(to_string(Partition()) == "");
  CHECK(parse_partition("7,5,4,4,2,1") == P({7, 5, 4, 4, 2, 1}));
  CHECK(parse_partition("") == Partition());
  CHECK(parse_partition(" 3, 1 ") == P({3, 1}));
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
}

TEST_CASE("residue sets") {
  ResidueSet s(5, {1, 2, 3});
  CHECK(s.count() == 3);
  CHECK(s.member(3) == 3);
  CHECK(s.counts_row(6));
  CHECK_FALSE(s.counts_row(4));
  CHECK(s.residue(10) == 5);
  CHECK(ResidueSet::initial_segment(4, 2) == ResidueSet(4, {1, 2}));
  CHECK(parse_residue_set(3, "1,2") == ResidueSet(3, {1, 2}));
  CHECK(to_string(s) == "1,2,3");

  CHECK_THROWS_AS(ResidueSet(1, {1}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSet(3, {2}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSet(3, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSet(3, {1, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ResidueSet(3, {}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(P({3, 3})) == P({2, 2, 2}));
  CHECK(conjugate(P({7, 5, 4, 4, 2, 1})) == P({6, 5, 4, 4, 2, 1, 1}));
  for (int n = 0; n <= 12; ++n) {
    for (const auto& parts : oracle::partitions_brute(n)) {
      auto p = P(parts);
      CHECK(conjugate(p).parts() == oracle::conjugate_by_cells(parts));
      CHECK(conjugate(conjugate(p)) == p);
    }
  }
}

TEST_CASE("schmidt weight") {
  CHECK(schmidt_weight(P({7, 5, 4, 4, 2, 1}), ResidueSet(2, {1})) == 13);
  CHECK(schmidt_weight(P({5, 5, 4, 4, 4, 4, 4, 4, 3, 2, 1}), ResidueSet(5, {1, 2, 3})) == 27);
  CHECK(schmidt_weight(Partition(), ResidueSet(4, {1, 3})) == 0);
  for (int m = 2; m <= 4; ++m) {
    for (const auto& s : all_residue_sets(m)) {
      for (const auto& parts : oracle::partitions_brute(9)) {
        CHECK(schmidt_weight(P(parts), s) == weight_by_rows(parts, s));
      }
    }
  }
}

TEST_CASE("rho counts columns by height residue") {
  CHECK(rho(P({2, 1, 1}), 2, 1) == 2);
  CHECK(rho(P({3, 3}), 2, 1) == 0);
  CHECK(rho(Partition(), 3, 2) == 0);
  CHECK(alternating_sum(P({7, 5, 4, 4, 2, 1})) == 7 - 5 + 4 - 4 + 2 - 1);
  CHECK_THROWS_AS(rho(P({1}), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(rho(P({1}), 2, 3), std::invalid_argument);

  for (int m = 2; m <= 5; ++m) {
    for (const auto& parts : oracle::partitions_brute(10)) {
      auto columns = oracle::conjugate_by_cells(parts);
      for (int j = 1; j <= m; ++j) {
        int expected = 0;
        for (int h : columns) expected += (h - j) % m == 0 ? 1 : 0;
        CHECK(rho(P(parts), m, j) == expected);
      }
    }
  }
}

TEST_CASE("class membership") {
  CHECK_FALSE(is_in_class(P({4, 4, 3, 1}), PartitionClass::bounded_multiplicity, 2));
  CHECK(is_in_class(P({2, 2, 1, 1}), PartitionClass::bounded_gaps, 2));
  CHECK(is_in_class(P({6, 2}), PartitionClass::divisible, 2));
  CHECK_FALSE(is_in_class(P({3}), PartitionClass::bounded_gaps, 2));
  CHECK(is_in_class(P({1}), PartitionClass::bounded_gaps, 2));
  CHECK(is_in_class(P({3, 3, 3}), PartitionClass::bounded_multiplicity, 4));
  CHECK_FALSE(is_in_class(P({3, 3, 3}), PartitionClass::bounded_multiplicity, 3));
  for (auto cls : {PartitionClass::all, PartitionClass::bounded_multiplicity, PartitionClass::bounded_gaps,
                   PartitionClass::divisible}) {
    CHECK(is_in_class(Partition(), cls, 3));
  }
  CHECK_THROWS_AS(is_in_class(P({1}), PartitionClass::all, 1), std::invalid_argument);
  CHECK(parse_partition_class("F") == PartitionClass::bounded_gaps);
  CHECK(to_string(PartitionClass::divisible) == "R");
  CHECK_THROWS_AS(parse_partition_class("X"), std::invalid_argument);
}

TEST_CASE("repetition profile") {
  CHECK(repetition_profile(P({3, 3, 3, 1}), 2) == std::vector<Repetition>{{3, 3}});
  CHECK(repetition_profile(P({1, 1, 1, 1, 1}), 3) == std::vector<Repetition>{{1, 5}});
  CHECK(repetition_profile(P({5, 3, 2, 1}), 2).empty());
  CHECK(repetition_profile(P({4, 4, 2, 2, 2, 1}), 2) == std::vector<Repetition>{{4, 2}, {2, 3}});
}

TEST_CASE("enumeration by size") {
  CHECK(enumerate_by_size(3).size() == 3);
  CHECK(enumerate_by_size(5).size() == 7);
  CHECK(enumerate_by_size(3, PartitionClass::bounded_multiplicity, 2) == std::vector<Partition>{P({3}), P({2, 1})});
  CHECK(enumerate_by_size(0) == std::vector<Partition>{Partition()});

  for (int n = 0; n <= 12; ++n) {
    auto brute = oracle::partitions_brute(n);
    CHECK(static_cast<long long>(brute.size()) == oracle::partition_number(n));
    for (int m = 2; m <= 4; ++m) {
      for (auto cls : {PartitionClass::all, PartitionClass::bounded_multiplicity, PartitionClass::bounded_gaps,
                       PartitionClass::divisible}) {
        auto got = enumerate_by_size(n, cls, m);
        std::vector<Partition> expected;
        for (auto it = brute.rbegin(); it != brute.rend(); ++it) {
          if (is_in_class(P(*it), cls, m)) expected.push_back(P(*it));
        }
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("glaisher counts: F_m and D_m are equinumerous") {
  for (int m = 2; m <= 4; ++m) {
    for (int n = 0; n <= 14; ++n) {
      CHECK(enumerate_by_size(n, PartitionClass::bounded_gaps, m).size() ==
            enumerate_by_size(n, PartitionClass::bounded_multiplicity, m).size());
    }
  }
}

TEST_CASE("enumeration by schmidt weight") {
  ResidueSet s(2, {1});
  CHECK(enumerate_by_schmidt_weight(3, s, PartitionClass::bounded_multiplicity) ==
        std::vector<Partition>{P({3, 2}), P({3, 1}), P({3})});
  CHECK(enumerate_by_schmidt_weight(1, s) == std::vector<Partition>{P({1, 1}), P({1})});
  CHECK(enumerate_by_schmidt_weight(0, s) == std::vector<Partition>{Partition()});
  CHECK_THROWS_AS(enumerate_by_schmidt_weight(2, s, PartitionClass::divisible), std::invalid_argument);

  // Weight n bounds the size by m·n, so a size-bounded brute force sees everything.
  for (int m = 2; m <= 3; ++m) {
    for (const auto& rs : all_residue_sets(m)) {
      for (int n = 0; n <= 4; ++n) {
        std::set<Partition> expected_all, expected_d;
        for (int size = 0; size <= m * n; ++size) {
          for (const auto& parts : oracle::partitions_brute(size)) {
            if (weight_by_rows(parts, rs) != n) continue;
            expected_all.insert(P(parts));
            if (is_in_class(P(parts), PartitionClass::bounded_multiplicity, m)) expected_d.insert(P(parts));
          }
        }
        auto all = enumerate_by_schmidt_weight(n, rs);
        auto d = enumerate_by_schmidt_weight(n, rs, PartitionClass::bounded_multiplicity);
        CHECK(std::vector<Partition>(expected_all.rbegin(), expected_all.rend()) == all);
        CHECK(std::vector<Partition>(expected_d.rbegin(), expected_d.rend()) == d);
      }
    }
  }
}
