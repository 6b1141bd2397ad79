#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "permdisc/metrics.hpp"
#include "permdisc/random.hpp"
#include "permdisc/witness.hpp"

using namespace permdisc;
using permdisc::testing::coloring_from_mask;
using permdisc::testing::prefix_value;
using permdisc::testing::suffix_value;

namespace {

int matching_guarantee(int k, const Coloring& c, Sign sign) {
  const int g = k + c.delta() + 2;
  return sign == Sign::plus ? g : -g;
}

int mismatched_guarantee(int k, const Coloring& c, Sign sign) {
  const int g = k - 2 * c.delta() + 2;
  return sign == Sign::plus ? g : -g;
}

// Full contract check for one (side, sign) combination: guarantee formula,
// cut soundness against independent summation, bound satisfaction, and the
// optimality sandwich against the exact functionals.
void check_witness(const PermutationFamily& f, const Coloring& c, Side side,
                   Sign sign, const DiscQuadruple& q) {
  const WitnessTriple w = build_witness(f, c, side, sign);
  const bool matching = (sign == Sign::plus) == (c.total >= 1);
  const int expected_guarantee = matching ? matching_guarantee(f.k, c, sign)
                                          : mismatched_guarantee(f.k, c, sign);
  REQUIRE(w.guarantee == expected_guarantee);

  int sum = 0;
  for (int i = 0; i < 3; ++i) {
    const int v = side == Side::L ? prefix_value(f, c, i, w.cuts[i])
                                  : suffix_value(f, c, i, w.cuts[i]);
    REQUIRE(v == w.per_perm_values[i]);
    sum += v;
    if (side == Side::L) {
      REQUIRE(w.cuts[i] >= 0);
      REQUIRE(w.cuts[i] <= f.n);
    } else {
      REQUIRE(w.cuts[i] >= 1);
      REQUIRE(w.cuts[i] <= f.n + 1);
    }
  }
  REQUIRE(sum == w.achieved);

  const int optimum = side == Side::L ? (sign == Sign::plus ? q.l_plus : q.l_minus)
                                      : (sign == Sign::plus ? q.r_plus : q.r_minus);
  if (sign == Sign::plus) {
    REQUIRE(w.achieved >= w.guarantee);
    REQUIRE(w.achieved <= optimum);
  } else {
    REQUIRE(w.achieved <= w.guarantee);
    REQUIRE(w.achieved >= optimum);
  }
}

void check_all_combinations(const PermutationFamily& f, const Coloring& c) {
  const DiscQuadruple q = disc_quadruple(f, c);
  for (Side side : {Side::L, Side::R})
    for (Sign sign : {Sign::plus, Sign::minus}) check_witness(f, c, side, sign, q);
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("classification: sorted values, configuration, case tag") {
  const auto f = build_family(2);

  // block sums (3, 1, -3): identity assignment, even, case i
  auto cls = classify_blocks(f, coloring_from_string("+++ ++- ---"));
  CHECK(cls.a == 3);
  CHECK(cls.b == 1);
  CHECK(cls.c == -3);
  CHECK(cls.blocks == std::array{BlockLabel::A, BlockLabel::B, BlockLabel::C});
  CHECK(cls.configuration == Configuration::I);
  CHECK(cls.case_tag == CaseTag::i);

  // block sums (1, 3, -3): a sits on B, a transposition, odd
  cls = classify_blocks(f, coloring_from_string("++- +++ ---"));
  CHECK(cls.a == 3);
  CHECK(cls.b == 1);
  CHECK(cls.c == -3);
  CHECK(cls.blocks[0] == BlockLabel::B);
  CHECK(cls.configuration == Configuration::II);

  // all ones: ties broken by block index
  cls = classify_blocks(f, coloring_from_string("+++++++++"));
  CHECK(cls.a == 3);
  CHECK(cls.b == 3);
  CHECK(cls.c == 3);
  CHECK(cls.blocks == std::array{BlockLabel::A, BlockLabel::B, BlockLabel::C});
  CHECK(cls.configuration == Configuration::I);
  CHECK(cls.case_tag == CaseTag::i);

  // cyclic assignment stays configuration I: sums (-3, 3, 1) -> a on B, b on C
  cls = classify_blocks(f, coloring_from_string("--- +++ ++-"));
  CHECK(cls.blocks == std::array{BlockLabel::B, BlockLabel::C, BlockLabel::A});
  CHECK(cls.configuration == Configuration::I);
  CHECK(cls.case_tag == CaseTag::i);

  // negative total: case tag is none
  cls = classify_blocks(f, coloring_from_string("--- --- ++-"));
  CHECK(cls.case_tag == CaseTag::none);

  CHECK_THROWS_AS(classify_blocks(build_family(0), coloring_from_string("+")),
                  std::domain_error);
}

TEST_CASE("case-ii classification") {
  const auto f = build_family(2);
  // block sums (3, -1, -1): a >= 1, c <= b <= -1, total 1
  const auto cls = classify_blocks(f, coloring_from_string("+++ +-- +--"));
  CHECK(cls.a == 3);
  CHECK(cls.b == -1);
  CHECK(cls.c == -1);
  CHECK(cls.case_tag == CaseTag::ii);
}

TEST_CASE("base case: the documented k=1 witnesses") {
  const auto f = build_family(1);

  auto w = build_witness(f, coloring_from_string("+-+"), Side::L, Sign::plus);
  CHECK(w.cuts == std::array{1, 2, 3});
  CHECK(w.achieved == 4);
  CHECK(w.guarantee == 4);
  CHECK(w.per_perm_values == std::array{1, 2, 1});

  w = build_witness(f, coloring_from_string("+++"), Side::L, Sign::plus);
  CHECK(w.cuts == std::array{3, 3, 3});
  CHECK(w.achieved == 9);
  CHECK(w.guarantee == 6);

  w = build_witness(f, coloring_from_string("-+-"), Side::L, Sign::minus);
  CHECK(w.achieved == -4);
  CHECK(w.guarantee == -4);
}

TEST_CASE("every coloring, every combination, exhaustive k <= 2") {
  for (int k = 0; k <= 2; ++k) {
    const auto f = build_family(k);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.n); ++mask)
      check_all_combinations(f, coloring_from_mask(mask, f.n));
  }
}

TEST_CASE("sampled colorings, k = 3..6") {
  for (int k = 3; k <= 6; ++k) {
    const auto f = build_family(k);
    for (std::uint64_t j = 0; j < 400; ++j)
      check_all_combinations(f, sample_coloring(1000 + static_cast<std::uint64_t>(k), j, f.n));
  }
}

TEST_CASE("engineered case-ii colorings go through the complement branch") {
  const auto f = build_family(2);
  // (3, -1, -1) and (1, -1, 1)-style block patterns with b <= -1
  for (const char* s : {"+++ +-- +--", "+++ --- ++-", "++- -+- +++"}) {
    const auto c = coloring_from_string(s);
    const auto cls = classify_blocks(f, c);
    if (c.total >= 1 && cls.b <= -1) {
      CHECK(cls.case_tag == CaseTag::ii);
      CHECK(cls.a + cls.b >= 1 - cls.c);
      CHECK(1 - cls.c >= 2);
    }
    check_all_combinations(f, c);
  }
}

TEST_CASE("tied block sums are handled") {
  const auto f = build_family(2);
  for (const char* s : {"++- ++- ++-",    // (1,1,1)
                        "+++ +++ +--",    // (3,3,-1)
                        "+-- +-- +++"}) { // (-1,-1,3)
    check_all_combinations(f, coloring_from_string(s));
  }
}

TEST_CASE("variant families: witness stays sound; bounds observed empirically") {
  std::mt19937_64 rng(77);
  for (int k = 1; k <= 5; ++k)
    for (int trial = 0; trial < 3; ++trial) {
      std::string word;
      for (int h = 0; h < k; ++h) word.push_back(rng() & 1 ? 'L' : 'R');
      const auto f = build_family(k, word);
      for (std::uint64_t j = 0; j < 100; ++j) {
        const auto c = sample_coloring(500 + static_cast<std::uint64_t>(k), j, f.n);
        check_all_combinations(f, c);  // includes the bound checks
      }
    }
}

TEST_CASE("extract_bad_prefix: examples and guarantee") {
  const auto f1 = build_family(1);
  const auto bad = extract_bad_prefix(f1, coloring_from_string("+-+"));
  CHECK(bad.perm == 2);
  CHECK(bad.x == 2);
  CHECK(bad.value == 2);

  const auto all_ones = extract_bad_prefix(f1, coloring_from_string("+++"));
  CHECK(all_ones.value == 3);

  for (int k = 1; k <= 6; ++k) {
    const auto f = build_family(k);
    const int bound = (k + 2) / 3 + 1;  // ceil(k/3) + 1
    for (std::uint64_t j = 0; j < 300; ++j) {
      const auto c = sample_coloring(900 + static_cast<std::uint64_t>(k), j, f.n);
      const auto b = extract_bad_prefix(f, c);
      const int v = prefix_value(f, c, b.perm - 1, b.x);
      REQUIRE(v == b.value);
      REQUIRE(std::abs(b.value) >= bound);
      REQUIRE(prefix_system_discrepancy(f, c).value >= std::abs(b.value));
    }
  }
}

TEST_CASE("witness requires a structured family") {
  const auto f = permdisc::testing::random_family(9, 5);
  if (!f.constructed()) {
    std::mt19937_64 rng(1);
    const auto c = permdisc::testing::random_coloring(9, rng);
    CHECK_THROWS_AS(build_witness(f, c, Side::L, Sign::plus), std::invalid_argument);
  }
  CHECK_THROWS_AS(
      build_witness(build_family(1), coloring_from_string("+-+-"), Side::L, Sign::plus),
      std::invalid_argument);
}

}  // TEST_SUITE
