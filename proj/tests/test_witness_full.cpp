// Full-enumeration witness certification at k = 3: every coloring of the
// chi(1) = +1 half space, both plus-side witnesses. The minus-side
// combinations are the literal negations of the plus side on the mirrored
// half space, so this covers all four (side, sign) pairs over all 2^27
// colorings. Matching-sign totals exercise the main bound, mismatched ones
// the complement bound.

#include <cstdint>
#include <thread>
#include <vector>

#include "doctest.h"
#include "permdisc/enumeration.hpp"
#include "permdisc/witness.hpp"

using namespace permdisc;

TEST_SUITE("witness_full") {

TEST_CASE("k=3 full enumeration meets both guarantees on both sides") {
  const auto f = build_family(3);
  const int worker_count =
      std::max(2u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::uint64_t> checked(static_cast<std::size_t>(worker_count), 0);
  std::vector<std::uint64_t> violations(static_cast<std::size_t>(worker_count), 0);

  const int bits = partition_bits(f.n - 1, worker_count);
  auto run_one = [&](int worker) {
    std::vector<std::int8_t> fixed;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
      if (pattern % static_cast<std::uint64_t>(worker_count) !=
          static_cast<std::uint64_t>(worker))
        continue;
      fixed.assign(1, +1);
      for (int b = 0; b < bits; ++b)
        fixed.push_back((pattern >> b) & 1 ? -1 : +1);
      for_each_coloring_gray(f, fixed, [&](const Coloring& c, const PrefixProfile&) {
        ++checked[static_cast<std::size_t>(worker)];
        for (Side side : {Side::L, Side::R}) {
          const WitnessTriple w = build_witness(f, c, side, Sign::plus);
          if (w.achieved < w.guarantee) ++violations[static_cast<std::size_t>(worker)];
        }
        return true;
      });
    }
  };

  std::vector<std::thread> threads;
  for (int w = 0; w < worker_count; ++w) threads.emplace_back(run_one, w);
  for (auto& th : threads) th.join();

  std::uint64_t total_checked = 0, total_violations = 0;
  for (int w = 0; w < worker_count; ++w) {
    total_checked += checked[static_cast<std::size_t>(w)];
    total_violations += violations[static_cast<std::size_t>(w)];
  }
  CHECK(total_checked == (std::uint64_t{1} << 26));
  CHECK(total_violations == 0);
}

}  // TEST_SUITE
