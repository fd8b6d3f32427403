#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "slicesim/errors.hpp"
#include "slicesim/inventory.hpp"

using namespace slicesim;
using namespace slicesim::testing;

namespace {

// Reference oracle: the lexicographically smallest feasible subset of free
// NFs (subsets compared as sorted id sequences), found by exhaustive
// enumeration. Only usable on small pools.
std::optional<std::vector<std::string>> minimal_feasible_subset(
    const NfPool& pool, SubnetKind subnet, int units_needed) {
  std::vector<const NfResource*> free_nfs;
  for (const auto& [id, nf] : pool.resources()) {
    if (nf.subnet_affinity == subnet && !pool.allocations().contains(id)) {
      free_nfs.push_back(&nf);
    }
  }
  const std::size_t n = free_nfs.size();
  REQUIRE(n <= 16);
  std::optional<std::vector<std::string>> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int cap = 0;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        cap += free_nfs[i]->capacity_units;
        ids.push_back(free_nfs[i]->id);
      }
    }
    if (cap < units_needed) continue;
    std::sort(ids.begin(), ids.end());
    if (!best || ids < *best) best = ids;
  }
  return best;
}

}  // namespace

TEST_CASE("allocation takes lowest ids first") {
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN},
                               {"nf2", SubnetKind::AN},
                               {"nf3", SubnetKind::AN},
                               {"nf4", SubnetKind::AN},
                               {"nf5", SubnetKind::AN}});
  auto ids = pool.allocate_nfs(SubnetKind::AN, 2, "nssi-a");
  CHECK(ids == std::vector<std::string>{"nf1", "nf2"});
  CHECK(pool.free_units(SubnetKind::AN) == 3);
}

TEST_CASE("empty subnet rejects and leaves pool untouched") {
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN}});
  auto before = pool.snapshot();
  CHECK_THROWS_AS(pool.allocate_nfs(SubnetKind::CN, 1, "nssi-a"),
                  InsufficientResources);
  CHECK(pool.snapshot() == before);
}

TEST_CASE("multi-unit capacity NF can cover a smaller need") {
  auto pool = make_pool("L1", {{"nf9", SubnetKind::DN, 3}});
  auto ids = pool.allocate_nfs(SubnetKind::DN, 2, "nssi-a");
  CHECK(ids == std::vector<std::string>{"nf9"});
  auto snap = pool.snapshot();
  CHECK(snap.by_subnet.at(SubnetKind::DN).allocated_units == 3);
}

TEST_CASE("greedy selection matches the exhaustive minimal-subset oracle") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    NfPool pool(uo_loc("L1"));
    const int n = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i) {
      pool.add_resource(NfResource{"nf" + std::to_string(i), NfKind::Vnf,
                                   SubnetKind::AN,
                                   1 + static_cast<int>(rng() % 3)});
    }
    const int need = 1 + static_cast<int>(rng() % 8);
    auto expect = minimal_feasible_subset(pool, SubnetKind::AN, need);
    if (!expect) {
      auto before = pool.snapshot();
      CHECK_THROWS_AS(pool.allocate_nfs(SubnetKind::AN, need, "h"),
                      InsufficientResources);
      CHECK(pool.snapshot() == before);
      continue;
    }
    auto got = pool.allocate_nfs(SubnetKind::AN, need, "h");
    std::sort(got.begin(), got.end());
    CHECK(got == *expect);
  }
}

TEST_CASE("failed allocation is all-or-nothing") {
  // Two free AN units exist but three are needed; nothing may be taken.
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN},
                               {"nf2", SubnetKind::AN},
                               {"nf3", SubnetKind::CN}});
  auto before = pool.snapshot();
  CHECK_THROWS_AS(pool.allocate_nfs(SubnetKind::AN, 3, "h"),
                  InsufficientResources);
  CHECK(pool.snapshot() == before);
  CHECK(pool.allocations().empty());
}

TEST_CASE("release frees exactly the holder's NFs") {
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN},
                               {"nf2", SubnetKind::AN},
                               {"nf3", SubnetKind::AN}});
  pool.allocate_nfs(SubnetKind::AN, 2, "h1");
  auto freed = pool.release_nfs("h1");
  std::sort(freed.begin(), freed.end());
  CHECK(freed == std::vector<std::string>{"nf1", "nf2"});
  CHECK(pool.free_units(SubnetKind::AN) == 3);
}

TEST_CASE("release of an unknown holder is a no-op") {
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN}});
  auto before = pool.snapshot();
  CHECK(pool.release_nfs("nobody").empty());
  CHECK(pool.snapshot() == before);
}

TEST_CASE("allocate-release-allocate picks identical NFs") {
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN},
                               {"nf2", SubnetKind::AN},
                               {"nf3", SubnetKind::AN}});
  auto first = pool.allocate_nfs(SubnetKind::AN, 2, "h1");
  pool.release_nfs("h1");
  auto second = pool.allocate_nfs(SubnetKind::AN, 2, "h2");
  CHECK(first == second);
}

TEST_CASE("one holder cannot double-allocate a subnet in one pool") {
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN},
                               {"nf2", SubnetKind::AN}});
  pool.allocate_nfs(SubnetKind::AN, 1, "h1");
  CHECK_THROWS_AS(pool.allocate_nfs(SubnetKind::AN, 1, "h1"),
                  ContractViolation);
}

TEST_CASE("snapshot accounting") {
  auto pool = make_pool("L1", {{"nf1", SubnetKind::AN, 1},
                               {"nf2", SubnetKind::AN, 2},
                               {"nf3", SubnetKind::AN, 3}});
  auto snap = pool.snapshot();
  const auto& an = snap.by_subnet.at(SubnetKind::AN);
  CHECK(an.total_units == 6);
  CHECK(an.allocated_units == 0);
  CHECK(an.free_units == 6);
  CHECK(an.total_nfs == 3);

  pool.allocate_nfs(SubnetKind::AN, 2, "h1");
  snap = pool.snapshot();
  const auto& an2 = snap.by_subnet.at(SubnetKind::AN);
  CHECK(an2.allocated_units == 3);  // nf1 (1) + nf2 (2) cover the need of 2
  CHECK(an2.free_units == 3);
  CHECK(an2.allocated_nfs == 2);
}

TEST_CASE("conservation holds under a random operation sequence") {
  std::mt19937 rng(99);
  NfPool pool(uo_loc("L1"));
  for (int i = 0; i < 12; ++i) {
    pool.add_resource(NfResource{"nf" + std::to_string(i), NfKind::Vnf,
                                 static_cast<SubnetKind>(i % 3),
                                 1 + static_cast<int>(rng() % 2)});
  }
  const auto initial = pool.snapshot();
  std::vector<std::string> holders;
  for (int op = 0; op < 500; ++op) {
    if (rng() % 2 == 0 || holders.empty()) {
      std::string h = "h" + std::to_string(op);
      try {
        pool.allocate_nfs(static_cast<SubnetKind>(rng() % 3),
                          1 + static_cast<int>(rng() % 4), h);
        holders.push_back(h);
      } catch (const InsufficientResources&) {
      }
    } else {
      std::size_t i = rng() % holders.size();
      pool.release_nfs(holders[i]);
      holders.erase(holders.begin() + static_cast<std::ptrdiff_t>(i));
    }
    for (const auto& [subnet, acct] : pool.snapshot().by_subnet) {
      CHECK(acct.allocated_units + acct.free_units == acct.total_units);
      CHECK(acct.allocated_nfs + acct.free_nfs == acct.total_nfs);
    }
  }
  for (const auto& h : holders) pool.release_nfs(h);
  CHECK(pool.snapshot() == initial);
}
