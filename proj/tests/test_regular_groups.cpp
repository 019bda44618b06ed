#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/general_linear.hpp"
#include "perfcode/regular_groups.hpp"

using namespace perfcode;

namespace {

// Closure and inverses of {(a, M_a)} under affine composition.
bool closed_under_composition(const RegularSubgroup& g) {
  std::set<std::pair<Point, std::uint64_t>> elems;
  for (Point a = 0; a < g.order(); ++a) elems.insert({a, g.mats[a].row_major_code()});
  for (Point a = 0; a < g.order(); ++a) {
    const AffineMap fa{a, g.mats[a]};
    const AffineMap inv = inverse(fa);
    if (!elems.count({inv.shift, inv.linear.row_major_code()})) return false;
    for (Point b = 0; b < g.order(); ++b) {
      const AffineMap h = compose(fa, AffineMap{b, g.mats[b]});
      if (!elems.count({h.shift, h.linear.row_major_code()})) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("regular_groups") {

TEST_CASE("translations are regular; a perturbed table is not") {
  const RegularSubgroup t = RegularSubgroup::translations(3);
  CHECK_FALSE(verify_regular(t).has_value());
  RegularSubgroup bad = t;
  bad.mats[5] = gl_list(3)[7];
  const auto v = verify_regular(bad);
  REQUIRE(v.has_value());
  CHECK_FALSE(v->reason.empty());
  RegularSubgroup short_group = t;
  short_group.mats.pop_back();
  CHECK(verify_regular(short_group).has_value());
}

TEST_CASE("enumeration at small r matches the closure census") {
  for (int r = 1; r <= 3; ++r) {
    const auto en = enumerate_regular_subgroups(r);
    CHECK(en.complete);
    std::set<std::vector<std::uint32_t>> mine;
    for (const auto& g : en.groups) {
      CHECK_FALSE(verify_regular(g).has_value());
      CHECK(closed_under_composition(g));
      mine.insert(oracle::encode_group(g));
    }
    CHECK(mine.size() == en.groups.size());
    CHECK(mine == oracle::regular_subgroups_by_closure(r));
  }
  CHECK(enumerate_regular_subgroups(3).groups.size() == 232);
}

TEST_CASE("enumeration is deterministic") {
  const auto a = enumerate_regular_subgroups(3);
  const auto b = enumerate_regular_subgroups(3);
  CHECK(a.groups == b.groups);
  CHECK(std::count(a.groups.begin(), a.groups.end(), RegularSubgroup::translations(3)) == 1);
}

TEST_CASE("enumeration honours the budget") {
  std::size_t seen = 0;
  const bool complete = enumerate_regular_subgroups(
      4, [&](const RegularSubgroup&) { return ++seen < 10; });
  CHECK_FALSE(complete);
  CHECK(seen == 10);
  const auto partial = enumerate_regular_subgroups(4, Budget::seconds(0.0));
  CHECK_FALSE(partial.complete);
}

TEST_CASE("automorphisms of the translation group are GL(3,2)") {
  const RegularSubgroup t = RegularSubgroup::translations(3);
  const auto auts = automorphisms(t);
  CHECK(auts.size() == 168);
  std::set<PointPerm> induced;
  for (const auto& a : auts) {
    CHECK(is_automorphism(t, a));
    induced.insert(induced_tau(t, a));
  }
  std::set<PointPerm> linear;
  for (const auto& m : gl_list(3)) linear.insert(PointPerm::from_linear(m));
  CHECK(induced == linear);
}

TEST_CASE("induced permutations compose") {
  std::mt19937 rng(3);
  const auto groups = enumerate_regular_subgroups(3).groups;
  for (int trial = 0; trial < 40; ++trial) {
    const auto& g = groups[rng() % groups.size()];
    const auto auts = automorphisms(g);
    REQUIRE_FALSE(auts.empty());
    const auto& s = auts[rng() % auts.size()];
    const auto& t = auts[rng() % auts.size()];
    CHECK(induced_tau(g, compose(s, t)) == compose(induced_tau(g, s), induced_tau(g, t)));
  }
  const RegularSubgroup t = RegularSubgroup::translations(3);
  CHECK_THROWS_AS(induced_tau(t, PointPerm(3, {0, 1, 2, 4, 3, 5, 6, 7})), NotAnAutomorphism);
}

TEST_CASE("automorphism counts match an unpruned search") {
  // every automorphism is fixed by the images of a generating set; try all images
  const auto groups = enumerate_regular_subgroups(3).groups;
  for (std::size_t gi = 0; gi < groups.size(); gi += 7) {
    const auto& g = groups[gi];
    std::size_t count = 0;
    std::vector<Point> images(8);
    images[0] = 0;
    for (Point x = 1; x < 8; ++x) images[x] = x;
    do {
      count += is_automorphism(g, PointPerm(3, images));
    } while (std::next_permutation(images.begin() + 1, images.end()));
    CHECK(automorphisms(g).size() == count);
  }
}

TEST_CASE("catalog at r = 3") {
  const TauCatalog cat = catalog_taus(3);
  CHECK(cat.complete);
  CHECK(cat.groups == 232);
  CHECK(cat.entries.size() == 1372);
  const auto groups = enumerate_regular_subgroups(3).groups;
  std::uint64_t pairs = 0;
  std::map<PointPerm, std::pair<std::uint32_t, std::uint32_t>> first;
  for (std::uint32_t gi = 0; gi < groups.size(); ++gi) {
    const auto auts = automorphisms(groups[gi]);
    for (std::uint32_t ai = 0; ai < auts.size(); ++ai) {
      first.emplace(induced_tau(groups[gi], auts[ai]), std::pair{gi, ai});
      ++pairs;
    }
  }
  CHECK(cat.pairs == pairs);
  CHECK(first.size() == cat.entries.size());
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& e = cat.entries[i];
    if (i > 0) CHECK(cat.entries[i - 1].tau < e.tau);
    REQUIRE(first.count(e.tau) == 1);
    CHECK(first[e.tau] == std::pair{e.group_id, e.aut_id});
  }
  CHECK(cat.entries.front().tau == PointPerm::identity(3));
}

}  // TEST_SUITE
