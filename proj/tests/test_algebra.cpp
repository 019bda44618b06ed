#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/general_linear.hpp"

using namespace perfcode;

TEST_SUITE("algebra") {

TEST_CASE("bit words: text, ordering and concatenation") {
  const BitWord w = BitWord::from_string("1101");
  CHECK(w.size() == 4);
  CHECK(w.weight() == 3);
  CHECK(w.to_string() == "1101");
  CHECK(w.low_block() == 0b1011);
  CHECK(BitWord::from_uint(4, 2) < BitWord::from_uint(4, 3));
  const BitWord c = concat(BitWord::from_string("10"), BitWord::from_string("011"));
  CHECK(c.to_string() == "10011");
  CHECK(c.slice(2, 3).to_string() == "011");
  CHECK(distance(w, BitWord::ones(4)) == 1);
  CHECK_THROWS_AS(BitWord::from_string("10x"), MalformedInput);

  BitWord big(300);
  big.set(299);
  big.set(64);
  CHECK(big.weight() == 2);
  CHECK(big.highest_set() == 299);
  CHECK(big.lowest_set() == 64);
}

TEST_CASE("matrix rank, inverse and null space against brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    BitMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng() & 1U);
    // rank = log2 of the number of distinct row combinations
    std::set<BitWord> span;
    for (std::uint32_t s = 0; s < (1U << rows); ++s) {
      BitWord x(cols);
      for (std::size_t i = 0; i < rows; ++i)
        if ((s >> i) & 1U) x ^= m.row(i);
      span.insert(x);
    }
    CHECK((std::size_t{1} << rank(m)) == span.size());
    const BitMatrix ns = null_space(m);
    CHECK(ns.rows() == cols - rank(m));
    for (const auto& v : ns.row_words()) CHECK(!m.apply(v).any());
    if (rows == cols) {
      auto inv = invert(m);
      CHECK(inv.has_value() == (rank(m) == rows));
      if (inv) {
        CHECK(*inv * m == BitMatrix::identity(rows));
        CHECK(*invert(*inv) == m);
      }
    }
  }
}

TEST_CASE("GL(r,2) enumeration matches the rank filter") {
  for (int r = 1; r <= 4; ++r) {
    const auto filtered = oracle::gl_by_filter(r);
    std::vector<LinearMap> swept;
    CHECK(gl_enumerate(r, [&](const LinearMap& m) {
      swept.push_back(m);
      return true;
    }));
    CHECK(swept.size() == gl_order(r));
    CHECK(swept.size() == filtered.size());
    std::set<std::uint64_t> a;
    std::set<std::uint64_t> b;
    for (const auto& m : swept) a.insert(m.row_major_code());
    for (const auto& m : filtered) b.insert(m.row_major_code());
    CHECK(a.size() == swept.size());
    CHECK(a == b);
    CHECK(std::is_sorted(swept.begin(), swept.end(),
                         [](const LinearMap& x, const LinearMap& y) { return x.row_major_code() < y.row_major_code(); }));
    for (const auto& m : swept) {
      CHECK(m.rank() == r);
      CHECK(*m.inverse()->inverse() == m);
      CHECK(m * *m.inverse() == LinearMap::identity(r));
    }
  }
  CHECK(gl_order(3) == 168);
  CHECK(gl_order(4) == 20160);
  CHECK(gl_list(3).size() == 168);
  CHECK_THROWS_AS(gl_enumerate(7, [](const LinearMap&) { return true; }), BudgetExceeded);
}

TEST_CASE("gl_enumerate stops when asked") {
  int seen = 0;
  CHECK_FALSE(gl_enumerate(3, [&](const LinearMap&) { return ++seen < 5; }));
  CHECK(seen == 5);
}

TEST_CASE("linear map conventions") {
  const std::vector<Point> rows{0b011, 0b010, 0b100};
  const LinearMap m = LinearMap::from_rows(3, rows);
  CHECK(m.row(0) == 0b011);
  CHECK(m.entry(0, 1));
  CHECK_FALSE(m.entry(1, 0));
  CHECK(m(0b010) == m.column(1));
  CHECK(m.transpose().transpose() == m);
  CHECK(LinearMap::from_bit_matrix(m.to_bit_matrix()) == m);
  const LinearMap bd = LinearMap::block_diagonal(m, LinearMap::identity(2));
  CHECK(bd.dim() == 5);
  CHECK(bd(0b01000) == 0b01000);
  CHECK(bd(0b00010) == m(0b010));
  const AffineMap f{5, m};
  CHECK(compose(f, inverse(f))(6) == 6);
}

TEST_CASE("point permutations") {
  const PointPerm t(2, {0, 2, 3, 1});
  CHECK(t.fixes_zero());
  CHECK(t.id() == "0.2.3.1");
  CHECK(PointPerm::from_id(t.id()) == t);
  CHECK(compose(t, invert_perm(t)).is_identity());
  CHECK_THROWS_AS(PointPerm(2, {0, 1, 1, 3}), MalformedInput);
  CHECK_THROWS_AS(is_linear(PointPerm(2, {1, 0, 2, 3})), ZeroNotFixed);
  CHECK(as_affine(PointPerm(2, {1, 0, 3, 2})).has_value());
}

TEST_CASE("is_linear agrees with additivity for every zero-fixing permutation up to r = 3") {
  for (int r = 1; r <= 3; ++r) {
    std::vector<Point> images(std::size_t{1} << r);
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<Point>(i);
    do {
      const PointPerm tau(r, images);
      bool additive = true;
      for (Point a = 0; a < tau.size(); ++a)
        for (Point b = 0; b < tau.size(); ++b) additive = additive && tau(a ^ b) == (tau(a) ^ tau(b));
      const auto m = is_linear(tau);
      CHECK(m.has_value() == additive);
      if (m) CHECK(PointPerm::from_linear(*m) == tau);
    } while (std::next_permutation(images.begin() + 1, images.end()));
  }
}

TEST_CASE("is_linear on random r = 4 permutations and all linear ones") {
  std::mt19937 rng(4);
  for (int i = 0; i < 300; ++i) {
    const PointPerm tau = oracle::random_zero_fixing(4, rng);
    bool additive = true;
    for (Point a = 0; a < 16; ++a)
      for (Point b = 0; b < 16; ++b) additive = additive && tau(a ^ b) == (tau(a) ^ tau(b));
    CHECK(is_linear(tau).has_value() == additive);
  }
  for (const auto& m : gl_list(4)) REQUIRE(is_linear(PointPerm::from_linear(m)) == m);
}

TEST_CASE("double coset membership matches the brute-force coset at r = 3") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 12; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    const auto coset = oracle::gl_double_coset(tau);
    for (int probe = 0; probe < 20; ++probe) {
      const PointPerm other = probe % 2 == 0 ? oracle::random_zero_fixing(3, rng)
                                             : oracle::conjugate(tau, oracle::random_invertible(3, rng),
                                                                 oracle::random_invertible(3, rng));
      const auto w = double_coset_member(other, tau);
      CHECK(w.has_value() == (coset.count(other) == 1));
      if (w) {
        CHECK(verify_double_coset(other, tau, *w));
        CHECK(w->a.shift == 0);
        CHECK(w->b.shift == 0);
      }
      // symmetric
      CHECK(double_coset_member(tau, other).has_value() == w.has_value());
    }
  }
}

TEST_CASE("membership is invariant under GL conjugation of tau") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    const PointPerm other = oracle::random_zero_fixing(3, rng);
    const PointPerm moved = oracle::conjugate(tau, oracle::random_invertible(3, rng), oracle::random_invertible(3, rng));
    CHECK(double_coset_member(other, tau).has_value() == double_coset_member(other, moved).has_value());
  }
}

TEST_CASE("affine double cosets") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    std::uniform_int_distribution<Point> pt(0, 7);
    const AffineMap a{pt(rng), oracle::random_invertible(3, rng)};
    const AffineMap b{pt(rng), oracle::random_invertible(3, rng)};
    std::vector<Point> images(8);
    const AffineMap a_inv = inverse(a);
    for (Point x = 0; x < 8; ++x) images[x] = b(tau(a_inv(x)));
    const PointPerm target(3, images);
    const auto w = double_coset_member(target, tau, CosetGroup::GA);
    REQUIRE(w.has_value());
    CHECK(verify_double_coset(target, tau, *w));
  }
  // the identity's GA double coset is exactly the affine permutations
  const PointPerm id = PointPerm::identity(3);
  for (int trial = 0; trial < 30; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    CHECK(double_coset_member(tau, id, CosetGroup::GA).has_value() == as_affine(tau).has_value());
  }
}

TEST_CASE("canonical form equals the brute-force minimum of the double coset") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    const auto coset = oracle::gl_double_coset(tau);
    const CanonicalForm c = gl_canonical_form(tau);
    CHECK(c.form == *coset.begin());
    CHECK(verify_double_coset(c.form, tau, c.witness));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(4, rng);
    const PointPerm moved = oracle::conjugate(tau, oracle::random_invertible(4, rng), oracle::random_invertible(4, rng));
    const CanonicalForm c = gl_canonical_form(tau);
    CHECK(c.form == gl_canonical_form(moved).form);
    CHECK(verify_double_coset(c.form, tau, c.witness));
  }
}

}  // TEST_SUITE
