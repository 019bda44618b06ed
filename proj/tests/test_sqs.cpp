#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/sqs.hpp"

using namespace perfcode;

namespace {

PointPerm random_nonlinear(int r, std::mt19937& rng) {
  for (;;) {
    PointPerm t = oracle::random_zero_fixing(r, rng);
    if (!is_linear(t)) return t;
  }
}

std::vector<Point> as_points(const StructuredPerm& pi, int r) {
  std::vector<Point> out(std::size_t{2} << r);
  for (Point p = 0; p < out.size(); ++p) out[p] = pi(p);
  return out;
}

}  // namespace

TEST_SUITE("sqs") {

TEST_CASE("quadruple counts and validity") {
  std::mt19937 rng(1);
  for (int r = 3; r <= 5; ++r) {
    const PointPerm tau = oracle::random_zero_fixing(r, rng);
    const Sqs q = sqs_from_tau(tau);
    const std::size_t v = std::size_t{2} << r;
    CHECK(q.order() == v);
    CHECK(q.size() == v * (v - 1) * (v - 2) / 24);
    CHECK_FALSE(validate_sqs(q).has_value());
  }
  CHECK(sqs_from_tau(PointPerm::identity(3)).size() == 140);
  CHECK(sqs_from_tau(PointPerm::identity(4)).size() == 1240);
}

TEST_CASE("a deleted quadruple is reported") {
  const Sqs q = sqs_from_tau(PointPerm::identity(3));
  auto quads = q.quadruples();
  const Quadruple gone = quads[17];
  quads.erase(quads.begin() + 17);
  const auto bad = validate_sqs(Sqs(16, quads));
  REQUIRE(bad.has_value());
  int shared = 0;
  for (auto p : *bad) shared += (p == gone[0] || p == gone[1] || p == gone[2] || p == gone[3]);
  CHECK(shared == 3);
  CHECK_THROWS_AS(Sqs(16, {{0, 1, 2, 16}}), MalformedInput);
  CHECK_THROWS_AS(Sqs(16, {{0, 1, 1, 2}}), MalformedInput);
}

TEST_CASE("SQS_tau equals the weight-4 supports of S_tau") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    const ExplicitCode e = explicit_materialize(build_s_tau(tau));
    const Sqs q = sqs_from_tau(tau);
    const std::set<Quadruple> mine(q.quadruples().begin(), q.quadruples().end());
    CHECK(mine == oracle::weight4(e));
    CHECK(weight_four_supports(e) == q);
  }
}

TEST_CASE("structured action identities") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    const LinearMap a = oracle::random_invertible(3, rng);
    const LinearMap b = oracle::random_invertible(3, rng);
    const Sqs q = sqs_from_tau(tau);
    const StructuredPerm plain{AffineMap::from_linear(a), AffineMap::from_linear(b), false};
    CHECK(apply_structured(plain, q) == sqs_from_tau(oracle::conjugate(tau, a, b)));
    const StructuredPerm swapped{AffineMap::from_linear(a), AffineMap::from_linear(b), true};
    CHECK(apply_structured(swapped, q) == sqs_from_tau(oracle::conjugate(invert_perm(tau), a, b)));
    CHECK(xi_swap(q) == sqs_from_tau(invert_perm(tau)));
    CHECK(xi_swap(xi_swap(q)) == q);
    // translations on both sides are automorphisms
    std::uniform_int_distribution<Point> pt(0, 7);
    const StructuredPerm shift{{pt(rng), LinearMap::identity(3)}, {pt(rng), LinearMap::identity(3)}, false};
    CHECK(apply_structured(shift, q) == q);
    CHECK(apply_structured(StructuredPerm::identity(3), q) == q);
  }
}

TEST_CASE("quadruple-pair dichotomy on random non-linear permutations") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const PointPerm tau = random_nonlinear(3, rng);
    const Lemma1Report rep = lemma1_check(tau);
    CHECK(rep.same_side_pairs > 0);
    CHECK(rep.holds());
  }
  CHECK_THROWS_AS(lemma1_check(PointPerm::identity(3)), AffineInput);
}

TEST_CASE("isomorphism is an equivalence with verified witnesses") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const PointPerm x = random_nonlinear(3, rng);
    const PointPerm y = trial % 3 == 0 ? invert_perm(oracle::conjugate(x, oracle::random_invertible(3, rng),
                                                                       oracle::random_invertible(3, rng)))
                                       : random_nonlinear(3, rng);
    const PointPerm z = trial % 2 == 0
                            ? oracle::conjugate(y, oracle::random_invertible(3, rng), oracle::random_invertible(3, rng))
                            : random_nonlinear(3, rng);
    const auto xx = sqs_isomorphic(x, x);
    REQUIRE(xx.has_value());
    const auto xy = sqs_isomorphic(x, y);
    const auto yx = sqs_isomorphic(y, x);
    CHECK(xy.has_value() == yx.has_value());
    if (xy) CHECK(apply_structured(*xy, sqs_from_tau(x)) == sqs_from_tau(y));
    const auto yz = sqs_isomorphic(y, z);
    if (xy && yz) CHECK(sqs_isomorphic(x, z).has_value());
    CHECK(xy.has_value() == (sqs_class_key(x) == sqs_class_key(y)));
    CHECK(sqs_isomorphic(x, invert_perm(x)).has_value());
  }
  CHECK(sqs_isomorphic(PointPerm::identity(3), PointPerm::from_linear(oracle::random_invertible(3, rng))));
  CHECK_FALSE(sqs_isomorphic(PointPerm::identity(3), random_nonlinear(3, rng)).has_value());
}

TEST_CASE("point transitivity is a class invariant") {
  std::mt19937 rng(6);
  CHECK(point_transitive(PointPerm::identity(3)).transitive);
  for (int trial = 0; trial < 30; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    const auto pt = point_transitive(tau);
    CHECK(pt.transitive == point_transitive(invert_perm(tau)).transitive);
    const PointPerm moved = oracle::conjugate(tau, oracle::random_invertible(3, rng), oracle::random_invertible(3, rng));
    CHECK(pt.transitive == point_transitive(moved).transitive);
    if (pt.witness) CHECK(verify_double_coset(invert_perm(tau), tau, *pt.witness));
  }
}

TEST_CASE("automorphism group order against backtracking") {
  CHECK(aut_order(PointPerm::identity(3)) == 322560);
  CHECK(oracle::sqs_automorphism_count(sqs_from_tau(PointPerm::identity(3))) == 322560);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const PointPerm tau = oracle::random_zero_fixing(3, rng);
    CHECK(aut_order(tau) == oracle::sqs_automorphism_count(sqs_from_tau(tau)));
  }
}

TEST_CASE("every counted structured automorphism preserves the system") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    const PointPerm tau = random_nonlinear(3, rng);
    const Sqs q = sqs_from_tau(tau);
    const auto parts = structured_automorphisms(tau);
    CHECK(parts.size() * 64 == aut_order(tau));
    std::set<std::vector<Point>> distinct;
    for (const auto& p : parts)
      for (Point c = 0; c < 8; ++c)
        for (Point d = 0; d < 8; ++d) {
          StructuredPerm full = p;
          full.left.shift = c;
          full.right.shift = d;
          const auto pts = as_points(full, 3);
          CHECK(oracle::preserves(q, pts));
          distinct.insert(pts);
        }
    CHECK(distinct.size() == aut_order(tau));
  }
  CHECK_THROWS_AS(structured_automorphisms(PointPerm::identity(3)), AffineInput);
}

}  // TEST_SUITE
