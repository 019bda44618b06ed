#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "perfcode/classify.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/io.hpp"

using namespace perfcode;

namespace {

const TauCatalog& catalog3() {
  static const TauCatalog c = catalog_taus(3);
  return c;
}

std::vector<TaggedTau> tagged(const TauCatalog& c) {
  std::vector<TaggedTau> out;
  for (const auto& e : c.entries) out.push_back({e.tau, Provenance::catalog(e.group_id, e.aut_id)});
  return out;
}

const std::vector<CatalogEntry>& classes3() {
  static const std::vector<CatalogEntry> e = classify(tagged(catalog3()));
  return e;
}

std::uint32_t class_count(const std::vector<CatalogEntry>& entries) {
  std::set<std::uint32_t> ids;
  for (const auto& e : entries) ids.insert(e.class_id);
  return static_cast<std::uint32_t>(ids.size());
}

// tau(H) n H as a sorted row basis
BitMatrix intersection_basis(const PointPerm& tau) {
  const LinearCode h = extended_hamming(tau.dim());
  return row_basis(intersect(apply_point_perm_to_code(tau, h), h).generators);
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("r = 3 catalog has four classes") {
  const auto& entries = classes3();
  CHECK(entries.size() == 1372);
  CHECK(class_count(entries) == 4);
  std::map<std::uint32_t, int> rank_of;
  for (const auto& e : entries) rank_of[e.class_id] = e.rank;
  std::multiset<int> ranks;
  for (auto [id, rank] : rank_of) ranks.insert(rank);
  CHECK(ranks == std::multiset<int>{11, 12, 13, 14});
  for (const auto& e : entries) {
    CHECK(e.point_transitive);
    CHECK(e.provenance.induced());
    if (e.rank == 14) CHECK(e.kernel_dim == 8);
    CHECK(e.non_mollard == (e.kernel_dim == minimal_kernel_dim(3)));
  }
}

TEST_CASE("class ids follow the least permutation of each class") {
  const auto& entries = classes3();
  std::uint32_t next = 0;
  for (const auto& e : entries) {
    CHECK(e.class_id <= next);
    if (e.class_id == next) ++next;
  }
}

TEST_CASE("invariants are constant on classes and agree with direct computation") {
  std::map<std::uint32_t, std::tuple<int, int, int, std::uint64_t>> seen;
  for (const auto& e : classes3()) {
    const PointPerm tau = PointPerm::from_id(e.tau_id);
    const CodeStats s = stats_from_tau(tau);
    CHECK(e.rank == s.rank);
    CHECK(e.kernel_dim == s.kernel_dim);
    CHECK(e.intersection_dim == intersection_dim(tau));
    REQUIRE(e.aut_order.has_value());
    const auto key = std::make_tuple(e.rank, e.kernel_dim, e.intersection_dim, *e.aut_order);
    auto [it, fresh] = seen.emplace(e.class_id, key);
    if (!fresh) CHECK(it->second == key);
  }
  // a sample of aut orders against the recomputation
  const auto& entries = classes3();
  for (std::size_t i = 0; i < entries.size(); i += 97)
    CHECK(*entries[i].aut_order == aut_order(PointPerm::from_id(entries[i].tau_id)));
}

TEST_CASE("members of one class have equivalent intersection codes") {
  const auto& entries = classes3();
  std::map<std::uint32_t, PointPerm> rep;
  for (const auto& e : entries) rep.emplace(e.class_id, PointPerm::from_id(e.tau_id));
  for (std::size_t i = 0; i < entries.size(); i += 5) {
    const PointPerm tau = PointPerm::from_id(entries[i].tau_id);
    const PointPerm& base = rep.at(entries[i].class_id);
    if (is_linear(base)) continue;
    const auto iso = sqs_isomorphic(base, tau);
    REQUIRE(iso.has_value());
    const PointPerm source = iso->swap ? invert_perm(base) : base;
    // tau = B source A^{-1}, so tau(H) n H = sigma_B(source(H) n H)
    const BitMatrix moved =
        row_basis(apply_point_perm_to_code(PointPerm::from_linear(iso->right.linear),
                                           LinearCode{8, intersection_basis(source)})
                      .generators);
    CHECK(moved == intersection_basis(tau));
  }
}

TEST_CASE("GL conjugates form one class") {
  std::mt19937 rng(10);
  const PointPerm tau = catalog3().entries[700].tau;
  std::vector<TaggedTau> list;
  for (int i = 0; i < 25; ++i)
    list.push_back({oracle::conjugate(tau, oracle::random_invertible(3, rng), oracle::random_invertible(3, rng)),
                    Provenance::user()});
  const auto entries = classify(list);
  CHECK(class_count(entries) == 1);
  for (const auto& e : entries) CHECK_FALSE(e.non_mollard);
}

TEST_CASE("classification ignores input order and worker count") {
  auto list = tagged(catalog3());
  std::mt19937 rng(99);
  std::shuffle(list.begin(), list.end(), rng);
  ClassifyOptions opts;
  opts.parallel = 3;
  CHECK(classify(list, opts) == classes3());
  // duplicates keep the least provenance
  list.push_back({catalog3().entries[5].tau, Provenance::user()});
  CHECK(classify(list) == classes3());
}

TEST_CASE("classify input checks") {
  std::vector<TaggedTau> mixed{{PointPerm::identity(3), {}}, {PointPerm::identity(4), {}}};
  CHECK_THROWS_AS(classify(mixed), DimensionMismatch);
  std::vector<TaggedTau> shifted{{PointPerm(2, {1, 0, 2, 3}), {}}};
  CHECK_THROWS_AS(classify(shifted), ZeroNotFixed);
  CHECK(classify({}).empty());
}

TEST_CASE("transitivity report contract") {
  const auto& cat = catalog3();
  const auto& e = cat.entries[900];
  const auto induced = transitivity_report({e.tau, Provenance::catalog(e.group_id, e.aut_id)});
  CHECK(induced.coordinate_transitive);
  CHECK(induced.transitive_verified);
  CHECK(induced.neighbor_transitive);

  CHECK(transitivity_report({PointPerm::identity(3), Provenance::user()}).coordinate_transitive);

  // a conjugate of a non-linear catalog permutation that is not itself in the catalog
  std::set<PointPerm> in_catalog;
  for (const auto& c : cat.entries) in_catalog.insert(c.tau);
  std::mt19937 rng(31);
  PointPerm outsider;
  bool found = false;
  for (int i = 0; i < 2000 && !found; ++i) {
    outsider = oracle::conjugate(e.tau, oracle::random_invertible(3, rng), oracle::random_invertible(3, rng));
    found = !in_catalog.count(outsider);
  }
  REQUIRE(found);
  CHECK_FALSE(find_inducing_automorphism(outsider).has_value());
  const auto user = transitivity_report({outsider, Provenance::user()});
  CHECK(user.coordinate_transitive);
  CHECK_FALSE(user.neighbor_transitive);
  CHECK(user.reason == "transitivity unverified");

  const auto p = find_inducing_automorphism(e.tau);
  REQUIRE(p.has_value());
  CHECK(*p == Provenance::catalog(e.group_id, e.aut_id));
}

TEST_CASE("series members") {
  const SeriesMember s6 = series_theorem7(6);
  CHECK(s6.parts == std::vector<int>{3, 3});
  CHECK(s6.entry.kernel_dim == 114);
  CHECK(s6.entry.kernel_dim == minimal_kernel_dim(6));
  CHECK(s6.entry.non_mollard);
  CHECK(s6.entry.point_transitive);
  CHECK(s6.report.neighbor_transitive);
  CHECK(s6.entry.provenance.kind == Provenance::Kind::Product);
  CHECK(verify_double_coset(invert_perm(s6.tau), s6.tau, s6.witness));
  CHECK(s6.tau == tau_product(s6.factors[0], s6.factors[1]));
  // component oracles: each factor has trivial linear structure, so does the product
  for (const auto& f : s6.factors) CHECK(linear_structure_set(f).size() == 1);
  CHECK(linear_structure_set(s6.tau).size() == 1);
  CHECK(stats_from_tau(s6.tau).kernel_dim == 114);

  const SeriesMember s7 = series_theorem7(7);
  CHECK(s7.parts == std::vector<int>{3, 4});
  CHECK(s7.entry.point_transitive);
  CHECK(verify_double_coset(invert_perm(s7.tau), s7.tau, s7.witness));
  CHECK(s7.entry.kernel_dim == 240);

  const SeriesMember s3 = series_theorem7(3);
  CHECK(s3.entry.aut_order.has_value());
  CHECK(s3.entry.provenance.kind == Provenance::Kind::Catalog);
  CHECK_FALSE(s6.entry.aut_order.has_value());

  CHECK_THROWS_AS(series_theorem7(5), ExcludedLength);
  CHECK_THROWS_AS(series_theorem7(2), DimensionMismatch);
}

TEST_CASE("provenance text") {
  CHECK(Provenance::parse("12:3") == Provenance::catalog(12, 3));
  CHECK(Provenance::parse("product").kind == Provenance::Kind::Product);
  CHECK(Provenance::catalog(4, 5).to_string() == "4:5");
  CHECK_THROWS_AS(Provenance::parse("4:"), MalformedInput);
  CHECK_THROWS_AS(Provenance::parse("x"), MalformedInput);
}

}  // TEST_SUITE

TEST_SUITE("io") {

TEST_CASE("entries round-trip through JSON and CSV") {
  auto entries = classes3();
  auto extra = series_theorem7(6).entry;
  extra.class_id = 9;
  std::vector<CatalogEntry> mixed(entries.begin(), entries.begin() + 30);
  mixed.push_back(extra);
  for (const auto* list : {&entries, &mixed}) {
    std::ostringstream j;
    write_entries_json(j, *list);
    std::istringstream ji(j.str());
    CHECK(read_entries_json(ji) == *list);
    std::ostringstream c;
    write_entries_csv(c, *list);
    std::istringstream ci(c.str());
    CHECK(read_entries_csv(ci) == *list);
    // emitting again is byte-identical
    std::istringstream again(c.str());
    std::ostringstream c2;
    write_entries_csv(c2, read_entries_csv(again));
    CHECK(c2.str() == c.str());
  }
  std::ostringstream c;
  write_entries_csv(c, mixed);
  CHECK(c.str().rfind("tau_id,r,rank,kernel_dim,intersection_dim,point_transitive,aut_order,class_id,non_mollard,provenance\n", 0) == 0);
  std::istringstream broken("tau_id,r\n0.1,3\n");
  CHECK_THROWS_AS(read_entries_csv(broken), MalformedInput);
  std::istringstream junk("{not json");
  CHECK_THROWS_AS(read_entries_json(junk), MalformedInput);
}

TEST_CASE("catalog, tau and group files round-trip") {
  std::ostringstream out;
  write_catalog(out, catalog3());
  std::istringstream in(out.str());
  const auto back = read_catalog(in);
  CHECK(back.size() == catalog3().entries.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].tau == catalog3().entries[i].tau);
    CHECK(back[i].provenance == Provenance::catalog(catalog3().entries[i].group_id, catalog3().entries[i].aut_id));
  }
  std::istringstream user("[\n{\"r\": 2, \"tau\": [0, 2, 3, 1]}\n]\n");
  const auto u = read_catalog(user);
  REQUIRE(u.size() == 1);
  CHECK(u[0].provenance == Provenance::user());

  const PointPerm tau = catalog3().entries[77].tau;
  CHECK(parse_tau_json(tau_json(tau)) == tau);
  CHECK_THROWS_AS(parse_tau_json("{\"r\": 2, \"perm\": [0, 1, 1, 3]}"), MalformedInput);
  CHECK_THROWS_AS(parse_tau_json("{\"r\": 2, \"perm\": [0, 1]}"), MalformedInput);
  CHECK_THROWS_AS(parse_tau_json("[1, 2"), MalformedInput);

  const auto groups = enumerate_regular_subgroups(3).groups;
  for (std::size_t i = 0; i < groups.size(); i += 31) CHECK(parse_group_json(group_json(groups[i])) == groups[i]);
  CHECK_THROWS_AS(parse_group_json("{\"r\": 3}"), MalformedInput);
}

TEST_CASE("code and SQS files round-trip") {
  const LinearCode h = extended_hamming(3);
  std::ostringstream o1;
  write_code(o1, h);
  std::istringstream i1(o1.str());
  const CodeFile f1 = read_code(i1);
  CHECK(f1.length == 8);
  CHECK(f1.log_size == 4);
  CHECK(row_basis(BitMatrix(f1.generators, 8)) == row_basis(h.generators));

  const CosetUnionCode s = build_s_tau(catalog3().entries[300].tau);
  std::ostringstream o2;
  write_code(o2, s);
  std::istringstream i2(o2.str());
  const CodeFile f2 = read_code(i2);
  CHECK(f2.log_size == 11);
  CHECK(f2.representatives == s.reps);

  const ExplicitCode e = explicit_materialize(s);
  std::ostringstream o3;
  write_code(o3, e);
  std::istringstream i3(o3.str());
  CHECK(ExplicitCode(16, read_code(i3).words) == e);

  const Sqs q = sqs_from_tau(catalog3().entries[300].tau);
  std::ostringstream o4;
  write_sqs(o4, q);
  std::istringstream i4(o4.str());
  bool mismatch = true;
  CHECK(read_sqs(i4, mismatch) == q);
  CHECK_FALSE(mismatch);
  std::istringstream short_file("v=16 b=2\n0 1 2 3\n");
  CHECK(read_sqs(short_file, mismatch).size() == 1);
  CHECK(mismatch);
  std::istringstream bad("v=16 b=1\n0 1 2\n");
  CHECK_THROWS_AS(read_sqs(bad, mismatch), MalformedInput);
}

}  // TEST_SUITE
