#include "perfcode/classify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "perfcode/codes.hpp"
#include "perfcode/constructions.hpp"
#include "perfcode/errors.hpp"
#include "perfcode/regular_groups.hpp"
#include "perfcode/sqs.hpp"

namespace perfcode {

std::string Provenance::to_string() const {
  switch (kind) {
    case Kind::Catalog:
      return std::to_string(group_id) + ":" + std::to_string(aut_id);
    case Kind::Product:
      return "product";
    case Kind::User:
      break;
  }
  return "user";
}

Provenance Provenance::parse(const std::string& text) {
  if (text == "user") return user();
  if (text == "product") return product();
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw MalformedInput("bad provenance: " + text);
  try {
    std::size_t used = 0;
    const auto g = std::stoul(text.substr(0, colon), &used);
    if (used != colon) throw MalformedInput("bad provenance: " + text);
    const auto a = std::stoul(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw MalformedInput("bad provenance: " + text);
    return catalog(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(a));
  } catch (const std::logic_error&) {
    throw MalformedInput("bad provenance: " + text);
  }
}

int minimal_kernel_dim(int r) { return (2 << r) - 2 * r - 2; }

namespace {

// Runs body(i) for i in [0, count) on up to `workers` threads; results must go to slot i.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, const Budget& budget, Body body) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> expired{false};
  auto run = [&]() {
    constexpr std::size_t kChunk = 256;
    for (;;) {
      const std::size_t start = next.fetch_add(kChunk);
      if (start >= count || expired.load()) return;
      if (budget.expired()) {
        expired = true;
        return;
      }
      const std::size_t stop = std::min(count, start + kChunk);
      for (std::size_t i = start; i < stop; ++i) body(i);
    }
  };
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>((count + 255) / 256)));
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (expired) throw BudgetExceeded("classification ran out of time");
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller root wins, so roots are the least member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

struct PerTau {
  int rank = 0;
  int kernel_dim = 0;
  int intersection_dim = 0;
  PointPerm key;
};

}  // namespace

std::vector<CatalogEntry> classify(const std::vector<TaggedTau>& taus, const ClassifyOptions& options) {
  if (taus.empty()) return {};
  const int r = taus.front().tau.dim();
  for (const auto& t : taus) {
    if (t.tau.dim() != r) throw DimensionMismatch("classify needs permutations of one dimension");
    if (!t.tau.fixes_zero()) throw ZeroNotFixed();
  }
  if (r > 5) throw BudgetExceeded("classification is limited to r <= 5");

  std::vector<TaggedTau> items(taus);
  std::sort(items.begin(), items.end(), [](const TaggedTau& a, const TaggedTau& b) {
    return std::tie(a.tau, a.provenance) < std::tie(b.tau, b.provenance);
  });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const TaggedTau& a, const TaggedTau& b) { return a.tau == b.tau; }),
              items.end());
  const std::size_t n = items.size();

  std::vector<PerTau> info(n);
  parallel_for(n, options.parallel, options.budget, [&](std::size_t i) {
    const PointPerm& tau = items[i].tau;
    const CodeStats stats = stats_from_tau(tau);
    info[i] = {stats.rank, stats.kernel_dim, intersection_dim(tau), sqs_class_key(tau)};
  });

  // Key groups; the first index of each group is its least tau.
  std::map<PointPerm, std::vector<std::size_t>> by_key;
  for (std::size_t i = 0; i < n; ++i) by_key[info[i].key].push_back(i);
  std::vector<std::vector<std::size_t>> groups;
  groups.reserve(by_key.size());
  for (auto& [key, members] : by_key) groups.push_back(std::move(members));
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::uint64_t> aut(groups.size());
  std::vector<char> transitive(groups.size());
  parallel_for(groups.size(), options.parallel, options.budget, [&](std::size_t g) {
    const PointPerm& rep = items[groups[g].front()].tau;
    aut[g] = aut_order(rep);
    transitive[g] = point_transitive(rep).transitive ? 1 : 0;
  });

  using Invariants = std::tuple<int, int, int, std::uint64_t>;
  std::map<Invariants, std::vector<std::size_t>> buckets;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const PerTau& first = info[groups[g].front()];
    for (const auto i : groups[g])
      if (std::tie(info[i].rank, info[i].kernel_dim, info[i].intersection_dim) !=
          std::tie(first.rank, first.kernel_dim, first.intersection_dim))
        throw InconsistentInput("isomorphic permutations with different invariants");
    buckets[{first.rank, first.kernel_dim, first.intersection_dim, aut[g]}].push_back(g);
  }

  // Candidate pairs inside each bucket, tested independently and merged in sorted order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [inv, members] : buckets)
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) pairs.emplace_back(members[x], members[y]);
  std::vector<char> isomorphic(pairs.size());
  parallel_for(pairs.size(), options.parallel, options.budget, [&](std::size_t p) {
    const auto [g, h] = pairs[p];
    isomorphic[p] = sqs_isomorphic(items[groups[g].front()].tau, items[groups[h].front()].tau) ? 1 : 0;
  });
  UnionFind classes(groups.size());
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (isomorphic[p]) classes.unite(pairs[p].first, pairs[p].second);

  std::vector<std::uint32_t> class_of_root(groups.size(), 0);
  std::uint32_t next_id = 0;
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (classes.find(g) == g) class_of_root[g] = next_id++;

  std::vector<CatalogEntry> entries(n);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::uint32_t id = class_of_root[classes.find(g)];
    for (const auto i : groups[g]) {
      CatalogEntry& e = entries[i];
      e.tau_id = items[i].tau.id();
      e.r = r;
      e.rank = info[i].rank;
      e.kernel_dim = info[i].kernel_dim;
      e.intersection_dim = info[i].intersection_dim;
      e.point_transitive = transitive[g] != 0;
      e.aut_order = aut[g];
      e.class_id = id;
      e.provenance = items[i].provenance;
      e.non_mollard = e.kernel_dim == minimal_kernel_dim(r) && e.provenance.induced();
    }
  }
  return entries;
}

TransitivityReport transitivity_report(const TaggedTau& t) {
  TransitivityReport report;
  report.coordinate_transitive = point_transitive(t.tau).transitive;
  report.transitive_verified = t.provenance.induced();
  report.neighbor_transitive = report.coordinate_transitive && report.transitive_verified;
  if (!report.coordinate_transitive) {
    report.reason = "not point transitive";
  } else if (!report.transitive_verified) {
    report.reason = "transitivity unverified";
  } else {
    report.reason = "induced and point transitive";
  }
  return report;
}

std::optional<Provenance> find_inducing_automorphism(const PointPerm& tau, const Budget& budget) {
  if (!tau.fixes_zero()) throw ZeroNotFixed();
  std::optional<Provenance> found;
  std::uint32_t group_id = 0;
  const bool complete = enumerate_regular_subgroups(
      tau.dim(),
      [&](const RegularSubgroup& g) {
        if (is_automorphism(g, tau)) {
          const auto auts = automorphisms(g);
          const auto it = std::find(auts.begin(), auts.end(), tau);
          found = Provenance::catalog(group_id, static_cast<std::uint32_t>(it - auts.begin()));
          return false;
        }
        ++group_id;
        return true;
      },
      budget);
  if (!complete && !found) throw BudgetExceeded("regular subgroup search ran out of time");
  return found;
}

TaggedTau series_base(int r) {
  if (r != 3 && r != 4) throw DimensionMismatch("series factors are on F^3 or F^4");
  std::optional<TaggedTau> found;
  std::uint32_t group_id = 0;
  enumerate_regular_subgroups(r, [&](const RegularSubgroup& g) {
    const auto auts = automorphisms(g);
    for (std::uint32_t aut_id = 0; aut_id < auts.size(); ++aut_id) {
      const PointPerm& t = auts[aut_id];
      if (linear_structure_set(t).size() != 1) continue;
      if (!found || t < found->tau) found = TaggedTau{t, Provenance::catalog(group_id, aut_id)};
    }
    ++group_id;
    // Every r = 3 group is scanned so the choice is the least in the whole catalog; at r = 4 the
    // first group that yields one is enough.
    return r == 3 || !found;
  });
  if (!found) throw InconsistentInput("no induced permutation with trivial linear structure");
  return *found;
}

SeriesMember series_theorem7(int r) {
  if (r == 5) throw ExcludedLength("length 64 (r = 5) is excluded");
  if (r < 3) throw DimensionMismatch("series needs r >= 3");
  if (r > 9) throw BudgetExceeded("series is limited to r <= 9");

  SeriesMember out;
  int rest = r;
  while (rest > 0) {
    const int part = (rest % 3 == 0) ? 3 : 4;
    out.parts.push_back(part);
    rest -= part;
  }
  std::sort(out.parts.begin(), out.parts.end());

  const TaggedTau base3 = out.parts.front() == 3 ? series_base(3) : TaggedTau{};
  const TaggedTau base4 = out.parts.back() == 4 ? series_base(4) : TaggedTau{};
  std::optional<PointPerm> tau;
  std::optional<LinearMap> a;
  std::optional<LinearMap> b;
  std::size_t linear_structure = 1;
  for (const int part : out.parts) {
    const PointPerm& f = part == 3 ? base3.tau : base4.tau;
    out.factors.push_back(f);
    const auto w = double_coset_member(invert_perm(f), f, CosetGroup::GL);
    if (!w) throw InconsistentInput("factor is not point transitive");
    linear_structure *= linear_structure_set(f).size();
    tau = tau ? tau_product(*tau, f) : f;
    a = a ? LinearMap::block_diagonal(*a, w->a.linear) : w->a.linear;
    b = b ? LinearMap::block_diagonal(*b, w->b.linear) : w->b.linear;
  }
  out.tau = *tau;
  out.witness = {AffineMap::from_linear(*a), AffineMap::from_linear(*b)};
  if (!verify_double_coset(invert_perm(out.tau), out.tau, out.witness))
    throw InconsistentInput("block witness does not verify");

  const CodeStats stats = stats_from_tau(out.tau);
  const int product_rule = minimal_kernel_dim(r) + std::countr_zero(linear_structure);
  if (stats.kernel_dim != product_rule) throw InconsistentInput("kernel differs from the product rule");

  out.report.coordinate_transitive = true;
  out.report.transitive_verified = true;
  out.report.neighbor_transitive = true;
  out.report.reason = "product of induced factors, block witness verified";

  CatalogEntry& e = out.entry;
  e.tau_id = out.tau.id();
  e.r = r;
  e.rank = stats.rank;
  e.kernel_dim = stats.kernel_dim;
  e.intersection_dim = intersection_dim(out.tau);
  e.point_transitive = true;
  if (r <= 4) e.aut_order = aut_order(out.tau);
  e.provenance = out.parts.size() == 1 ? (r == 3 ? base3 : base4).provenance : Provenance::product();
  e.non_mollard = e.kernel_dim == minimal_kernel_dim(r);
  return out;
}

}  // namespace perfcode
