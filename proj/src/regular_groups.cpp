#include "perfcode/regular_groups.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "perfcode/errors.hpp"
#include "perfcode/general_linear.hpp"

namespace perfcode {

RegularSubgroup RegularSubgroup::translations(int r) {
  return {r, std::vector<LinearMap>(std::size_t{1} << r, LinearMap::identity(r))};
}

std::optional<RegularViolation> verify_regular(const RegularSubgroup& g) {
  const std::size_t n = std::size_t{1} << g.r;
  if (g.mats.size() != n) return RegularViolation{0, 0, "group order differs from 2^r"};
  if (!(g.mats[0] == LinearMap::identity(g.r))) return RegularViolation{0, 0, "M_0 is not the identity"};
  for (Point a = 0; a < n; ++a)
    if (g.mats[a].dim() != g.r || !g.mats[a].invertible()) return RegularViolation{a, a, "M_a is not invertible"};
  for (Point a = 0; a < n; ++a)
    for (Point b = 0; b < n; ++b)
      if (!(g.mats[g.multiply(a, b)] == g.mats[a] * g.mats[b])) return RegularViolation{a, b, "closure law fails"};
  return std::nullopt;
}

namespace {

constexpr int kMaxGroupDim = 4;
constexpr std::size_t kMaxGroupOrder = std::size_t{1} << kMaxGroupDim;

// Columns of a matrix over F^r, r <= 4.
using Cols = std::array<std::uint8_t, kMaxGroupDim>;

struct Search {
  int r;
  unsigned n;
  std::vector<Cols> gl;
  std::vector<std::vector<std::uint32_t>> candidates;

  unsigned apply(const Cols& m, unsigned b) const {
    unsigned x = 0;
    for (int j = 0; b != 0; ++j, b >>= 1)
      if (b & 1U) x ^= m[j];
    return x;
  }
  Cols mul(const Cols& a, const Cols& b) const {
    Cols c{};
    for (int j = 0; j < r; ++j) c[j] = static_cast<std::uint8_t>(apply(a, b[j]));
    return c;
  }
  Cols identity() const {
    Cols c{};
    for (int j = 0; j < r; ++j) c[j] = static_cast<std::uint8_t>(1U << j);
    return c;
  }

  // Every power of (a, x) other than the identity is fixed-point free, and the order is a power of 2.
  // (c, M) fixes a point iff c lies in the image of M + I.
  bool semiregular(unsigned a, const Cols& x) const {
    unsigned shift = a;
    Cols m = x;
    const Cols id = identity();
    for (unsigned k = 1; k <= 64; ++k) {
      if (shift == 0 && m == id) return std::has_single_bit(k);
      std::uint32_t image = 1;
      for (int j = 0; j < r; ++j) {
        const unsigned col = m[j] ^ (1U << j);
        std::uint32_t next = image;
        for (unsigned p = 0; p < n; ++p)
          if ((image >> p) & 1U) next |= 1U << (p ^ col);
        image = next;
      }
      if ((image >> shift) & 1U) return false;
      shift ^= apply(m, a);
      m = mul(m, x);
    }
    return false;
  }

  explicit Search(int dim) : r(dim), n(1U << dim) {
    const auto& list = gl_list(r);
    gl.reserve(list.size());
    for (const auto& m : list) {
      Cols c{};
      for (int j = 0; j < r; ++j) c[j] = static_cast<std::uint8_t>(m.column(j));
      gl.push_back(c);
    }
    candidates.resize(n);
    for (unsigned p = 1; p < n; ++p)
      for (std::uint32_t i = 0; i < gl.size(); ++i)
        if (semiregular(p, gl[i])) candidates[p].push_back(i);
  }
};

struct State {
  std::array<Cols, kMaxGroupOrder> mats{};
  std::uint32_t assigned = 1;
};

// Closes the assigned labels under multiplication, starting from the pairs involving `fresh`.
bool propagate(const Search& s, State& st, std::uint32_t fresh) {
  while (fresh != 0) {
    std::uint32_t added = 0;
    for (unsigned a = 0; a < s.n; ++a) {
      if (!((st.assigned >> a) & 1U)) continue;
      for (unsigned b = 0; b < s.n; ++b) {
        if (!((st.assigned >> b) & 1U)) continue;
        if (!((fresh >> a) & 1U) && !((fresh >> b) & 1U)) continue;
        const unsigned c = a ^ s.apply(st.mats[a], b);
        const Cols product = s.mul(st.mats[a], st.mats[b]);
        if (!((st.assigned >> c) & 1U)) {
          st.assigned |= 1U << c;
          st.mats[c] = product;
          added |= 1U << c;
        } else if (st.mats[c] != product) {
          return false;
        }
      }
    }
    fresh = added;
  }
  return true;
}

struct Walker {
  const Search& s;
  const std::function<bool(const RegularSubgroup&)>& visit;
  const Budget& budget;
  std::uint64_t nodes = 0;
  bool stopped = false;

  RegularSubgroup to_group(const State& st) const {
    RegularSubgroup g{s.r, {}};
    g.mats.reserve(s.n);
    for (unsigned a = 0; a < s.n; ++a) {
      std::array<Point, LinearMap::kMaxDim> cols{};
      for (int j = 0; j < s.r; ++j) cols[j] = st.mats[a][j];
      g.mats.push_back(LinearMap::from_columns(s.r, std::span<const Point>(cols.data(), static_cast<std::size_t>(s.r))));
    }
    return g;
  }

  void dfs(const State& st) {
    if (stopped) return;
    if ((++nodes & 0xFF) == 0 && budget.expired()) {
      stopped = true;
      return;
    }
    const std::uint32_t full = s.n == 32 ? ~0U : (1U << s.n) - 1;
    if (st.assigned == full) {
      if (!visit(to_group(st))) stopped = true;
      return;
    }
    const unsigned p = static_cast<unsigned>(std::countr_one(st.assigned));
    for (const auto idx : s.candidates[p]) {
      const Cols& x = s.gl[idx];
      // The assigned labels form a subgroup S not containing p, so p S and S p avoid S.
      bool clash = false;
      for (unsigned a = 1; a < s.n && !clash; ++a) {
        if (!((st.assigned >> a) & 1U)) continue;
        clash = ((st.assigned >> (p ^ s.apply(x, a))) & 1U) || ((st.assigned >> (a ^ s.apply(st.mats[a], p))) & 1U);
      }
      if (clash) continue;
      State next = st;
      next.assigned |= 1U << p;
      next.mats[p] = x;
      if (propagate(s, next, 1U << p)) dfs(next);
      if (stopped) return;
    }
  }
};

void check_group_dim(int r) {
  if (r < 1) throw DimensionMismatch("regular subgroups need r >= 1");
  if (r > kMaxGroupDim) throw BudgetExceeded("regular subgroup enumeration is limited to r <= 4");
}

}  // namespace

bool enumerate_regular_subgroups(int r, const std::function<bool(const RegularSubgroup&)>& visit,
                                 const Budget& budget) {
  check_group_dim(r);
  const Search search(r);
  State root;
  root.mats[0] = search.identity();
  Walker walker{search, visit, budget};
  walker.dfs(root);
  return !walker.stopped;
}

RegularEnumeration enumerate_regular_subgroups(int r, const Budget& budget) {
  RegularEnumeration out;
  out.complete = enumerate_regular_subgroups(
      r,
      [&](const RegularSubgroup& g) {
        out.groups.push_back(g);
        return true;
      },
      budget);
  return out;
}

bool is_automorphism(const RegularSubgroup& g, const PointPerm& t) {
  if (t.dim() != g.r || t.size() != g.order() || !t.fixes_zero()) return false;
  for (Point a = 0; a < g.order(); ++a)
    for (Point b = 0; b < g.order(); ++b)
      if (t(g.multiply(a, b)) != g.multiply(t(a), t(b))) return false;
  return true;
}

namespace {

struct Table {
  unsigned n = 0;
  std::array<std::array<std::uint8_t, kMaxGroupOrder>, kMaxGroupOrder> mul{};
  std::array<unsigned, kMaxGroupOrder> order{};

  explicit Table(const RegularSubgroup& g) : n(static_cast<unsigned>(g.order())) {
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b) mul[a][b] = static_cast<std::uint8_t>(g.multiply(a, b));
    for (unsigned a = 0; a < n; ++a) {
      unsigned x = a;
      unsigned k = 1;
      while (x != 0) {
        x = mul[x][a];
        ++k;
      }
      order[a] = k;
    }
  }
};

}  // namespace

std::vector<GroupAutomorphism> automorphisms(const RegularSubgroup& g) {
  if (g.order() > kMaxGroupOrder) throw BudgetExceeded("automorphism search is limited to groups of order 16");
  const Table table(g);
  const unsigned n = table.n;

  std::vector<unsigned> gens;
  std::uint32_t generated = 1;
  for (unsigned a = 1; a < n; ++a) {
    if ((generated >> a) & 1U) continue;
    gens.push_back(a);
    for (bool grew = true; grew;) {
      grew = false;
      for (unsigned x = 0; x < n; ++x) {
        if (!((generated >> x) & 1U)) continue;
        for (auto s : gens) {
          const unsigned y = table.mul[x][s];
          if (!((generated >> y) & 1U)) {
            generated |= 1U << y;
            grew = true;
          }
        }
      }
    }
  }

  std::vector<GroupAutomorphism> result;
  std::vector<unsigned> images(gens.size(), 0);
  const std::uint32_t all = (n == 32) ? ~0U : (1U << n) - 1;

  // Extends generator images to a map along words in the generators, then checks it.
  auto try_images = [&]() {
    std::array<int, kMaxGroupOrder> t{};
    t.fill(-1);
    t[0] = 0;
    std::array<unsigned, kMaxGroupOrder> queue{};
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = 0;
    while (head < tail) {
      const unsigned x = queue[head++];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const unsigned y = table.mul[x][gens[j]];
        const int ty = table.mul[t[x]][images[j]];
        if (t[y] < 0) {
          t[y] = ty;
          queue[tail++] = y;
        } else if (t[y] != ty) {
          return;
        }
      }
    }
    std::uint32_t seen = 0;
    for (unsigned x = 0; x < n; ++x) seen |= 1U << t[x];
    if (seen != all) return;
    for (unsigned a = 0; a < n; ++a)
      for (unsigned b = 0; b < n; ++b)
        if (t[table.mul[a][b]] != table.mul[t[a]][t[b]]) return;
    std::vector<Point> perm(n);
    for (unsigned x = 0; x < n; ++x) perm[x] = static_cast<Point>(t[x]);
    result.emplace_back(g.r, std::move(perm));
  };

  std::function<void(std::size_t)> choose = [&](std::size_t i) {
    if (i == gens.size()) {
      try_images();
      return;
    }
    for (unsigned c = 1; c < n; ++c) {
      if (table.order[c] != table.order[gens[i]]) continue;
      images[i] = c;
      choose(i + 1);
    }
  };
  if (n == 1) {
    result.push_back(PointPerm::identity(g.r));
  } else {
    choose(0);
  }
  return result;
}

PointPerm induced_tau(const RegularSubgroup& g, const GroupAutomorphism& t) {
  if (!is_automorphism(g, t)) throw NotAnAutomorphism("map does not preserve the group law");
  return t;
}

TauCatalog catalog_taus(int r, const Budget& budget) {
  check_group_dim(r);
  const unsigned n = 1U << r;
  // Images packed with tau(0) in the most significant nibble, so integer order is tau order.
  struct Packed {
    std::uint64_t key;
    std::uint32_t group_id;
    std::uint32_t aut_id;
  };
  std::vector<Packed> packed;
  TauCatalog catalog;
  catalog.r = r;
  std::uint32_t group_id = 0;
  catalog.complete = enumerate_regular_subgroups(
      r,
      [&](const RegularSubgroup& g) {
        const auto auts = automorphisms(g);
        for (std::uint32_t aut_id = 0; aut_id < auts.size(); ++aut_id) {
          std::uint64_t key = 0;
          for (unsigned x = 0; x < n; ++x) key = (key << 4) | auts[aut_id](x);
          packed.push_back({key, group_id, aut_id});
        }
        catalog.pairs += auts.size();
        ++group_id;
        return !budget.expired();
      },
      budget);
  catalog.groups = group_id;
  std::stable_sort(packed.begin(), packed.end(), [](const Packed& a, const Packed& b) { return a.key < b.key; });
  packed.erase(std::unique(packed.begin(), packed.end(), [](const Packed& a, const Packed& b) { return a.key == b.key; }),
               packed.end());
  catalog.entries.reserve(packed.size());
  for (const auto& p : packed) {
    std::vector<Point> images(n);
    for (unsigned x = 0; x < n; ++x) images[x] = static_cast<Point>((p.key >> (4 * (n - 1 - x))) & 0xF);
    catalog.entries.push_back({PointPerm(r, std::move(images)), p.group_id, p.aut_id});
  }
  return catalog;
}

}  // namespace perfcode
