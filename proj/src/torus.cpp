#include "tordef/torus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tordef {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t to_i64(const Int& v) {
  if (v > Int(INT64_MAX) || v < Int(INT64_MIN))
    throw std::overflow_error("presentation entry exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

GammaPresentation::GammaPresentation(std::int64_t a_, std::int64_t b_, std::int64_t c_)
    : a(a_), b(b_), c(c_) {
  if (a < 1 || c < 1 || b < 0 || b >= a)
    throw std::invalid_argument("presentation must satisfy a >= 1, c >= 1, 0 <= b < a");
}

IntMat GammaPresentation::matrix() const {
  IntMat m(2, 2);
  m << Int(a), Int(b), Int(0), Int(c);
  return m;
}

IntMat rotation_rho() {
  IntMat r(2, 2);
  r << Int(0), Int(-1), Int(1), Int(1);
  return r;
}

IntMat reflection_sigma() {
  IntMat s(2, 2);
  s << Int(-1), Int(-1), Int(0), Int(1);
  return s;
}

TorusGroup::TorusGroup(GammaPresentation g) : pres_(g) {
  tau_[0] = reduce(1, 0);
  tau_[1] = reduce(-1, 1);
  tau_[2] = reduce(0, -1);
}

GroupElt TorusGroup::reduce(std::int64_t x, std::int64_t y) const {
  const std::int64_t a = pres_.a, b = pres_.b, c = pres_.c;
  std::int64_t yr = ((y % c) + c) % c;
  std::int64_t k = (y - yr) / c;
  x -= k * b;
  std::int64_t xr = ((x % a) + a) % a;
  return GroupElt{xr, yr};
}

GroupElt TorusGroup::add(GroupElt p, GroupElt q) const { return reduce(p.x + q.x, p.y + q.y); }
GroupElt TorusGroup::neg(GroupElt p) const { return reduce(-p.x, -p.y); }

GroupElt TorusGroup::mul(std::int64_t k, GroupElt p) const {
  return reduce(k * p.x, k * p.y);
}

std::int64_t TorusGroup::order_of(GroupElt p) const {
  GroupElt acc{0, 0};
  for (std::int64_t m = 1; m <= order(); ++m) {
    acc = add(acc, p);
    if (acc == GroupElt{0, 0}) return m;
  }
  throw std::logic_error("element order not found");
}

std::array<std::int64_t, 3> TorusGroup::tau_orders() const {
  const std::int64_t a = pres_.a, b = pres_.b, c = pres_.c, n = order();
  std::array<std::int64_t, 3> formula = {n / c, n / gcd64(a, b + c), n / gcd64(a, b)};
  for (int k = 1; k <= 3; ++k) {
    if (order_of(tau(k)) != formula[k - 1])
      throw std::logic_error("translation order formula disagrees with iteration");
  }
  return formula;
}

std::pair<std::int64_t, std::int64_t> TorusGroup::divisors() const {
  std::int64_t d = gcd64(pres_.a, gcd64(pres_.b, pres_.c));
  return {d, order() / d};
}

std::int64_t TorusGroup::coset_intersection(GroupElt g, GroupElt h, int i, int j) const {
  std::set<GroupElt> gi, hj;
  GroupElt acc = g;
  do {
    gi.insert(acc);
    acc = add(acc, tau(i));
  } while (acc != g);
  acc = h;
  do {
    hj.insert(acc);
    acc = add(acc, tau(j));
  } while (acc != h);
  std::int64_t count = 0;
  for (const auto& e : gi) count += hj.count(e);
  return count;
}

GammaPresentation canonical_form(const IntMat& m) {
  if (m.rows() != 2 || m.cols() != 2 || det_int(m) == 0)
    throw std::invalid_argument("degenerate lattice");
  // the dihedral group generated by rho and sigma, 12 elements
  std::vector<IntMat> group;
  std::vector<IntMat> frontier = {identity_int(2)};
  auto contains = [&](const IntMat& p) {
    return std::any_of(group.begin(), group.end(), [&](const IntMat& q) { return q == p; });
  };
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const auto& p : frontier) {
      if (contains(p)) continue;
      group.push_back(p);
      next.push_back(IntMat(rotation_rho() * p));
      next.push_back(IntMat(reflection_sigma() * p));
    }
    frontier = std::move(next);
  }
  if (group.size() != 12) throw std::logic_error("dihedral group closure != 12");

  std::optional<GammaPresentation> best;
  for (const auto& p : group) {
    IntMat h = hnf(IntMat(p * m)).h;
    GammaPresentation cand(to_i64(h(0, 0)), to_i64(h(0, 1)), to_i64(h(1, 1)));
    if (!best || cand < *best) best = cand;
  }
  return *best;
}

Triangulation build(GammaPresentation g) {
  TorusGroup group(g);
  Triangulation t{group, static_cast<int>(group.order()), {}, {}, {}};
  const int n = t.n;

  for (int k = 1; k <= 3; ++k) {
    for (int p = 0; p < n; ++p) {
      GroupElt pe = group.element(p);
      int q = group.index_of(group.add(pe, group.tau(k)));
      Edge e{std::min(p, q), std::max(p, q), k, p};
      t.orbit_edges.push_back(e);
      t.edge_types[{e.u, e.v}].push_back(k);
    }
  }
  for (auto& [pair, types] : t.edge_types) {
    std::sort(types.begin(), types.end());
    types.erase(std::unique(types.begin(), types.end()), types.end());
  }

  std::set<std::array<int, 3>> facets;
  for (int p = 0; p < n; ++p) {
    GroupElt pe = group.element(p);
    int q = group.index_of(group.add(pe, group.tau(1)));
    int up = group.index_of(group.sub(pe, group.tau(3)));
    int down = group.index_of(group.sub(pe, group.tau(2)));
    std::array<int, 3> f1{p, q, up}, f2{p, q, down};
    std::sort(f1.begin(), f1.end());
    std::sort(f2.begin(), f2.end());
    facets.insert(f1);
    facets.insert(f2);
  }
  t.facets.assign(facets.begin(), facets.end());
  return t;
}

std::vector<int> Triangulation::neighbors(int p) const {
  std::set<int> out;
  for (const auto& [pair, types] : edge_types) {
    if (pair.first == p) out.insert(pair.second);
    if (pair.second == p) out.insert(pair.first);
  }
  return {out.begin(), out.end()};
}

GroupInvariants group_invariants(GammaPresentation g) {
  TorusGroup group(g);
  GroupInvariants inv;
  inv.orders = group.tau_orders();
  inv.divisors = group.divisors();
  inv.n = group.order();
  return inv;
}

bool is_polyhedral(const Triangulation& t) {
  const int n = t.n;
  if (static_cast<int>(t.facets.size()) != 2 * n) return false;
  for (const auto& f : t.facets)
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return false;

  // 3n distinct edges, one type each, no loops
  if (static_cast<int>(t.edge_types.size()) != 3 * n) return false;
  for (const auto& [pair, types] : t.edge_types)
    if (pair.first == pair.second || types.size() != 1) return false;

  // every facet pair of vertices is an edge; count facets per edge
  std::map<std::pair<int, int>, int> edge_facets;
  for (const auto& f : t.facets) {
    const std::pair<int, int> sides[3] = {{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}};
    for (const auto& s : sides) {
      if (!t.edge_types.count(s)) return false;
      edge_facets[s] += 1;
    }
  }
  for (const auto& [pair, types] : t.edge_types) {
    auto it = edge_facets.find(pair);
    if (it == edge_facets.end() || it->second != 2) return false;
  }

  // vertex links: the hexagon (tau1, -tau3, tau2, -tau1, tau3, -tau2) at p
  const TorusGroup& g = t.group;
  for (int p = 0; p < n; ++p) {
    GroupElt pe = g.element(p);
    std::array<int, 6> cyc = {
        g.index_of(g.add(pe, g.tau(1))), g.index_of(g.sub(pe, g.tau(3))),
        g.index_of(g.add(pe, g.tau(2))), g.index_of(g.sub(pe, g.tau(1))),
        g.index_of(g.add(pe, g.tau(3))), g.index_of(g.sub(pe, g.tau(2)))};
    std::set<int> distinct(cyc.begin(), cyc.end());
    if (distinct.size() != 6 || distinct.count(p)) return false;
    auto nb = t.neighbors(p);
    if (std::set<int>(nb.begin(), nb.end()) != distinct) return false;
    for (int i = 0; i < 6; ++i) {
      int u = cyc[i], v = cyc[(i + 1) % 6];
      if (!t.has_edge(u, v)) return false;
      std::array<int, 3> f{p, u, v};
      std::sort(f.begin(), f.end());
      if (!std::binary_search(t.facets.begin(), t.facets.end(), f)) return false;
    }
  }
  return true;
}

bool is_chiral(GammaPresentation g) {
  IntMat m = g.matrix();
  Int det = det_int(m);
  IntMat adj(2, 2);
  adj << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  IntMat prod = adj * rotation_rho() * m;
  for (Eigen::Index i = 0; i < 2; ++i)
    for (Eigen::Index j = 0; j < 2; ++j)
      if (prod(i, j) % det != 0) return false;
  return true;
}

bool is_isomorphic(GammaPresentation g1, GammaPresentation g2) {
  return canonical_form(g1.matrix()) == canonical_form(g2.matrix());
}

}  // namespace tordef
