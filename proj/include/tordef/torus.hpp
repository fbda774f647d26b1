#pragma once

// Equivelar triangulated tori T = {3,6}/Gamma. The lattice of the
// tessellation has basis tau1 = (1,0) and -tau3 = (0,1); Gamma is the image
// of the standard-form matrix (a b; 0 c). Vertices of T are identified with
// the group G = Z^2/Gamma through canonical coset representatives.

#include "tordef/normalform.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace tordef {

struct GammaPresentation {
  std::int64_t a = 1, b = 0, c = 1;

  GammaPresentation() = default;
  GammaPresentation(std::int64_t a_, std::int64_t b_, std::int64_t c_);

  std::int64_t n() const { return a * c; }
  IntMat matrix() const;  // (a b; 0 c)
  auto operator<=>(const GammaPresentation&) const = default;
};

// Group element as canonical coset representative: 0 <= x < a, 0 <= y < c.
struct GroupElt {
  std::int64_t x = 0, y = 0;
  auto operator<=>(const GroupElt&) const = default;
};

class TorusGroup {
 public:
  explicit TorusGroup(GammaPresentation g);

  const GammaPresentation& presentation() const { return pres_; }
  std::int64_t order() const { return pres_.n(); }

  GroupElt reduce(std::int64_t x, std::int64_t y) const;
  GroupElt add(GroupElt p, GroupElt q) const;
  GroupElt neg(GroupElt p) const;
  GroupElt sub(GroupElt p, GroupElt q) const { return add(p, neg(q)); }
  GroupElt mul(std::int64_t k, GroupElt p) const;

  int index_of(GroupElt p) const { return static_cast<int>(p.x + pres_.a * p.y); }
  GroupElt element(int index) const {
    return GroupElt{index % pres_.a, index / pres_.a};
  }

  GroupElt tau(int k) const { return tau_[k - 1]; }  // k in {1,2,3}
  std::int64_t order_of(GroupElt p) const;

  // orders of the principal translations, by the closed formula
  // n/|tau1| = c, n/|tau2| = gcd(a, b+c), n/|tau3| = gcd(a, b),
  // cross-checked against brute-force iteration.
  std::array<std::int64_t, 3> tau_orders() const;

  // elementary divisors (d, n/d) with d = gcd(a, b, c)
  std::pair<std::int64_t, std::int64_t> divisors() const;

  // |[g]_i cap [h]_j| by explicit coset enumeration
  std::int64_t coset_intersection(GroupElt g, GroupElt h, int i, int j) const;

 private:
  GammaPresentation pres_;
  std::array<GroupElt, 3> tau_;
};

struct Edge {
  int u = 0, v = 0;  // vertex indices, u <= v
  int type = 0;      // 1, 2 or 3
  int base = 0;      // p with edge {p, tau_k(p)}
  auto operator<=>(const Edge&) const = default;
};

struct Triangulation {
  TorusGroup group;
  int n = 0;
  std::vector<Edge> orbit_edges;            // 3n entries, (type, base) order
  std::vector<std::array<int, 3>> facets;   // sorted triples, lexicographic
  // distinct undirected edges carrying the set of types that produced them
  std::map<std::pair<int, int>, std::vector<int>> edge_types;

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edge_types.count({u, v}) > 0;
  }
  std::vector<int> neighbors(int p) const;
};

// Lexicographically minimal (a,b,c) over the 12 dihedral transforms P*M,
// each reduced to standard form by column HNF. Complete isomorphism
// invariant for the triangulated tori.
GammaPresentation canonical_form(const IntMat& m);

Triangulation build(GammaPresentation g);

struct GroupInvariants {
  std::array<std::int64_t, 3> orders;
  std::pair<std::int64_t, std::int64_t> divisors;
  std::int64_t n = 0;
  // |[g]_i cap [h]_j| = |tau_i||tau_j|/n, independent of g,h
  std::int64_t coset_card(int i, int j) const { return orders[i - 1] * orders[j - 1] / n; }
};

GroupInvariants group_invariants(GammaPresentation g);

// Direct simplicial-complex test: distinct facet vertices, correct counts,
// facet pairs meeting in a common face, two facets per edge, 6-cycle links.
bool is_polyhedral(const Triangulation& t);

// rho(Gamma) subset Gamma, as an integer divisibility test on M^-1 rho M.
bool is_chiral(GammaPresentation g);

bool is_isomorphic(GammaPresentation g1, GammaPresentation g2);

// the 6-fold rotation and reflection generating the D6 action on presentations
IntMat rotation_rho();
IntMat reflection_sigma();

}  // namespace tordef
