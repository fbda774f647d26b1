#include <doctest.h>

#include "tordef/torus.hpp"

#include <set>

using namespace tordef;

namespace {

IntMat mat2(int a, int b, int c, int d) {
  IntMat m(2, 2);
  m << Int(a), Int(b), Int(c), Int(d);
  return m;
}

// independent Cayley-graph builder: BFS the group, connect p ~ p + tau_k
std::set<std::pair<int, int>> cayley_edges(const TorusGroup& g) {
  std::set<std::pair<int, int>> edges;
  for (int p = 0; p < g.order(); ++p) {
    for (int k = 1; k <= 3; ++k) {
      int q = g.index_of(g.add(g.element(p), g.tau(k)));
      if (p != q) edges.insert({std::min(p, q), std::max(p, q)});
    }
  }
  return edges;
}

}  // namespace

TEST_CASE("canonical form") {
  CHECK(canonical_form(mat2(7, 2, 0, 1)) == GammaPresentation(7, 2, 1));
  CHECK(canonical_form(IntMat(rotation_rho() * mat2(7, 2, 0, 1))) == GammaPresentation(7, 2, 1));
  CHECK(canonical_form(mat2(3, 0, 0, 3)) == GammaPresentation(3, 0, 3));
  CHECK_THROWS_WITH_AS(canonical_form(mat2(1, 2, 2, 4)), "degenerate lattice",
                       std::invalid_argument);
}

TEST_CASE("canonical form is minimal over the 12 transforms") {
  // exhaust the transforms explicitly for (3,0,3)
  std::vector<IntMat> group = {identity_int(2)};
  for (int i = 0; i < 5; ++i) group.push_back(IntMat(rotation_rho() * group.back()));
  for (int i = 0; i < 6; ++i) group.push_back(IntMat(reflection_sigma() * group[i]));
  GammaPresentation best(3, 0, 3);
  for (const auto& p : group) {
    IntMat h = hnf(IntMat(p * mat2(3, 0, 0, 3))).h;
    GammaPresentation cand(static_cast<std::int64_t>(h(0, 0)), static_cast<std::int64_t>(h(0, 1)),
                           static_cast<std::int64_t>(h(1, 1)));
    CHECK(!(cand < best));
  }
}

TEST_CASE("build counts") {
  Triangulation t7 = build(GammaPresentation(7, 2, 1));
  CHECK(t7.n == 7);
  CHECK(t7.edge_types.size() == 21);
  CHECK(t7.facets.size() == 14);

  Triangulation t9 = build(GammaPresentation(3, 0, 3));
  CHECK(t9.n == 9);
  CHECK(t9.edge_types.size() == 27);
  CHECK(t9.facets.size() == 18);
}

TEST_CASE("edges match independent Cayley graph") {
  for (auto g : {GammaPresentation(7, 2, 1), GammaPresentation(3, 0, 3),
                 GammaPresentation(4, 1, 3), GammaPresentation(5, 2, 2)}) {
    Triangulation t = build(g);
    std::set<std::pair<int, int>> built;
    for (const auto& [pair, types] : t.edge_types) built.insert(pair);
    CHECK(built == cayley_edges(t.group));
  }
}

TEST_CASE("group invariants") {
  GroupInvariants i7 = group_invariants(GammaPresentation(7, 2, 1));
  CHECK(i7.orders == std::array<std::int64_t, 3>{7, 7, 7});
  CHECK(i7.divisors == std::pair<std::int64_t, std::int64_t>{1, 7});

  GroupInvariants i9 = group_invariants(GammaPresentation(3, 0, 3));
  CHECK(i9.divisors == std::pair<std::int64_t, std::int64_t>{3, 3});
  // SNF oracle on the presentation matrix
  auto divs = snf(GammaPresentation(3, 0, 3).matrix()).divisors;
  CHECK(divs == std::vector<Int>{Int(3), Int(3)});

  GroupInvariants i921 = group_invariants(GammaPresentation(9, 2, 1));
  CHECK(i921.orders[2] == 9);  // n/|tau3| = gcd(9,2) = 1
  TorusGroup g(GammaPresentation(9, 2, 1));
  CHECK(g.order_of(g.tau(3)) == 9);
}

TEST_CASE("tau relations and generation") {
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t c = 1; c <= 6; ++c)
      for (std::int64_t b = 0; b < a; ++b) {
        TorusGroup g(GammaPresentation(a, b, c));
        GroupElt sum = g.add(g.add(g.tau(1), g.tau(2)), g.tau(3));
        CHECK(sum == GroupElt{0, 0});
        // any two principal translations generate G
        for (int i = 1; i <= 3; ++i)
          for (int j = i + 1; j <= 3; ++j) {
            std::set<GroupElt> gen;
            for (std::int64_t s = 0; s < g.order(); ++s)
              for (std::int64_t t = 0; t < g.order(); ++t)
                gen.insert(g.add(g.mul(s, g.tau(i)), g.mul(t, g.tau(j))));
            CHECK(static_cast<std::int64_t>(gen.size()) == g.order());
          }
      }
}

TEST_CASE("order formulas vs brute force, coset cardinalities") {
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t c = 1; c <= 6; ++c)
      for (std::int64_t b = 0; b < a; ++b) {
        TorusGroup g(GammaPresentation(a, b, c));
        auto orders = g.tau_orders();  // asserts formula == brute force internally
        for (int k = 1; k <= 3; ++k) CHECK(orders[k - 1] == g.order_of(g.tau(k)));

        // Lemma qgen (ii): |[g]_i cap [h]_j| = |tau_i||tau_j|/n
        GroupElt e1 = g.element(static_cast<int>((a * c) / 2));
        GroupElt e2 = g.element(static_cast<int>((a * c) / 3));
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            CHECK(g.coset_intersection(e1, e2, i, j) ==
                  orders[i - 1] * orders[j - 1] / g.order());
          }

        // Lemma qgen (iii): gcd(n/|tau_i|, n/|tau_j|) independent of the pair
        std::int64_t n = g.order();
        std::int64_t d12 = std::gcd(n / orders[0], n / orders[1]);
        std::int64_t d13 = std::gcd(n / orders[0], n / orders[2]);
        std::int64_t d23 = std::gcd(n / orders[1], n / orders[2]);
        CHECK(d12 == d13);
        CHECK(d12 == d23);
        CHECK(d12 == g.divisors().first);
      }
}

TEST_CASE("polyhedrality") {
  CHECK(is_polyhedral(build(GammaPresentation(7, 2, 1))));
  CHECK(!is_polyhedral(build(GammaPresentation(1, 0, 1))));
  CHECK(!is_polyhedral(build(GammaPresentation(6, 2, 1))));
  CHECK(is_polyhedral(build(GammaPresentation(3, 0, 3))));

  // tau_i != +-tau_j is necessary for polyhedrality
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t c = 1; c <= 6; ++c)
      for (std::int64_t b = 0; b < a; ++b) {
        Triangulation t = build(GammaPresentation(a, b, c));
        if (!is_polyhedral(t)) continue;
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            CHECK(t.group.tau(i) != t.group.tau(j));
            CHECK(t.group.tau(i) != t.group.neg(t.group.tau(j)));
          }
        // Euler count
        CHECK(t.n - static_cast<int>(t.edge_types.size()) +
                  static_cast<int>(t.facets.size()) ==
              0);
      }
}

TEST_CASE("chirality") {
  CHECK(is_chiral(GammaPresentation(7, 2, 1)));
  CHECK(!is_chiral(GammaPresentation(8, 2, 1)));  // 1+2+4 = 7 != 0 mod 8
  // cyclic case: chiral iff 1 + b + b^2 = 0 mod n
  for (std::int64_t n = 2; n <= 20; ++n)
    for (std::int64_t b = 0; b < n; ++b)
      CHECK(is_chiral(GammaPresentation(n, b, 1)) == ((1 + b + b * b) % n == 0));
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(GammaPresentation(7, 2, 1), GammaPresentation(7, 4, 1)));
  CHECK(is_isomorphic(GammaPresentation(7, 2, 1), GammaPresentation(7, 2, 1)));
  CHECK(!is_isomorphic(GammaPresentation(7, 2, 1), GammaPresentation(3, 0, 3)));
}
