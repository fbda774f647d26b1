#include "tordef/srideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace tordef {

std::array<int, 3> l_values(const Triangulation& t) {
  const TorusGroup& g = t.group;
  std::array<int, 3> l{0, 0, 0};
  for (int k = 1; k <= 3; ++k) {
    std::optional<int> common;
    for (int p = 0; p < t.n; ++p) {
      GroupElt pe = g.element(p);
      int q = g.index_of(g.add(pe, g.tau(k)));
      auto np = t.neighbors(p);
      auto nq = t.neighbors(q);
      std::vector<int> both;
      std::set_intersection(np.begin(), np.end(), nq.begin(), nq.end(),
                            std::back_inserter(both));
      // link of the edge = apexes of its two facets
      int apexes = 0;
      for (int r : both) {
        std::array<int, 3> f{p, q, r};
        std::sort(f.begin(), f.end());
        if (std::binary_search(t.facets.begin(), t.facets.end(), f)) ++apexes;
      }
      int val = static_cast<int>(both.size()) - apexes;
      if (common && *common != val)
        throw std::logic_error("l_k depends on the base vertex");
      common = val;
    }
    l[k - 1] = *common;
  }
  return l;
}

SRIdealSummary sr_generators(const Triangulation& t) {
  if (!is_polyhedral(t)) throw std::domain_error("Stanley-Reisner generators need a polyhedral torus");
  SRIdealSummary out;
  const int n = t.n;

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (!t.has_edge(p, q)) out.quadratic_gens.push_back({p, q});

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      if (!t.has_edge(p, q)) continue;
      for (int r = q + 1; r < n; ++r) {
        if (!t.has_edge(p, r) || !t.has_edge(q, r)) continue;
        std::array<int, 3> f{p, q, r};
        if (!std::binary_search(t.facets.begin(), t.facets.end(), f))
          out.cubic_gens.push_back(f);
      }
    }

  out.l_values = l_values(t);
  // Lemma-route count must agree with the direct enumeration
  int expected = n * (out.l_values[0] + out.l_values[1] + out.l_values[2]);
  if (expected % 3 != 0 || static_cast<int>(out.cubic_gens.size()) != expected / 3)
    throw std::logic_error("cubic generator count disagrees with l-value formula");
  return out;
}

Int hilbert(const Triangulation& t, int z) {
  if (z < 0) throw std::invalid_argument("hilbert: negative degree");
  if (z == 0) return 1;
  return Int(t.n) * Int(z) * Int(z);
}

std::optional<CubicClass> needs_cubics_class(GammaPresentation g) {
  const std::int64_t n = g.n();
  if (n >= 3 && is_isomorphic(g, GammaPresentation(n, 2 % n, 1)))
    return CubicClass::kN201;
  if (n % 3 == 0 && n >= 3) {
    for (std::int64_t beta = 0; beta <= 2; ++beta) {
      if (is_isomorphic(g, GammaPresentation(3, beta, n / 3))) {
        switch (beta) {
          case 0: return CubicClass::k30n3;
          case 1: return CubicClass::k31n3;
          default: return CubicClass::k32n3;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace tordef
