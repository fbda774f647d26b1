#pragma once

// Stanley-Reisner ideal of an equivelar torus: quadratic generators are the
// non-edges, cubic generators the empty triangles, counts follow the closed
// formulas n(n-7)/2 and n(l1+l2+l3)/3.

#include "tordef/torus.hpp"

namespace tordef {

enum class CubicClass { kN201, k30n3, k31n3, k32n3 };

struct SRIdealSummary {
  std::vector<std::array<int, 2>> quadratic_gens;  // sorted vertex pairs
  std::vector<std::array<int, 3>> cubic_gens;      // sorted vertex triples
  std::array<int, 3> l_values{0, 0, 0};
};

// throws std::domain_error on non-polyhedral input
SRIdealSummary sr_generators(const Triangulation& t);

// l_k for any base vertex, asserted independent of the vertex
std::array<int, 3> l_values(const Triangulation& t);

// Hilbert function n*z^2 for z >= 1; the degree-0 value is 1.
Int hilbert(const Triangulation& t, int z);

// direct count of degree-z monomials whose support is a face (test oracle
// lives in the test suite; this is the closed-form route)
std::optional<CubicClass> needs_cubics_class(GammaPresentation g);

}  // namespace tordef
