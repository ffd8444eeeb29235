#pragma once

// Small hand-built simplicial sets shared by several test files.

#include "sspec/constructions.hpp"

namespace fixtures {

using sspec::FormalSimplex;

inline FormalSimplex nd(int dim, int id) { return FormalSimplex::nondegenerate(dim, id); }

// Three-edge circle v0 -> v1 -> v2 -> v0, pointed at v0.
inline sspec::SSetPtr three_edge_circle() {
  sspec::FiniteSimplicialSet::FaceTable f(2);
  f[0].resize(3);
  f[1] = {{nd(0, 1), nd(0, 0)}, {nd(0, 2), nd(0, 1)}, {nd(0, 0), nd(0, 2)}};
  return sspec::make_sset(std::move(f), 0);
}

// Wraps the three-edge circle twice around S^1: e0, e1 onto the edge,
// e2 collapsed.
inline sspec::SimplicialMap degree_two_map() {
  auto c3 = three_edge_circle();
  FormalSimplex collapsed{0, 1, 1};
  sspec::SimplicialMap::ImageTable images{{nd(0, 0), nd(0, 0), nd(0, 0)},
                                          {nd(1, 0), nd(1, 0), collapsed}};
  return sspec::SimplicialMap(c3, sspec::circle(), images);
}

// Delta[1] pointed at vertex 1.
inline sspec::SSetPtr interval() { return sspec::with_basepoint(sspec::standard_simplex(1), 1); }

}  // namespace fixtures
