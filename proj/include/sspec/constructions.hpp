#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "sspec/simplicial.hpp"

namespace sspec {

// Unpointed standard simplex; k-simplices are the (k+1)-subsets of {0..n}
// in lexicographic order.
SSetPtr standard_simplex(int n);
// Appends a new vertex and makes it the basepoint.
SSetPtr add_disjoint_basepoint(const SSetPtr& x);
// Re-points x at the given vertex.
SSetPtr with_basepoint(const SSetPtr& x, int vertex);
SSetPtr point();
// S^0 is two vertices with vertex 0 the basepoint, S^1 is Delta[1]/dDelta[1],
// and S^n = S^1 ^ S^{n-1} (nested to the right).
SSetPtr simplicial_sphere(int n);
const SSetPtr& circle();
const SSetPtr& sphere0();

// Cartesian product X x Y, or smash product (X x Y)/(X v Y), with the pairing
// and splitting maps needed to build maps into and out of it.
//
// Nondegenerate simplices of the product are pairs (s_J x, s_K y) of equal
// dimension with J and K disjoint.
class SmashProduct {
 public:
  enum class Mode { cartesian, smash };

  SmashProduct(SSetPtr left, SSetPtr right, Mode mode = Mode::smash,
               Execution exec = Execution::parallel);

  const SSetPtr& left() const { return left_; }
  const SSetPtr& right() const { return right_; }
  const SSetPtr& result() const { return result_; }
  Mode mode() const { return mode_; }

  // Normal form of the pair (a, b); a and b must have equal dimension.
  FormalSimplex pair(const FormalSimplex& a, const FormalSimplex& b) const;
  // Components of a simplex of the result. The basepoint splits as
  // (basepoint, basepoint).
  std::pair<FormalSimplex, FormalSimplex> split(const FormalSimplex& u) const;
  const std::pair<FormalSimplex, FormalSimplex>& factors(int dim, int id) const {
    return factors_[dim][id];
  }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<FormalSimplex, FormalSimplex>& p) const noexcept {
      FormalSimplexHash h;
      return h(p.first) * 1000003u ^ h(p.second);
    }
  };

  SSetPtr left_;
  SSetPtr right_;
  SSetPtr result_;
  Mode mode_;
  std::vector<std::vector<std::pair<FormalSimplex, FormalSimplex>>> factors_;
  std::unordered_map<std::pair<FormalSimplex, FormalSimplex>, int, PairHash> index_;
};

// Reference face computation for product simplices, kept for testing the
// parallel kernel used by the SmashProduct constructor.
FiniteSimplicialSet::FaceTable product_faces_serial_reference(const SmashProduct& p);

SSetPtr smash(const SSetPtr& x, const SSetPtr& y);
SSetPtr product(const SSetPtr& x, const SSetPtr& y);

// f ^ g : X ^ Y -> X' ^ Y'.
SimplicialMap smash_maps(const SmashProduct& source, const SmashProduct& target,
                         const SimplicialMap& f, const SimplicialMap& g);
// X ^ Y -> Y ^ X.
SimplicialMap swap_map(const SmashProduct& xy, const SmashProduct& yx);
// (X ^ Y) ^ Z -> X ^ (Y ^ Z); xy_z.left() must be xy.result() and
// x_yz.right() must be yz.result().
SimplicialMap associator(const SmashProduct& xy, const SmashProduct& xy_z, const SmashProduct& yz,
                         const SmashProduct& x_yz);
// S^0 ^ Y -> Y and X ^ S^0 -> X.
SimplicialMap left_unitor(const SmashProduct& s0_y);
SimplicialMap right_unitor(const SmashProduct& x_s0);

}  // namespace sspec
