#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sspec/simplicial.hpp"

namespace sspec {

// Finite wedge of pointed sets: disjoint union with basepoints identified.
// The basepoint of the result is the basepoint of the first summand.
class Wedge {
 public:
  explicit Wedge(std::vector<SSetPtr> summands);

  const SSetPtr& result() const { return result_; }
  const std::vector<SSetPtr>& summands() const { return summands_; }
  const SimplicialMap& inclusion(int i) const { return inclusions_[i]; }
  // Summand index and simplex within it for a simplex of the result; the
  // basepoint is reported as belonging to summand 0.
  std::pair<int, FormalSimplex> locate(const FormalSimplex& u) const;

 private:
  std::vector<SSetPtr> summands_;
  SSetPtr result_;
  std::vector<SimplicialMap> inclusions_;
  std::vector<std::vector<std::pair<int, int>>> origin_;
};

SSetPtr wedge(const SSetPtr& x, const SSetPtr& y);

// Map out of a wedge assembled from one map per summand.
SimplicialMap wedge_induced(const Wedge& w, std::span<const SimplicialMap> maps);

// Quotient of b by the simplicial equivalence relation generated by a list
// of identified pairs. Union-find over every simplex up to dim(b) closed
// under faces and degeneracies, then a nondegenerate presentation is
// re-extracted.
class Quotient {
 public:
  Quotient(SSetPtr b, std::span<const std::pair<FormalSimplex, FormalSimplex>> relations);

  const SSetPtr& source() const { return source_; }
  const SSetPtr& result() const { return result_; }
  const SimplicialMap& projection() const { return projection_; }
  // Some simplex of the source projecting to u, with u's degeneracy.
  FormalSimplex lift(const FormalSimplex& u) const;

 private:
  SSetPtr source_;
  SSetPtr result_;
  SimplicialMap projection_;
  std::vector<std::vector<int>> representative_;
};

// Coequalizer of f, g : A -> B.
Quotient coequalizer(const SimplicialMap& f, const SimplicialMap& g);

// The map out of the quotient induced by h (which must be constant on the
// identified classes); throws VerificationFailure if it is not.
SimplicialMap factor_through(const Quotient& q, const SimplicialMap& h);

struct Pushout {
  Wedge wedge;
  Quotient quotient;
  SimplicialMap into_first;   // X -> P
  SimplicialMap into_second;  // Y -> P

  const SSetPtr& result() const { return quotient.result(); }
};

// Pushout of X <-f- A -g-> Y (pointed), as a coequalizer over X v Y.
Pushout pushout(const SimplicialMap& f, const SimplicialMap& g);

// Partial assignment of images, indexed like a map's image table.
using ForcedImages = std::vector<std::vector<std::optional<FormalSimplex>>>;

// All pointed simplicial maps K -> L, in a deterministic order. Throws
// BudgetExceeded once more than `budget` candidate images have been tried.
// The number tried is added to *tried when given.
std::vector<SimplicialMap> enumerate_pointed_maps(const SSetPtr& k, const SSetPtr& l,
                                                  std::uint64_t budget,
                                                  const ForcedImages* forced = nullptr,
                                                  std::uint64_t* tried = nullptr);

}  // namespace sspec
