#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sspec/execution.hpp"

namespace sspec {

using DegeneracyMask = std::uint32_t;

// A possibly degenerate simplex in Eilenberg-Zilber normal form
// s_{i_1} ... s_{i_r} y with i_1 > ... > i_r and y nondegenerate.
//
// The degeneracy word is stored as a bit set: bit i is set iff s_i occurs.
// Equivalently, the underlying surjection eta: [dim] -> [target_dim]
// satisfies eta(i) == eta(i + 1) exactly for the set bits.
struct FormalSimplex {
  std::int32_t target = 0;
  DegeneracyMask mask = 0;
  std::int16_t dim = 0;

  int target_dim() const { return dim - std::popcount(mask); }
  bool degenerate() const { return mask != 0; }

  // Degeneracy indices, strictly decreasing.
  std::vector<int> word() const;
  static FormalSimplex from_word(int dim, std::span<const int> word, int target);
  static FormalSimplex nondegenerate(int dim, int id) {
    return FormalSimplex{id, 0, static_cast<std::int16_t>(dim)};
  }

  friend bool operator==(const FormalSimplex&, const FormalSimplex&) = default;
  friend auto operator<=>(const FormalSimplex& a, const FormalSimplex& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    if (auto c = a.mask <=> b.mask; c != 0) return c;
    return a.target <=> b.target;
  }
};

struct FormalSimplexHash {
  std::size_t operator()(const FormalSimplex& s) const noexcept {
    std::uint64_t h = static_cast<std::uint32_t>(s.target);
    h = h * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(s.mask) << 8) ^
        static_cast<std::uint64_t>(s.dim);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Values of the surjection [n] -> [n - popcount(mask)] encoded by mask.
void surjection_values(DegeneracyMask mask, int n, int* out);

// Applies the degeneracy operator encoded by (eta_mask, new_dim) to s.
// Purely combinatorial: composes surjections.
FormalSimplex degenerate(const FormalSimplex& s, DegeneracyMask eta_mask, int new_dim);

// Removes the bits of `common` from `mask` and renumbers the remaining ones,
// i.e. factors eta_mask = alpha o eta_common and returns alpha's mask.
DegeneracyMask compress_mask(DegeneracyMask mask, DegeneracyMask common);

class FiniteSimplicialSet {
 public:
  using FaceTable = std::vector<std::vector<std::vector<FormalSimplex>>>;

  FiniteSimplicialSet() = default;
  // faces[d][id] holds the d + 1 faces of the nondegenerate d-simplex id
  // (empty for vertices).
  FiniteSimplicialSet(FaceTable faces, std::optional<int> basepoint);

  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  int count(int dim) const {
    return dim >= 0 && dim < static_cast<int>(faces_.size())
               ? static_cast<int>(faces_[dim].size())
               : 0;
  }
  int total_count() const;
  std::vector<int> dims() const;

  std::span<const FormalSimplex> faces(int dim, int id) const { return faces_[dim][id]; }
  const FaceTable& face_table() const { return faces_; }

  std::optional<int> basepoint() const { return basepoint_; }
  bool pointed() const { return basepoint_.has_value(); }

  // The basepoint degenerated up to dimension dim.
  FormalSimplex base_simplex(int dim) const;
  bool is_base(const FormalSimplex& s) const {
    return basepoint_ && s.target_dim() == 0 && s.target == *basepoint_;
  }

  // theta: [n] -> [s.dim] monotone, given by its n + 1 values.
  FormalSimplex apply(const FormalSimplex& s, std::span<const int> theta) const;
  FormalSimplex face(const FormalSimplex& s, int i) const;
  FormalSimplex degeneracy(const FormalSimplex& s, int j) const;

  bool contains(const FormalSimplex& s) const;

  friend bool operator==(const FiniteSimplicialSet&, const FiniteSimplicialSet&) = default;

 private:
  FaceTable faces_;
  std::optional<int> basepoint_;
};

using SSetPtr = std::shared_ptr<const FiniteSimplicialSet>;

inline SSetPtr make_sset(FiniteSimplicialSet::FaceTable faces, std::optional<int> basepoint) {
  return std::make_shared<const FiniteSimplicialSet>(std::move(faces), basepoint);
}

bool same_set(const SSetPtr& a, const SSetPtr& b);

struct Violation {
  int dim = 0;
  int id = 0;
  std::string what;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

// Checks well-formedness of every face and d_i d_j = d_{j-1} d_i for i < j.
ValidationReport validate(const FiniteSimplicialSet& x, Execution exec = Execution::parallel);
// Reference implementation kept for testing the OpenMP kernel.
ValidationReport validate_serial_reference(const FiniteSimplicialSet& x);

// Map of simplicial sets given on nondegenerate simplices.
class SimplicialMap {
 public:
  using ImageTable = std::vector<std::vector<FormalSimplex>>;

  SimplicialMap() = default;
  SimplicialMap(SSetPtr source, SSetPtr target, ImageTable images);

  const SSetPtr& source() const { return source_; }
  const SSetPtr& target() const { return target_; }
  const ImageTable& images() const { return images_; }
  const FormalSimplex& image(int dim, int id) const { return images_[dim][id]; }

  FormalSimplex operator()(const FormalSimplex& s) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
    return a.images_ == b.images_ && same_set(a.source_, b.source_) &&
           same_set(a.target_, b.target_);
  }

 private:
  SSetPtr source_;
  SSetPtr target_;
  ImageTable images_;
};

// Builds a map by evaluating fn on every nondegenerate simplex of source.
SimplicialMap build_map(SSetPtr source, SSetPtr target,
                        const std::function<FormalSimplex(int dim, int id)>& fn);

SimplicialMap identity_map(const SSetPtr& x);
SimplicialMap constant_map(const SSetPtr& source, const SSetPtr& target);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);  // g o f

ValidationReport validate(const SimplicialMap& f);

bool is_injective(const SimplicialMap& f);
bool is_isomorphism(const SimplicialMap& f);
SimplicialMap inverse(const SimplicialMap& f);

// Every simplex (nondegenerate or not) of a set up to a dimension bound.
class SimplexIndex {
 public:
  SimplexIndex(const FiniteSimplicialSet& x, int max_dim);

  int max_dim() const { return static_cast<int>(offsets_.size()) - 2; }
  int size() const { return static_cast<int>(all_.size()); }
  const FormalSimplex& at(int global) const { return all_[global]; }
  int offset(int dim) const { return offsets_[dim]; }
  int count(int dim) const { return offsets_[dim + 1] - offsets_[dim]; }
  std::span<const FormalSimplex> in_dim(int dim) const {
    return std::span<const FormalSimplex>(all_).subspan(offsets_[dim], count(dim));
  }
  // -1 when absent.
  int find(const FormalSimplex& s) const;

 private:
  std::vector<FormalSimplex> all_;
  std::vector<int> offsets_;
  std::unordered_map<FormalSimplex, int, FormalSimplexHash> lookup_;
};

}  // namespace sspec
