#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sspec/execution.hpp"
#include "sspec/simplicial.hpp"

namespace sspec {

using Int = boost::multiprecision::cpp_int;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Int& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  bool is_zero() const;
  bool is_diagonal() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

struct SNFResult {
  std::vector<Int> diagonal;  // min(rows, cols) entries, each dividing the next
  IntMatrix row_transform;    // U
  IntMatrix col_transform;    // V, with U * M * V diagonal
  int rank() const;
};

SNFResult smith_normal_form(const IntMatrix& m);
Int determinant(const IntMatrix& m);  // fraction-free (Bareiss) elimination

using SparseVector = std::vector<std::pair<int, Int>>;  // sorted by index, no zeros

// Column-compressed integer matrix.
class SparseMatrix {
 public:
  SparseMatrix(int rows = 0, int cols = 0) : rows_(rows), columns_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return static_cast<int>(columns_.size()); }
  const SparseVector& column(int j) const { return columns_[j]; }
  // Sorts, merges duplicate rows and drops zeros.
  void set_column(int j, SparseVector entries);

  SparseVector apply(const SparseVector& v) const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  static SparseMatrix from_dense(const IntMatrix& m);
  IntMatrix to_dense() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_;
  std::vector<SparseVector> columns_;
};

// Bounded Z-graded complex supported on [lo, hi]; the zero complex has
// hi = lo - 1. boundary(d) : C_d -> C_{d-1} is available for lo <= d <= hi + 1.
class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[k] is the differential out of degree lo + k; the one out of
  // degree lo must have zero rows. Rejects d^2 != 0.
  ChainComplex(int lo, std::vector<int> ranks, std::vector<SparseMatrix> boundaries);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  int rank(int d) const {
    return d >= lo_ && d <= hi() ? ranks_[d - lo_] : 0;
  }
  const SparseMatrix& boundary(int d) const;
  ChainComplex shifted(int s) const;
  std::size_t total_rank() const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  int lo_ = 0;
  std::vector<int> ranks_;
  std::vector<SparseMatrix> boundaries_;  // lo..hi+1
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

// Degreewise matrices target.rank(d) x source.rank(d).
class ChainMap {
 public:
  ChainMap() = default;
  // components[k] acts in degree source.lo() + k. Rejects maps that do not
  // commute with the differentials.
  ChainMap(ComplexPtr source, ComplexPtr target, std::vector<SparseMatrix> components);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  // Zero matrix of the right shape outside the source support.
  SparseMatrix component(int d) const;
  ChainMap shifted(int s) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<SparseMatrix> components_;
};

struct HomologyGroup {
  int rank = 0;
  std::vector<Int> torsion;  // entries > 1, each dividing the next

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// Nontrivial groups only, keyed by degree, so that equality of two values is
// isomorphism of graded groups.
using GradedHomology = std::map<int, HomologyGroup>;
std::string to_string(const GradedHomology& h);

// Homology with explicit generators and a coordinate map on cycles.
// Unit pivots are eliminated first on the sparse complex; the small residual
// is then presented with Smith normal forms.
class HomologyPresentation {
 public:
  explicit HomologyPresentation(const ChainComplex& c, bool with_generators = true);

  GradedHomology groups() const;
  HomologyGroup group(int d) const;
  // Order of each generator of H_d: 0 for free, otherwise the torsion order.
  // Torsion generators come first.
  const std::vector<Int>& orders(int d) const;
  // Generating cycles in the coordinates of the original complex.
  const std::vector<SparseVector>& generators(int d) const;
  // Coordinates of a cycle, reduced modulo the orders.
  std::vector<Int> coordinates(int d, const SparseVector& cycle) const;

 private:
  struct Degree;
  // One unit-pivot elimination: cell a of degree d against cell b of degree
  // d - 1 with coefficient c; gamma is the boundary of a without its b-entry.
  struct Step {
    int d;
    int a;
    int b;
    Int c;
    SparseVector gamma;
  };
  const Degree* find(int d) const;

  bool with_generators_;
  int lo_ = 0;
  std::vector<std::shared_ptr<Degree>> degrees_;
  std::vector<Step> steps_;
  std::vector<std::vector<int>> residual_ids_;  // per degree: original index of each residual cell
  std::vector<std::vector<int>> residual_of_;   // per degree: original -> residual index or -1
};

GradedHomology homology(const ChainComplex& c);

// Per-degree matrix of H_d(f) in the generator bases of the two
// presentations (rows: target generators, columns: source generators).
struct HomologyMap {
  std::map<int, IntMatrix> matrices;  // only degrees where either side is nontrivial
  std::map<int, std::vector<Int>> source_orders, target_orders;
};
HomologyMap induced_homology_map(const ChainMap& f);

// Cone(f)_n = C_{n-1} + D_n with d(c, x) = (-dc, f(c) + dx).
ChainComplex mapping_cone(const ChainMap& f);
// Iff the mapping cone is acyclic.
bool is_homology_iso(const ChainMap& f);

// Koszul sign convention d(a (x) b) = da (x) b + (-1)^i a (x) db. The basis
// of degree n lists C_i (x) D_{n-i} for ascending i, each block ordered by
// a * rank(D_{n-i}) + b.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);

// Normalized chains on nondegenerate simplices with the basepoint removed.
ChainComplex reduced_chain_complex(const FiniteSimplicialSet& x,
                                   Execution exec = Execution::parallel);
ChainComplex reduced_chain_complex_serial_reference(const FiniteSimplicialSet& x);
// Index of the nondegenerate simplex (dim, id) in the reduced basis, -1 for
// the basepoint.
int reduced_index(const FiniteSimplicialSet& x, int dim, int id);

ChainMap chain_map(const SimplicialMap& f);
// Same, with source/target complexes already built.
ChainMap chain_map(const SimplicialMap& f, ComplexPtr source, ComplexPtr target);

}  // namespace sspec
