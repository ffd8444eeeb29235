#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sspec/colimits.hpp"
#include "sspec/constructions.hpp"
#include "sspec/errors.hpp"
#include "sspec/homology.hpp"

using namespace sspec;
using fixtures::nd;

namespace {

IntMatrix matrix(std::initializer_list<std::initializer_list<int>> rows) {
  int r = int(rows.size()), c = int(rows.begin()->size());
  IntMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (int x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

bool snf_identity_holds(const IntMatrix& m, const SNFResult& r) {
  IntMatrix d = r.row_transform * m * r.col_transform;
  if (!d.is_diagonal()) return false;
  for (std::size_t i = 0; i < r.diagonal.size(); ++i) {
    if (d(int(i), int(i)) != r.diagonal[i] || r.diagonal[i] < 0) return false;
    if (i + 1 < r.diagonal.size() && r.diagonal[i] != 0 && r.diagonal[i + 1] % r.diagonal[i] != 0)
      return false;
    if (r.diagonal[i] == 0 && i + 1 < r.diagonal.size() && r.diagonal[i + 1] != 0) return false;
  }
  return abs(determinant(r.row_transform)) == 1 && abs(determinant(r.col_transform)) == 1;
}

ChainComplex two_term(const IntMatrix& m, int lo) {
  return ChainComplex(lo, {m.rows(), m.cols()},
                      {SparseMatrix(0, m.rows()), SparseMatrix::from_dense(m)});
}

HomologyGroup z(int rank) { return HomologyGroup{rank, {}}; }

}  // namespace

TEST_CASE("smith normal form examples") {
  auto a = smith_normal_form(matrix({{2}}));
  CHECK(a.diagonal == std::vector<Int>{2});
  auto b = smith_normal_form(matrix({{1, 0}, {0, 0}}));
  CHECK(b.diagonal == std::vector<Int>{1, 0});
  auto m = matrix({{2, 4}, {6, 8}});
  auto c = smith_normal_form(m);
  CHECK(c.diagonal == std::vector<Int>{2, 4});
  CHECK(oracle::invariant_factors(oracle::dense(SparseMatrix::from_dense(m))) ==
        std::vector<Int>{2, 4});
  CHECK(snf_identity_holds(m, c));
}

TEST_CASE("smith normal form agrees with determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
    auto m = random_matrix(rng, r, c, 6);
    auto snf = smith_normal_form(m);
    CHECK(snf_identity_holds(m, snf));
    std::vector<Int> nonzero;
    for (const auto& x : snf.diagonal)
      if (x != 0) nonzero.push_back(x);
    CHECK(nonzero == oracle::invariant_factors(oracle::dense(SparseMatrix::from_dense(m))));
  }
}

TEST_CASE("smith normal form verification identity on large random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    int r = 20 + int(rng() % 11), c = 20 + int(rng() % 11);
    auto m = random_matrix(rng, r, c, 100);
    CHECK(snf_identity_holds(m, smith_normal_form(m)));
  }
}

TEST_CASE("homology of small complexes") {
  CHECK(homology(ChainComplex()).empty());
  auto times_two = two_term(matrix({{2}}), 0);
  GradedHomology expect{{0, HomologyGroup{0, {Int(2)}}}};
  CHECK(homology(times_two) == expect);
  CHECK_THROWS_AS(ChainComplex(0, {1, 1, 1},
                               {SparseMatrix(0, 1), SparseMatrix::from_dense(matrix({{1}})),
                                SparseMatrix::from_dense(matrix({{1}}))}),
                  InvalidInput);
}

TEST_CASE("reduced chains of simplicial sets") {
  auto s1 = reduced_chain_complex(*circle());
  CHECK(s1.rank(0) == 0);
  CHECK(s1.rank(1) == 1);
  CHECK(homology(s1) == GradedHomology{{1, z(1)}});
  auto s0 = reduced_chain_complex(*sphere0());
  CHECK(homology(s0) == GradedHomology{{0, z(1)}});
  // a disjoint basepoint adds back the unreduced degree-0 class
  auto tri = reduced_chain_complex(*add_disjoint_basepoint(standard_simplex(2)));
  CHECK(homology(tri) == GradedHomology{{0, z(1)}});
  CHECK(oracle::homology(tri) == GradedHomology{{0, z(1)}});
  auto tri_pointed = reduced_chain_complex(*with_basepoint(standard_simplex(2), 0));
  CHECK(homology(tri_pointed).empty());
  CHECK_THROWS_AS(reduced_chain_complex(*standard_simplex(1)), InvalidInput);
  for (int n = 0; n <= 4; ++n) {
    auto c = reduced_chain_complex(*simplicial_sphere(n));
    CHECK(homology(c) == oracle::homology(c));
    CHECK(c == reduced_chain_complex_serial_reference(*simplicial_sphere(n)));
  }
}

TEST_CASE("elimination agrees with the oracle on assorted sets") {
  auto deg2 = fixtures::degree_two_map();
  SmashProduct cone(deg2.source(), fixtures::interval());
  auto base = build_map(deg2.source(), cone.result(), [&](int d, int id) {
    return cone.pair(nd(d, id), FormalSimplex{0, d > 0 ? (DegeneracyMask{1} << d) - 1 : 0,
                                              static_cast<std::int16_t>(d)});
  });
  auto moore = pushout(base, deg2).result();
  std::vector<SSetPtr> sets{moore,
                            smash(moore, circle()),
                            smash(moore, moore),
                            Wedge({circle(), simplicial_sphere(2), moore}).result(),
                            product(add_disjoint_basepoint(standard_simplex(2)), circle())};
  for (const auto& x : sets) {
    auto c = reduced_chain_complex(*x);
    auto h = homology(c);
    CHECK(h == HomologyPresentation(c).groups());
    CHECK(h == oracle::homology(c));
  }
  CHECK(homology(reduced_chain_complex(*moore)) ==
        GradedHomology{{1, HomologyGroup{0, {Int(2)}}}});
  // Moore space smashed with itself: Z/2 in degrees 2 and 3
  GradedHomology mm{{2, HomologyGroup{0, {Int(2)}}}, {3, HomologyGroup{0, {Int(2)}}}};
  CHECK(homology(reduced_chain_complex(*smash(moore, moore))) == mm);
}

TEST_CASE("tensor products") {
  auto s1 = reduced_chain_complex(*circle());
  auto s2 = reduced_chain_complex(*simplicial_sphere(2));
  auto unit = reduced_chain_complex(*sphere0());
  CHECK(tensor(unit, s2) == s2);
  CHECK(tensor(s2, ChainComplex()).total_rank() == 0);
  CHECK(homology(tensor(s1, s1)) == GradedHomology{{2, z(1)}});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto c = two_term(random_matrix(rng, 1 + int(rng() % 3), 1 + int(rng() % 3), 4),
                      int(rng() % 3) - 1);
    auto d = two_term(random_matrix(rng, 1 + int(rng() % 3), 1 + int(rng() % 3), 4),
                      int(rng() % 3) - 1);
    auto t = tensor(c, d);
    auto brute = oracle::tensor(c, d);
    CHECK(homology(t) == oracle::homology(brute));
  }
}

TEST_CASE("Eilenberg-Zilber: smash chains versus tensor of chains") {
  std::vector<SSetPtr> xs{circle(), sphere0(), Wedge({circle(), circle()}).result(),
                          fixtures::three_edge_circle(), add_disjoint_basepoint(standard_simplex(1))};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      auto lhs = homology(reduced_chain_complex(*smash(x, y)));
      auto rhs = homology(tensor(reduced_chain_complex(*x), reduced_chain_complex(*y)));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("chain maps and induced maps") {
  auto deg2 = fixtures::degree_two_map();
  auto f = chain_map(deg2);
  // degree 1: e0, e1 -> edge, e2 -> 0
  auto m1 = f.component(1).to_dense();
  CHECK(m1 == matrix({{1, 1, 0}}));
  auto h = induced_homology_map(f);
  REQUIRE(h.matrices.count(1));
  CHECK(abs(h.matrices.at(1)(0, 0)) == 2);
  CHECK_FALSE(is_homology_iso(f));
  CHECK(homology(mapping_cone(f)) == GradedHomology{{1, HomologyGroup{0, {Int(2)}}}});

  auto id = chain_map(identity_map(simplicial_sphere(2)));
  CHECK(is_homology_iso(id));
  auto hid = induced_homology_map(id);
  CHECK(hid.matrices.at(2) == IntMatrix::identity(1));

  auto zero = chain_map(constant_map(circle(), circle()));
  CHECK(induced_homology_map(zero).matrices.at(1) == IntMatrix(1, 1));
  CHECK_FALSE(is_homology_iso(zero));

  auto collapse = chain_map(build_map(add_disjoint_basepoint(standard_simplex(1)), sphere0(),
                                      [](int d, int id) {
                                        if (d == 1) return FormalSimplex{1, 1, 1};
                                        return nd(0, id == 2 ? 0 : 1);
                                      }));
  CHECK(is_homology_iso(collapse));
}

TEST_CASE("induced maps are functorial") {
  Wedge w({circle(), circle()});
  auto swap = build_map(w.result(), w.result(), [](int d, int id) {
    if (d == 0) return nd(0, 0);
    return nd(1, 1 - id);
  });
  auto fold = build_map(w.result(), circle(), [](int d, int) { return nd(d, 0); });
  auto composite = chain_map(compose(fold, swap));
  auto hf = induced_homology_map(chain_map(fold)).matrices.at(1);
  auto hs = induced_homology_map(chain_map(swap)).matrices.at(1);
  CHECK(induced_homology_map(composite).matrices.at(1) == hf * hs);
}

TEST_CASE("parallel and serial reduced chains agree") {
  auto x = smash(simplicial_sphere(2), fixtures::three_edge_circle());
  CHECK(reduced_chain_complex(*x, Execution::parallel) ==
        reduced_chain_complex_serial_reference(*x));
  CHECK(reduced_chain_complex(*x, Execution::serial) == reduced_chain_complex_serial_reference(*x));
}
