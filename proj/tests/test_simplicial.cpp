#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "sspec/colimits.hpp"
#include "sspec/constructions.hpp"
#include "sspec/errors.hpp"
#include "sspec/homology.hpp"
#include "sspec/limits.hpp"

using namespace sspec;
using fixtures::nd;

namespace {

// Every simplex of x up to dimension top, generated by applying all
// degeneracy masks to all nondegenerate simplices.
std::vector<FormalSimplex> all_simplices(const FiniteSimplicialSet& x, int top) {
  std::vector<FormalSimplex> out;
  for (int m = 0; m <= top; ++m)
    for (int k = 0; k <= std::min(m, x.dimension()); ++k)
      for (DegeneracyMask mask = 0; mask < (DegeneracyMask{1} << m); ++mask) {
        if (std::popcount(mask) != m - k) continue;
        for (int id = 0; id < x.count(k); ++id)
          out.push_back(FormalSimplex{id, mask, static_cast<std::int16_t>(m)});
      }
  return out;
}

bool injective_brute_force(const SimplicialMap& f, int top) {
  std::set<FormalSimplex> seen;
  for (const auto& s : all_simplices(*f.source(), top))
    if (!seen.insert(f(s)).second) return false;
  return true;
}

}  // namespace

TEST_CASE("standard simplices have one face per subset") {
  CHECK(standard_simplex(0)->dims() == std::vector<int>{1});
  CHECK(standard_simplex(1)->dims() == std::vector<int>{2, 1});
  CHECK(standard_simplex(2)->dims() == std::vector<int>{3, 3, 1});
  CHECK(standard_simplex(3)->dims() == std::vector<int>{4, 6, 4, 1});
  for (int n = 0; n <= 4; ++n) CHECK(validate(*standard_simplex(n)).ok());
  ScopedLimits caps({3, 8, 1000});
  CHECK_THROWS_AS(standard_simplex(4), CapExceeded);
}

TEST_CASE("face and degeneracy operators obey the simplicial identities") {
  auto x = standard_simplex(3);
  for (const auto& s : all_simplices(*x, 4)) {
    for (int j = 0; j <= s.dim; ++j) {
      auto sj = x->degeneracy(s, j);
      CHECK(x->face(sj, j) == s);
      CHECK(x->face(sj, j + 1) == s);
    }
    for (int i = 0; s.dim >= 2 && i <= s.dim; ++i)
      for (int j = i + 1; j <= s.dim; ++j)
        CHECK(x->face(x->face(s, j), i) == x->face(x->face(s, i), j - 1));
  }
}

TEST_CASE("degeneracy words round-trip") {
  std::vector<int> w{3, 1, 0};
  auto s = FormalSimplex::from_word(5, w, 7);
  CHECK(s.word() == w);
  CHECK(s.target_dim() == 2);
  std::vector<int> bad{0, 1};
  CHECK_THROWS_AS(FormalSimplex::from_word(3, bad, 0), InvalidInput);
}

TEST_CASE("spheres") {
  CHECK(simplicial_sphere(0)->dims() == std::vector<int>{2});
  CHECK(simplicial_sphere(1)->dims() == std::vector<int>{1, 1});
  CHECK(simplicial_sphere(2)->dims() == std::vector<int>{1, 1, 2});
  CHECK(simplicial_sphere(3)->dims() == std::vector<int>{1, 1, 6, 6});
  for (int n = 0; n <= 4; ++n) {
    auto s = simplicial_sphere(n);
    CHECK(validate(*s).ok());
    auto c = reduced_chain_complex(*s);
    GradedHomology expect{{n, HomologyGroup{1, {}}}};
    CHECK(oracle::homology(c) == expect);
  }
}

TEST_CASE("smash product basics") {
  auto y = simplicial_sphere(2);
  SmashProduct s0y(sphere0(), y);
  auto unit = left_unitor(s0y);
  CHECK(validate(unit).ok());
  CHECK(is_isomorphism(unit));
  CHECK(compose(inverse(unit), unit) == identity_map(s0y.result()));

  auto py = smash(point(), y);
  CHECK(py->dims() == std::vector<int>{1});

  auto s11 = smash(circle(), circle());
  CHECK(validate(*s11).ok());
  GradedHomology expect{{2, HomologyGroup{1, {}}}};
  CHECK(oracle::homology(reduced_chain_complex(*s11)) == expect);

  CHECK_THROWS_AS(smash(standard_simplex(1), circle()), InvalidInput);
}

TEST_CASE("parallel kernels agree with the serial references") {
  auto x = add_disjoint_basepoint(standard_simplex(2));
  auto y = fixtures::three_edge_circle();
  for (auto mode : {SmashProduct::Mode::smash, SmashProduct::Mode::cartesian}) {
    SmashProduct par(x, y, mode, Execution::parallel);
    SmashProduct ser(x, y, mode, Execution::serial);
    CHECK(par.result()->face_table() == ser.result()->face_table());
    CHECK(product_faces_serial_reference(par) == par.result()->face_table());
    auto r1 = validate(*par.result(), Execution::parallel);
    auto r2 = validate_serial_reference(*par.result());
    CHECK(r1.ok());
    CHECK(r2.ok());
  }
}

TEST_CASE("product of simplices has the expected simplex counts") {
  // Delta[1] x Delta[1]: 4 vertices, 5 edges, 2 triangles.
  auto p = product(standard_simplex(1), standard_simplex(1));
  CHECK(p->dims() == std::vector<int>{4, 5, 2});
  CHECK(validate(*p).ok());
}

TEST_CASE("validation names the offending simplex") {
  FiniteSimplicialSet::FaceTable f(3);
  f[0].resize(3);
  f[1] = {{nd(0, 1), nd(0, 0)}, {nd(0, 2), nd(0, 1)}, {nd(0, 2), nd(0, 0)}};
  // d0 d0 should be vertex 2 but the triangle's d0 is edge 0 (ending at 1)
  f[2] = {{nd(1, 0), nd(1, 2), nd(1, 0)}};
  auto bad = make_sset(f, 0);
  auto report = validate(*bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().dim == 2);
  CHECK(report.violations.front().id == 0);
  CHECK(validate_serial_reference(*bad).violations.size() == report.violations.size());

  FiniteSimplicialSet::FaceTable g(2);
  g[0].resize(1);
  g[1] = {{nd(0, 0), nd(0, 5)}};
  CHECK_FALSE(validate(*make_sset(g, 0)).ok());
}

TEST_CASE("wedges") {
  auto w = Wedge({sphere0(), sphere0()});
  CHECK(w.result()->dims() == std::vector<int>{3});
  auto ww = Wedge({circle(), circle()});
  GradedHomology expect{{1, HomologyGroup{2, {}}}};
  CHECK(oracle::homology(reduced_chain_complex(*ww.result())) == expect);
  auto y = simplicial_sphere(2);
  Wedge pw({point(), y});
  CHECK(is_isomorphism(pw.inclusion(1)));
  CHECK(validate(pw.inclusion(0)).ok());
  CHECK(is_injective(ww.inclusion(1)));
  auto [summand, s] = ww.locate(ww.inclusion(1)(nd(1, 0)));
  CHECK(summand == 1);
  CHECK(s == nd(1, 0));
  CHECK_THROWS_AS(Wedge({standard_simplex(1)}), InvalidInput);
}

TEST_CASE("coequalizers") {
  auto b = standard_simplex(1);
  SUBCASE("equal maps give the target back") {
    auto f = identity_map(b);
    auto q = coequalizer(f, f);
    CHECK(*q.result() == *b);
    CHECK(q.projection().images() == identity_map(b).images());
  }
  SUBCASE("gluing the endpoints of an interval gives a circle") {
    auto pt = standard_simplex(0);
    auto f = build_map(pt, b, [](int, int) { return nd(0, 0); });
    auto g = build_map(pt, b, [](int, int) { return nd(0, 1); });
    auto q = coequalizer(f, g);
    CHECK(q.result()->dims() == std::vector<int>{1, 1});
    CHECK(q.result()->face_table() == circle()->face_table());
    CHECK(validate(q.projection()).ok());
  }
  SUBCASE("collapsing an edge to a point removes it") {
    // collapse Delta[1] inside Delta[2] onto vertex 0 by identifying it with s0(v0)
    auto tri = standard_simplex(2);
    auto inc = build_map(b, tri, [](int d, int id) { return nd(d, id); });  // edge {0,1}
    auto flat = build_map(b, tri, [](int d, int) { return d == 0 ? nd(0, 0) : FormalSimplex{0, 1, 1}; });
    auto q = coequalizer(inc, flat);
    CHECK(q.result()->dims() == std::vector<int>{2, 2, 1});
    CHECK(validate(*q.result()).ok());
    CHECK(validate(q.projection()).ok());
  }
}

TEST_CASE("coequalizer universal property by enumeration") {
  // B = S^0 v S^0 with its two non-base vertices identified.
  Wedge w({sphere0(), sphere0()});
  auto f = w.inclusion(0), g = w.inclusion(1);
  auto q = coequalizer(f, g);
  CHECK(q.result()->dims() == std::vector<int>{2});
  for (const auto& target : {sphere0(), Wedge({sphere0(), sphere0()}).result()}) {
    auto from_b = enumerate_pointed_maps(w.result(), target, 10000);
    int equalizing = 0;
    for (const auto& h : from_b)
      if (compose(h, f) == compose(h, g)) ++equalizing;
    auto from_q = enumerate_pointed_maps(q.result(), target, 10000);
    CHECK(equalizing == static_cast<int>(from_q.size()));
    for (const auto& h : from_q) CHECK(factor_through(q, compose(h, q.projection())) == h);
  }
}

TEST_CASE("pushouts") {
  auto x = circle();
  auto pt = point();
  auto into_x = build_map(pt, x, [](int, int) { return nd(0, 0); });
  auto into_y = build_map(pt, sphere0(), [](int, int) { return nd(0, 0); });
  auto p = pushout(into_x, into_y);
  CHECK(p.result()->dims() == std::vector<int>{2, 1});

  auto id = identity_map(sphere0());
  auto f = build_map(sphere0(), x, [](int, int) { return nd(0, 0); });
  auto p2 = pushout(f, id);
  CHECK(p2.result()->dims() == x->dims());
  CHECK(is_isomorphism(p2.into_first));

  // cofiber of the degree-two map has H1 = Z/2
  auto deg2 = fixtures::degree_two_map();
  auto c3 = deg2.source();
  SmashProduct cone(c3, fixtures::interval());
  auto base = build_map(c3, cone.result(), [&](int d, int id) {
    return cone.pair(nd(d, id), FormalSimplex{0, d > 0 ? (DegeneracyMask{1} << d) - 1 : 0,
                                              static_cast<std::int16_t>(d)});
  });
  CHECK(validate(base).ok());
  auto cof = pushout(base, deg2);
  CHECK(validate(*cof.result()).ok());
  GradedHomology expect{{1, HomologyGroup{0, {Int(2)}}}};
  CHECK(oracle::homology(reduced_chain_complex(*cof.result())) == expect);
}

TEST_CASE("injectivity agrees with brute force") {
  auto d1 = standard_simplex(1);
  auto boundary = make_sset(FiniteSimplicialSet::FaceTable{{{}, {}}}, std::nullopt);
  auto inc = build_map(boundary, d1, [](int, int id) { return nd(0, id); });
  auto collapse = build_map(d1, standard_simplex(0),
                            [](int d, int) { return d == 0 ? nd(0, 0) : FormalSimplex{0, 1, 1}; });
  Wedge w({circle(), simplicial_sphere(2)});
  for (const auto& f : {inc, collapse, w.inclusion(0), w.inclusion(1),
                        fixtures::degree_two_map()})
    CHECK(is_injective(f) == injective_brute_force(f, 4));
  CHECK(is_injective(inc));
  CHECK_FALSE(is_injective(collapse));
  CHECK(is_injective(w.inclusion(0)));
}

TEST_CASE("enumerating pointed maps") {
  CHECK(enumerate_pointed_maps(sphere0(), sphere0(), 1000).size() == 2);
  CHECK(enumerate_pointed_maps(point(), simplicial_sphere(2), 1000).size() == 1);
  auto l = Wedge({sphere0(), sphere0(), sphere0()}).result();
  CHECK(enumerate_pointed_maps(sphere0(), l, 1000).size() == std::size_t(l->count(0)));
  // maps S^1 -> S^1 v S^1 are determined by the edge: constant or one of two edges
  auto ww = Wedge({circle(), circle()}).result();
  CHECK(enumerate_pointed_maps(circle(), ww, 1000).size() == 3);
  for (const auto& f : enumerate_pointed_maps(fixtures::three_edge_circle(), circle(), 1000))
    CHECK(validate(f).ok());
  CHECK_THROWS_AS(enumerate_pointed_maps(fixtures::three_edge_circle(), ww, 3), BudgetExceeded);
}
