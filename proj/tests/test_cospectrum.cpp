#include "doctest.h"
#include "fixtures.hpp"
#include "sspec/cospectrum.hpp"
#include "sspec/errors.hpp"

using namespace sspec;

namespace {

TruncatedSpectrum moore() { return mapping_cone(free_map(1, fixtures::degree_two_map())).result(); }

}  // namespace

TEST_CASE("standard frame") {
  auto x0 = standard_frame(0);
  CHECK(x0.degree() == 0);
  CHECK(x0.object(0) == sphere_spectrum());
  auto x2 = standard_frame(2);
  CHECK(x2.object(1) == free_spectrum(1, sphere0()));
  for (int m = 1; m <= 2; ++m) {
    CHECK(x2.structure_map(m).validate().ok());
    CHECK(stable_homology_map(x2.structure_map(m)).iso);
  }
  auto report = frame_predicate(standard_frame(3));
  CHECK(report.overall);
  CHECK(report.cofibrant.size() == 4);
  CHECK(report.structure_map_iso.size() == 3);
  CHECK(report.label == "homology-level");
}

TEST_CASE("frame predicate failures") {
  auto s = sphere_spectrum();
  auto su = smash_with_sset(s, circle());
  TruncatedCospectrum zero({s, s}, {constant_map(su.result, s)});
  auto r = frame_predicate(zero);
  CHECK_FALSE(r.overall);
  CHECK_FALSE(r.structure_map_iso[0]);
  CHECK(r.cofibrant[0]);

  TruncatedCospectrum single({free_spectrum(1, circle())}, {});
  CHECK(frame_predicate(single).overall);

  CHECK_THROWS_AS(TruncatedCospectrum({s, s}, {constant_map(s, s)}), InvalidInput);
}

TEST_CASE("left adjoint of the standard frame recovers the spectrum") {
  auto frame = standard_frame(3);
  std::vector<TruncatedSpectrum> xs{sphere_spectrum(), free_spectrum(1, sphere0()), moore(),
                                    wedge_spectra({sphere_spectrum(), free_spectrum(2, circle())}).result,
                                    free_spectrum(3, sphere0())};
  for (const auto& a : xs) {
    auto r = realize_left_adjoint(frame, a);
    CHECK(r.h.validate().ok());
    CHECK(r.t.validate().ok());
    auto c = frame_comparison(r, a);
    CHECK(c.validate().ok());
    CHECK(is_levelwise_iso(c));
    CHECK(stable_homology(r.result()) == stable_homology(a));
  }
  CHECK_THROWS_AS(realize_left_adjoint(standard_frame(1), free_spectrum(2, sphere0())),
                  InvalidInput);
}

TEST_CASE("trivial frames give the trivial spectrum") {
  auto t = trivial_spectrum();
  auto su = smash_with_sset(t, circle());
  TruncatedCospectrum x({t, t}, {constant_map(su.result, t)});
  auto r = realize_left_adjoint(x, free_spectrum(1, circle()));
  for (int m = 0; m <= r.result().truncation(); ++m) CHECK(r.result().level(m)->total_count() == 1);
}

TEST_CASE("left adjoint commutes with wedges at homology level") {
  auto frame = standard_frame(2);
  auto a = moore();
  auto b = free_spectrum(2, sphere0());
  auto joint = realize_left_adjoint(frame, wedge_spectra({a, b}).result);
  auto apart = wedge_spectra({realize_left_adjoint(frame, a).result(),
                              realize_left_adjoint(frame, b).result()});
  CHECK(stable_homology(joint.result()) == stable_homology(apart.result));
}

TEST_CASE("adjunction bijection probe") {
  const std::uint64_t budget = 1'000'000;
  auto frame = standard_frame(1);
  auto r = adjunction_bijection_probe(frame, sphere_spectrum(), sphere_spectrum(), budget);
  CHECK(r.maps_out_of_realization == 2);
  CHECK(r.compatible_families == 2);
  CHECK(r.bijection);
  CHECK(adjunction_check(0, sphere0(), sphere_spectrum(), budget).spectrum_maps == 2);

  auto t = adjunction_bijection_probe(frame, trivial_spectrum(), moore(), budget);
  CHECK(t.maps_out_of_realization == 1);
  CHECK(t.compatible_families == 1);

  auto f = adjunction_bijection_probe(frame, free_spectrum(1, sphere0()),
                                      wedge_spectra({sphere_spectrum(), free_spectrum(1, sphere0())}).result,
                                      budget);
  CHECK(f.bijection);
  CHECK(f.maps_out_of_realization == f.compatible_families);
}
