#include "sspec/cospectrum.hpp"

#include <algorithm>

#include "sspec/errors.hpp"
#include "sspec/limits.hpp"

namespace sspec {

namespace {

// f with its components re-read against equal spectra at truncation k.
SpectrumMap rebased(const SpectrumMap& f, const TruncatedSpectrum& source,
                    const TruncatedSpectrum& target, int k) {
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= k; ++m) {
    auto c = f.component(m);
    comps.emplace_back(source.level(m), target.level(m), c.images());
  }
  return SpectrumMap(source, target, std::move(comps));
}

}  // namespace

TruncatedCospectrum::TruncatedCospectrum(std::vector<TruncatedSpectrum> objects,
                                         std::vector<SpectrumMap> maps) {
  if (objects.empty()) throw InvalidInput("cospectrum: no objects");
  if (maps.size() + 1 != objects.size())
    throw InvalidInput("cospectrum: need one structure map per positive degree");
  require_level(static_cast<int>(objects.size()) - 1, "cospectrum degree");
  int k = 0;
  for (const auto& x : objects) k = std::max(k, x.truncation());
  for (const auto& f : maps) k = std::max(k, f.top());
  for (auto& x : objects) objects_.push_back(x.retruncated(k));
  for (std::size_t m = 1; m < objects_.size(); ++m) {
    suspended_.push_back(smash_with_sset(objects_[m], circle()));
    const auto& f = maps[m - 1];
    const auto& src = suspended_.back().result;
    if (!(f.source() == src))
      throw InvalidInput("cospectrum: structure map " + std::to_string(m) +
                         " does not start at X_m ^ S^1");
    if (!(f.target() == objects_[m - 1]))
      throw InvalidInput("cospectrum: structure map " + std::to_string(m) +
                         " does not land in X_{m-1}");
    maps_.push_back(rebased(f, src, objects_[m - 1], k));
  }
}

TruncatedCospectrum standard_frame(int k) {
  if (k < 0) throw InvalidInput("standard_frame: negative degree");
  require_level(k, "standard_frame");
  std::vector<TruncatedSpectrum> objects;
  for (int n = 0; n <= k; ++n) objects.push_back(free_spectrum(n, sphere0()).retruncated(k));
  std::vector<SpectrumMap> maps;
  for (int m = 1; m <= k; ++m) {
    auto su = smash_with_sset(objects[m], circle());
    // F_m S^0 ^ S^1 -> F_m S^1 is the unit S^0 ^ S^1 -> S^1 at level m
    auto ident = extend_map(su.result, free_spectrum(m, circle()), m, left_unitor(*su.levels[m]));
    maps.push_back(compose(canonical_lambda(m), ident));
  }
  return TruncatedCospectrum(std::move(objects), std::move(maps));
}

RealizedAdjoint realize_left_adjoint(const TruncatedCospectrum& x, const TruncatedSpectrum& a) {
  const int n = a.truncation();
  if (n > x.degree())
    throw InvalidInput("realize_left_adjoint: truncation of A exceeds the cospectrum degree");
  const int k = x.truncation();
  RealizedAdjoint r;
  for (int m = 0; m <= n; ++m) r.terms.push_back(smash_with_sset(x.object(m), a.level(m)));
  for (int m = 1; m <= n; ++m) {
    auto a_susp = a.suspension(m - 1);
    r.shifted.push_back(smash_with_sset(x.object(m), a_susp->result()));
    const auto& s = r.shifted.back();
    // X_m ^ sigma_{m-1}
    r.h_legs.push_back(
        smash_with_sset(s, r.terms[m], identity_map(x.object(m)), a.structure_map(m - 1)));
    // (x, (y, t)) -> ((x, t), y), then tau ^ id
    const auto& xs = x.suspended(m);
    auto z = smash_with_sset(xs.result, a.level(m - 1));
    std::vector<SimplicialMap> comps;
    for (int j = 0; j <= k; ++j) {
      const auto& from = *s.levels[j];
      const auto& to = *z.levels[j];
      const auto& inner = *xs.levels[j];
      comps.push_back(build_map(from.result(), to.result(), [&](int d, int id) {
        const auto& [u, w] = from.factors(d, id);
        auto [y, t] = a_susp->split(w);
        return to.pair(inner.pair(u, t), y);
      }));
    }
    SpectrumMap rearrange(s.result, z.result, std::move(comps));
    r.t_legs.push_back(compose(
        smash_with_sset(z, r.terms[m - 1], x.structure_map(m), identity_map(a.level(m - 1))),
        rearrange));
  }
  std::vector<TruncatedSpectrum> tops, bottoms;
  for (const auto& t : r.terms) tops.push_back(t.result);
  for (const auto& s : r.shifted) bottoms.push_back(s.result);
  r.target = wedge_spectra(tops, k);
  r.source = wedge_spectra(bottoms, k);
  if (bottoms.empty()) {
    r.h = r.t = constant_map(r.source.result, r.target.result);
  } else {
    std::vector<SpectrumMap> hs, ts;
    for (int m = 1; m <= n; ++m) {
      hs.push_back(compose(r.target.inclusion(m), r.h_legs[m - 1]));
      ts.push_back(compose(r.target.inclusion(m - 1), r.t_legs[m - 1]));
    }
    r.h = wedge_induced(r.source, hs);
    r.t = wedge_induced(r.source, ts);
  }
  r.coequalizer = coequalizer_spectra(r.h, r.t);
  return r;
}

SpectrumMap frame_comparison(const RealizedAdjoint& r, const TruncatedSpectrum& a) {
  std::vector<SpectrumMap> units;
  for (std::size_t n = 0; n < r.terms.size(); ++n) {
    const auto& t = r.terms[n];
    units.push_back(extend_map(t.result, a, static_cast<int>(n), left_unitor(*t.levels[n])));
  }
  return factor_through(r.coequalizer, wedge_induced(r.target, units));
}

FramePredicateReport frame_predicate(const TruncatedCospectrum& x) {
  FramePredicateReport r;
  for (int m = 0; m <= x.degree(); ++m)
    r.cofibrant.push_back(is_cofibration(constant_map(trivial_spectrum(), x.object(m))));
  for (int m = 1; m <= x.degree(); ++m)
    r.structure_map_iso.push_back(stable_homology_map(x.structure_map(m)).iso);
  r.overall = std::all_of(r.cofibrant.begin(), r.cofibrant.end(), [](bool b) { return b; }) &&
              std::all_of(r.structure_map_iso.begin(), r.structure_map_iso.end(),
                          [](bool b) { return b; });
  return r;
}

BijectionProbeReport adjunction_bijection_probe(const TruncatedCospectrum& x,
                                                const TruncatedSpectrum& a,
                                                const TruncatedSpectrum& b, std::uint64_t budget) {
  auto r = realize_left_adjoint(x, a);
  const int n = static_cast<int>(r.terms.size()) - 1;
  BijectionProbeReport out;
  auto outgoing = enumerate_spectrum_maps(r.result(), b, budget);
  out.maps_out_of_realization = outgoing.size();

  // families (g_0..g_N) with g_m o h_m = g_{m-1} o t_m
  std::vector<std::vector<SpectrumMap>> homs;
  for (const auto& t : r.terms) homs.push_back(enumerate_spectrum_maps(t.result, b, budget));
  std::vector<std::vector<std::size_t>> families;
  std::vector<std::size_t> pick;
  auto extend = [&](auto&& self, int m) -> void {
    if (m > n) {
      families.push_back(pick);
      return;
    }
    for (std::size_t i = 0; i < homs[m].size(); ++i) {
      if (m > 0 &&
          !(compose(homs[m][i], r.h_legs[m - 1]) == compose(homs[m - 1][pick.back()], r.t_legs[m - 1])))
        continue;
      pick.push_back(i);
      self(self, m + 1);
      pick.pop_back();
    }
  };
  extend(extend, 0);
  out.compatible_families = families.size();

  std::vector<char> hit(families.size(), 0);
  bool injective = true;
  for (const auto& phi : outgoing) {
    std::vector<std::size_t> restricted;
    for (int m = 0; m <= n; ++m) {
      auto g = compose(phi, compose(r.coequalizer.projection, r.target.inclusion(m)));
      auto it = std::find(homs[m].begin(), homs[m].end(), g);
      restricted.push_back(static_cast<std::size_t>(it - homs[m].begin()));
    }
    auto f = std::find(families.begin(), families.end(), restricted);
    if (f == families.end()) {
      injective = false;
      continue;
    }
    const auto idx = static_cast<std::size_t>(f - families.begin());
    if (hit[idx]) injective = false;
    hit[idx] = 1;
    out.pairing.push_back(idx);
  }
  out.bijection = injective && outgoing.size() == families.size() &&
                  std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  return out;
}

}  // namespace sspec
