#include "sspec/spectra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "sspec/errors.hpp"
#include "sspec/limits.hpp"

namespace sspec {

struct TruncatedSpectrum::Impl {
  std::vector<SSetPtr> levels;
  std::vector<SimplicialMap> sigma;
  mutable std::mutex mutex;
  // suspensions[m] = level(m) ^ S^1; extension levels are their results
  mutable std::vector<std::shared_ptr<const SmashProduct>> suspensions;

  int truncation() const { return static_cast<int>(levels.size()) - 1; }

  std::shared_ptr<const SmashProduct> suspension(int m) const {
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(suspensions.size()) <= m) {
      const int i = static_cast<int>(suspensions.size());
      SSetPtr x = i <= truncation() ? levels[i] : suspensions[i - 1]->result();
      require_dimension(x->dimension() + 1, "spectrum level");
      suspensions.push_back(std::make_shared<const SmashProduct>(x, circle()));
    }
    return suspensions[m];
  }
};

const TruncatedSpectrum::Impl* TruncatedSpectrum::impl() const {
  if (!impl_) throw InvalidInput("spectrum: empty value");
  return impl_.get();
}

TruncatedSpectrum::TruncatedSpectrum(std::vector<SSetPtr> levels,
                                     std::vector<SimplicialMap> structure_maps,
                                     std::vector<std::shared_ptr<const SmashProduct>> suspensions) {
  if (levels.empty()) throw InvalidInput("spectrum: no levels");
  if (structure_maps.size() + 1 != levels.size())
    throw InvalidInput("spectrum: need one structure map per level below the truncation");
  const int n = static_cast<int>(levels.size()) - 1;
  require_level(n, "spectrum truncation");
  for (int m = 0; m <= n; ++m) {
    if (!levels[m] || !levels[m]->pointed())
      throw InvalidInput("spectrum: level " + std::to_string(m) + " is not pointed");
    require_dimension(levels[m]->dimension(), "spectrum level");
  }
  auto impl = std::make_shared<Impl>();
  impl->levels = std::move(levels);
  for (std::size_t m = 0; m < suspensions.size() && m < impl->levels.size(); ++m) {
    if (!suspensions[m] || !same_set(suspensions[m]->left(), impl->levels[m]) ||
        !same_set(suspensions[m]->right(), circle()))
      break;
    impl->suspensions.push_back(suspensions[m]);
  }
  for (int m = 0; m < n; ++m) {
    const auto& f = structure_maps[m];
    auto su = impl->suspension(m);
    if (!same_set(f.source(), su->result()))
      throw InvalidInput("spectrum: structure map " + std::to_string(m) +
                         " does not start at level ^ S^1");
    if (!same_set(f.target(), impl->levels[m + 1]))
      throw InvalidInput("spectrum: structure map " + std::to_string(m) +
                         " does not land in the next level");
    impl->sigma.emplace_back(su->result(), impl->levels[m + 1], f.images());
  }
  impl_ = std::move(impl);
}

int TruncatedSpectrum::truncation() const { return impl()->truncation(); }

SSetPtr TruncatedSpectrum::level(int m) const {
  const Impl* p = impl();
  if (m < 0) throw InvalidInput("spectrum: negative level");
  if (m <= p->truncation()) return p->levels[m];
  require_level(m, "spectrum level");
  return p->suspension(m - 1)->result();
}

std::shared_ptr<const SmashProduct> TruncatedSpectrum::suspension(int m) const {
  if (m < 0) throw InvalidInput("spectrum: negative level");
  require_level(m + 1, "spectrum level");
  return impl()->suspension(m);
}

SimplicialMap TruncatedSpectrum::structure_map(int m) const {
  const Impl* p = impl();
  if (m < 0) throw InvalidInput("spectrum: negative level");
  if (m < p->truncation()) return p->sigma[m];
  return identity_map(suspension(m)->result());
}

TruncatedSpectrum TruncatedSpectrum::retruncated(int n) const {
  const Impl* p = impl();
  const int t = p->truncation();
  if (n < t) throw InvalidInput("retruncated: cannot lower the truncation");
  if (n == t) return *this;
  std::vector<SSetPtr> levels;
  std::vector<SimplicialMap> sigma;
  std::vector<std::shared_ptr<const SmashProduct>> susp;
  for (int m = 0; m <= n; ++m) {
    levels.push_back(level(m));
    if (m < n) {
      sigma.push_back(structure_map(m));
      susp.push_back(suspension(m));
    }
  }
  return TruncatedSpectrum(std::move(levels), std::move(sigma), std::move(susp));
}

ValidationReport TruncatedSpectrum::validate() const {
  const Impl* p = impl();
  ValidationReport out;
  auto tag = [&](ValidationReport r, const std::string& where) {
    for (auto& v : r.violations) {
      v.what = where + ": " + v.what;
      out.violations.push_back(std::move(v));
    }
  };
  for (int m = 0; m <= p->truncation(); ++m)
    tag(sspec::validate(*p->levels[m]), "level " + std::to_string(m));
  for (int m = 0; m < p->truncation(); ++m)
    tag(sspec::validate(p->sigma[m]), "structure map " + std::to_string(m));
  return out;
}

bool operator==(const TruncatedSpectrum& a, const TruncatedSpectrum& b) {
  if (a.impl_ == b.impl_) return true;
  if (!a.impl_ || !b.impl_) return false;
  const int k = std::max(a.truncation(), b.truncation());
  for (int m = 0; m <= k; ++m)
    if (!same_set(a.level(m), b.level(m))) return false;
  for (int m = 0; m < k; ++m)
    if (a.structure_map(m).images() != b.structure_map(m).images()) return false;
  return true;
}

// ---------------------------------------------------------------------------

SpectrumMap::SpectrumMap(TruncatedSpectrum source, TruncatedSpectrum target,
                         std::vector<SimplicialMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (components_.empty()) throw InvalidInput("spectrum map: no components");
  if (top() < source_.truncation() || top() < target_.truncation())
    throw InvalidInput("spectrum map: components must reach both truncations");
  for (int m = 0; m <= top(); ++m) {
    const auto& f = components_[m];
    if (!same_set(f.source(), source_.level(m)) || !same_set(f.target(), target_.level(m)))
      throw InvalidInput("spectrum map: component " + std::to_string(m) +
                         " does not match the levels");
  }
}

SimplicialMap SpectrumMap::component(int m) const {
  if (m < 0) throw InvalidInput("spectrum map: negative level");
  if (m <= top()) return components_[m];
  SimplicialMap f = components_.back();
  for (int k = top(); k < m; ++k)
    f = smash_maps(*source_.suspension(k), *target_.suspension(k), f, identity_map(circle()));
  return f;
}

SpectrumMap SpectrumMap::extended(int n) const {
  if (n < top()) throw InvalidInput("extended: cannot drop components");
  std::vector<SimplicialMap> comps = components_;
  for (int k = top(); k < n; ++k)
    comps.push_back(smash_maps(*source_.suspension(k), *target_.suspension(k), comps.back(),
                               identity_map(circle())));
  return SpectrumMap(source_.retruncated(n), target_.retruncated(n), std::move(comps));
}

ValidationReport SpectrumMap::validate() const {
  ValidationReport out;
  for (int m = 0; m <= top(); ++m)
    for (auto v : sspec::validate(components_[m]).violations) {
      v.what = "component " + std::to_string(m) + ": " + v.what;
      out.violations.push_back(std::move(v));
    }
  if (!out.ok()) return out;
  const auto id = identity_map(circle());
  for (int n = 0; n < top(); ++n) {
    auto lhs = compose(target_.structure_map(n),
                       smash_maps(*source_.suspension(n), *target_.suspension(n), components_[n], id));
    auto rhs = compose(components_[n + 1], source_.structure_map(n));
    const auto& a = lhs.images();
    const auto& b = rhs.images();
    for (std::size_t d = 0; d < a.size(); ++d)
      for (std::size_t i = 0; i < a[d].size(); ++i)
        if (a[d][i] != b[d][i])
          out.violations.push_back({static_cast<int>(d), static_cast<int>(i),
                                    "square at level " + std::to_string(n) + " does not commute"});
  }
  return out;
}

bool operator==(const SpectrumMap& a, const SpectrumMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) return false;
  const int k = std::max(a.top(), b.top());
  for (int m = 0; m <= k; ++m)
    if (a.component(m).images() != b.component(m).images()) return false;
  return true;
}

SpectrumMap identity_map(const TruncatedSpectrum& a) {
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= a.truncation(); ++m) comps.push_back(identity_map(a.level(m)));
  return SpectrumMap(a, a, std::move(comps));
}

SpectrumMap constant_map(const TruncatedSpectrum& a, const TruncatedSpectrum& b) {
  std::vector<SimplicialMap> comps;
  const int k = std::max(a.truncation(), b.truncation());
  for (int m = 0; m <= k; ++m) comps.push_back(constant_map(a.level(m), b.level(m)));
  return SpectrumMap(a, b, std::move(comps));
}

SpectrumMap compose(const SpectrumMap& g, const SpectrumMap& f) {
  if (!(f.target() == g.source()))
    throw InvalidInput("compose: target of first map is not the source of the second");
  const int k = std::max(f.top(), g.top());
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= k; ++m) comps.push_back(compose(g.component(m), f.component(m)));
  return SpectrumMap(f.source(), g.target(), std::move(comps));
}

bool is_levelwise_iso(const SpectrumMap& f) {
  for (const auto& c : f.components())
    if (!is_isomorphism(c)) return false;
  return true;
}

SpectrumMap inverse(const SpectrumMap& f) {
  std::vector<SimplicialMap> comps;
  for (const auto& c : f.components()) comps.push_back(inverse(c));
  return SpectrumMap(f.target(), f.source(), std::move(comps));
}

// ---------------------------------------------------------------------------

TruncatedSpectrum trivial_spectrum() { return TruncatedSpectrum({point()}, {}); }

TruncatedSpectrum free_spectrum(int n, const SSetPtr& k) {
  if (n < 0) throw InvalidInput("free_spectrum: negative level");
  require_level(n, "free_spectrum");
  if (!k || !k->pointed()) throw InvalidInput("free_spectrum: K must be pointed");
  std::vector<SSetPtr> levels(n, point());
  levels.push_back(k);
  std::vector<SimplicialMap> sigma;
  for (int m = 0; m < n; ++m) sigma.push_back(constant_map(smash(point(), circle()), levels[m + 1]));
  return TruncatedSpectrum(std::move(levels), std::move(sigma));
}

TruncatedSpectrum suspension_spectrum(const SSetPtr& k) { return free_spectrum(0, k); }

TruncatedSpectrum sphere_spectrum() { return free_spectrum(0, sphere0()); }

SpectrumMap free_map(int n, const SimplicialMap& h) {
  auto s = free_spectrum(n, h.source());
  auto t = free_spectrum(n, h.target());
  std::vector<SimplicialMap> comps;
  for (int m = 0; m < n; ++m) comps.push_back(identity_map(point()));
  comps.push_back(h);
  return SpectrumMap(std::move(s), std::move(t), std::move(comps));
}

SpectrumMap extend_map(const TruncatedSpectrum& source, const TruncatedSpectrum& target, int start,
                       const SimplicialMap& g) {
  if (start < 0) throw InvalidInput("extend_map: negative level");
  if (!same_set(g.source(), source.level(start)) || !same_set(g.target(), target.level(start)))
    throw InvalidInput("extend_map: map does not match the levels at the start");
  const int k = std::max({source.truncation(), target.truncation(), start});
  std::vector<SimplicialMap> comps;
  for (int m = 0; m < start; ++m) comps.push_back(constant_map(source.level(m), target.level(m)));
  comps.push_back(g);
  const auto id = identity_map(circle());
  for (int m = start; m < k; ++m) {
    auto sigma_s = source.structure_map(m);
    if (!is_isomorphism(sigma_s))
      throw InvalidInput("extend_map: source structure map " + std::to_string(m) +
                         " is not invertible");
    auto suspended = smash_maps(*source.suspension(m), *target.suspension(m), comps.back(), id);
    comps.push_back(compose(target.structure_map(m), compose(suspended, inverse(sigma_s))));
  }
  return SpectrumMap(source, target, std::move(comps));
}

SpectrumMap free_adjoint(int n, const SimplicialMap& g, const TruncatedSpectrum& b) {
  return extend_map(free_spectrum(n, g.source()), b, n, g);
}

// ---------------------------------------------------------------------------

SpectrumSmash smash_with_sset(const TruncatedSpectrum& a, const SSetPtr& l) {
  if (!l || !l->pointed()) throw InvalidInput("smash_with_sset: L must be pointed");
  SpectrumSmash out;
  const int n = a.truncation();
  std::vector<SSetPtr> levels;
  for (int m = 0; m <= n; ++m) {
    out.levels.push_back(std::make_shared<const SmashProduct>(a.level(m), l));
    levels.push_back(out.levels.back()->result());
  }
  std::vector<SimplicialMap> sigma;
  std::vector<std::shared_ptr<const SmashProduct>> susp;
  for (int m = 0; m < n; ++m) {
    auto su = std::make_shared<const SmashProduct>(levels[m], circle());
    const auto& here = *out.levels[m];
    const auto& next = *out.levels[m + 1];
    auto a_susp = a.suspension(m);
    auto a_sigma = a.structure_map(m);
    // ((x, y), t) -> (sigma(x, t), y)
    sigma.push_back(build_map(su->result(), levels[m + 1], [&](int d, int id) {
      const auto& [v, t] = su->factors(d, id);
      auto [x, y] = here.split(v);
      return next.pair(a_sigma(a_susp->pair(x, t)), y);
    }));
    susp.push_back(std::move(su));
  }
  out.result = TruncatedSpectrum(std::move(levels), std::move(sigma), std::move(susp));
  return out;
}

SpectrumMap smash_with_sset(const SpectrumSmash& source, const SpectrumSmash& target,
                            const SpectrumMap& f, const SimplicialMap& h) {
  const int k = f.top();
  if (source.result.truncation() != k || target.result.truncation() != k)
    throw InvalidInput("smash_with_sset: smashes must be aligned with the map");
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= k; ++m)
    comps.push_back(smash_maps(*source.levels[m], *target.levels[m], f.component(m), h));
  return SpectrumMap(source.result, target.result, std::move(comps));
}

// ---------------------------------------------------------------------------

SpectrumMap SpectrumWedge::inclusion(int i) const {
  if (i < 0 || i >= static_cast<int>(summands.size()))
    throw InvalidInput("wedge inclusion: no such summand");
  std::vector<SimplicialMap> comps;
  for (const auto& w : levels) comps.push_back(w.inclusion(i));
  return SpectrumMap(summands[i], result, std::move(comps));
}

SpectrumWedge wedge_spectra(const std::vector<TruncatedSpectrum>& summands, int truncation) {
  SpectrumWedge out;
  out.summands = summands;
  if (summands.empty()) {
    out.result = trivial_spectrum().retruncated(std::max(0, truncation));
    return out;
  }
  int n = std::max(0, truncation);
  for (const auto& s : summands) n = std::max(n, s.truncation());
  std::vector<SSetPtr> levels;
  for (int m = 0; m <= n; ++m) {
    std::vector<SSetPtr> parts;
    for (const auto& s : summands) parts.push_back(s.level(m));
    out.levels.emplace_back(std::move(parts));
    levels.push_back(out.levels.back().result());
  }
  std::vector<SimplicialMap> sigma;
  std::vector<std::shared_ptr<const SmashProduct>> susp;
  for (int m = 0; m < n; ++m) {
    auto su = std::make_shared<const SmashProduct>(levels[m], circle());
    std::vector<SimplicialMap> sig;
    std::vector<std::shared_ptr<const SmashProduct>> parts;
    for (const auto& s : summands) {
      sig.push_back(s.structure_map(m));
      parts.push_back(s.suspension(m));
    }
    const auto& here = out.levels[m];
    const auto& next = out.levels[m + 1];
    sigma.push_back(build_map(su->result(), levels[m + 1], [&](int d, int id) {
      const auto& [v, t] = su->factors(d, id);
      auto [i, x] = here.locate(v);
      return next.inclusion(i)(sig[i](parts[i]->pair(x, t)));
    }));
    susp.push_back(std::move(su));
  }
  out.result = TruncatedSpectrum(std::move(levels), std::move(sigma), std::move(susp));
  return out;
}

SpectrumMap wedge_induced(const SpectrumWedge& w, const std::vector<SpectrumMap>& maps) {
  if (maps.size() != w.summands.size()) throw InvalidInput("wedge_induced: one map per summand");
  if (maps.empty()) throw InvalidInput("wedge_induced: no summands");
  const int n = w.result.truncation();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].source() == w.summands[i]))
      throw InvalidInput("wedge_induced: maps do not match the summands");
    if (maps[i].target().truncation() > n || maps[i].top() > n)
      throw InvalidInput("wedge_induced: align the wedge with the target first");
  }
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= n; ++m) {
    std::vector<SimplicialMap> parts;
    for (const auto& f : maps) parts.push_back(f.component(m));
    comps.push_back(wedge_induced(w.levels[m], parts));
  }
  return SpectrumMap(w.result, maps[0].target(), std::move(comps));
}

// ---------------------------------------------------------------------------

SpectrumQuotient coequalizer_spectra(const SpectrumMap& f, const SpectrumMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw InvalidInput("coequalizer_spectra: maps must share source and target");
  const int n = std::max(f.top(), g.top());
  const auto& b = f.target();
  SpectrumQuotient out;
  std::vector<SSetPtr> levels;
  for (int m = 0; m <= n; ++m) {
    auto fm = f.component(m);
    auto gm = g.component(m);
    std::vector<std::pair<FormalSimplex, FormalSimplex>> rel;
    const auto& a = *fm.source();
    for (int d = 0; d <= a.dimension(); ++d)
      for (int id = 0; id < a.count(d); ++id)
        if (fm.image(d, id) != gm.image(d, id)) rel.emplace_back(fm.image(d, id), gm.image(d, id));
    out.levels.emplace_back(b.level(m), rel);
    levels.push_back(out.levels.back().result());
  }
  std::vector<SimplicialMap> sigma;
  std::vector<std::shared_ptr<const SmashProduct>> susp;
  for (int m = 0; m < n; ++m) {
    auto su = std::make_shared<const SmashProduct>(levels[m], circle());
    auto b_susp = b.suspension(m);
    auto b_sigma = b.structure_map(m);
    const auto& here = out.levels[m];
    const auto& next = out.levels[m + 1];
    sigma.push_back(build_map(su->result(), levels[m + 1], [&](int d, int id) {
      const auto& [v, t] = su->factors(d, id);
      return next.projection()(b_sigma(b_susp->pair(here.lift(v), t)));
    }));
    susp.push_back(std::move(su));
  }
  out.result = TruncatedSpectrum(std::move(levels), std::move(sigma), std::move(susp));
  std::vector<SimplicialMap> comps;
  for (const auto& q : out.levels) comps.push_back(q.projection());
  out.projection = SpectrumMap(b.retruncated(n), out.result, std::move(comps));
  return out;
}

SpectrumMap factor_through(const SpectrumQuotient& q, const SpectrumMap& h) {
  if (!(h.source() == q.projection.source()))
    throw InvalidInput("factor_through: wrong source");
  const int n = q.result.truncation();
  if (h.target().truncation() > n)
    throw InvalidInput("factor_through: align the quotient with the target first");
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= n; ++m) comps.push_back(factor_through(q.levels[m], h.component(m)));
  return SpectrumMap(q.result, h.target(), std::move(comps));
}

SpectrumPushout pushout_spectra(const SpectrumMap& f, const SpectrumMap& g) {
  if (!(f.source() == g.source())) throw InvalidInput("pushout_spectra: maps must share a source");
  const int n = std::max({f.top(), g.top()});
  auto fe = f.extended(n);
  auto ge = g.extended(n);
  SpectrumPushout out;
  out.wedge = wedge_spectra({fe.target(), ge.target()}, n);
  auto i0 = out.wedge.inclusion(0);
  auto i1 = out.wedge.inclusion(1);
  out.quotient = coequalizer_spectra(compose(i0, fe), compose(i1, ge));
  out.into_first = compose(out.quotient.projection, i0);
  out.into_second = compose(out.quotient.projection, i1);
  return out;
}

SSetPtr cone_interval() { return with_basepoint(standard_simplex(1), 1); }

SpectrumPushout mapping_cone(const SpectrumMap& f) {
  const int n = f.top();
  auto fe = f.extended(n);
  const auto& a = fe.source();
  auto cone = smash_with_sset(a, cone_interval());
  std::vector<SimplicialMap> comps;
  for (int m = 0; m <= n; ++m) {
    const auto& sp = *cone.levels[m];
    comps.push_back(build_map(a.level(m), sp.result(), [&](int d, int id) {
      FormalSimplex v0{0, d > 0 ? (DegeneracyMask{1} << d) - 1 : 0, static_cast<std::int16_t>(d)};
      return sp.pair(FormalSimplex::nondegenerate(d, id), v0);
    }));
  }
  SpectrumMap include(a, cone.result, std::move(comps));
  return pushout_spectra(fe, include);
}

bool is_cofibration(const SpectrumMap& f) {
  if (!is_injective(f.component(0))) return false;
  const auto& x = f.source();
  const auto& y = f.target();
  const auto id = identity_map(circle());
  for (int n = 0; n < f.top(); ++n) {
    auto suspended = smash_maps(*x.suspension(n), *y.suspension(n), f.component(n), id);
    auto p = pushout(x.structure_map(n), suspended);
    std::vector<SimplicialMap> legs{f.component(n + 1), y.structure_map(n)};
    auto corner = factor_through(p.quotient, wedge_induced(p.wedge, legs));
    if (!is_injective(corner)) return false;
  }
  return true;
}

SpectrumMap canonical_lambda(int n) {
  if (n < 1) throw InvalidInput("canonical_lambda: n must be at least 1");
  auto s = free_spectrum(n, circle());
  auto t = free_spectrum(n - 1, sphere0());
  auto unit = inverse(left_unitor(*t.suspension(n - 1)));
  return extend_map(s, t, n, unit);
}

// ---------------------------------------------------------------------------

namespace {

template <typename V>
std::map<int, V> shift_keys(const std::map<int, V>& m, int s) {
  std::map<int, V> out;
  for (const auto& [k, v] : m) out.emplace(k + s, v);
  return out;
}

}  // namespace

GradedHomology stable_homology(const TruncatedSpectrum& a) {
  const int n = a.truncation();
  return shift_keys(homology(reduced_chain_complex(*a.level(n))), -n);
}

StableHomologyMap stable_homology_map(const SpectrumMap& f) {
  const int k = f.top();
  auto fk = f.component(k);
  auto src = std::make_shared<const ChainComplex>(reduced_chain_complex(*fk.source()));
  auto tgt = std::make_shared<const ChainComplex>(reduced_chain_complex(*fk.target()));
  auto c = chain_map(fk, src, tgt);
  StableHomologyMap out;
  out.source = shift_keys(homology(*src), -k);
  out.target = shift_keys(homology(*tgt), -k);
  auto h = induced_homology_map(c);
  out.map.matrices = shift_keys(h.matrices, -k);
  out.map.source_orders = shift_keys(h.source_orders, -k);
  out.map.target_orders = shift_keys(h.target_orders, -k);
  out.iso = is_homology_iso(c);
  return out;
}

CoequalizerPresentation coequalizer_presentation(const TruncatedSpectrum& a) {
  const int n = a.truncation();
  CoequalizerPresentation out;
  std::vector<TruncatedSpectrum> tops, bottoms;
  for (int m = 0; m <= n; ++m) tops.push_back(free_spectrum(m, a.level(m)));
  for (int m = 1; m <= n; ++m) bottoms.push_back(free_spectrum(m, a.suspension(m - 1)->result()));
  out.target = wedge_spectra(tops, n);
  out.source = wedge_spectra(bottoms, n);

  if (bottoms.empty()) {
    out.h = out.t = constant_map(out.source.result, out.target.result);
  } else {
    std::vector<SpectrumMap> hs, ts;
    for (int m = 1; m <= n; ++m) {
      // F_m(sigma_{m-1}) into summand m
      hs.push_back(compose(out.target.inclusion(m), free_map(m, a.structure_map(m - 1))));
      // adjoint of the identity of A_{m-1} ^ S^1 into summand m - 1
      auto x = a.suspension(m - 1)->result();
      ts.push_back(compose(out.target.inclusion(m - 1),
                           extend_map(bottoms[m - 1], tops[m - 1], m, identity_map(x))));
    }
    out.h = wedge_induced(out.source, hs);
    out.t = wedge_induced(out.source, ts);
  }
  out.coequalizer = coequalizer_spectra(out.h, out.t);

  std::vector<SpectrumMap> counits;
  for (int m = 0; m <= n; ++m) counits.push_back(free_adjoint(m, identity_map(a.level(m)), a));
  out.witness = factor_through(out.coequalizer, wedge_induced(out.target, counits));
  out.witness_is_iso = is_levelwise_iso(out.witness) && out.witness.validate().ok();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class SpectrumMapSearch {
 public:
  SpectrumMapSearch(const TruncatedSpectrum& s, const TruncatedSpectrum& t, std::uint64_t budget)
      : s_(s), t_(t), top_(std::max(s.truncation(), t.truncation())), budget_(budget) {}

  std::vector<SpectrumMap> run() {
    search(0);
    return std::move(found_);
  }

 private:
  void spend() {
    if (tried_ > budget_)
      throw BudgetExceeded("enumerate_spectrum_maps: candidate budget of " +
                           std::to_string(budget_) + " exceeded");
  }

  void search(int m) {
    if (m > top_) {
      found_.emplace_back(s_, t_, current_);
      return;
    }
    auto src = s_.level(m);
    auto tgt = t_.level(m);
    ForcedImages forced(src->face_table().size());
    for (int d = 0; d <= src->dimension(); ++d) forced[d].resize(src->count(d));
    SimplicialMap lhs;
    SimplicialMap sigma_s;
    if (m > 0) {
      sigma_s = s_.structure_map(m - 1);
      lhs = compose(t_.structure_map(m - 1),
                    smash_maps(*s_.suspension(m - 1), *t_.suspension(m - 1), current_.back(),
                               identity_map(circle())));
      const auto& dom = *sigma_s.source();
      for (int d = 0; d <= dom.dimension(); ++d)
        for (int id = 0; id < dom.count(d); ++id) {
          const auto& v = sigma_s.image(d, id);
          if (v.degenerate()) continue;
          const auto& want = lhs.image(d, id);
          auto& slot = forced[v.dim][v.target];
          if (slot && *slot != want) return;  // inconsistent square
          slot = want;
        }
    }
    auto candidates =
        enumerate_pointed_maps(src, tgt, budget_ - std::min(budget_, tried_), &forced, &tried_);
    spend();
    for (auto& c : candidates) {
      if (m > 0 && compose(c, sigma_s).images() != lhs.images()) continue;
      current_.push_back(std::move(c));
      search(m + 1);
      current_.pop_back();
    }
  }

  TruncatedSpectrum s_, t_;
  int top_;
  std::uint64_t budget_;
  std::uint64_t tried_ = 0;
  std::vector<SimplicialMap> current_;
  std::vector<SpectrumMap> found_;
};

}  // namespace

std::vector<SpectrumMap> enumerate_spectrum_maps(const TruncatedSpectrum& s,
                                                 const TruncatedSpectrum& t,
                                                 std::uint64_t budget) {
  return SpectrumMapSearch(s, t, budget).run();
}

AdjunctionReport adjunction_check(int n, const SSetPtr& k, const TruncatedSpectrum& b,
                                  std::uint64_t budget) {
  auto f = free_spectrum(n, k);
  auto spectrum_maps = enumerate_spectrum_maps(f, b, budget);
  auto level_maps = enumerate_pointed_maps(k, b.level(n), budget);
  std::map<SimplicialMap::ImageTable, std::size_t> index;
  for (std::size_t i = 0; i < level_maps.size(); ++i) index.emplace(level_maps[i].images(), i);

  AdjunctionReport r;
  r.spectrum_maps = spectrum_maps.size();
  r.level_maps = level_maps.size();
  std::vector<char> hit(level_maps.size(), 0);
  bool injective = true;
  for (const auto& g : spectrum_maps) {
    auto it = index.find(g.component(n).images());
    if (it == index.end()) {
      injective = false;
      continue;
    }
    if (hit[it->second]) injective = false;
    hit[it->second] = 1;
    r.pairing.push_back(it->second);
  }
  r.bijection = injective && r.pairing.size() == level_maps.size() &&
                std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  return r;
}

}  // namespace sspec
