#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "sspec/colimits.hpp"
#include "sspec/constructions.hpp"
#include "sspec/homology.hpp"

namespace sspec {

// Levels A_0..A_N with structure maps A_n ^ S^1 -> A_{n+1}. Above N the
// spectrum is freely extended: A_{m+1} = A_m ^ S^1 with the identity as
// structure map. Extension levels are computed on first use and cached.
class TruncatedSpectrum {
 public:
  TruncatedSpectrum() = default;
  // structure_maps[n] must have source smash(levels[n], S^1) and target
  // levels[n + 1]. `suspensions` optionally supplies the SmashProducts
  // levels[n] ^ S^1 already built by the caller.
  TruncatedSpectrum(std::vector<SSetPtr> levels, std::vector<SimplicialMap> structure_maps,
                    std::vector<std::shared_ptr<const SmashProduct>> suspensions = {});

  int truncation() const;
  SSetPtr level(int m) const;
  // A_m ^ S^1, with its pairing data.
  std::shared_ptr<const SmashProduct> suspension(int m) const;
  SimplicialMap structure_map(int m) const;

  // The same spectrum with extension levels up to n stored explicitly.
  TruncatedSpectrum retruncated(int n) const;

  // Levels, structure maps (faces, basepoint) and shapes.
  ValidationReport validate() const;

  // Equal levels and structure maps up to the larger truncation, i.e. equal
  // as spectra; a retruncated spectrum compares equal to the original.
  friend bool operator==(const TruncatedSpectrum& a, const TruncatedSpectrum& b);

 private:
  struct Impl;
  const Impl* impl() const;
  std::shared_ptr<const Impl> impl_;
};

// Components f_0..f_K with K >= both truncations; above K, f_{m+1} = f_m ^ id.
class SpectrumMap {
 public:
  SpectrumMap() = default;
  SpectrumMap(TruncatedSpectrum source, TruncatedSpectrum target,
              std::vector<SimplicialMap> components);

  const TruncatedSpectrum& source() const { return source_; }
  const TruncatedSpectrum& target() const { return target_; }
  // K, the last stored component.
  int top() const { return static_cast<int>(components_.size()) - 1; }
  SimplicialMap component(int m) const;
  const std::vector<SimplicialMap>& components() const { return components_; }

  // The same map with components stored up to n >= top(), and source and
  // target retruncated to n.
  SpectrumMap extended(int n) const;

  // Each component validates and sigma o (f_n ^ id) == f_{n+1} o sigma for
  // n < top().
  ValidationReport validate() const;

  friend bool operator==(const SpectrumMap& a, const SpectrumMap& b);

 private:
  TruncatedSpectrum source_;
  TruncatedSpectrum target_;
  std::vector<SimplicialMap> components_;
};

SpectrumMap identity_map(const TruncatedSpectrum& a);
SpectrumMap constant_map(const TruncatedSpectrum& a, const TruncatedSpectrum& b);
SpectrumMap compose(const SpectrumMap& g, const SpectrumMap& f);  // g o f
bool is_levelwise_iso(const SpectrumMap& f);
SpectrumMap inverse(const SpectrumMap& f);

TruncatedSpectrum trivial_spectrum();
// Point below level n, K at level n; truncation n.
TruncatedSpectrum free_spectrum(int n, const SSetPtr& k);
TruncatedSpectrum suspension_spectrum(const SSetPtr& k);
TruncatedSpectrum sphere_spectrum();

// F_n(h) for a pointed map h : K -> L.
SpectrumMap free_map(int n, const SimplicialMap& h);

// The map S -> T that is constant below `start`, equals g at `start`, and
// above is forced: phi_{k+1} = sigma^T_k o (phi_k ^ id) o (sigma^S_k)^-1.
// Requires the source structure maps from `start` on to be isomorphisms.
SpectrumMap extend_map(const TruncatedSpectrum& source, const TruncatedSpectrum& target, int start,
                       const SimplicialMap& g);
// Adjoint of g : K -> B_n, a map F_n K -> B.
SpectrumMap free_adjoint(int n, const SimplicialMap& g, const TruncatedSpectrum& b);

// Levels A_n ^ L with structure maps sigma_n ^ id_L after moving S^1 past L.
// Keeps the truncation of A; above it the result is freely extended, which is
// isomorphic to (not identical with) A_m ^ L.
struct SpectrumSmash {
  TruncatedSpectrum result;
  std::vector<std::shared_ptr<const SmashProduct>> levels;
};
SpectrumSmash smash_with_sset(const TruncatedSpectrum& a, const SSetPtr& l);
// f ^ h : A ^ L -> B ^ M. Both smashes must be taken at truncation f.top().
SpectrumMap smash_with_sset(const SpectrumSmash& source, const SpectrumSmash& target,
                            const SpectrumMap& f, const SimplicialMap& h);

// Levelwise wedge; truncation is the maximum of the summands' and
// `truncation`. No summands gives the trivial spectrum.
struct SpectrumWedge {
  TruncatedSpectrum result;
  std::vector<TruncatedSpectrum> summands;
  std::vector<Wedge> levels;
  SpectrumMap inclusion(int i) const;
};
SpectrumWedge wedge_spectra(const std::vector<TruncatedSpectrum>& summands, int truncation = 0);
SpectrumMap wedge_induced(const SpectrumWedge& w, const std::vector<SpectrumMap>& maps);

// Levelwise coequalizer of f, g : A -> B up to their common top level.
struct SpectrumQuotient {
  TruncatedSpectrum result;
  std::vector<Quotient> levels;
  SpectrumMap projection;
};
SpectrumQuotient coequalizer_spectra(const SpectrumMap& f, const SpectrumMap& g);
// The map out of the coequalizer induced by h : B -> C.
SpectrumMap factor_through(const SpectrumQuotient& q, const SpectrumMap& h);

struct SpectrumPushout {
  SpectrumWedge wedge;
  SpectrumQuotient quotient;
  SpectrumMap into_first, into_second;
  const TruncatedSpectrum& result() const { return quotient.result; }
};
SpectrumPushout pushout_spectra(const SpectrumMap& f, const SpectrumMap& g);

// Delta[1] pointed at vertex 1; A ^ I is the reduced cone on A.
SSetPtr cone_interval();
// Pushout of B <-f- A -> A ^ I, with A included at vertex 0.
SpectrumPushout mapping_cone(const SpectrumMap& f);

// f_0 injective and every corner map X_{n+1} u (Y_n ^ S^1) -> Y_{n+1}
// injective.
bool is_cofibration(const SpectrumMap& f);

// F_n S^1 -> F_{n-1} S^0: basepoint below n, the inverse unit S^1 -> S^0 ^ S^1
// at level n, suspended above.
SpectrumMap canonical_lambda(int n);

// H_k(A) = reduced H_{k+N}(A_N).
GradedHomology stable_homology(const TruncatedSpectrum& a);
struct StableHomologyMap {
  GradedHomology source, target;
  HomologyMap map;
  bool iso = false;  // homology-level
};
StableHomologyMap stable_homology_map(const SpectrumMap& f);

// The coequalizer diagram of wedges of free spectra presenting A, with the
// comparison map from the coequalizer back to A.
struct CoequalizerPresentation {
  SpectrumWedge source;  // F_n(A_{n-1} ^ S^1), n = 1..N
  SpectrumWedge target;  // F_n A_n, n = 0..N
  SpectrumMap h, t;
  SpectrumQuotient coequalizer;
  SpectrumMap witness;  // coequalizer -> A
  bool witness_is_iso = false;
};
CoequalizerPresentation coequalizer_presentation(const TruncatedSpectrum& a);

// All spectrum maps S -> T, level by level with images forced by the
// structure-map squares. `budget` bounds the candidate images tried over the
// whole search; past it BudgetExceeded is thrown.
std::vector<SpectrumMap> enumerate_spectrum_maps(const TruncatedSpectrum& s,
                                                 const TruncatedSpectrum& t,
                                                 std::uint64_t budget);

struct AdjunctionReport {
  std::size_t spectrum_maps = 0;  // |Hom(F_n K, B)|
  std::size_t level_maps = 0;     // |Hom(K, B_n)|
  // pairing[i] is the index in the level-map list of the restriction of
  // spectrum map i
  std::vector<std::size_t> pairing;
  bool bijection = false;
};
AdjunctionReport adjunction_check(int n, const SSetPtr& k, const TruncatedSpectrum& b,
                                  std::uint64_t budget);

}  // namespace sspec
