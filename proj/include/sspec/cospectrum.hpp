#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sspec/spectra.hpp"

namespace sspec {

// Spectra X_0..X_k with maps X_m ^ S^1 -> X_{m-1}. All objects share one
// truncation (the constructor retruncates them to the largest), so that the
// smashes X_m ^ S^1 are computed at a common level.
class TruncatedCospectrum {
 public:
  TruncatedCospectrum() = default;
  // maps[m - 1] : smash_with_sset(objects[m], S^1) -> objects[m - 1]. A map
  // given at a lower truncation is accepted when its components agree.
  TruncatedCospectrum(std::vector<TruncatedSpectrum> objects, std::vector<SpectrumMap> maps);

  int degree() const { return static_cast<int>(objects_.size()) - 1; }
  int truncation() const { return objects_.front().truncation(); }
  const TruncatedSpectrum& object(int m) const { return objects_.at(m); }
  // X_m ^ S^1, m >= 1.
  const SpectrumSmash& suspended(int m) const { return suspended_.at(m - 1); }
  const SpectrumMap& structure_map(int m) const { return maps_.at(m - 1); }

 private:
  std::vector<TruncatedSpectrum> objects_;
  std::vector<SpectrumSmash> suspended_;
  std::vector<SpectrumMap> maps_;
};

// X_n = F_n S^0, structure maps lambda_m o (F_m S^0 ^ S^1 = F_m S^1).
TruncatedCospectrum standard_frame(int k);

// L(A) as the coequalizer of  V_n X_n ^ (A_{n-1} ^ S^1)  =>  V_n X_n ^ A_n,
// one leg from the structure maps of A and one from those of X.
struct RealizedAdjoint {
  std::vector<SpectrumSmash> terms;    // X_n ^ A_n, n = 0..N
  std::vector<SpectrumSmash> shifted;  // X_n ^ (A_{n-1} ^ S^1), n = 1..N
  std::vector<SpectrumMap> h_legs, t_legs;  // into terms n and n - 1
  SpectrumWedge source, target;
  SpectrumMap h, t;
  SpectrumQuotient coequalizer;
  const TruncatedSpectrum& result() const { return coequalizer.result; }
};
RealizedAdjoint realize_left_adjoint(const TruncatedCospectrum& x, const TruncatedSpectrum& a);

// For frames with X_n at level n equal to S^0 (such as the standard one): the
// map L(A) -> A induced by the unit isomorphisms S^0 ^ A_n -> A_n. Throws
// VerificationFailure if it does not factor.
SpectrumMap frame_comparison(const RealizedAdjoint& r, const TruncatedSpectrum& a);

// All verdicts are homology-level where weak equivalences are involved.
struct FramePredicateReport {
  std::vector<bool> cofibrant;              // per object
  std::vector<bool> structure_map_iso;      // per structure map, homology-level
  bool overall = false;
  std::string label = "homology-level";
};
FramePredicateReport frame_predicate(const TruncatedCospectrum& x);

struct BijectionProbeReport {
  std::size_t maps_out_of_realization = 0;  // |Hom(L(A), B)|
  std::size_t compatible_families = 0;      // families g_n : X_n ^ A_n -> B
  std::vector<std::size_t> pairing;
  bool bijection = false;
};
BijectionProbeReport adjunction_bijection_probe(const TruncatedCospectrum& x,
                                                const TruncatedSpectrum& a,
                                                const TruncatedSpectrum& b, std::uint64_t budget);

}  // namespace sspec
