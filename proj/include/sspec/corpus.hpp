#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sspec/spectra.hpp"

namespace sspec {

// Three-edge circle v0 -> v1 -> v2 -> v0, pointed at v0.
SSetPtr three_edge_circle();
// The three-edge circle wrapped twice around S^1.
SimplicialMap degree_two_map();
// Cofiber of the degree-two map F_n C3 -> F_n S^1: stable homology Z/2 in
// degree 1 - n. n = 1 is the mod 2 Moore spectrum.
TruncatedSpectrum moore_spectrum(int n = 1);

struct CorpusEntry {
  std::string name;
  TruncatedSpectrum spectrum;
};

// Deterministic in (seed, size). Entry 0 is always the Moore spectrum so that
// every corpus has torsion in its homology.
std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int size);

}  // namespace sspec
