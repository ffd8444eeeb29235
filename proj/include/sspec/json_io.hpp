#pragma once

#include <string>

#include "json.hpp"
#include "sspec/cospectrum.hpp"
#include "sspec/homology.hpp"
#include "sspec/spectra.hpp"

namespace sspec {

// Insertion-ordered objects keep serialization byte-stable.
using Json = nlohmann::ordered_json;

// {"dims": [...], "basepoint": id|null, "faces": [[[{"word": [...], "target": t}, ...], ...], ...]}
// faces[d][id] lists the d + 1 faces of simplex (d, id); vertices have none.
Json to_json(const FiniteSimplicialSet& x);
SSetPtr sset_from_json(const Json& j);

Json simplex_to_json(const FormalSimplex& s);
FormalSimplex simplex_from_json(const Json& j, int dim);

// {"images": [[{"word", "target"}, ...], ...]} against known source/target.
Json images_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j, const SSetPtr& source, const SSetPtr& target);
// Standalone: {"source": sset, "target": sset, "images": ...}.
Json to_json(const SimplicialMap& f);
SimplicialMap simplicial_map_from_json(const Json& j);

// {"truncation": N, "levels": [sset...], "structure_maps": [{"images": ...}...]}
Json to_json(const TruncatedSpectrum& a);
TruncatedSpectrum spectrum_from_json(const Json& j);

// {"source": spectrum, "target": spectrum, "components": [{"images": ...}...]}
Json to_json(const SpectrumMap& f);
SpectrumMap spectrum_map_from_json(const Json& j);

// {"degree": k, "objects": [spectrum...], "structure_maps": [spectrum map...]}
Json to_json(const TruncatedCospectrum& x);
TruncatedCospectrum cospectrum_from_json(const Json& j);

// [{"degree": d, "rank": r, "torsion": [...]}...]
Json to_json(const GradedHomology& h);
Json to_json(const Int& n);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace sspec
