#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sspec/errors.hpp"
#include "sspec/spectra.hpp"

namespace sspec {

// Raised for partition tables that break an invariant; `index` is the first
// offending position.
class InvalidPartition : public InvalidInput {
 public:
  InvalidPartition(const std::string& what, int index)
      : InvalidInput(what + " at index " + std::to_string(index)), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

// q(0..M) with q(0) = 0, unit or zero steps, and both q and p = id - q
// increasing somewhere on the table.
class PartitionFunction {
 public:
  explicit PartitionFunction(std::vector<int> table, std::string name = "table");

  int q(int n) const;
  int p(int n) const { return n - q(n); }
  int max_level() const { return static_cast<int>(table_.size()) - 1; }
  const std::vector<int>& table() const { return table_; }
  const std::string& name() const { return name_; }
  // n -> p(n), the partition of the swapped smash.
  PartitionFunction complement() const;

  friend bool operator==(const PartitionFunction& a, const PartitionFunction& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<int> table_;
  std::string name_;
};

// "floor-half" (q(n) = floor(n/2)), "interleave(a,b)" (a steps of q, then b
// steps of p, repeated) or a comma-separated table "0,0,1,...". Presets are
// tabulated on 0..m.
PartitionFunction make_partition(const std::string& spec, int m);

// A ^_q B with levels A_{q(n)} ^ B_{p(n)}, truncated at the first level M with
// q(M) >= N_A and p(M) >= N_B.
struct NaiveSmash {
  TruncatedSpectrum result;
  std::vector<std::shared_ptr<const SmashProduct>> levels;
  int left_truncation = 0, right_truncation = 0;
};
NaiveSmash naive_smash(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                       const PartitionFunction& q);
// f ^_q g between two naive smashes over the same partition and truncation.
SpectrumMap naive_smash_map(const NaiveSmash& source, const NaiveSmash& target,
                            const PartitionFunction& q, const SpectrumMap& f, const SpectrumMap& g);

// A ^_q B -> B ^_p A, levelwise factor swap. Throws VerificationFailure if
// the squares do not commute.
SpectrumMap twist_iso(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                      const PartitionFunction& q);
struct TwistReport {
  bool valid = false;       // the twist commutes with structure maps
  bool inverse_valid = false;
  bool two_sided = false;   // both composites are identities
  bool homology_iso = false;
  bool ok() const { return valid && inverse_valid && two_sided && homology_iso; }
};
TwistReport twist_check(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                        const PartitionFunction& q);

// phi : S -> X with phi_0 an isomorphism S^0 -> X_0 (found by enumeration when
// not given) and phi_{n+1} = sigma^X_n o (phi_n ^ id) o (sigma^S_n)^-1.
// Throws InvalidInput when X_0 is not S^0 or a structure map of X is not an
// isomorphism.
SpectrumMap iso_to_sphere(const TruncatedSpectrum& x,
                          const std::optional<SimplicialMap>& phi0 = std::nullopt);

// Chains of A_N shifted down by N.
ChainComplex stable_chains(const TruncatedSpectrum& a);

struct HomologyComparison {
  GradedHomology left, right;
  bool equal = false;
};
// Stable homology of A ^_q B against the homology of the tensor product of
// stable chains.
HomologyComparison kunneth_compare(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                                   const PartitionFunction& q);
// Stable homology of A ^_q B against that of B ^_q' A.
HomologyComparison commute_check(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                                 const PartitionFunction& q, const PartitionFunction& q2);

}  // namespace sspec
