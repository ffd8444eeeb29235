#include "sspec/smash_product.hpp"

#include "sspec/limits.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace sspec {

PartitionFunction::PartitionFunction(std::vector<int> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  if (table_.size() < 2) throw InvalidPartition("partition table needs at least two entries", 0);
  if (table_[0] != 0) throw InvalidPartition("q(0) must be 0", 0);
  bool q_moves = false, p_moves = false;
  for (std::size_t n = 1; n < table_.size(); ++n) {
    const int step = table_[n] - table_[n - 1];
    if (step != 0 && step != 1)
      throw InvalidPartition("q must step by 0 or 1", static_cast<int>(n));
    (step == 1 ? q_moves : p_moves) = true;
  }
  const int last = static_cast<int>(table_.size()) - 1;
  if (!q_moves) throw InvalidPartition("q never increases on the table", last);
  if (!p_moves) throw InvalidPartition("p never increases on the table", last);
}

int PartitionFunction::q(int n) const {
  if (n < 0 || n > max_level())
    throw InvalidInput("partition evaluated outside its table at level " + std::to_string(n));
  return table_[n];
}

PartitionFunction PartitionFunction::complement() const {
  std::vector<int> t(table_.size());
  for (std::size_t n = 0; n < t.size(); ++n) t[n] = static_cast<int>(n) - table_[n];
  return PartitionFunction(std::move(t), "complement of " + name_);
}

PartitionFunction make_partition(const std::string& spec, int m) {
  if (m < 1) throw InvalidInput("partition: M must be at least 1");
  if (spec == "floor-half") {
    std::vector<int> t(m + 1);
    for (int n = 0; n <= m; ++n) t[n] = n / 2;
    return PartitionFunction(std::move(t), spec);
  }
  static const std::regex interleave(R"(interleave\((\d+),(\d+)\))");
  std::smatch match;
  if (std::regex_match(spec, match, interleave)) {
    const int a = std::stoi(match[1]), b = std::stoi(match[2]);
    if (a < 1 || b < 1) throw InvalidInput("interleave: both step counts must be positive");
    std::vector<int> t{0};
    for (int n = 1; n <= m; ++n) t.push_back(t.back() + ((n - 1) % (a + b) < a ? 1 : 0));
    return PartitionFunction(std::move(t), spec);
  }
  std::vector<int> t;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      t.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidPartition("partition table entry '" + item + "' is not a nonnegative integer",
                             static_cast<int>(t.size()));
    }
  }
  return PartitionFunction(std::move(t), spec);
}

// ---------------------------------------------------------------------------

NaiveSmash naive_smash(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                       const PartitionFunction& q) {
  NaiveSmash out;
  out.left_truncation = a.truncation();
  out.right_truncation = b.truncation();
  int top = -1;
  for (int n = 0; n <= q.max_level(); ++n)
    if (q.q(n) >= a.truncation() && q.p(n) >= b.truncation()) {
      top = n;
      break;
    }
  if (top < 0)
    throw InvalidInput("naive_smash: partition table too short to reach both truncations");
  require_level(top, "naive_smash");
  std::vector<SSetPtr> levels;
  for (int n = 0; n <= top; ++n) {
    out.levels.push_back(std::make_shared<const SmashProduct>(a.level(q.q(n)), b.level(q.p(n))));
    levels.push_back(out.levels.back()->result());
  }
  std::vector<SimplicialMap> sigma;
  std::vector<std::shared_ptr<const SmashProduct>> susp;
  for (int n = 0; n < top; ++n) {
    auto su = std::make_shared<const SmashProduct>(levels[n], circle());
    const auto& here = *out.levels[n];
    const auto& next = *out.levels[n + 1];
    const bool left_step = q.q(n + 1) != q.q(n);
    const int i = q.q(n), j = q.p(n);
    auto structure = left_step ? a.structure_map(i) : b.structure_map(j);
    auto factor = left_step ? a.suspension(i) : b.suspension(j);
    sigma.push_back(build_map(su->result(), levels[n + 1], [&](int d, int id) {
      const auto& [v, t] = su->factors(d, id);
      auto [x, y] = here.split(v);
      if (left_step) return next.pair(structure(factor->pair(x, t)), y);  // S^1 moved past y
      return next.pair(x, structure(factor->pair(y, t)));
    }));
    susp.push_back(std::move(su));
  }
  out.result = TruncatedSpectrum(std::move(levels), std::move(sigma), std::move(susp));
  return out;
}

SpectrumMap naive_smash_map(const NaiveSmash& source, const NaiveSmash& target,
                            const PartitionFunction& q, const SpectrumMap& f, const SpectrumMap& g) {
  const int top = source.result.truncation();
  if (target.result.truncation() != top)
    throw InvalidInput("naive_smash_map: smashes have different truncations");
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= top; ++n)
    comps.push_back(smash_maps(*source.levels[n], *target.levels[n], f.component(q.q(n)),
                               g.component(q.p(n))));
  return SpectrumMap(source.result, target.result, std::move(comps));
}

namespace {

SpectrumMap swap_levels(const NaiveSmash& xy, const NaiveSmash& yx) {
  const int top = xy.result.truncation();
  if (yx.result.truncation() != top) throw VerificationFailure("twist: truncations differ");
  std::vector<SimplicialMap> comps;
  for (int n = 0; n <= top; ++n) comps.push_back(swap_map(*xy.levels[n], *yx.levels[n]));
  return SpectrumMap(xy.result, yx.result, std::move(comps));
}

}  // namespace

SpectrumMap twist_iso(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                      const PartitionFunction& q) {
  auto t = swap_levels(naive_smash(a, b, q), naive_smash(b, a, q.complement()));
  auto report = t.validate();
  if (!report.ok()) throw VerificationFailure("twist does not commute: " + report.summary());
  return t;
}

TwistReport twist_check(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                        const PartitionFunction& q) {
  auto ab = naive_smash(a, b, q);
  auto ba = naive_smash(b, a, q.complement());
  auto t = swap_levels(ab, ba);
  auto back = swap_levels(ba, ab);
  TwistReport r;
  r.valid = t.validate().ok();
  r.inverse_valid = back.validate().ok();
  r.two_sided = compose(back, t) == identity_map(ab.result) &&
                compose(t, back) == identity_map(ba.result);
  r.homology_iso = stable_homology_map(t).iso;
  return r;
}

SpectrumMap iso_to_sphere(const TruncatedSpectrum& x, const std::optional<SimplicialMap>& phi0) {
  SimplicialMap start;
  if (phi0) {
    start = *phi0;
  } else {
    for (auto& c : enumerate_pointed_maps(sphere0(), x.level(0), 1000))
      if (is_isomorphism(c)) {
        start = c;
        break;
      }
  }
  if (!start.source() || !is_isomorphism(start) || !same_set(start.source(), sphere0()) ||
      !same_set(start.target(), x.level(0)))
    throw InvalidInput("iso_to_sphere: level 0 is not isomorphic to S^0");
  for (int n = 0; n < x.truncation(); ++n)
    if (!is_isomorphism(x.structure_map(n)))
      throw InvalidInput("iso_to_sphere: structure map " + std::to_string(n) +
                         " is not an isomorphism");
  auto phi = extend_map(sphere_spectrum(), x, 0, start);
  auto report = phi.validate();
  if (!report.ok()) throw VerificationFailure("iso_to_sphere: " + report.summary());
  if (!is_levelwise_iso(phi)) throw VerificationFailure("iso_to_sphere: not a levelwise iso");
  return phi;
}

ChainComplex stable_chains(const TruncatedSpectrum& a) {
  const int n = a.truncation();
  return reduced_chain_complex(*a.level(n)).shifted(-n);
}

HomologyComparison kunneth_compare(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                                   const PartitionFunction& q) {
  HomologyComparison r;
  r.left = stable_homology(naive_smash(a, b, q).result);
  r.right = homology(tensor(stable_chains(a), stable_chains(b)));
  r.equal = r.left == r.right;
  return r;
}

HomologyComparison commute_check(const TruncatedSpectrum& a, const TruncatedSpectrum& b,
                                 const PartitionFunction& q, const PartitionFunction& q2) {
  HomologyComparison r;
  r.left = stable_homology(naive_smash(a, b, q).result);
  r.right = stable_homology(naive_smash(b, a, q2).result);
  r.equal = r.left == r.right;
  return r;
}

}  // namespace sspec
