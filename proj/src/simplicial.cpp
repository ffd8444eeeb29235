#include "sspec/simplicial.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "sspec/errors.hpp"

namespace sspec {

namespace {

constexpr int kMaxOperatorLength = 32;

DegeneracyMask mask_from_values(const int* v, int n) {
  DegeneracyMask m = 0;
  for (int i = 0; i < n; ++i)
    if (v[i] == v[i + 1]) m |= DegeneracyMask{1} << i;
  return m;
}

}  // namespace

std::vector<int> FormalSimplex::word() const {
  std::vector<int> w;
  for (int i = dim - 1; i >= 0; --i)
    if ((mask >> i) & 1u) w.push_back(i);
  return w;
}

FormalSimplex FormalSimplex::from_word(int dim, std::span<const int> word, int target) {
  DegeneracyMask m = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    int i = word[k];
    if (i < 0 || i >= dim) throw InvalidInput("degeneracy index out of range");
    if (k > 0 && word[k - 1] <= i)
      throw InvalidInput("degeneracy word is not strictly decreasing");
    m |= DegeneracyMask{1} << i;
  }
  return FormalSimplex{target, m, static_cast<std::int16_t>(dim)};
}

void surjection_values(DegeneracyMask mask, int n, int* out) {
  out[0] = 0;
  for (int i = 1; i <= n; ++i) out[i] = out[i - 1] + (((mask >> (i - 1)) & 1u) ? 0 : 1);
}

FormalSimplex degenerate(const FormalSimplex& s, DegeneracyMask eta_mask, int new_dim) {
  std::array<int, kMaxOperatorLength + 1> eta{};
  std::array<int, kMaxOperatorLength + 1> inner{};
  surjection_values(eta_mask, new_dim, eta.data());
  surjection_values(s.mask, s.dim, inner.data());
  std::array<int, kMaxOperatorLength + 1> v{};
  for (int i = 0; i <= new_dim; ++i) v[i] = inner[eta[i]];
  return FormalSimplex{s.target, mask_from_values(v.data(), new_dim),
                       static_cast<std::int16_t>(new_dim)};
}

DegeneracyMask compress_mask(DegeneracyMask mask, DegeneracyMask common) {
  DegeneracyMask out = 0;
  int shift = 0;
  for (int i = 0; i < 32; ++i) {
    DegeneracyMask bit = DegeneracyMask{1} << i;
    if (common & bit) {
      ++shift;
      continue;
    }
    if (mask & bit) out |= DegeneracyMask{1} << (i - shift);
  }
  return out;
}

FiniteSimplicialSet::FiniteSimplicialSet(FaceTable faces, std::optional<int> basepoint)
    : faces_(std::move(faces)), basepoint_(basepoint) {
  while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
}

int FiniteSimplicialSet::total_count() const {
  int n = 0;
  for (const auto& d : faces_) n += static_cast<int>(d.size());
  return n;
}

std::vector<int> FiniteSimplicialSet::dims() const {
  std::vector<int> out;
  for (const auto& d : faces_) out.push_back(static_cast<int>(d.size()));
  return out;
}

FormalSimplex FiniteSimplicialSet::base_simplex(int dim) const {
  if (!basepoint_) throw InvalidInput("simplicial set is not pointed");
  DegeneracyMask m = dim > 0 ? ((DegeneracyMask{1} << dim) - 1) : 0;
  return FormalSimplex{*basepoint_, m, static_cast<std::int16_t>(dim)};
}

FormalSimplex FiniteSimplicialSet::apply(const FormalSimplex& s,
                                         std::span<const int> theta) const {
  const int n = static_cast<int>(theta.size()) - 1;
  std::array<int, kMaxOperatorLength + 1> eta{};
  std::array<int, kMaxOperatorLength + 1> v{};
  surjection_values(s.mask, s.dim, eta.data());
  for (int i = 0; i <= n; ++i) v[i] = eta[theta[i]];

  int target = s.target;
  int k = s.target_dim();
  for (;;) {
    std::uint64_t covered = 0;
    for (int i = 0; i <= n; ++i) covered |= std::uint64_t{1} << v[i];
    std::uint64_t all = (k + 1 >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (k + 1)) - 1);
    if (covered == all)
      return FormalSimplex{target, mask_from_values(v.data(), n), static_cast<std::int16_t>(n)};
    int t = 63 - std::countl_zero(all & ~covered);
    const FormalSimplex& f = faces_[k][target][t];
    std::array<int, kMaxOperatorLength + 1> fe{};
    surjection_values(f.mask, f.dim, fe.data());
    for (int i = 0; i <= n; ++i) v[i] = fe[v[i] > t ? v[i] - 1 : v[i]];
    target = f.target;
    k = f.target_dim();
  }
}

FormalSimplex FiniteSimplicialSet::face(const FormalSimplex& s, int i) const {
  std::array<int, kMaxOperatorLength> theta{};
  for (int j = 0; j < s.dim; ++j) theta[j] = j < i ? j : j + 1;
  return apply(s, std::span<const int>(theta.data(), s.dim));
}

FormalSimplex FiniteSimplicialSet::degeneracy(const FormalSimplex& s, int j) const {
  std::array<int, kMaxOperatorLength + 2> theta{};
  for (int i = 0; i <= s.dim + 1; ++i) theta[i] = i <= j ? i : i - 1;
  return apply(s, std::span<const int>(theta.data(), s.dim + 2));
}

bool FiniteSimplicialSet::contains(const FormalSimplex& s) const {
  if (s.dim < 0 || s.dim >= kMaxOperatorLength) return false;
  if (s.dim < 32 && (s.mask >> s.dim) != 0) return false;
  int k = s.target_dim();
  return k >= 0 && s.target >= 0 && s.target < count(k);
}

bool same_set(const SSetPtr& a, const SSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s)";
  for (const auto& v : violations) os << "; [" << v.dim << ":" << v.id << "] " << v.what;
  return os.str();
}

namespace {

// Checks one nondegenerate simplex; appends to out.
void check_simplex(const FiniteSimplicialSet& x, int d, int id, std::vector<Violation>& out) {
  auto faces = x.faces(d, id);
  if (d == 0) {
    if (!faces.empty()) out.push_back({d, id, "vertex carries faces"});
    return;
  }
  if (static_cast<int>(faces.size()) != d + 1) {
    out.push_back({d, id, "expected " + std::to_string(d + 1) + " faces"});
    return;
  }
  for (int i = 0; i <= d; ++i) {
    const auto& f = faces[i];
    if (f.dim != d - 1 || !x.contains(f)) {
      out.push_back({d, id, "face d" + std::to_string(i) + " is malformed"});
      return;
    }
  }
  if (d < 2) return;
  for (int j = 1; j <= d; ++j) {
    for (int i = 0; i < j; ++i) {
      FormalSimplex lhs = x.face(faces[j], i);
      FormalSimplex rhs = x.face(faces[i], j - 1);
      if (lhs != rhs) {
        out.push_back({d, id,
                       "d" + std::to_string(i) + " d" + std::to_string(j) + " != d" +
                           std::to_string(j - 1) + " d" + std::to_string(i)});
      }
    }
  }
}

void check_basepoint(const FiniteSimplicialSet& x, std::vector<Violation>& out) {
  if (auto b = x.basepoint(); b && (*b < 0 || *b >= x.count(0)))
    out.push_back({0, *b, "basepoint is not a vertex"});
}

}  // namespace

ValidationReport validate_serial_reference(const FiniteSimplicialSet& x) {
  ValidationReport r;
  for (int d = 0; d <= x.dimension() && r.ok(); ++d)
    for (int id = 0; id < x.count(d); ++id) check_simplex(x, d, id, r.violations);
  check_basepoint(x, r.violations);
  return r;
}

ValidationReport validate(const FiniteSimplicialSet& x, Execution exec) {
  if (exec == Execution::serial) return validate_serial_reference(x);
  ValidationReport r;
  // Faces must be well formed before identities are evaluated through them,
  // so dimensions are checked in increasing order.
  for (int d = 0; d <= x.dimension(); ++d) {
    std::vector<std::vector<Violation>> local(x.count(d));
    for_each_index(x.count(d), exec,
                   [&](std::ptrdiff_t id) { check_simplex(x, d, static_cast<int>(id), local[id]); });
    for (auto& l : local)
      for (auto& v : l) r.violations.push_back(std::move(v));
    if (!r.ok()) break;
  }
  check_basepoint(x, r.violations);
  return r;
}

SimplicialMap::SimplicialMap(SSetPtr source, SSetPtr target, ImageTable images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw InvalidInput("simplicial map needs source and target");
  images_.resize(std::max<std::size_t>(images_.size(), source_->face_table().size()));
  for (int d = 0; d <= source_->dimension(); ++d)
    if (static_cast<int>(images_[d].size()) != source_->count(d))
      throw InvalidInput("simplicial map image table does not match its source");
  images_.resize(source_->face_table().size());
}

FormalSimplex SimplicialMap::operator()(const FormalSimplex& s) const {
  const FormalSimplex& y = images_[s.target_dim()][s.target];
  if (s.mask == 0) return y;
  return degenerate(y, s.mask, s.dim);
}

SimplicialMap build_map(SSetPtr source, SSetPtr target,
                        const std::function<FormalSimplex(int dim, int id)>& fn) {
  SimplicialMap::ImageTable images(source->face_table().size());
  for (int d = 0; d <= source->dimension(); ++d) {
    images[d].reserve(source->count(d));
    for (int id = 0; id < source->count(d); ++id) images[d].push_back(fn(d, id));
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(images));
}

SimplicialMap identity_map(const SSetPtr& x) {
  return build_map(x, x, [](int d, int id) { return FormalSimplex::nondegenerate(d, id); });
}

SimplicialMap constant_map(const SSetPtr& source, const SSetPtr& target) {
  return build_map(source, target, [&](int d, int) { return target->base_simplex(d); });
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!same_set(f.target(), g.source()))
    throw InvalidInput("compose: target of first map is not the source of the second");
  return build_map(f.source(), g.target(),
                   [&](int d, int id) { return g(f.image(d, id)); });
}

ValidationReport validate(const SimplicialMap& f) {
  ValidationReport r;
  const auto& x = *f.source();
  const auto& y = *f.target();
  for (int d = 0; d <= x.dimension(); ++d) {
    for (int id = 0; id < x.count(d); ++id) {
      const FormalSimplex& img = f.image(d, id);
      if (img.dim != d || !y.contains(img)) {
        r.violations.push_back({d, id, "image has wrong dimension or unknown target"});
        continue;
      }
      if (d == 0) continue;
      auto faces = x.faces(d, id);
      for (int i = 0; i <= d; ++i) {
        if (f(faces[i]) != y.face(img, i))
          r.violations.push_back({d, id, "map does not commute with d" + std::to_string(i)});
      }
    }
  }
  if (x.pointed() && y.pointed() && f.image(0, *x.basepoint()) != y.base_simplex(0))
    r.violations.push_back({0, *x.basepoint(), "basepoint not preserved"});
  return r;
}

bool is_injective(const SimplicialMap& f) {
  const auto& x = *f.source();
  for (int d = 0; d <= x.dimension(); ++d) {
    std::vector<char> hit(f.target()->count(d), 0);
    for (int id = 0; id < x.count(d); ++id) {
      const FormalSimplex& img = f.image(d, id);
      if (img.degenerate() || hit[img.target]) return false;
      hit[img.target] = 1;
    }
  }
  return true;
}

bool is_isomorphism(const SimplicialMap& f) {
  if (!is_injective(f)) return false;
  return f.source()->dims() == f.target()->dims();
}

SimplicialMap inverse(const SimplicialMap& f) {
  if (!is_isomorphism(f)) throw InvalidInput("inverse: map is not an isomorphism");
  const auto& y = *f.target();
  SimplicialMap::ImageTable images(y.face_table().size());
  for (int d = 0; d <= y.dimension(); ++d) images[d].resize(y.count(d));
  for (int d = 0; d <= f.source()->dimension(); ++d)
    for (int id = 0; id < f.source()->count(d); ++id)
      images[d][f.image(d, id).target] = FormalSimplex::nondegenerate(d, id);
  return SimplicialMap(f.target(), f.source(), std::move(images));
}

SimplexIndex::SimplexIndex(const FiniteSimplicialSet& x, int max_dim) {
  offsets_.push_back(0);
  for (int m = 0; m <= max_dim; ++m) {
    // Nondegenerate simplices first, then degeneracies by target dimension.
    for (int id = 0; id < x.count(m); ++id) all_.push_back(FormalSimplex::nondegenerate(m, id));
    for (int k = m - 1; k >= 0; --k) {
      if (x.count(k) == 0) continue;
      int r = m - k;
      for (DegeneracyMask mask = 0; mask < (DegeneracyMask{1} << m); ++mask) {
        if (std::popcount(mask) != r) continue;
        for (int id = 0; id < x.count(k); ++id)
          all_.push_back(FormalSimplex{id, mask, static_cast<std::int16_t>(m)});
      }
    }
    offsets_.push_back(static_cast<int>(all_.size()));
  }
  lookup_.reserve(all_.size());
  for (int i = 0; i < static_cast<int>(all_.size()); ++i) lookup_.emplace(all_[i], i);
}

int SimplexIndex::find(const FormalSimplex& s) const {
  auto it = lookup_.find(s);
  return it == lookup_.end() ? -1 : it->second;
}

}  // namespace sspec
