#include "sspec/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "snf_detail.hpp"
#include "sspec/errors.hpp"

namespace sspec {

namespace {
const SparseMatrix& empty_matrix() {
  static const SparseMatrix m(0, 0);
  return m;
}
}  // namespace

ChainComplex::ChainComplex(int lo, std::vector<int> ranks, std::vector<SparseMatrix> boundaries)
    : lo_(lo), ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != ranks_.size())
    throw InvalidInput("chain complex: one differential per degree expected");
  for (std::size_t k = 0; k < ranks_.size(); ++k) {
    int rows = k == 0 ? 0 : ranks_[k - 1];
    if (ranks_[k] < 0 || boundaries_[k].cols() != ranks_[k] || boundaries_[k].rows() != rows)
      throw InvalidInput("chain complex: differential out of degree " +
                         std::to_string(lo_ + int(k)) + " has the wrong shape");
  }
  boundaries_.emplace_back(ranks_.empty() ? 0 : ranks_.back(), 0);
  for (std::size_t k = 1; k < ranks_.size(); ++k)
    if (!(boundaries_[k - 1] * boundaries_[k]).is_zero())
      throw InvalidInput("chain complex: d^2 != 0 at degree " + std::to_string(lo_ + int(k)));
}

const SparseMatrix& ChainComplex::boundary(int d) const {
  if (d < lo_ || d - lo_ >= static_cast<int>(boundaries_.size())) return empty_matrix();
  return boundaries_[d - lo_];
}

ChainComplex ChainComplex::shifted(int s) const {
  ChainComplex c = *this;
  c.lo_ += s;
  return c;
}

std::size_t ChainComplex::total_rank() const {
  std::size_t n = 0;
  for (int r : ranks_) n += r;
  return n;
}

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, std::vector<SparseMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  const int lo = source_->lo();
  if (static_cast<int>(components_.size()) != source_->hi() - lo + 1)
    throw InvalidInput("chain map: one component per source degree expected");
  for (int d = lo; d <= source_->hi(); ++d) {
    const auto& f = components_[d - lo];
    if (f.rows() != target_->rank(d) || f.cols() != source_->rank(d))
      throw InvalidInput("chain map: component in degree " + std::to_string(d) +
                         " has the wrong shape");
  }
  for (int d = lo; d <= source_->hi(); ++d) {
    SparseMatrix left = target_->boundary(d) * components_[d - lo];
    SparseMatrix right = component(d - 1) * source_->boundary(d);
    if (left != right)
      throw InvalidInput("chain map: does not commute with differentials in degree " +
                         std::to_string(d));
  }
}

SparseMatrix ChainMap::component(int d) const {
  if (d < source_->lo() || d > source_->hi())
    return SparseMatrix(target_->rank(d), source_->rank(d));
  return components_[d - source_->lo()];
}

ChainMap ChainMap::shifted(int s) const {
  ChainMap f;
  f.source_ = std::make_shared<const ChainComplex>(source_->shifted(s));
  f.target_ = std::make_shared<const ChainComplex>(target_->shifted(s));
  f.components_ = components_;
  return f;
}

std::string HomologyGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

std::string to_string(const GradedHomology& h) {
  if (h.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, g] : h) {
    if (!first) out << ", ";
    out << "H" << d << "=" << g.to_string();
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Presentation

struct HomologyPresentation::Degree {
  HomologyGroup group;
  std::vector<Int> orders;
  IntMatrix coord;  // generators x residual cells
  std::vector<SparseVector> generators;
};

namespace {

// Sparse differential with both column and row access, used during unit
// pivot elimination.
struct WorkDifferential {
  std::vector<std::map<int, Int>> cols;
  std::vector<std::set<int>> rows;
};

}  // namespace

HomologyPresentation::HomologyPresentation(const ChainComplex& c, bool with_generators)
    : with_generators_(with_generators), lo_(c.lo()) {
  const int lo = c.lo(), hi = c.hi();
  const int span = hi - lo + 1;
  if (span <= 0) return;

  // work[k] is the differential out of degree lo + k.
  std::vector<WorkDifferential> work(span + 1);
  std::vector<std::vector<char>> alive(span);
  std::vector<std::vector<std::map<int, Int>>> iota(span);
  for (int k = 0; k <= span; ++k) {
    const int d = lo + k;
    const auto& m = c.boundary(d);
    work[k].cols.resize(c.rank(d));
    work[k].rows.resize(c.rank(d - 1));
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [i, x] : m.column(j)) {
        work[k].cols[j].emplace(i, x);
        work[k].rows[i].insert(j);
      }
  }
  for (int k = 0; k < span; ++k) {
    alive[k].assign(c.rank(lo + k), 1);
    if (with_generators_) {
      iota[k].resize(c.rank(lo + k));
      for (int x = 0; x < c.rank(lo + k); ++x) iota[k][x].emplace(x, 1);
    }
  }

  auto eliminate = [&](int k, int a, int b) {
    auto& w = work[k];
    const Int cab = w.cols[a].at(b);
    std::map<int, Int> col_a = w.cols[a];
    Step step{lo + k, a, b, cab, {}};
    for (const auto& [r, x] : col_a)
      if (r != b) step.gamma.emplace_back(r, x);
    std::vector<int> touched(w.rows[b].begin(), w.rows[b].end());
    for (int x : touched) {
      if (x == a) continue;
      const Int factor = w.cols[x].at(b) * cab;  // cab = +-1 is its own inverse
      auto& col = w.cols[x];
      for (const auto& [r, v] : col_a) {
        Int& slot = col[r];
        slot -= factor * v;
        if (slot == 0) {
          col.erase(r);
          w.rows[r].erase(x);
        } else {
          w.rows[r].insert(x);
        }
      }
      if (with_generators_)
        for (const auto& [r, v] : iota[k][a]) {
          Int& slot = iota[k][x][r];
          slot -= factor * v;
          if (slot == 0) iota[k][x].erase(r);
        }
    }
    for (const auto& [r, v] : col_a) w.rows[r].erase(a);
    w.cols[a].clear();
    w.rows[b].clear();
    alive[k][a] = 0;
    // row a of the differential above, column b of the one below
    for (int y : work[k + 1].rows[a]) work[k + 1].cols[y].erase(a);
    work[k + 1].rows[a].clear();
    if (k >= 1) {
      for (const auto& [r, v] : work[k - 1].cols[b]) work[k - 1].rows[r].erase(b);
      work[k - 1].cols[b].clear();
      alive[k - 1][b] = 0;
      if (with_generators_) iota[k - 1][b].clear();
    }
    if (with_generators_) iota[k][a].clear();
    steps_.push_back(std::move(step));
  };

  for (int k = 1; k < span; ++k) {
    auto& w = work[k];
    bool progress = true;
    while (progress) {
      progress = false;
      for (int a = 0; a < static_cast<int>(w.cols.size()); ++a) {
        if (!alive[k][a] || w.cols[a].empty()) continue;
        int best = -1;
        std::size_t best_fill = 0;
        for (const auto& [r, v] : w.cols[a]) {
          if (v != 1 && v != -1) continue;
          if (best < 0 || w.rows[r].size() < best_fill) {
            best = r;
            best_fill = w.rows[r].size();
          }
        }
        if (best < 0) continue;
        eliminate(k, a, best);
        progress = true;
      }
    }
  }

  residual_ids_.resize(span);
  residual_of_.resize(span);
  for (int k = 0; k < span; ++k) {
    residual_of_[k].assign(alive[k].size(), -1);
    for (int x = 0; x < static_cast<int>(alive[k].size()); ++x)
      if (alive[k][x]) {
        residual_of_[k][x] = static_cast<int>(residual_ids_[k].size());
        residual_ids_[k].push_back(x);
      }
  }
  auto residual_matrix = [&](int k) {  // differential out of degree lo + k
    const int cols = k < span ? static_cast<int>(residual_ids_[k].size()) : 0;
    const int rows = k >= 1 ? static_cast<int>(residual_ids_[k - 1].size()) : 0;
    IntMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (const auto& [r, v] : work[k].cols[residual_ids_[k][j]]) m(residual_of_[k - 1][r], j) = v;
    return m;
  };

  degrees_.resize(span);
  if (!with_generators_) {
    std::vector<int> rank_out(span + 1, 0);
    std::vector<std::vector<Int>> diag(span + 1);
    for (int k = 1; k < span; ++k) {
      auto full = detail::full_snf(residual_matrix(k), 0);
      rank_out[k] = full.rank;
      for (int i = 0; i < full.rank; ++i) diag[k].push_back(full.d(i, i));
    }
    for (int k = 0; k < span; ++k) {
      auto deg = std::make_shared<Degree>();
      const int n = static_cast<int>(residual_ids_[k].size());
      deg->group.rank = n - rank_out[k] - rank_out[k + 1];
      for (const Int& e : diag[k + 1])
        if (e > 1) deg->group.torsion.push_back(e);
      degrees_[k] = std::move(deg);
    }
    return;
  }

  for (int k = 0; k < span; ++k) {
    auto deg = std::make_shared<Degree>();
    const int n = static_cast<int>(residual_ids_[k].size());
    auto out = detail::full_snf(residual_matrix(k), detail::want_v | detail::want_vinv);
    const int r = out.rank;
    const int kdim = n - r;
    // boundaries expressed in kernel coordinates
    IntMatrix up = residual_matrix(k + 1);
    IntMatrix kb(kdim, up.cols());
    for (int i = 0; i < kdim; ++i)
      for (int j = 0; j < up.cols(); ++j) {
        Int s = 0;
        for (int t = 0; t < n; ++t)
          if (out.vinv(r + i, t) != 0 && up(t, j) != 0) s += out.vinv(r + i, t) * up(t, j);
        kb(i, j) = s;
      }
    auto pres = detail::full_snf(kb, detail::want_u | detail::want_uinv);
    std::vector<int> kept;
    for (int i = 0; i < kdim; ++i) {
      Int e = i < std::min(kb.rows(), kb.cols()) ? pres.d(i, i) : Int(0);
      if (e == 1) continue;
      kept.push_back(i);
      deg->orders.push_back(e);
      if (e == 0)
        ++deg->group.rank;
      else
        deg->group.torsion.push_back(e);
    }
    // coord = P[kept, :] * Vinv[r.., :]
    deg->coord = IntMatrix(static_cast<int>(kept.size()), n);
    for (std::size_t g = 0; g < kept.size(); ++g)
      for (int t = 0; t < n; ++t) {
        Int s = 0;
        for (int i = 0; i < kdim; ++i)
          if (pres.u(kept[g], i) != 0) s += pres.u(kept[g], i) * out.vinv(r + i, t);
        deg->coord(static_cast<int>(g), t) = s;
      }
    // generator g = V[:, r..] * Pinv[:, kept[g]], pushed through iota
    for (int g : kept) {
      std::map<int, Int> cycle;
      for (int t = 0; t < n; ++t) {
        Int z = 0;
        for (int i = 0; i < kdim; ++i)
          if (out.v(t, r + i) != 0) z += out.v(t, r + i) * pres.uinv(i, g);
        if (z == 0) continue;
        for (const auto& [orig, v] : iota[k][residual_ids_[k][t]]) cycle[orig] += z * v;
      }
      SparseVector sv;
      for (auto& [i, v] : cycle)
        if (v != 0) sv.emplace_back(i, std::move(v));
      deg->generators.push_back(std::move(sv));
    }
    degrees_[k] = std::move(deg);
  }
}

const HomologyPresentation::Degree* HomologyPresentation::find(int d) const {
  int k = d - lo_;
  if (k < 0 || k >= static_cast<int>(degrees_.size())) return nullptr;
  return degrees_[k].get();
}

GradedHomology HomologyPresentation::groups() const {
  GradedHomology h;
  for (std::size_t k = 0; k < degrees_.size(); ++k)
    if (!degrees_[k]->group.trivial()) h.emplace(lo_ + int(k), degrees_[k]->group);
  return h;
}

HomologyGroup HomologyPresentation::group(int d) const {
  const Degree* deg = find(d);
  return deg ? deg->group : HomologyGroup{};
}

const std::vector<Int>& HomologyPresentation::orders(int d) const {
  static const std::vector<Int> none;
  const Degree* deg = find(d);
  return deg ? deg->orders : none;
}

const std::vector<SparseVector>& HomologyPresentation::generators(int d) const {
  static const std::vector<SparseVector> none;
  if (!with_generators_) throw InvalidInput("homology presentation built without generators");
  const Degree* deg = find(d);
  return deg ? deg->generators : none;
}

std::vector<Int> HomologyPresentation::coordinates(int d, const SparseVector& cycle) const {
  if (!with_generators_) throw InvalidInput("homology presentation built without generators");
  const Degree* deg = find(d);
  if (!deg) return {};
  // project onto the residual complex by replaying the eliminations
  std::map<int, Int> v;
  for (const auto& [i, x] : cycle) v[i] += x;
  for (const auto& s : steps_) {
    if (s.d == d) {
      v.erase(s.a);
    } else if (s.d == d + 1) {
      auto it = v.find(s.b);
      if (it == v.end()) continue;
      Int beta = it->second;
      v.erase(it);
      for (const auto& [r, g] : s.gamma) v[r] -= beta * s.c * g;
    }
  }
  const auto& of = residual_of_[d - lo_];
  std::vector<Int> y(deg->orders.size());
  for (const auto& [i, x] : v) {
    if (x == 0) continue;
    int t = of[i];
    if (t < 0) throw VerificationFailure("homology coordinates: projection left an eliminated cell");
    for (std::size_t g = 0; g < y.size(); ++g) y[g] += deg->coord(int(g), t) * x;
  }
  for (std::size_t g = 0; g < y.size(); ++g)
    if (deg->orders[g] != 0) {
      y[g] %= deg->orders[g];
      if (y[g] < 0) y[g] += deg->orders[g];
    }
  return y;
}

GradedHomology homology(const ChainComplex& c) {
  return HomologyPresentation(c, false).groups();
}

HomologyMap induced_homology_map(const ChainMap& f) {
  HomologyPresentation src(*f.source()), tgt(*f.target());
  HomologyMap out;
  const int lo = std::min(f.source()->lo(), f.target()->lo());
  const int hi = std::max(f.source()->hi(), f.target()->hi());
  for (int d = lo; d <= hi; ++d) {
    const auto& gens = src.generators(d);
    const auto& tord = tgt.orders(d);
    if (gens.empty() && tord.empty()) continue;
    IntMatrix m(static_cast<int>(tord.size()), static_cast<int>(gens.size()));
    SparseMatrix fd = f.component(d);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto y = tgt.coordinates(d, fd.apply(gens[j]));
      for (std::size_t i = 0; i < y.size(); ++i) m(int(i), int(j)) = y[i];
    }
    out.matrices.emplace(d, std::move(m));
    out.source_orders.emplace(d, src.orders(d));
    out.target_orders.emplace(d, tord);
  }
  return out;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& c = *f.source();
  const ChainComplex& dd = *f.target();
  if (c.total_rank() == 0 && dd.total_rank() == 0) return ChainComplex();
  const int lo = std::min(c.lo() + 1, dd.lo());
  const int hi = std::max(c.hi() + 1, dd.hi());
  std::vector<int> ranks;
  std::vector<SparseMatrix> bd;
  for (int n = lo; n <= hi; ++n) {
    const int cn = c.rank(n - 1), dn = dd.rank(n);
    ranks.push_back(cn + dn);
    const int rows = n == lo ? 0 : c.rank(n - 2) + dd.rank(n - 1);
    SparseMatrix m(rows, cn + dn);
    if (n > lo) {
      const SparseMatrix& dc = c.boundary(n - 1);
      SparseMatrix fc = f.component(n - 1);
      const int off = c.rank(n - 2);
      for (int j = 0; j < cn; ++j) {
        SparseVector col;
        for (const auto& [r, x] : dc.column(j)) col.emplace_back(r, -x);
        for (const auto& [r, x] : fc.column(j)) col.emplace_back(off + r, x);
        m.set_column(j, std::move(col));
      }
      const SparseMatrix& dx = dd.boundary(n);
      for (int j = 0; j < dn; ++j) {
        SparseVector col;
        for (const auto& [r, x] : dx.column(j)) col.emplace_back(off + r, x);
        m.set_column(cn + j, std::move(col));
      }
    }
    bd.push_back(std::move(m));
  }
  return ChainComplex(lo, std::move(ranks), std::move(bd));
}

bool is_homology_iso(const ChainMap& f) { return homology(mapping_cone(f)).empty(); }

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d) {
  if (c.total_rank() == 0 || d.total_rank() == 0) return ChainComplex();
  const int lo = c.lo() + d.lo(), hi = c.hi() + d.hi();
  // offset of block C_i (x) D_{n-i} inside degree n
  auto offset = [&](int n, int i) {
    int off = 0;
    for (int t = c.lo(); t < i; ++t) off += c.rank(t) * d.rank(n - t);
    return off;
  };
  std::vector<int> ranks;
  std::vector<SparseMatrix> bd;
  for (int n = lo; n <= hi; ++n) {
    int total = 0;
    for (int i = c.lo(); i <= c.hi(); ++i) total += c.rank(i) * d.rank(n - i);
    ranks.push_back(total);
    const int rows = n == lo ? 0 : ranks[ranks.size() - 2];
    SparseMatrix m(rows, total);
    if (n > lo) {
      for (int i = c.lo(); i <= c.hi(); ++i) {
        const int j = n - i;
        const int rd = d.rank(j);
        if (c.rank(i) == 0 || rd == 0) continue;
        const int base = offset(n, i);
        const int below_i = offset(n - 1, i - 1), below_j = offset(n - 1, i);
        const SparseMatrix& dc = c.boundary(i);
        const SparseMatrix& ddj = d.boundary(j);
        const bool odd = ((i % 2) + 2) % 2 == 1;
        for (int a = 0; a < c.rank(i); ++a)
          for (int b = 0; b < rd; ++b) {
            SparseVector col;
            for (const auto& [r, x] : dc.column(a)) col.emplace_back(below_i + r * rd + b, x);
            for (const auto& [r, x] : ddj.column(b))
              col.emplace_back(below_j + a * d.rank(j - 1) + r, odd ? Int(-x) : x);
            m.set_column(base + a * rd + b, std::move(col));
          }
      }
    }
    bd.push_back(std::move(m));
  }
  return ChainComplex(lo, std::move(ranks), std::move(bd));
}

int reduced_index(const FiniteSimplicialSet& x, int dim, int id) {
  if (dim != 0) return id;
  const int base = *x.basepoint();
  if (id == base) return -1;
  return id < base ? id : id - 1;
}

namespace {

SparseVector reduced_boundary_column(const FiniteSimplicialSet& x, int d, int id) {
  SparseVector col;
  auto faces = x.faces(d, id);
  for (int i = 0; i <= d; ++i) {
    const auto& f = faces[i];
    if (f.degenerate()) continue;
    int r = reduced_index(x, d - 1, f.target);
    if (r < 0) continue;
    col.emplace_back(r, i % 2 ? -1 : 1);
  }
  return col;
}

ChainComplex build_reduced(const FiniteSimplicialSet& x, Execution exec) {
  if (!x.pointed()) throw InvalidInput("reduced chain complex: set is not pointed");
  std::vector<int> ranks;
  std::vector<SparseMatrix> bd;
  for (int d = 0; d <= x.dimension(); ++d) {
    const int n = d == 0 ? x.count(0) - 1 : x.count(d);
    ranks.push_back(n);
    SparseMatrix m(d == 0 ? 0 : ranks[d - 1], n);
    if (d > 0)
      for_each_index(n, exec, [&](std::ptrdiff_t id) {
        m.set_column(int(id), reduced_boundary_column(x, d, int(id)));
      });
    bd.push_back(std::move(m));
  }
  return ChainComplex(0, std::move(ranks), std::move(bd));
}

}  // namespace

ChainComplex reduced_chain_complex(const FiniteSimplicialSet& x, Execution exec) {
  return build_reduced(x, exec);
}

ChainComplex reduced_chain_complex_serial_reference(const FiniteSimplicialSet& x) {
  if (!x.pointed()) throw InvalidInput("reduced chain complex: set is not pointed");
  std::vector<int> ranks;
  std::vector<SparseMatrix> bd;
  for (int d = 0; d <= x.dimension(); ++d) {
    const int n = d == 0 ? x.count(0) - 1 : x.count(d);
    ranks.push_back(n);
    IntMatrix dense(d == 0 ? 0 : ranks[d - 1], n);
    for (int id = 0; d > 0 && id < n; ++id) {
      auto faces = x.faces(d, id);
      for (int i = 0; i <= d; ++i) {
        if (faces[i].degenerate()) continue;
        int r = reduced_index(x, d - 1, faces[i].target);
        if (r >= 0) dense(r, id) += i % 2 ? -1 : 1;
      }
    }
    bd.push_back(SparseMatrix::from_dense(dense));
  }
  return ChainComplex(0, std::move(ranks), std::move(bd));
}

ChainMap chain_map(const SimplicialMap& f, ComplexPtr source, ComplexPtr target) {
  const auto& x = *f.source();
  const auto& y = *f.target();
  if (!x.pointed() || !y.pointed()) throw InvalidInput("chain_map: map is not pointed");
  std::vector<SparseMatrix> comps;
  for (int d = source->lo(); d <= source->hi(); ++d) {
    SparseMatrix m(target->rank(d), source->rank(d));
    for (int id = 0; id < x.count(d); ++id) {
      int col = reduced_index(x, d, id);
      if (col < 0) continue;
      const FormalSimplex& img = f.image(d, id);
      if (img.degenerate()) continue;
      int row = reduced_index(y, d, img.target);
      if (row < 0) continue;
      m.set_column(col, {{row, Int(1)}});
    }
    comps.push_back(std::move(m));
  }
  return ChainMap(std::move(source), std::move(target), std::move(comps));
}

ChainMap chain_map(const SimplicialMap& f) {
  return chain_map(f, std::make_shared<const ChainComplex>(reduced_chain_complex(*f.source())),
                   std::make_shared<const ChainComplex>(reduced_chain_complex(*f.target())));
}

}  // namespace sspec
