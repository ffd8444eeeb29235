#include "sspec/colimits.hpp"

#include <deque>
#include <numeric>

#include "sspec/errors.hpp"

namespace sspec {

Wedge::Wedge(std::vector<SSetPtr> summands) : summands_(std::move(summands)) {
  if (summands_.empty()) throw InvalidInput("wedge: no summands");
  for (const auto& s : summands_)
    if (!s->pointed()) throw InvalidInput("wedge: summands must be pointed");

  int top = 0;
  for (const auto& s : summands_) top = std::max(top, s->dimension());
  origin_.assign(top + 1, {});
  const int base = *summands_[0]->basepoint();

  // new_ids[i][d][id]
  std::vector<std::vector<std::vector<int>>> new_ids(summands_.size());
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    const auto& s = *summands_[i];
    new_ids[i].resize(s.dimension() + 1);
    for (int d = 0; d <= s.dimension(); ++d) {
      for (int id = 0; id < s.count(d); ++id) {
        if (i > 0 && d == 0 && id == *s.basepoint()) {
          new_ids[i][d].push_back(base);
          continue;
        }
        new_ids[i][d].push_back(static_cast<int>(origin_[d].size()));
        origin_[d].emplace_back(static_cast<int>(i), id);
      }
    }
  }

  auto translate = [&](std::size_t i, const FormalSimplex& f) {
    return FormalSimplex{new_ids[i][f.target_dim()][f.target], f.mask, f.dim};
  };

  FiniteSimplicialSet::FaceTable faces(top + 1);
  for (int d = 0; d <= top; ++d) {
    faces[d].resize(origin_[d].size());
    if (d == 0) continue;
    for (std::size_t nid = 0; nid < origin_[d].size(); ++nid) {
      auto [i, id] = origin_[d][nid];
      for (const auto& f : summands_[i]->faces(d, id)) faces[d][nid].push_back(translate(i, f));
    }
  }
  result_ = make_sset(std::move(faces), base);

  for (std::size_t i = 0; i < summands_.size(); ++i) {
    inclusions_.push_back(build_map(summands_[i], result_, [&](int d, int id) {
      return FormalSimplex::nondegenerate(d, new_ids[i][d][id]);
    }));
  }
}

std::pair<int, FormalSimplex> Wedge::locate(const FormalSimplex& u) const {
  auto [i, id] = origin_[u.target_dim()][u.target];
  return {i, FormalSimplex{id, u.mask, u.dim}};
}

SSetPtr wedge(const SSetPtr& x, const SSetPtr& y) { return Wedge({x, y}).result(); }

SimplicialMap wedge_induced(const Wedge& w, std::span<const SimplicialMap> maps) {
  if (maps.size() != w.summands().size()) throw InvalidInput("wedge_induced: one map per summand");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!same_set(maps[i].source(), w.summands()[i]) ||
        !same_set(maps[i].target(), maps[0].target()))
      throw InvalidInput("wedge_induced: maps do not match the summands");
  }
  return build_map(w.result(), maps[0].target(), [&](int d, int id) {
    auto [i, s] = w.locate(FormalSimplex::nondegenerate(d, id));
    return maps[i](s);
  });
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // The smaller index becomes the root, so a root is the least member.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

Quotient::Quotient(SSetPtr b, std::span<const std::pair<FormalSimplex, FormalSimplex>> relations)
    : source_(std::move(b)) {
  const auto& x = *source_;
  const int top = x.dimension();
  if (top < 0) {
    result_ = source_;
    projection_ = identity_map(source_);
    return;
  }
  SimplexIndex index(x, top);
  UnionFind uf(index.size());

  auto lookup = [&](const FormalSimplex& s) {
    int g = index.find(s);
    if (g < 0) throw InvalidInput("quotient: relation refers to a simplex outside the set");
    return g;
  };

  std::deque<std::pair<int, int>> pending;
  for (const auto& [u, v] : relations) {
    if (u.dim != v.dim) throw InvalidInput("quotient: identified simplices differ in dimension");
    pending.emplace_back(lookup(u), lookup(v));
  }
  while (!pending.empty()) {
    auto [u, v] = pending.front();
    pending.pop_front();
    if (!uf.unite(u, v)) continue;
    const FormalSimplex su = index.at(u);
    const FormalSimplex sv = index.at(v);
    const int m = su.dim;
    for (int i = 0; m > 0 && i <= m; ++i)
      pending.emplace_back(index.find(x.face(su, i)), index.find(x.face(sv, i)));
    if (m + 1 <= top)
      for (int j = 0; j <= m; ++j)
        pending.emplace_back(index.find(x.degeneracy(su, j)), index.find(x.degeneracy(sv, j)));
  }

  // Classify classes dimension by dimension.
  std::vector<FormalSimplex> normal(index.size());
  std::vector<int> degenerate_member(index.size(), -1);
  FiniteSimplicialSet::FaceTable faces(top + 1);
  representative_.assign(top + 1, {});
  for (int m = 0; m <= top; ++m) {
    const int lo = index.offset(m), hi = lo + index.count(m);
    for (int g = lo; g < hi; ++g) {
      int r = uf.find(g);
      if (index.at(g).degenerate() && degenerate_member[r] < 0) degenerate_member[r] = g;
    }
    for (int g = lo; g < hi; ++g) {
      if (uf.find(g) != g) continue;
      if (degenerate_member[g] < 0) {
        int id = static_cast<int>(representative_[m].size());
        representative_[m].push_back(index.at(g).target);
        normal[g] = FormalSimplex::nondegenerate(m, id);
      } else {
        const FormalSimplex& s = index.at(degenerate_member[g]);
        FormalSimplex base = FormalSimplex::nondegenerate(s.target_dim(), s.target);
        const FormalSimplex& inner = normal[uf.find(index.find(base))];
        normal[g] = degenerate(inner, s.mask, m);
      }
    }
    faces[m].resize(representative_[m].size());
    if (m == 0) continue;
    for (std::size_t id = 0; id < representative_[m].size(); ++id) {
      FormalSimplex rep = FormalSimplex::nondegenerate(m, representative_[m][id]);
      for (int i = 0; i <= m; ++i)
        faces[m][id].push_back(normal[uf.find(index.find(x.face(rep, i)))]);
    }
  }

  std::optional<int> base;
  if (x.pointed()) base = normal[uf.find(index.offset(0) + *x.basepoint())].target;
  result_ = make_sset(std::move(faces), base);
  projection_ = build_map(source_, result_, [&](int d, int id) {
    return normal[uf.find(index.offset(d) + id)];
  });
}

FormalSimplex Quotient::lift(const FormalSimplex& u) const {
  return FormalSimplex{representative_[u.target_dim()][u.target], u.mask, u.dim};
}

Quotient coequalizer(const SimplicialMap& f, const SimplicialMap& g) {
  if (!same_set(f.source(), g.source()) || !same_set(f.target(), g.target()))
    throw InvalidInput("coequalizer: maps must share source and target");
  std::vector<std::pair<FormalSimplex, FormalSimplex>> rel;
  const auto& a = *f.source();
  for (int d = 0; d <= a.dimension(); ++d)
    for (int id = 0; id < a.count(d); ++id) rel.emplace_back(f.image(d, id), g.image(d, id));
  return Quotient(f.target(), rel);
}

SimplicialMap factor_through(const Quotient& q, const SimplicialMap& h) {
  if (!same_set(h.source(), q.source())) throw InvalidInput("factor_through: wrong source");
  SimplicialMap out = build_map(q.result(), h.target(), [&](int d, int id) {
    return h(q.lift(FormalSimplex::nondegenerate(d, id)));
  });
  const auto& b = *q.source();
  for (int d = 0; d <= b.dimension(); ++d)
    for (int id = 0; id < b.count(d); ++id)
      if (out(q.projection().image(d, id)) != h.image(d, id))
        throw VerificationFailure("factor_through: map is not constant on identified simplices");
  return out;
}

Pushout pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!same_set(f.source(), g.source())) throw InvalidInput("pushout: maps must share a source");
  Wedge w({f.target(), g.target()});
  std::vector<std::pair<FormalSimplex, FormalSimplex>> rel;
  const auto& a = *f.source();
  for (int d = 0; d <= a.dimension(); ++d)
    for (int id = 0; id < a.count(d); ++id)
      rel.emplace_back(w.inclusion(0)(f.image(d, id)), w.inclusion(1)(g.image(d, id)));
  Quotient q(w.result(), rel);
  SimplicialMap first = compose(q.projection(), w.inclusion(0));
  SimplicialMap second = compose(q.projection(), w.inclusion(1));
  return Pushout{std::move(w), std::move(q), std::move(first), std::move(second)};
}

namespace {

class MapSearch {
 public:
  MapSearch(const SSetPtr& k, const SSetPtr& l, std::uint64_t budget, const ForcedImages* forced)
      : k_(k), l_(l), index_(*l, std::max(0, k->dimension())), budget_(budget), forced_(forced) {
    for (int d = 0; d <= k->dimension(); ++d)
      for (int id = 0; id < k->count(d); ++id) order_.emplace_back(d, id);
    images_.resize(k->face_table().size());
    for (int d = 0; d <= k->dimension(); ++d) images_[d].resize(k->count(d));
  }

  std::vector<SimplicialMap> run() {
    search(0);
    return std::move(found_);
  }
  std::uint64_t tried() const { return tried_; }

 private:
  FormalSimplex image_of(const FormalSimplex& s) const {
    const FormalSimplex& y = images_[s.target_dim()][s.target];
    return s.mask == 0 ? y : degenerate(y, s.mask, s.dim);
  }

  bool fits(int d, int id, const FormalSimplex& cand) {
    if (++tried_ > budget_)
      throw BudgetExceeded("enumerate_pointed_maps: candidate budget of " +
                           std::to_string(budget_) + " exceeded");
    if (d == 0) return true;
    auto faces = k_->faces(d, id);
    for (int i = 0; i <= d; ++i)
      if (l_->face(cand, i) != image_of(faces[i])) return false;
    return true;
  }

  void search(std::size_t pos) {
    if (pos == order_.size()) {
      found_.emplace_back(k_, l_, images_);
      return;
    }
    auto [d, id] = order_[pos];
    if (d == 0 && id == *k_->basepoint()) {
      images_[d][id] = l_->base_simplex(0);
      search(pos + 1);
      return;
    }
    if (forced_ && d < static_cast<int>(forced_->size()) &&
        id < static_cast<int>((*forced_)[d].size()) && (*forced_)[d][id]) {
      const FormalSimplex& cand = *(*forced_)[d][id];
      if (cand.dim == d && l_->contains(cand) && fits(d, id, cand)) {
        images_[d][id] = cand;
        search(pos + 1);
      }
      return;
    }
    if (d > index_.max_dim()) return;
    for (const FormalSimplex& cand : index_.in_dim(d)) {
      if (!fits(d, id, cand)) continue;
      images_[d][id] = cand;
      search(pos + 1);
    }
  }

  SSetPtr k_;
  SSetPtr l_;
  SimplexIndex index_;
  std::uint64_t budget_;
  std::uint64_t tried_ = 0;
  const ForcedImages* forced_;
  std::vector<std::pair<int, int>> order_;
  SimplicialMap::ImageTable images_;
  std::vector<SimplicialMap> found_;
};

}  // namespace

std::vector<SimplicialMap> enumerate_pointed_maps(const SSetPtr& k, const SSetPtr& l,
                                                  std::uint64_t budget,
                                                  const ForcedImages* forced,
                                                  std::uint64_t* tried) {
  if (!k->pointed() || !l->pointed())
    throw InvalidInput("enumerate_pointed_maps: both sets must be pointed");
  MapSearch search(k, l, budget, forced);
  auto out = search.run();
  if (tried) *tried += search.tried();
  return out;
}

}  // namespace sspec
