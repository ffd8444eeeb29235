#include "sspec/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "sspec/errors.hpp"
#include "sspec/limits.hpp"

namespace sspec {

SSetPtr standard_simplex(int n) {
  if (n < 0) throw InvalidInput("standard_simplex: negative dimension");
  require_dimension(n, "standard_simplex");
  FiniteSimplicialSet::FaceTable faces(n + 1);
  std::vector<std::map<std::uint32_t, int>> ids(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t s = 0; s < (1u << (n + 1)); ++s)
      if (std::popcount(s) == k + 1) subsets.push_back(s);
    // lexicographic order on the sorted element lists
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
      while (a && b) {
        int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
      }
      return false;
    });
    for (std::uint32_t s : subsets) {
      int id = static_cast<int>(ids[k].size());
      ids[k][s] = id;
      std::vector<FormalSimplex> fs;
      if (k > 0) {
        std::uint32_t rest = s;
        while (rest) {
          std::uint32_t bit = rest & (~rest + 1);
          rest &= rest - 1;
          fs.push_back(FormalSimplex::nondegenerate(k - 1, ids[k - 1].at(s & ~bit)));
        }
      }
      faces[k].push_back(std::move(fs));
    }
  }
  return make_sset(std::move(faces), std::nullopt);
}

SSetPtr add_disjoint_basepoint(const SSetPtr& x) {
  auto faces = x->face_table();
  if (faces.empty()) faces.resize(1);
  int base = static_cast<int>(faces[0].size());
  faces[0].emplace_back();
  return make_sset(std::move(faces), base);
}

SSetPtr with_basepoint(const SSetPtr& x, int vertex) {
  if (vertex < 0 || vertex >= x->count(0)) throw InvalidInput("with_basepoint: not a vertex");
  return make_sset(x->face_table(), vertex);
}

SSetPtr point() {
  static const SSetPtr p = make_sset(FiniteSimplicialSet::FaceTable{{{}}}, 0);
  return p;
}

const SSetPtr& sphere0() {
  static const SSetPtr s = make_sset(FiniteSimplicialSet::FaceTable{{{}, {}}}, 0);
  return s;
}

const SSetPtr& circle() {
  static const SSetPtr s = [] {
    FormalSimplex v = FormalSimplex::nondegenerate(0, 0);
    return make_sset(FiniteSimplicialSet::FaceTable{{{}}, {{v, v}}}, 0);
  }();
  return s;
}

SSetPtr simplicial_sphere(int n) {
  if (n < 0) throw InvalidInput("simplicial_sphere: negative dimension");
  require_dimension(n, "simplicial_sphere");
  if (n == 0) return sphere0();
  SSetPtr s = circle();
  for (int k = 2; k <= n; ++k) s = smash(circle(), s);
  return s;
}

namespace {

const std::vector<DegeneracyMask>& masks_with_popcount(int bits, int pop) {
  static const auto table = [] {
    std::vector<std::vector<std::vector<DegeneracyMask>>> t(17);
    for (int b = 0; b <= 16; ++b) {
      t[b].resize(b + 1);
      for (DegeneracyMask m = 0; m < (DegeneracyMask{1} << b); ++m)
        t[b][std::popcount(m)].push_back(m);
    }
    return t;
  }();
  if (bits > 16) throw CapExceeded("product dimension beyond supported range");
  return table[bits][pop];
}

}  // namespace

SmashProduct::SmashProduct(SSetPtr left, SSetPtr right, Mode mode, Execution exec)
    : left_(std::move(left)), right_(std::move(right)), mode_(mode) {
  const auto& x = *left_;
  const auto& y = *right_;
  const bool collapse = mode_ == Mode::smash;
  if (collapse && (!x.pointed() || !y.pointed()))
    throw InvalidInput("smash: both factors must be pointed");

  const int top = std::max(0, x.dimension() + y.dimension());
  if (x.dimension() >= 0 && y.dimension() >= 0) require_dimension(top, "smash");
  factors_.resize(top + 1);

  auto add = [&](int m, const FormalSimplex& a, const FormalSimplex& b) {
    int id = static_cast<int>(factors_[m].size());
    factors_[m].emplace_back(a, b);
    index_.emplace(std::make_pair(a, b), id);
  };

  std::optional<int> base;
  if (x.pointed() && y.pointed()) {
    if (collapse) {
      add(0, x.base_simplex(0), y.base_simplex(0));
      base = 0;
    } else {
      base = *x.basepoint() * y.count(0) + *y.basepoint();
    }
  }

  if (x.dimension() >= 0 && y.dimension() >= 0) {
    for (int m = 0; m <= top; ++m) {
      for (int p = 0; p <= std::min(m, x.dimension()); ++p) {
        for (int xi = 0; xi < x.count(p); ++xi) {
          if (collapse && p == 0 && xi == *x.basepoint()) continue;
          for (int q = std::max(0, m - p); q <= std::min(m, y.dimension()); ++q) {
            for (int yi = 0; yi < y.count(q); ++yi) {
              if (collapse && q == 0 && yi == *y.basepoint()) continue;
              for (DegeneracyMask jm : masks_with_popcount(m, m - p)) {
                for (DegeneracyMask km : masks_with_popcount(m, m - q)) {
                  if (jm & km) continue;
                  add(m, FormalSimplex{xi, jm, static_cast<std::int16_t>(m)},
                      FormalSimplex{yi, km, static_cast<std::int16_t>(m)});
                }
              }
            }
          }
        }
      }
    }
  }

  while (factors_.size() > 1 && factors_.back().empty()) factors_.pop_back();

  FiniteSimplicialSet::FaceTable faces(factors_.size());
  for (int m = 0; m < static_cast<int>(factors_.size()); ++m) {
    faces[m].resize(factors_[m].size());
    if (m == 0) continue;
    for_each_index(static_cast<std::ptrdiff_t>(factors_[m].size()), exec, [&](std::ptrdiff_t id) {
      const auto& [a, b] = factors_[m][id];
      auto& out = faces[m][id];
      out.reserve(m + 1);
      for (int i = 0; i <= m; ++i) out.push_back(pair(x.face(a, i), y.face(b, i)));
    });
  }
  result_ = make_sset(std::move(faces), base);
}

FormalSimplex SmashProduct::pair(const FormalSimplex& a, const FormalSimplex& b) const {
  if (a.dim != b.dim) throw InvalidInput("pair: dimensions differ");
  if (mode_ == Mode::smash && (left_->is_base(a) || right_->is_base(b)))
    return FormalSimplex{0, a.dim > 0 ? (DegeneracyMask{1} << a.dim) - 1 : 0, a.dim};
  DegeneracyMask common = a.mask & b.mask;
  auto n = static_cast<std::int16_t>(a.dim - std::popcount(common));
  FormalSimplex ra{a.target, compress_mask(a.mask, common), n};
  FormalSimplex rb{b.target, compress_mask(b.mask, common), n};
  auto it = index_.find(std::make_pair(ra, rb));
  if (it == index_.end()) throw VerificationFailure("pair: simplex missing from product index");
  return FormalSimplex{it->second, common, a.dim};
}

std::pair<FormalSimplex, FormalSimplex> SmashProduct::split(const FormalSimplex& u) const {
  if (mode_ == Mode::smash && u.target_dim() == 0 && u.target == 0)
    return {left_->base_simplex(u.dim), right_->base_simplex(u.dim)};
  const auto& [a, b] = factors_[u.target_dim()][u.target];
  if (u.mask == 0) return {a, b};
  return {degenerate(a, u.mask, u.dim), degenerate(b, u.mask, u.dim)};
}

FiniteSimplicialSet::FaceTable product_faces_serial_reference(const SmashProduct& p) {
  const auto& r = *p.result();
  FiniteSimplicialSet::FaceTable faces(r.face_table().size());
  for (int m = 0; m <= r.dimension(); ++m) {
    faces[m].resize(r.count(m));
    if (m == 0) continue;
    for (int id = 0; id < r.count(m); ++id) {
      const auto& [a, b] = p.factors(m, id);
      for (int i = 0; i <= m; ++i)
        faces[m][id].push_back(p.pair(p.left()->face(a, i), p.right()->face(b, i)));
    }
  }
  return faces;
}

SSetPtr smash(const SSetPtr& x, const SSetPtr& y) { return SmashProduct(x, y).result(); }

SSetPtr product(const SSetPtr& x, const SSetPtr& y) {
  return SmashProduct(x, y, SmashProduct::Mode::cartesian).result();
}

SimplicialMap smash_maps(const SmashProduct& source, const SmashProduct& target,
                         const SimplicialMap& f, const SimplicialMap& g) {
  if (!same_set(f.source(), source.left()) || !same_set(g.source(), source.right()) ||
      !same_set(f.target(), target.left()) || !same_set(g.target(), target.right()))
    throw InvalidInput("smash_maps: factors do not match");
  return build_map(source.result(), target.result(), [&](int d, int id) {
    const auto& [a, b] = source.factors(d, id);
    return target.pair(f(a), g(b));
  });
}

SimplicialMap swap_map(const SmashProduct& xy, const SmashProduct& yx) {
  if (!same_set(xy.left(), yx.right()) || !same_set(xy.right(), yx.left()))
    throw InvalidInput("swap_map: factors do not match");
  return build_map(xy.result(), yx.result(), [&](int d, int id) {
    const auto& [a, b] = xy.factors(d, id);
    return yx.pair(b, a);
  });
}

SimplicialMap associator(const SmashProduct& xy, const SmashProduct& xy_z, const SmashProduct& yz,
                         const SmashProduct& x_yz) {
  if (!same_set(xy_z.left(), xy.result()) || !same_set(x_yz.right(), yz.result()) ||
      !same_set(xy.left(), x_yz.left()) || !same_set(xy.right(), yz.left()) ||
      !same_set(xy_z.right(), yz.right()))
    throw InvalidInput("associator: factors do not match");
  return build_map(xy_z.result(), x_yz.result(), [&](int d, int id) {
    const auto& [u, c] = xy_z.factors(d, id);
    auto [a, b] = xy.split(u);
    return x_yz.pair(a, yz.pair(b, c));
  });
}

SimplicialMap left_unitor(const SmashProduct& s0_y) {
  if (!same_set(s0_y.left(), sphere0())) throw InvalidInput("left_unitor: left factor is not S^0");
  return build_map(s0_y.result(), s0_y.right(), [&](int d, int id) {
    if (d == 0 && id == 0) return s0_y.right()->base_simplex(0);
    return s0_y.factors(d, id).second;
  });
}

SimplicialMap right_unitor(const SmashProduct& x_s0) {
  if (!same_set(x_s0.right(), sphere0()))
    throw InvalidInput("right_unitor: right factor is not S^0");
  return build_map(x_s0.result(), x_s0.left(), [&](int d, int id) {
    if (d == 0 && id == 0) return x_s0.left()->base_simplex(0);
    return x_s0.factors(d, id).first;
  });
}

}  // namespace sspec
