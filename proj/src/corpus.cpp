#include "sspec/corpus.hpp"

#include <random>

#include "sspec/constructions.hpp"
#include "sspec/errors.hpp"

namespace sspec {

SSetPtr three_edge_circle() {
  auto nd = [](int d, int id) { return FormalSimplex::nondegenerate(d, id); };
  FiniteSimplicialSet::FaceTable f(2);
  f[0].resize(3);
  f[1] = {{nd(0, 1), nd(0, 0)}, {nd(0, 2), nd(0, 1)}, {nd(0, 0), nd(0, 2)}};
  return make_sset(std::move(f), 0);
}

SimplicialMap degree_two_map() {
  auto nd = [](int d, int id) { return FormalSimplex::nondegenerate(d, id); };
  FormalSimplex collapsed{0, 1, 1};
  SimplicialMap::ImageTable images{{nd(0, 0), nd(0, 0), nd(0, 0)},
                                   {nd(1, 0), nd(1, 0), collapsed}};
  return SimplicialMap(three_edge_circle(), circle(), std::move(images));
}

TruncatedSpectrum moore_spectrum(int n) {
  return mapping_cone(free_map(n, degree_two_map())).result();
}

namespace {

struct Space {
  const char* name;
  SSetPtr (*make)();
};

const std::vector<Space>& spaces() {
  static const std::vector<Space> all{
      {"S0", [] { return sphere0(); }},
      {"S1", [] { return circle(); }},
      {"S2", [] { return simplicial_sphere(2); }},
      {"D1+", [] { return add_disjoint_basepoint(standard_simplex(1)); }},
      {"C3", [] { return three_edge_circle(); }},
  };
  return all;
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(std::uint64_t seed, int size) {
  if (size < 1 || size > 100) throw InvalidInput("corpus size must be in 1..100");
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  auto free_one = [&]() -> CorpusEntry {
    const int n = pick(3);
    const auto& k = spaces()[pick(static_cast<int>(spaces().size()))];
    return {"F" + std::to_string(n) + "(" + k.name + ")", free_spectrum(n, k.make())};
  };

  std::vector<CorpusEntry> out{{"moore", moore_spectrum()}};
  while (static_cast<int>(out.size()) < size) {
    switch (pick(4)) {
      case 0:
        out.push_back(free_one());
        break;
      case 1: {
        auto a = free_one();
        auto b = free_one();
        out.push_back({"wedge(" + a.name + "," + b.name + ")",
                       wedge_spectra({a.spectrum, b.spectrum}).result});
        break;
      }
      case 2: {
        const int n = 1 + pick(2);
        out.push_back({"moore" + std::to_string(n), moore_spectrum(n)});
        break;
      }
      default: {
        auto a = free_one();
        out.push_back({a.name + "^S1", smash_with_sset(a.spectrum, circle()).result});
        break;
      }
    }
  }
  return out;
}

}  // namespace sspec
