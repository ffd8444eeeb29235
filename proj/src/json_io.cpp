#include "sspec/json_io.hpp"

#include <fstream>
#include <limits>

#include "sspec/errors.hpp"

namespace sspec {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidInput(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string("json: ") + what + " must be an integer");
  auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InvalidInput(std::string("json: ") + what + " out of range");
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string("json: ") + what + " must be an array");
  return j;
}

}  // namespace

Json simplex_to_json(const FormalSimplex& s) {
  Json out = Json::object();
  out["word"] = s.word();
  out["target"] = s.target;
  return out;
}

FormalSimplex simplex_from_json(const Json& j, int dim) {
  std::vector<int> word;
  for (const auto& w : as_array(field(j, "word"), "word")) word.push_back(as_int(w, "word entry"));
  return FormalSimplex::from_word(dim, word, as_int(field(j, "target"), "target"));
}

Json to_json(const FiniteSimplicialSet& x) {
  Json out = Json::object();
  out["dims"] = x.dims();
  out["basepoint"] = x.basepoint() ? Json(*x.basepoint()) : Json(nullptr);
  Json faces = Json::array();
  for (int d = 0; d <= x.dimension(); ++d) {
    Json level = Json::array();
    for (int id = 0; id < x.count(d); ++id) {
      Json fs = Json::array();
      for (const auto& f : x.faces(d, id)) fs.push_back(simplex_to_json(f));
      level.push_back(std::move(fs));
    }
    faces.push_back(std::move(level));
  }
  out["faces"] = std::move(faces);
  return out;
}

SSetPtr sset_from_json(const Json& j) {
  const auto& dims = as_array(field(j, "dims"), "dims");
  const auto& faces = as_array(field(j, "faces"), "faces");
  if (dims.size() != faces.size()) throw InvalidInput("json: dims and faces disagree in length");
  FiniteSimplicialSet::FaceTable table(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) {
    const auto& level = as_array(faces[d], "faces level");
    if (static_cast<int>(level.size()) != as_int(dims[d], "dims entry"))
      throw InvalidInput("json: dims[" + std::to_string(d) + "] does not match the face list");
    for (const auto& fs : level) {
      const auto& arr = as_array(fs, "face list");
      if (d > 0 && arr.size() != d + 1)
        throw InvalidInput("json: a " + std::to_string(d) + "-simplex needs " +
                           std::to_string(d + 1) + " faces");
      if (d == 0 && !arr.empty()) throw InvalidInput("json: vertices have no faces");
      std::vector<FormalSimplex> row;
      for (const auto& f : arr) row.push_back(simplex_from_json(f, static_cast<int>(d) - 1));
      table[d].push_back(std::move(row));
    }
  }
  std::optional<int> base;
  if (j.contains("basepoint") && !j.at("basepoint").is_null()) {
    base = as_int(j.at("basepoint"), "basepoint");
    if (*base < 0 || table.empty() || *base >= static_cast<int>(table[0].size()))
      throw InvalidInput("json: basepoint is not a vertex");
  }
  auto x = make_sset(std::move(table), base);
  auto report = validate(*x);
  if (!report.ok()) throw InvalidInput("json: simplicial set is malformed: " + report.summary());
  return x;
}

Json images_to_json(const SimplicialMap& f) {
  Json images = Json::array();
  for (const auto& level : f.images()) {
    Json row = Json::array();
    for (const auto& s : level) row.push_back(simplex_to_json(s));
    images.push_back(std::move(row));
  }
  Json out = Json::object();
  out["images"] = std::move(images);
  return out;
}

SimplicialMap map_from_json(const Json& j, const SSetPtr& source, const SSetPtr& target) {
  const auto& images = as_array(field(j, "images"), "images");
  SimplicialMap::ImageTable table;
  for (std::size_t d = 0; d < images.size(); ++d) {
    std::vector<FormalSimplex> row;
    for (const auto& s : as_array(images[d], "image level"))
      row.push_back(simplex_from_json(s, static_cast<int>(d)));
    table.push_back(std::move(row));
  }
  SimplicialMap f(source, target, std::move(table));
  auto report = validate(f);
  if (!report.ok()) throw InvalidInput("json: map is not simplicial: " + report.summary());
  return f;
}

Json to_json(const SimplicialMap& f) {
  Json out = Json::object();
  out["source"] = to_json(*f.source());
  out["target"] = to_json(*f.target());
  out["images"] = images_to_json(f)["images"];
  return out;
}

SimplicialMap simplicial_map_from_json(const Json& j) {
  return map_from_json(j, sset_from_json(field(j, "source")), sset_from_json(field(j, "target")));
}

Json to_json(const TruncatedSpectrum& a) {
  Json out = Json::object();
  out["truncation"] = a.truncation();
  Json levels = Json::array();
  Json maps = Json::array();
  for (int m = 0; m <= a.truncation(); ++m) levels.push_back(to_json(*a.level(m)));
  for (int m = 0; m < a.truncation(); ++m) maps.push_back(images_to_json(a.structure_map(m)));
  out["levels"] = std::move(levels);
  out["structure_maps"] = std::move(maps);
  return out;
}

TruncatedSpectrum spectrum_from_json(const Json& j) {
  const int n = as_int(field(j, "truncation"), "truncation");
  const auto& levels = as_array(field(j, "levels"), "levels");
  const auto& maps = as_array(field(j, "structure_maps"), "structure_maps");
  if (n < 0 || static_cast<int>(levels.size()) != n + 1 || static_cast<int>(maps.size()) != n)
    throw InvalidInput("json: spectrum needs truncation + 1 levels and truncation structure maps");
  std::vector<SSetPtr> sets;
  for (const auto& l : levels) sets.push_back(sset_from_json(l));
  std::vector<SimplicialMap> sigma;
  for (int m = 0; m < n; ++m) {
    if (!sets[m]->pointed()) throw InvalidInput("json: spectrum levels must be pointed");
    sigma.push_back(map_from_json(maps[m], smash(sets[m], circle()), sets[m + 1]));
  }
  return TruncatedSpectrum(std::move(sets), std::move(sigma));
}

Json to_json(const SpectrumMap& f) {
  Json out = Json::object();
  out["source"] = to_json(f.source());
  out["target"] = to_json(f.target());
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(images_to_json(c));
  out["components"] = std::move(comps);
  return out;
}

SpectrumMap spectrum_map_from_json(const Json& j) {
  auto s = spectrum_from_json(field(j, "source"));
  auto t = spectrum_from_json(field(j, "target"));
  std::vector<SimplicialMap> comps;
  const auto& arr = as_array(field(j, "components"), "components");
  for (std::size_t m = 0; m < arr.size(); ++m)
    comps.push_back(map_from_json(arr[m], s.level(static_cast<int>(m)), t.level(static_cast<int>(m))));
  return SpectrumMap(std::move(s), std::move(t), std::move(comps));
}

Json to_json(const TruncatedCospectrum& x) {
  Json out = Json::object();
  out["degree"] = x.degree();
  Json objects = Json::array();
  Json maps = Json::array();
  for (int m = 0; m <= x.degree(); ++m) objects.push_back(to_json(x.object(m)));
  for (int m = 1; m <= x.degree(); ++m) {
    Json comps = Json::array();
    for (const auto& c : x.structure_map(m).components()) comps.push_back(images_to_json(c));
    Json f = Json::object();
    f["components"] = std::move(comps);
    maps.push_back(std::move(f));
  }
  out["objects"] = std::move(objects);
  out["structure_maps"] = std::move(maps);
  return out;
}

TruncatedCospectrum cospectrum_from_json(const Json& j) {
  const int k = as_int(field(j, "degree"), "degree");
  const auto& objs = as_array(field(j, "objects"), "objects");
  const auto& maps = as_array(field(j, "structure_maps"), "structure_maps");
  if (k < 0 || static_cast<int>(objs.size()) != k + 1 || static_cast<int>(maps.size()) != k)
    throw InvalidInput("json: cospectrum needs degree + 1 objects and degree structure maps");
  std::vector<TruncatedSpectrum> objects;
  for (const auto& o : objs) objects.push_back(spectrum_from_json(o));
  std::vector<SpectrumMap> sigma;
  for (int m = 1; m <= k; ++m) {
    auto src = smash_with_sset(objects[m], circle()).result;
    const auto& comps = as_array(field(maps[m - 1], "components"), "components");
    std::vector<SimplicialMap> cs;
    for (std::size_t i = 0; i < comps.size(); ++i)
      cs.push_back(map_from_json(comps[i], src.level(static_cast<int>(i)),
                                 objects[m - 1].level(static_cast<int>(i))));
    sigma.emplace_back(src, objects[m - 1], std::move(cs));
  }
  return TruncatedCospectrum(std::move(objects), std::move(sigma));
}

Json to_json(const Int& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(n));
  return Json(n.str());
}

Json to_json(const GradedHomology& h) {
  Json out = Json::array();
  for (const auto& [d, g] : h) {
    Json e = Json::object();
    e["degree"] = d;
    e["rank"] = g.rank;
    Json t = Json::array();
    for (const auto& x : g.torsion) t.push_back(to_json(x));
    e["torsion"] = std::move(t);
    out.push_back(std::move(e));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace sspec
