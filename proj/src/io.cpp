#include "pgcanon/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pgcanon/error.hpp"

namespace pgc {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

// Typed extraction with shape errors reported as parse errors.
template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    bad(std::string("field '") + what + "' has the wrong type");
  }
}

std::vector<std::pair<Point, Point>> to_pairs(const std::vector<std::vector<Point>>& rows) {
  std::vector<std::pair<Point, Point>> out;
  for (const auto& r : rows) {
    if (r.size() != 2) bad("edges must be pairs");
    out.emplace_back(r[0], r[1]);
  }
  return out;
}

template <class P>
json from_pairs(const std::vector<P>& pairs) {
  json a = json::array();
  for (const auto& [u, v] : pairs) a.push_back({u, v});
  return a;
}

}  // namespace

GroupFile parse_group_file(const std::string& text) {
  const json j = parse_json(text);
  GroupFile f;
  f.n = get<std::size_t>(field(j, "n"), "n");
  f.generators = get<std::vector<std::vector<Point>>>(field(j, "generators"), "generators");
  return f;
}

std::string serialize(const GroupFile& f) {
  return json{{"n", f.n}, {"generators", f.generators}}.dump();
}

GeneratorSet to_generator_set(const GroupFile& f) {
  GeneratorSet s = GeneratorSet::empty(f.n);
  for (const auto& g : f.generators) {
    if (g.size() != f.n)
      throw Error(ErrorCode::LengthMismatch, "generator of length " + std::to_string(g.size()) +
                                                 " in a group on " + std::to_string(f.n) + " points");
    s.gens.push_back(Permutation::from_images(g));
  }
  return s;
}

MatrixFile parse_matrix_file(const std::string& text) {
  const json j = parse_json(text);
  MatrixFile f;
  f.modulus = get<std::uint32_t>(field(j, "modulus"), "modulus");
  f.rows = get<std::vector<std::vector<std::int64_t>>>(field(j, "rows"), "rows");
  return f;
}

std::string serialize(const MatrixFile& f) {
  return json{{"modulus", f.modulus}, {"rows", f.rows}}.dump();
}

RawColoredGraph parse_colored_graph(const std::string& text) {
  const json j = parse_json(text);
  RawColoredGraph g;
  g.n = get<std::size_t>(field(j, "n"), "n");
  g.classes = get<std::vector<std::vector<Point>>>(field(j, "classes"), "classes");
  g.phi = get<std::vector<std::vector<std::vector<Point>>>>(field(j, "phi"), "phi");
  const bool undirected = j.contains("undirected") && get<bool>(j["undirected"], "undirected");
  for (const auto& [u, v] : to_pairs(get<std::vector<std::vector<Point>>>(field(j, "edges"), "edges"))) {
    g.edges.emplace_back(u, v);
    if (undirected && u != v) g.edges.emplace_back(v, u);
  }
  return g;
}

std::string serialize(const RawColoredGraph& g) {
  return json{{"n", g.n},
              {"classes", g.classes},
              {"edges", from_pairs(g.edges)},
              {"undirected", false},
              {"phi", g.phi}}
      .dump();
}

std::string serialize(const RawColoredGraph& g, const BaseGraph& base, bool twisted,
                      std::size_t twist_edge) {
  json j = json::parse(serialize(g));
  j["base"] = {{"name", base.name}, {"vertices", base.vertices}, {"edges", from_pairs(base.edges)}};
  j["twisted"] = twisted;
  if (twisted) j["twist_edge"] = twist_edge;
  return j.dump();
}

CanonicalForm parse_canonical_form(const std::string& text) {
  const json j = parse_json(text);
  CanonicalForm f;
  f.n = get<std::size_t>(field(j, "n"), "n");
  f.class_sizes = get<std::vector<std::size_t>>(field(j, "class_sizes"), "class_sizes");
  for (const auto& [u, v] : to_pairs(get<std::vector<std::vector<Point>>>(field(j, "edges"), "edges")))
    f.edges.emplace_back(u, v);
  f.phi = get<std::vector<std::vector<std::vector<Point>>>>(field(j, "phi"), "phi");
  return f;
}

std::string serialize(const CanonicalForm& f) {
  return json{{"n", f.n}, {"class_sizes", f.class_sizes}, {"edges", from_pairs(f.edges)}, {"phi", f.phi}}
      .dump();
}

std::vector<Point> parse_image_sequence(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  const std::string body = first != std::string::npos && text[first] == '[' ? text : "[" + text + "]";
  return get<std::vector<Point>>(parse_json(body), "permutation");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pgc
