#pragma once

#include "linklab/invariants.hpp"

#include <json.hpp>

#include <variant>

namespace linklab {

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

/// Malformed or inconsistent input; the message names the offending field.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Document = std::variant<Graph, TwoComplex, EmbeddedK6, EmbeddedSuspension>;

inline const char *document_kind(const Document &d) {
  constexpr const char *names[] = {"graph", "two-complex", "embedded-k6", "embedded-suspension"};
  return names[d.index()];
}

namespace io_detail {

[[noreturn]] inline void fail(const std::string &path, const std::string &what) {
  throw InputError(path + ": " + what);
}

inline const Json &field(const Json &obj, const char *name, const std::string &path) {
  if (!obj.is_object())
    fail(path, "expected an object");
  const auto it = obj.find(name);
  if (it == obj.end())
    fail(path, std::string("missing field \"") + name + "\"");
  return *it;
}

inline const Json &array_field(const Json &obj, const char *name, const std::string &path) {
  const Json &a = field(obj, name, path);
  if (!a.is_array())
    fail(path + "." + name, "expected an array");
  return a;
}

inline std::size_t index_value(const Json &j, const std::string &path, std::size_t limit) {
  if (!j.is_number_integer())
    fail(path, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<std::size_t>(v) >= limit)
    fail(path, "index " + std::to_string(v) + " out of range (limit " + std::to_string(limit) + ")");
  return static_cast<std::size_t>(v);
}

inline std::vector<std::size_t> index_list(const Json &j, const std::string &path, std::size_t limit,
                                           std::size_t arity = 0) {
  if (!j.is_array())
    fail(path, "expected an array of indices");
  if (arity && j.size() != arity)
    fail(path, "expected " + std::to_string(arity) + " indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(index_value(j[i], path + "[" + std::to_string(i) + "]", limit));
  return out;
}

inline Rational rational_value(const Json &j, const std::string &path) {
  if (j.is_number_integer())
    return Rational(mpz_class(j.dump(), 10));
  if (!j.is_string())
    fail(path, "non-rational coordinate (expected \"p/q\" or an integer string)");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const RationalFormatError &e) {
    fail(path, e.what());
  }
}

template <std::size_t D> std::vector<Point<D>> points_field(const Json &doc, const std::string &path) {
  const Json &arr = array_field(doc, "vertices", path);
  std::vector<Point<D>> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + ".vertices[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != D)
      fail(p, "expected " + std::to_string(D) + " coordinates");
    Point<D> pt;
    for (std::size_t k = 0; k < D; ++k)
      pt[k] = rational_value(arr[i][k], p + "[" + std::to_string(k) + "]");
    out.push_back(std::move(pt));
  }
  return out;
}

template <std::size_t D> Json points_json(const std::vector<Point<D>> &pts) {
  Json arr = Json::array();
  for (const auto &p : pts) {
    Json c = Json::array();
    for (const auto &x : p)
      c.push_back(format_rational(x));
    arr.push_back(std::move(c));
  }
  return arr;
}

inline Json edge_json(const Edge &e) { return Json::array({e.first, e.second}); }

inline std::vector<Edge> edges_field(const Json &doc, const std::string &path, std::size_t n) {
  const Json &arr = array_field(doc, "edges", path);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + ".edges[" + std::to_string(i) + "]";
    const auto uv = index_list(arr[i], p, n, 2);
    if (uv[0] == uv[1])
      fail(p, "loop edge");
    out.push_back(make_edge(uv[0], uv[1]));
  }
  return out;
}

inline std::vector<Face> faces_field(const Json &doc, const std::string &path, std::size_t n) {
  const Json &arr = array_field(doc, "faces", path);
  std::vector<Face> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto f = index_list(arr[i], path + ".faces[" + std::to_string(i) + "]", n, 3);
    out.push_back({{f[0], f[1], f[2]}});
  }
  return out;
}

/// Polylines as full paths [u, interior..., v]; stored from min to max.
inline std::map<Edge, std::vector<std::size_t>> polylines_field(const Json &doc, const std::string &path,
                                                                std::size_t vertex_count,
                                                                std::size_t point_count) {
  std::map<Edge, std::vector<std::size_t>> out;
  if (!doc.contains("polylines"))
    return out;
  const Json &arr = array_field(doc, "polylines", path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = path + ".polylines[" + std::to_string(i) + "]";
    const auto uv = index_list(field(arr[i], "edge", p), p + ".edge", vertex_count, 2);
    if (uv[0] == uv[1])
      fail(p + ".edge", "loop edge");
    auto full = index_list(field(arr[i], "path", p), p + ".path", point_count);
    if (full.size() < 2 || full.front() != uv[0] || full.back() != uv[1])
      fail(p + ".path", "path must run from edge[0] to edge[1]");
    if (uv[0] > uv[1])
      std::reverse(full.begin(), full.end());
    const Edge e = make_edge(uv[0], uv[1]);
    if (out.contains(e))
      fail(p, "duplicate polyline");
    out[e] = std::vector<std::size_t>(full.begin() + 1, full.end() - 1);
  }
  return out;
}

inline Json polylines_json(const std::map<Edge, std::vector<std::size_t>> &polylines) {
  Json arr = Json::array();
  for (const auto &[e, interior] : polylines) {
    Json path = Json::array({e.first});
    for (const auto i : interior)
      path.push_back(i);
    path.push_back(e.second);
    arr.push_back(Json{{"edge", edge_json(e)}, {"path", std::move(path)}});
  }
  return arr;
}

inline Json header(const char *kind) { return Json{{"schemaVersion", kSchemaVersion}, {"kind", kind}}; }

inline Graph parse_graph(const Json &doc) {
  const Json &n = field(doc, "vertexCount", "$");
  if (!n.is_number_unsigned())
    fail("$.vertexCount", "expected a non-negative integer");
  const auto count = n.get<std::size_t>();
  const auto edges = edges_field(doc, "$", count);
  Graph g(count);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!g.add_edge(edges[i].first, edges[i].second))
      fail("$.edges[" + std::to_string(i) + "]", "duplicate edge");
  return g;
}

inline TwoComplex parse_complex(const Json &doc) {
  const Json &n = field(doc, "vertexCount", "$");
  if (!n.is_number_unsigned())
    fail("$.vertexCount", "expected a non-negative integer");
  const auto count = n.get<std::size_t>();
  auto edges = edges_field(doc, "$", count);
  auto faces = faces_field(doc, "$", count);
  std::optional<std::pair<Vertex, Vertex>> apexes;
  if (doc.contains("apexes")) {
    const auto ab = index_list(doc["apexes"], "$.apexes", count, 2);
    apexes = std::pair{ab[0], ab[1]};
  }
  try {
    return TwoComplex(count, std::move(edges), std::move(faces), apexes);
  } catch (const std::exception &e) {
    fail("$", e.what());
  }
}

inline EmbeddedK6 parse_k6(const Json &doc) {
  EmbeddedK6 e;
  e.points = points_field<3>(doc, "$");
  if (e.points.size() < 6)
    fail("$.vertices", "an embedded K6 needs at least 6 points");
  e.polylines = polylines_field(doc, "$", 6, e.points.size());
  return e;
}

inline EmbeddedSuspension parse_suspension(const Json &doc) {
  const auto &c = EmbeddedSuspension::complex();
  EmbeddedSuspension e;
  e.points = points_field<4>(doc, "$");
  if (e.points.size() < 8)
    fail("$.vertices", "an embedded suspension needs at least 8 points");
  if (doc.contains("apexes")) {
    const auto ab = index_list(doc["apexes"], "$.apexes", 8, 2);
    if (ab[0] != EmbeddedSuspension::kApexA || ab[1] != EmbeddedSuspension::kApexB)
      fail("$.apexes", "apexes must be [6, 7]");
  }
  if (doc.contains("edges")) {
    auto edges = edges_field(doc, "$", 8);
    std::sort(edges.begin(), edges.end());
    auto expected = c.edges();
    std::sort(expected.begin(), expected.end());
    if (edges != expected)
      fail("$.edges", "edges do not match the suspension of K6");
  }
  if (doc.contains("faces")) {
    auto sorted_keys = [](const std::vector<Face> &faces) {
      std::vector<std::array<Vertex, 3>> keys;
      for (auto f : faces) {
        std::sort(f.v.begin(), f.v.end());
        keys.push_back(f.v);
      }
      std::sort(keys.begin(), keys.end());
      return keys;
    };
    if (sorted_keys(faces_field(doc, "$", 8)) != sorted_keys(c.faces()))
      fail("$.faces", "faces do not match the suspension of K6");
  }
  e.polylines = polylines_field(doc, "$", 8, e.points.size());
  if (doc.contains("triangulations")) {
    const Json &arr = array_field(doc, "triangulations", "$");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = "$.triangulations[" + std::to_string(i) + "]";
      const auto fv = index_list(field(arr[i], "face", p), p + ".face", 8, 3);
      const auto idx = c.face_index(fv[0], fv[1], fv[2]);
      if (!idx)
        fail(p + ".face", "not a face of the suspension of K6");
      const Face &face = c.faces()[*idx];
      // Same cyclic order as the stored face, or reversed.
      const bool reversed = face.edge_direction(make_edge(fv[0], fv[1])) !=
                            (fv[0] < fv[1] ? 1 : -1);
      const Json &tris = array_field(arr[i], "triangles", p);
      std::vector<std::array<std::size_t, 3>> out;
      for (std::size_t k = 0; k < tris.size(); ++k) {
        const auto t = index_list(tris[k], p + ".triangles[" + std::to_string(k) + "]", e.points.size(), 3);
        out.push_back(reversed ? std::array{t[0], t[2], t[1]} : std::array{t[0], t[1], t[2]});
      }
      if (!e.triangulations.emplace(face.v, std::move(out)).second)
        fail(p, "duplicate triangulation");
    }
  }
  return e;
}

} // namespace io_detail

/// Parses an embedding/graph document. Errors carry a JSON path or the
/// parser's line and column.
inline Document parse_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  const Json &version = io_detail::field(doc, "schemaVersion", "$");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion)
    io_detail::fail("$.schemaVersion", "unknown schema version " + version.dump());
  const Json &kind = io_detail::field(doc, "kind", "$");
  const std::string k = kind.is_string() ? kind.get<std::string>() : kind.dump();
  if (k == "graph")
    return io_detail::parse_graph(doc);
  if (k == "two-complex")
    return io_detail::parse_complex(doc);
  if (k == "embedded-k6")
    return io_detail::parse_k6(doc);
  if (k == "embedded-suspension")
    return io_detail::parse_suspension(doc);
  io_detail::fail("$.kind", "unknown document kind \"" + k + "\"");
}

inline Json to_json(const Graph &g) {
  Json j = io_detail::header("graph");
  j["vertexCount"] = g.vertex_count();
  j["edges"] = Json::array();
  for (const auto &e : g.edges())
    j["edges"].push_back(io_detail::edge_json(e));
  return j;
}

inline Json to_json(const TwoComplex &c) {
  Json j = io_detail::header("two-complex");
  j["vertexCount"] = c.vertex_count();
  j["edges"] = Json::array();
  for (const auto &e : c.edges())
    j["edges"].push_back(io_detail::edge_json(e));
  j["faces"] = Json::array();
  for (const auto &f : c.faces())
    j["faces"].push_back(Json::array({f.v[0], f.v[1], f.v[2]}));
  if (c.apexes())
    j["apexes"] = Json::array({c.apexes()->first, c.apexes()->second});
  return j;
}

inline Json to_json(const EmbeddedK6 &e) {
  Json j = io_detail::header("embedded-k6");
  j["vertices"] = io_detail::points_json(e.points);
  j["polylines"] = io_detail::polylines_json(e.polylines);
  return j;
}

inline Json to_json(const EmbeddedSuspension &e) {
  const auto &c = EmbeddedSuspension::complex();
  Json j = io_detail::header("embedded-suspension");
  j["vertices"] = io_detail::points_json(e.points);
  j["apexes"] = Json::array({EmbeddedSuspension::kApexA, EmbeddedSuspension::kApexB});
  j["edges"] = Json::array();
  for (const auto &edge : c.edges())
    j["edges"].push_back(io_detail::edge_json(edge));
  j["faces"] = Json::array();
  for (const auto &f : c.faces())
    j["faces"].push_back(Json::array({f.v[0], f.v[1], f.v[2]}));
  j["polylines"] = io_detail::polylines_json(e.polylines);
  j["triangulations"] = Json::array();
  for (const auto &[face, tris] : e.triangulations) {
    Json t = Json::array();
    for (const auto &tri : tris)
      t.push_back(Json::array({tri[0], tri[1], tri[2]}));
    j["triangulations"].push_back(
        Json{{"face", Json::array({face[0], face[1], face[2]})}, {"triangles", std::move(t)}});
  }
  return j;
}

inline Json to_json(const Document &d) {
  return std::visit([](const auto &x) { return to_json(x); }, d);
}

inline std::string emit(const Json &j) { return j.dump(2) + "\n"; }

inline std::string emit_document(const Document &d) { return emit(to_json(d)); }

inline Json to_json(const K6Triangle &t) { return Json::array({t.v[0], t.v[1], t.v[2]}); }

inline Json to_json(const DualPair &p) { return Json{{"t", to_json(p.t)}, {"tBar", to_json(p.t_bar)}}; }

inline Json to_json(const LinkReport &r) {
  Json j = io_detail::header("report");
  j["invariant"] = r.invariant;
  if (r.value)
    j["value"] = *r.value;
  j["total"] = r.total;
  j["pairs"] = Json::array();
  for (const auto &p : r.pairs) {
    Json rec = to_json(p.pair);
    rec["omegas"] = p.omegas;
    rec["term"] = format_rational(p.term());
    rec["retries"] = p.retries;
    j["pairs"].push_back(std::move(rec));
  }
  j["diagnostics"] = Json{{"retries", r.retries}, {"parityAnomaly", r.parity_anomaly}};
  j["seed"] = r.seed;
  j["toolVersion"] = kToolVersion;
  return j;
}

/// Inverse of to_json(LinkReport); rejects reports whose value field is
/// inconsistent with the anomaly flag or whose derived terms disagree.
inline LinkReport parse_report(std::string_view text) {
  using namespace io_detail;
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (field(doc, "kind", "$") != "report")
    fail("$.kind", "expected a report");
  LinkReport r;
  try {
    r.invariant = field(doc, "invariant", "$").get<std::string>();
    r.total = field(doc, "total", "$").get<long>();
    r.seed = field(doc, "seed", "$").get<std::uint64_t>();
    const Json &diag = field(doc, "diagnostics", "$");
    r.retries = field(diag, "retries", "$.diagnostics").get<int>();
    r.parity_anomaly = field(diag, "parityAnomaly", "$.diagnostics").get<bool>();
    if (doc.contains("value"))
      r.value = doc["value"].get<int>();
    const Json &pairs = array_field(doc, "pairs", "$");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string p = "$.pairs[" + std::to_string(i) + "]";
      const auto t = index_list(field(pairs[i], "t", p), p + ".t", 6, 3);
      const auto tb = index_list(field(pairs[i], "tBar", p), p + ".tBar", 6, 3);
      PairRecord rec{{K6Triangle(t[0], t[1], t[2]), K6Triangle(tb[0], tb[1], tb[2])},
                     field(pairs[i], "omegas", p).get<std::vector<long>>(),
                     field(pairs[i], "retries", p).get<int>()};
      if (rational_value(field(pairs[i], "term", p), p + ".term") != rec.term())
        fail(p + ".term", "term does not match omegas");
      r.pairs.push_back(std::move(rec));
    }
  } catch (const Json::exception &e) {
    throw InputError(std::string("report field has the wrong type: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw InputError(std::string("invalid report: ") + e.what());
  }
  if (r.value.has_value() == r.parity_anomaly)
    fail("$.value", "value must be present exactly when there is no parity anomaly");
  return r;
}

} // namespace linklab
