#include "shadelab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "shadelab/error.hpp"

namespace shadelab {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

namespace {

struct Line {
  int number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(w);
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

void expect_arity(const Line& line, std::size_t words, const char* usage) {
  if (line.words.size() != words) throw ParseError(line.number, std::string("expected '") + usage + "'");
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  Multigraph g;
  std::optional<std::pair<int, std::string>> source;
  for (const auto& line : tokenize(text)) {
    const auto& w = line.words;
    if (w[0] == "vertex") {
      expect_arity(line, 2, "vertex <name>");
      g.add_vertex(w[1]);
    } else if (w[0] == "edge" || w[0] == "arc") {
      expect_arity(line, 4, w[0] == "edge" ? "edge <name> <u> <v>" : "arc <name> <u> <v>");
      const int a = g.add_vertex(w[2]);
      const int b = g.add_vertex(w[3]);
      try {
        g.add_edge(w[1], a, b, w[0] == "arc" ? Orientation::directed : Orientation::undirected);
      } catch (const UsageError& e) {
        throw ParseError(line.number, e.what());
      }
    } else if (w[0] == "source") {
      expect_arity(line, 2, "source <name>");
      if (source) throw ParseError(line.number, "source declared twice");
      source = std::pair{line.number, w[1]};
    } else {
      throw ParseError(line.number, "unknown directive '" + w[0] + "'");
    }
  }
  if (source) {
    auto v = g.vertex_index(source->second);
    if (!v) throw ParseError(source->first, "source names unknown vertex '" + source->second + "'");
    g.set_source(*v);
  }
  return g;
}

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"name", e.name},
                     {"a", g.vertex_name(e.a)},
                     {"b", g.vertex_name(e.b)},
                     {"directed", e.orientation == Orientation::directed}});
  }
  json out = {{"vertices", g.vertex_names()}, {"edges", std::move(edges)}};
  out["source"] = g.source() ? json(g.vertex_name(*g.source())) : json();
  return out;
}

Multigraph graph_from_json(const json& j) {
  try {
    Multigraph g;
    for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
      const int a = g.add_vertex(e.at("a").get<std::string>());
      const int b = g.add_vertex(e.at("b").get<std::string>());
      g.add_edge(e.at("name").get<std::string>(), a, b,
                 e.value("directed", false) ? Orientation::directed : Orientation::undirected);
    }
    if (j.contains("source") && !j.at("source").is_null()) {
      auto v = g.vertex_index(j.at("source").get<std::string>());
      if (!v) throw UsageError("graph JSON names an unknown source");
      g.set_source(*v);
    }
    return g;
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed graph JSON: ") + e.what());
  }
}

Poset parse_poset(std::string_view text) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> pairs;
  auto element = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(name);
    return it->second;
  };
  for (const auto& line : tokenize(text)) {
    const auto& w = line.words;
    if (w[0] == "element") {
      expect_arity(line, 2, "element <name>");
      element(w[1]);
    } else if (w[0] == "rel") {
      expect_arity(line, 3, "rel <a> <b>");
      const int a = element(w[1]);
      const int b = element(w[2]);
      pairs.emplace_back(a, b);
    } else {
      throw ParseError(line.number, "unknown directive '" + w[0] + "'");
    }
  }
  return Poset::from_relations(std::move(labels), pairs);
}

namespace {

boost::multiprecision::cpp_int parse_integer(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw UsageError("'" + std::string(s) + "' is not an integer");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9') throw UsageError("'" + std::string(s) + "' is not an integer");
  }
  boost::multiprecision::cpp_int v(std::string(s.substr(i)));
  return s[0] == '-' ? boost::multiprecision::cpp_int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

RationalPointSet parse_points(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> points;
  for (const auto& line : tokenize(text)) {
    const auto& w = line.words;
    if (w[0] != "point") throw ParseError(line.number, "unknown directive '" + w[0] + "'");
    if (w.size() < 3) throw ParseError(line.number, "expected 'point <name> <c1> ...'");
    if (std::find(labels.begin(), labels.end(), w[1]) != labels.end()) {
      throw ParseError(line.number, "duplicate point name '" + w[1] + "'");
    }
    std::vector<Rational> coords;
    try {
      for (std::size_t k = 2; k < w.size(); ++k) coords.push_back(parse_rational(w[k]));
    } catch (const UsageError& e) {
      throw ParseError(line.number, e.what());
    }
    if (!points.empty() && coords.size() != points.front().size()) {
      throw ParseError(line.number, "point dimension differs from the first point");
    }
    labels.push_back(w[1]);
    points.push_back(std::move(coords));
  }
  return RationalPointSet(std::move(labels), std::move(points));
}

namespace {

GroundSet ground_from_json(const json& j) {
  if (j.is_number_integer()) {
    const int n = j.get<int>();
    if (n < 0 || n > kMaxDenseElements) throw UsageError("ground size out of range");
    return GroundSet(n);
  }
  if (j.is_array()) return GroundSet(j.get<std::vector<std::string>>());
  throw UsageError("'ground' must be a size or a list of labels");
}

std::vector<Mask> codes_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw UsageError(std::string(what) + " must be an array of subset codes");
  std::vector<Mask> out;
  for (const auto& c : j) {
    if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<long long>() >= 0)) {
      throw UsageError(std::string(what) + " contains a non-code entry");
    }
    out.push_back(c.get<Mask>());
  }
  return out;
}

int bit_length(std::size_t v) {
  int n = 0;
  while (v) {
    ++n;
    v >>= 1;
  }
  return n;
}

}  // namespace

SubsetMap table_from_json(const json& j) {
  try {
    if (j.is_array()) {
      auto table = codes_from_json(j, "table");
      const int n = bit_length(table.size()) - 1;
      if (table.empty() || (std::size_t{1} << n) != table.size()) {
        throw UsageError("table length must be a power of two");
      }
      return SubsetMap(GroundSet(n), std::move(table));
    }
    if (j.is_object() && j.contains("table")) {
      auto table = codes_from_json(j.at("table"), "table");
      const int n = bit_length(table.size()) - 1;
      GroundSet ground = j.contains("ground") ? ground_from_json(j.at("ground")) : GroundSet(n);
      return SubsetMap(std::move(ground), std::move(table));
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed table JSON: ") + e.what());
  }
  throw UsageError("table JSON must be an array of codes or an object with a 'table' field");
}

json table_to_json(const SubsetMap& m) {
  return {{"ground", m.ground().labels()}, {"table", std::vector<Mask>(m.table().begin(), m.table().end())}};
}

IntervalPartition partition_from_json(const json& j) {
  try {
    const json& blocks = j.is_object() ? j.at("blocks") : j;
    if (!blocks.is_array()) throw UsageError("partition JSON must be an array of blocks");
    std::vector<IntervalBlock> out;
    Mask widest = 0;
    for (const auto& b : blocks) {
      IntervalBlock block{b.at("lower").get<Mask>(), b.at("upper").get<Mask>()};
      widest |= block.upper;
      out.push_back(block);
    }
    const int n = j.is_object() && j.contains("elements") ? j.at("elements").get<int>() : bit_length(widest);
    return IntervalPartition(n, std::move(out));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed partition JSON: ") + e.what());
  }
}

json partition_to_json(const IntervalPartition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks()) blocks.push_back({{"lower", b.lower}, {"upper", b.upper}});
  return {{"elements", p.elements()}, {"blocks", std::move(blocks)}};
}

SimplicialComplex complex_from_json(const json& j) {
  try {
    return SimplicialComplex(ground_from_json(j.at("ground")), codes_from_json(j.at("faces"), "faces"));
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed complex JSON: ") + e.what());
  } catch (const StructuralError& e) {
    throw UsageError(e.what());
  }
}

json complex_to_json(const SimplicialComplex& c) {
  return {{"ground", c.ground().labels()}, {"faces", c.faces()}};
}

MatchingTable matching_from_json(const json& j, const SimplicialComplex& c) {
  std::map<Mask, Mask> partner;
  try {
    for (const auto& p : j.at("pairs")) {
      const Mask a = p.at(0).get<Mask>();
      const Mask b = p.at(1).get<Mask>();
      if (!partner.emplace(a, b).second || (a != b && !partner.emplace(b, a).second)) {
        throw UsageError("face " + std::to_string(a) + " or " + std::to_string(b) + " is paired twice");
      }
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed matching JSON: ") + e.what());
  }
  std::vector<Mask> images;
  for (Mask f : c.faces()) {
    auto it = partner.find(f);
    if (it == partner.end()) throw UsageError("face " + c.ground().format(f) + " is unpaired");
    images.push_back(it->second);
  }
  return MatchingTable(c.element_count(), c.faces(), std::move(images));
}

}  // namespace shadelab
