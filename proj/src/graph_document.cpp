#include "pathcov/graph_document.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "json.hpp"

namespace pathcov {

using json = nlohmann::json;

namespace {

std::string require_string(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(ParseError::Kind::syntax, std::string(what) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

std::optional<Vertex> LabeledGraph::find(std::string_view label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels.begin());
}

SeseGraph LabeledGraph::sese() const {
  if (!has_terminals()) {
    SeseReport report;
    report.violations.push_back({SeseViolation::Kind::unknown_terminal, 0});
    throw NotSese(std::move(report));
  }
  return make_sese(graph, *entry, *exit);
}

GraphDocument parse_json_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::syntax, std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError(ParseError::Kind::syntax, "top-level JSON value must be an object");

  GraphDocument doc;
  if (auto it = root.find("name"); it != root.end() && !it->is_null()) doc.name = require_string(*it, "name");
  auto vertices = root.find("vertices");
  if (vertices == root.end() || !vertices->is_array()) {
    throw ParseError(ParseError::Kind::syntax, "\"vertices\" must be an array of strings");
  }
  for (const auto& v : *vertices) doc.vertices.push_back(require_string(v, "vertex label"));

  auto edges = root.find("edges");
  if (edges == root.end() || !edges->is_array()) {
    throw ParseError(ParseError::Kind::syntax, "\"edges\" must be an array of label pairs");
  }
  for (const auto& e : *edges) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError(ParseError::Kind::syntax, "each edge must be a 2-element array");
    }
    doc.edges.emplace_back(require_string(e[0], "edge endpoint"), require_string(e[1], "edge endpoint"));
  }
  if (auto it = root.find("entry"); it != root.end() && !it->is_null()) doc.entry = require_string(*it, "entry");
  if (auto it = root.find("exit"); it != root.end() && !it->is_null()) doc.exit = require_string(*it, "exit");
  return doc;
}

GraphDocument parse_document(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '{' ? GraphFormat::json : GraphFormat::dot;
  }
  return format == GraphFormat::json ? parse_json_document(text) : parse_dot_document(text);
}

LabeledGraph build_graph(GraphDocument document) {
  LabeledGraph lg;
  std::unordered_map<std::string, Vertex> index;
  for (const auto& label : document.vertices) {
    if (!index.emplace(label, static_cast<Vertex>(lg.labels.size())).second) {
      throw ParseError(ParseError::Kind::duplicate_label, "duplicate vertex label \"" + label + "\"");
    }
    lg.labels.push_back(label);
  }
  auto lookup = [&](const std::string& label, ParseError::Kind kind, const char* role) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw ParseError(kind, std::string(role) + " \"" + label + "\" is not a declared vertex");
    }
    return it->second;
  };

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& [from, to] : document.edges) {
    const Edge e{lookup(from, ParseError::Kind::unknown_endpoint, "edge endpoint"),
                 lookup(to, ParseError::Kind::unknown_endpoint, "edge endpoint")};
    if (!seen.insert(e).second) {
      throw ParseError(ParseError::Kind::duplicate_edge, "duplicate edge " + from + " -> " + to);
    }
    edges.push_back(e);
  }
  lg.graph = Digraph(lg.labels.size(), edges);
  if (document.entry) lg.entry = lookup(*document.entry, ParseError::Kind::unknown_terminal, "entry");
  if (document.exit) lg.exit = lookup(*document.exit, ParseError::Kind::unknown_terminal, "exit");
  lg.document = std::move(document);
  return lg;
}

LabeledGraph parse_graph(std::string_view text, GraphFormat format) {
  return build_graph(parse_document(text, format));
}

std::string to_json(const GraphDocument& document) {
  json root = json::object();
  if (document.name) root["name"] = *document.name;
  root["vertices"] = document.vertices;
  json edges = json::array();
  for (const auto& [from, to] : document.edges) edges.push_back({from, to});
  root["edges"] = std::move(edges);
  if (document.entry) root["entry"] = *document.entry;
  if (document.exit) root["exit"] = *document.exit;
  return root.dump();
}

std::string format_path(const Path& p, const std::vector<std::string>& labels) {
  std::string line;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) line += ',';
    line += labels[p[i]];
  }
  return line;
}

std::string format_path_ndjson(const Path& p, const std::vector<std::string>& labels) {
  json names = json::array();
  for (Vertex v : p) names.push_back(labels[v]);
  return json{{"path", std::move(names)}}.dump();
}

}  // namespace pathcov
