#ifndef PATHCOV_GRAPH_DOCUMENT_HPP
#define PATHCOV_GRAPH_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathcov/digraph.hpp"
#include "pathcov/path.hpp"
#include "pathcov/sese.hpp"

namespace pathcov {

/// Serialized form of G = (V, E, s, t).
///
/// JSON layout:
///   {"name": "...", "vertices": ["s", ...], "edges": [["s", "a"], ...],
///    "entry": "s", "exit": "t"}
/// with "name", "entry" and "exit" optional.
struct GraphDocument {
  std::optional<std::string> name;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::string> entry;
  std::optional<std::string> exit;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

class ParseError : public Error {
 public:
  enum class Kind { syntax, unknown_endpoint, duplicate_edge, duplicate_label, unknown_terminal };

  ParseError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class GraphFormat { automatic, json, dot };

/// Graph built from a document; vertex i carries labels[i] (order of first
/// appearance in the document).
struct LabeledGraph {
  GraphDocument document;
  Digraph graph;
  std::vector<std::string> labels;
  std::optional<Vertex> entry;
  std::optional<Vertex> exit;

  bool has_terminals() const { return entry.has_value() && exit.has_value(); }
  std::optional<Vertex> find(std::string_view label) const;

  /// Throws NotSese when the terminals are missing or the graph violates SESE.
  SeseGraph sese() const;
};

GraphDocument parse_json_document(std::string_view text);

/// Read-only DOT subset: a `digraph` block of `a -> b;` chains, node
/// statements, and ignored attribute lists, with // /* */ # comments.
/// Identifiers, numerals and double-quoted strings are accepted as names.
GraphDocument parse_dot_document(std::string_view text);

GraphDocument parse_document(std::string_view text, GraphFormat format = GraphFormat::automatic);

/// Validates labels and edges and builds the graph. Throws ParseError.
LabeledGraph build_graph(GraphDocument document);

LabeledGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::automatic);

std::string to_json(const GraphDocument& document);

/// Labels joined by commas, e.g. "s,a,t".
std::string format_path(const Path& p, const std::vector<std::string>& labels);
/// {"path":["s","a","t"]}
std::string format_path_ndjson(const Path& p, const std::vector<std::string>& labels);

}  // namespace pathcov

#endif  // PATHCOV_GRAPH_DOCUMENT_HPP
