#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

class DirectedGraph;
using GraphPtr = std::shared_ptr<const DirectedGraph>;

enum class VertexLabel { Source, Sink, Regular, InfiniteEmitter, Isolated };

std::string to_string(VertexLabel l);

/// A path: a start vertex plus a composable edge sequence. The empty
/// sequence is the trivial path at `start`.
struct Path {
  int start = -1;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  bool trivial() const { return edges.empty(); }
  bool operator==(const Path&) const = default;
};

/// Finite directed graph. Vertices and edges are referenced by dense
/// indices; names are kept for I/O. Immutable once built.
class DirectedGraph {
public:
  class Builder;

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edge_names_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::string& edge_name(int e) const { return edge_names_[e]; }
  int vertex(const std::string& name) const;      // throws UnknownVertex
  int edge(const std::string& name) const;        // throws UnknownEdge
  int find_vertex(const std::string& name) const; // -1 when absent
  int find_edge(const std::string& name) const;

  int source(int e) const { return edge_src_[e]; }
  int range(int e) const { return edge_dst_[e]; }

  /// Out-edges in declaration order (the listed order of an infinite
  /// emitter's truncation).
  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_edges_[v]; }

  bool infinite_emitter(int v) const { return infinite_flag_[v]; }
  bool is_regular(int v) const {
    return !infinite_flag_[v] && !out_edges_[v].empty();
  }

  /// Rank of an edge name in the lexicographic order of all edge names;
  /// fixes the distinguished-edge choice used by rewriting.
  int edge_lex_rank(int e) const { return edge_lex_rank_[e]; }

  /// The lexicographically last out-edge of v, or -1 if v emits nothing.
  int distinguished_out_edge(int v) const { return distinguished_[v]; }

  std::set<VertexLabel> classify_vertex(int v) const;
  std::set<VertexLabel> classify_vertex(const std::string& name) const;

  bool is_acyclic() const;

  /// All paths of length <= maxLen: trivial paths first (by vertex name),
  /// then by (length, lexicographic edge names).
  std::vector<Path> enumerate_paths(int maxLen) const;

  bool valid_path(const Path& p) const;
  int path_source(const Path& p) const { return p.start; }
  int path_range(const Path& p) const {
    return p.edges.empty() ? p.start : edge_dst_[p.edges.back()];
  }

  std::string path_name(const Path& p) const;

  /// Serializes back to the graph file format.
  std::string to_file_format() const;

private:
  friend class Builder;
  DirectedGraph() = default;

  std::vector<std::string> vertex_names_, edge_names_;
  std::vector<int> edge_src_, edge_dst_;
  std::vector<std::vector<int>> out_edges_, in_edges_;
  std::vector<char> infinite_flag_;
  std::vector<int> edge_lex_rank_, distinguished_;
  std::map<std::string, int> vertex_index_, edge_index_;
};

class DirectedGraph::Builder {
public:
  /// `internal` permits the reserved "~tail:" prefix used by transforms.
  explicit Builder(bool internal = false) : internal_(internal) {}

  Builder& add_vertex(const std::string& name);
  Builder& add_edge(const std::string& name, const std::string& src,
                    const std::string& dst);
  Builder& flag_infinite(const std::string& vertex);
  GraphPtr build();

private:
  void check_name(const std::string& name, int line);
  friend GraphPtr parse_graph(std::istream& in);
  bool internal_;
  std::unique_ptr<DirectedGraph> g_ = std::unique_ptr<DirectedGraph>(new DirectedGraph());
  std::vector<std::string> flagged_;
};

/// Graph file format: `vertex <id>`, `edge <id>: <src> -> <dst>`,
/// `infinite <id>`, `#` comments. Strict: endpoints must be declared.
GraphPtr parse_graph(std::istream& in);
GraphPtr parse_graph_string(const std::string& text);
GraphPtr load_graph_file(const std::string& path);

} // namespace lpa

#endif
