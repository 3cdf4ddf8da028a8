#include "lpa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

namespace lpa {

std::string to_string(VertexLabel l) {
  switch (l) {
    case VertexLabel::Source: return "source";
    case VertexLabel::Sink: return "sink";
    case VertexLabel::Regular: return "regular";
    case VertexLabel::InfiniteEmitter: return "infinite_emitter";
    case VertexLabel::Isolated: return "isolated";
  }
  return "?";
}

int DirectedGraph::vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw UnknownVertex(name);
  return it->second;
}

int DirectedGraph::edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) throw UnknownEdge(name);
  return it->second;
}

int DirectedGraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  return it == vertex_index_.end() ? -1 : it->second;
}

int DirectedGraph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  return it == edge_index_.end() ? -1 : it->second;
}

std::set<VertexLabel> DirectedGraph::classify_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) throw UnknownVertex(std::to_string(v));
  std::set<VertexLabel> out;
  bool no_out = out_edges_[v].empty();
  bool no_in = in_edges_[v].empty();
  if (infinite_flag_[v]) {
    out.insert(VertexLabel::InfiniteEmitter);
  } else if (no_out) {
    out.insert(VertexLabel::Sink);
  } else {
    out.insert(VertexLabel::Regular);
  }
  if (no_in) out.insert(VertexLabel::Source);
  if (no_in && no_out && !infinite_flag_[v]) out.insert(VertexLabel::Isolated);
  return out;
}

std::set<VertexLabel> DirectedGraph::classify_vertex(const std::string& name) const {
  return classify_vertex(vertex(name));
}

bool DirectedGraph::is_acyclic() const {
  // iterative three-color DFS
  std::vector<int> color(vertex_count(), 0);
  for (int root = 0; root < vertex_count(); ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < out_edges_[v].size()) {
        int w = edge_dst_[out_edges_[v][i++]];
        if (color[w] == 1) return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

std::vector<Path> DirectedGraph::enumerate_paths(int maxLen) const {
  std::vector<int> vorder(vertex_count());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
    return vertex_names_[a] < vertex_names_[b];
  });
  std::vector<Path> out, frontier;
  for (int v : vorder) {
    out.push_back(Path{v, {}});
    frontier.push_back(Path{v, {}});
  }
  for (int len = 1; len <= maxLen; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      int v = path_range(p);
      for (int e : out_edges_[v]) {
        Path q = p;
        q.edges.push_back(e);
        next.push_back(std::move(q));
      }
    }
    std::sort(next.begin(), next.end(), [&](const Path& a, const Path& b) {
      for (std::size_t i = 0; i < a.edges.size(); ++i) {
        if (a.edges[i] != b.edges[i])
          return edge_lex_rank_[a.edges[i]] < edge_lex_rank_[b.edges[i]];
      }
      return false;
    });
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

bool DirectedGraph::valid_path(const Path& p) const {
  if (p.start < 0 || p.start >= vertex_count()) return false;
  int at = p.start;
  for (int e : p.edges) {
    if (e < 0 || e >= edge_count() || edge_src_[e] != at) return false;
    at = edge_dst_[e];
  }
  return true;
}

std::string DirectedGraph::path_name(const Path& p) const {
  if (p.edges.empty()) return vertex_names_[p.start];
  std::string s;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) s += '.';
    s += edge_names_[p.edges[i]];
  }
  return s;
}

std::string DirectedGraph::to_file_format() const {
  std::ostringstream os;
  for (const auto& v : vertex_names_) os << "vertex " << v << "\n";
  for (int v = 0; v < vertex_count(); ++v)
    if (infinite_flag_[v]) os << "infinite " << vertex_names_[v] << "\n";
  for (int e = 0; e < edge_count(); ++e)
    os << "edge " << edge_names_[e] << ": " << vertex_names_[edge_src_[e]]
       << " -> " << vertex_names_[edge_dst_[e]] << "\n";
  return os.str();
}

void DirectedGraph::Builder::check_name(const std::string& name, int line) {
  if (name.empty()) throw parse_error("empty identifier", line);
  bool reserved = name.rfind("~tail:", 0) == 0;
  if (!internal_ && reserved)
    throw parse_error("identifier prefix '~tail:' is reserved: " + name, line);
  for (char c : name)
    if (c == ' ' || c == '\t' || c == '.' || c == '*' || c == '^' || c == '+' ||
        c == '(' || c == ')' || (c == ':' && !reserved) || c == ',')
      throw parse_error("illegal character in identifier '" + name + "'", line);
}

DirectedGraph::Builder& DirectedGraph::Builder::add_vertex(const std::string& name) {
  check_name(name, 0);
  if (g_->vertex_index_.count(name) || g_->edge_index_.count(name))
    throw DuplicateIdentifier(name);
  g_->vertex_index_[name] = static_cast<int>(g_->vertex_names_.size());
  g_->vertex_names_.push_back(name);
  g_->out_edges_.emplace_back();
  g_->in_edges_.emplace_back();
  g_->infinite_flag_.push_back(0);
  return *this;
}

DirectedGraph::Builder& DirectedGraph::Builder::add_edge(const std::string& name,
                                                         const std::string& src,
                                                         const std::string& dst) {
  check_name(name, 0);
  if (g_->vertex_index_.count(name) || g_->edge_index_.count(name))
    throw DuplicateIdentifier(name);
  auto s = g_->vertex_index_.find(src);
  if (s == g_->vertex_index_.end()) throw DanglingEndpoint(src);
  auto d = g_->vertex_index_.find(dst);
  if (d == g_->vertex_index_.end()) throw DanglingEndpoint(dst);
  int e = static_cast<int>(g_->edge_names_.size());
  g_->edge_index_[name] = e;
  g_->edge_names_.push_back(name);
  g_->edge_src_.push_back(s->second);
  g_->edge_dst_.push_back(d->second);
  g_->out_edges_[s->second].push_back(e);
  g_->in_edges_[d->second].push_back(e);
  return *this;
}

DirectedGraph::Builder& DirectedGraph::Builder::flag_infinite(const std::string& vertex) {
  flagged_.push_back(vertex);
  return *this;
}

GraphPtr DirectedGraph::Builder::build() {
  for (const auto& name : flagged_) {
    auto it = g_->vertex_index_.find(name);
    if (it == g_->vertex_index_.end()) throw UnknownVertex(name);
    if (g_->out_edges_[it->second].empty())
      throw parse_error("flagged infinite emitter '" + name + "' has no listed out-edge");
    g_->infinite_flag_[it->second] = 1;
  }
  // lexicographic ranks of edge names
  int m = g_->edge_count();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g_->edge_names_[a] < g_->edge_names_[b];
  });
  g_->edge_lex_rank_.assign(m, 0);
  for (int r = 0; r < m; ++r) g_->edge_lex_rank_[order[r]] = r;
  g_->distinguished_.assign(g_->vertex_count(), -1);
  for (int v = 0; v < g_->vertex_count(); ++v) {
    int best = -1;
    for (int e : g_->out_edges_[v])
      if (best == -1 || g_->edge_lex_rank_[e] > g_->edge_lex_rank_[best]) best = e;
    g_->distinguished_[v] = best;
  }
  return GraphPtr(g_.release());
}

GraphPtr parse_graph(std::istream& in) {
  DirectedGraph::Builder b;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    try {
      if (kw == "vertex") {
        std::string id;
        if (!(ls >> id)) throw parse_error("expected: vertex <id>", lineno);
        b.add_vertex(id);
      } else if (kw == "edge") {
        std::string id, src, arrow, dst;
        if (!(ls >> id >> src >> arrow >> dst) || arrow != "->")
          throw parse_error("expected: edge <id>: <src> -> <dst>", lineno);
        if (id.empty() || id.back() != ':')
          throw parse_error("expected ':' after edge id", lineno);
        id.pop_back();
        b.add_edge(id, src, dst);
      } else if (kw == "infinite") {
        std::string id;
        if (!(ls >> id)) throw parse_error("expected: infinite <vertexId>", lineno);
        b.flag_infinite(id);
      } else {
        throw parse_error("unknown directive '" + kw + "'", lineno);
      }
      std::string extra;
      if (ls >> extra) throw parse_error("trailing tokens", lineno);
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("SyntaxError: line", 0) == 0) throw;
      throw Error(e.kind(), e.code(),
                  "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return b.build();
}

GraphPtr parse_graph_string(const std::string& text) {
  std::istringstream is(text);
  return parse_graph(is);
}

GraphPtr load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "IOError", "cannot open " + path);
  return parse_graph(in);
}

} // namespace lpa
