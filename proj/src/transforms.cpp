#include "lpa/transforms.hpp"

#include <algorithm>

namespace lpa {

Element Embedding::apply(const Element& x) const {
  if (x.graph().get() != domain.get())
    throw AlgebraMismatch("element not over the embedding's domain");
  Element acc = zero_element(codomain, field);
  for (const auto& [m, c] : x.terms()) {
    Element img = vertexImage[m.mu.start];
    for (int e : m.mu.edges) img = img * edgeImage[e];
    if (m.nu.trivial()) {
      img = img * vertexImage[m.nu.start];
    } else {
      for (auto it = m.nu.edges.rbegin(); it != m.nu.edges.rend(); ++it)
        img = img * ghostImage[*it];
    }
    acc = acc + scale(c, img);
  }
  return acc;
}

Embedding Embedding::identity_into(const GraphPtr& dom, const GraphPtr& cod,
                                   Field f) {
  Embedding emb{dom, cod, f, {}, {}, {}};
  for (int v = 0; v < dom->vertex_count(); ++v)
    emb.vertexImage.push_back(
        vertex_element(cod, f, cod->vertex(dom->vertex_name(v))));
  for (int e = 0; e < dom->edge_count(); ++e) {
    int ce = cod->edge(dom->edge_name(e));
    emb.edgeImage.push_back(edge_element(cod, f, ce));
    emb.ghostImage.push_back(ghost_element(cod, f, ce));
  }
  return emb;
}

SourceRemoval remove_source(const GraphPtr& g, Field f, const std::string& name) {
  int v = g->vertex(name);
  if (!g->in_edges(v).empty()) throw NotASource(name);
  if (g->out_edges(v).empty()) throw IsolatedVertex(name);
  DirectedGraph::Builder b(true);
  for (int u = 0; u < g->vertex_count(); ++u)
    if (u != v) b.add_vertex(g->vertex_name(u));
  for (int u = 0; u < g->vertex_count(); ++u)
    if (u != v && g->infinite_emitter(u)) b.flag_infinite(g->vertex_name(u));
  for (int e = 0; e < g->edge_count(); ++e)
    if (g->source(e) != v)
      b.add_edge(g->edge_name(e), g->vertex_name(g->source(e)),
                 g->vertex_name(g->range(e)));
  GraphPtr g2 = b.build();
  Embedding emb = Embedding::identity_into(g2, g, f);
  Element p = zero_element(g, f);
  for (int u = 0; u < g->vertex_count(); ++u)
    if (u != v) p = p + vertex_element(g, f, u);
  // v = sum_{s(f)=v} f r(f) f^*: exhibits v inside the ideal of p
  Element cert = zero_element(g, f);
  for (int e : g->out_edges(v)) {
    Element fe = edge_element(g, f, e);
    cert = cert + fe * vertex_element(g, f, g->range(e)) * star(fe);
  }
  return SourceRemoval{g2, std::move(emb), std::move(p),
                       vertex_element(g, f, v), std::move(cert)};
}

GraphPtr remove_isolated(const GraphPtr& g, const std::string& name) {
  int v = g->vertex(name);
  if (!g->in_edges(v).empty() || !g->out_edges(v).empty() ||
      g->infinite_emitter(v))
    throw NotIsolated(name);
  DirectedGraph::Builder b(true);
  for (int u = 0; u < g->vertex_count(); ++u)
    if (u != v) b.add_vertex(g->vertex_name(u));
  for (int u = 0; u < g->vertex_count(); ++u)
    if (u != v && g->infinite_emitter(u)) b.flag_infinite(g->vertex_name(u));
  for (int e = 0; e < g->edge_count(); ++e)
    b.add_edge(g->edge_name(e), g->vertex_name(g->source(e)),
               g->vertex_name(g->range(e)));
  return b.build();
}

SourceElimination remove_all_sources(const GraphPtr& g, Field f) {
  SourceElimination out{g, {}};
  for (;;) {
    const DirectedGraph& cur = *out.result;
    int isolated = -1, source = -1;
    for (int v = 0; v < cur.vertex_count(); ++v) {
      bool no_in = cur.in_edges(v).empty();
      bool no_out = cur.out_edges(v).empty() && !cur.infinite_emitter(v);
      if (no_in && no_out && isolated == -1) isolated = v;
      else if (no_in && !no_out && source == -1) source = v;
    }
    if (isolated != -1 && cur.vertex_count() > 1) {
      std::string name = cur.vertex_name(isolated);
      out.result = remove_isolated(out.result, name);
      out.log.push_back({SourceEliminationMove::RemovedIsolated, name});
    } else if (source != -1) {
      std::string name = cur.vertex_name(source);
      out.result = remove_source(out.result, f, name).result;
      out.log.push_back({SourceEliminationMove::RemovedSource, name});
    } else {
      break;
    }
  }
  return out;
}

Desingularization desingularize(const GraphPtr& g, Field f, int depth) {
  if (depth < 0) throw DepthTooSmall("negative depth");
  for (int v = 0; v < g->vertex_count(); ++v)
    if (g->infinite_emitter(v) &&
        depth < static_cast<int>(g->out_edges(v).size()))
      throw DepthTooSmall("vertex " + g->vertex_name(v) + " lists " +
                          std::to_string(g->out_edges(v).size()) +
                          " edges, depth " + std::to_string(depth));
  DirectedGraph::Builder b(true);
  for (int v = 0; v < g->vertex_count(); ++v) b.add_vertex(g->vertex_name(v));
  std::vector<int> singular;
  for (int v = 0; v < g->vertex_count(); ++v)
    if (g->infinite_emitter(v) || g->out_edges(v).empty()) singular.push_back(v);
  for (int v : singular) {
    const std::string& vn = g->vertex_name(v);
    for (int k = 1; k <= depth; ++k)
      b.add_vertex("~tail:" + vn + ":" + std::to_string(k));
  }
  // surviving original edges
  for (int e = 0; e < g->edge_count(); ++e)
    if (!g->infinite_emitter(g->source(e)))
      b.add_edge(g->edge_name(e), g->vertex_name(g->source(e)),
                 g->vertex_name(g->range(e)));
  // tails: f_k joins v_{k-1} -> v_k; g_j joins v_{j-1} -> r(e_j)
  for (int v : singular) {
    const std::string& vn = g->vertex_name(v);
    auto tail = [&](int k) {
      return k == 0 ? vn : "~tail:" + vn + ":" + std::to_string(k);
    };
    for (int k = 1; k <= depth; ++k)
      b.add_edge("~tail:" + vn + ":f" + std::to_string(k), tail(k - 1), tail(k));
    if (g->infinite_emitter(v)) {
      const auto& listed = g->out_edges(v);
      for (std::size_t j = 1; j <= listed.size(); ++j)
        b.add_edge("~tail:" + vn + ":g" + std::to_string(j),
                   tail(static_cast<int>(j) - 1),
                   g->vertex_name(g->range(listed[j - 1])));
    }
  }
  GraphPtr F = b.build();

  Embedding emb{g, F, f, {}, {}, {}};
  WeightGrading degrees{std::vector<long long>(g->edge_count(), 1)};
  for (int v = 0; v < g->vertex_count(); ++v)
    emb.vertexImage.push_back(vertex_element(F, f, F->vertex(g->vertex_name(v))));
  emb.edgeImage.reserve(g->edge_count());
  emb.ghostImage.reserve(g->edge_count());
  for (int e = 0; e < g->edge_count(); ++e) {
    int v = g->source(e);
    if (!g->infinite_emitter(v)) {
      int ce = F->edge(g->edge_name(e));
      emb.edgeImage.push_back(edge_element(F, f, ce));
      emb.ghostImage.push_back(ghost_element(F, f, ce));
      continue;
    }
    const auto& listed = g->out_edges(v);
    int i = static_cast<int>(std::find(listed.begin(), listed.end(), e) -
                             listed.begin()) + 1;
    degrees.weight[e] = i;
    const std::string& vn = g->vertex_name(v);
    Path path{F->vertex(vn), {}};
    for (int k = 1; k < i; ++k)
      path.edges.push_back(F->edge("~tail:" + vn + ":f" + std::to_string(k)));
    path.edges.push_back(F->edge("~tail:" + vn + ":g" + std::to_string(i)));
    Path trivialRange{F->path_range(path), {}};
    emb.edgeImage.push_back(
        monomial(F, f, path, trivialRange, Scalar::one(f)));
    emb.ghostImage.push_back(
        monomial(F, f, trivialRange, path, Scalar::one(f)));
  }
  return Desingularization{F, std::move(emb), std::move(degrees)};
}

GradedMatrix GradedMatrix::zeros(const GraphPtr& g, Field f, int n,
                                 std::vector<long long> shifts) {
  if (static_cast<int>(shifts.size()) != n)
    throw NotApplicable("shift vector size mismatch");
  GradedMatrix m{n, std::move(shifts), {}};
  for (int i = 0; i < n; ++i)
    m.entries.emplace_back(n, zero_element(g, f));
  return m;
}

GradedMatrix GradedMatrix::single(const GraphPtr& g, Field f, int n,
                                  std::vector<long long> shifts, int i, int j,
                                  const Element& a) {
  GradedMatrix m = zeros(g, f, n, std::move(shifts));
  m.entries[i][j] = a;
  return m;
}

bool GradedMatrix::operator==(const GradedMatrix& o) const {
  return n == o.n && shifts == o.shifts && entries == o.entries;
}

GradedMatrix matrix_mul(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.n != b.n || a.shifts != b.shifts)
    throw AlgebraMismatch("matrix shape/shift mismatch");
  GradedMatrix out = a;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Element acc = zero_element(a.entries[0][0].graph(), a.entries[0][0].field());
      for (int k = 0; k < a.n; ++k)
        acc = acc + a.entries[i][k] * b.entries[k][j];
      out.entries[i][j] = acc;
    }
  return out;
}

GradedMatrix matrix_add(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.n != b.n || a.shifts != b.shifts)
    throw AlgebraMismatch("matrix shape/shift mismatch");
  GradedMatrix out = a;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      out.entries[i][j] = a.entries[i][j] + b.entries[i][j];
  return out;
}

long long matrix_degree(const GradedMatrix& m) {
  bool found = false;
  long long deg = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      const Element& a = m.entries[i][j];
      if (a.is_zero()) continue;
      long long d = degree(a) - m.shifts[j] + m.shifts[i];
      if (!found) {
        deg = d;
        found = true;
      } else if (d != deg) {
        throw NotHomogeneous("entries of degrees " + std::to_string(deg) +
                             " and " + std::to_string(d));
      }
    }
  if (!found) throw ZeroHasNoDegree("zero matrix");
  return deg;
}

GradedMatrix transport_witness(const GradedMatrix& m,
                               const std::function<Element(const Element&)>& witnessFn) {
  int ei = -1, ej = -1;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (!m.entries[i][j].is_zero()) {
        if (ei != -1) throw MultiEntryUnsupported("matrix has several entries");
        ei = i;
        ej = j;
      }
  if (ei == -1) throw NotApplicable("zero matrix");
  const Element& a = m.entries[ei][ej];
  degree(a); // must be homogeneous
  Element b = witnessFn(a);
  GradedMatrix y = GradedMatrix::single(a.graph(), a.field(), m.n, m.shifts,
                                        ej, ei, b);
  GradedMatrix check = matrix_mul(matrix_mul(m, y), m);
  if (!(check == m))
    throw InternalInvariantBreach("transported witness failed m y m = m");
  return y;
}

} // namespace lpa
