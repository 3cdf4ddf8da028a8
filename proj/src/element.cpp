#include "lpa/element.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace lpa {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  int la = a.mu.length() + a.nu.length();
  int lb = b.mu.length() + b.nu.length();
  if (la != lb) return la < lb;
  auto path_cmp = [&](const Path& p, const Path& q) -> int {
    if (p.length() != q.length()) return p.length() < q.length() ? -1 : 1;
    for (int i = 0; i < p.length(); ++i) {
      int ra = g->edge_lex_rank(p.edges[i]), rb = g->edge_lex_rank(q.edges[i]);
      if (ra != rb) return ra < rb ? -1 : 1;
    }
    if (p.start != q.start)
      return g->vertex_name(p.start) < g->vertex_name(q.start) ? -1 : 1;
    return 0;
  };
  int c = path_cmp(a.mu, b.mu);
  if (c != 0) return c < 0;
  return path_cmp(a.nu, b.nu) < 0;
}

Element::Element(GraphPtr g, Field f)
    : graph_(std::move(g)), field_(f), terms_(MonomialLess{graph_.get()}) {}

int Element::max_monomial_length() const {
  int best = 0;
  for (const auto& [m, c] : terms_)
    best = std::max(best, m.mu.length() + m.nu.length());
  return best;
}

bool Element::operator==(const Element& o) const {
  check_compatible(o);
  return terms_ == o.terms_;
}

void Element::check_compatible(const Element& o) const {
  if (graph_.get() != o.graph_.get() || !(field_ == o.field_))
    throw AlgebraMismatch("elements over different algebras");
}

void Element::accumulate(const Monomial& m, const Scalar& c) {
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

// CK2 reduction: whenever mu and nu both end in the distinguished
// out-edge e of a regular vertex v, rewrite
//   mu' e e^* nu'^*  ->  mu' nu'^*  -  sum_{f != e, s(f)=v} (mu' f)(nu' f)^*.
// The first branch is shorter; the others are irreducible at the top,
// so the recursion terminates.
void Element::add_reduced(const Path& mu, const Path& nu, const Scalar& c) {
  if (c.is_zero()) return;
  const DirectedGraph& g = *graph_;
  if (g.path_range(mu) != g.path_range(nu)) return; // r(mu) r(nu) = 0
  if (!mu.trivial() && !nu.trivial() && mu.edges.back() == nu.edges.back()) {
    int e = mu.edges.back();
    int v = g.source(e);
    if (g.is_regular(v) && g.distinguished_out_edge(v) == e) {
      Path mu2 = mu, nu2 = nu;
      mu2.edges.pop_back();
      nu2.edges.pop_back();
      add_reduced(mu2, nu2, c);
      for (int f : g.out_edges(v)) {
        if (f == e) continue;
        Path muf = mu2, nuf = nu2;
        muf.edges.push_back(f);
        nuf.edges.push_back(f);
        add_reduced(muf, nuf, -c);
      }
      return;
    }
  }
  accumulate(Monomial{mu, nu}, c);
}

Element Element::operator+(const Element& o) const {
  check_compatible(o);
  Element out(*this);
  for (const auto& [m, c] : o.terms_) out.accumulate(m, c);
  return out;
}

Element Element::operator-(const Element& o) const {
  check_compatible(o);
  Element out(*this);
  for (const auto& [m, c] : o.terms_) out.accumulate(m, -c);
  return out;
}

Element Element::operator-() const {
  Element out(graph_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

namespace {

// nu^* c: nonzero iff one of nu, c is a prefix of the other.
bool is_prefix(const Path& p, const Path& q) {
  if (p.start != q.start || p.length() > q.length()) return false;
  return std::equal(p.edges.begin(), p.edges.end(), q.edges.begin());
}

Path compose(const Path& p, const Path& q, std::size_t from) {
  Path out = p;
  out.edges.insert(out.edges.end(), q.edges.begin() + from, q.edges.end());
  return out;
}

} // namespace

Element Element::operator*(const Element& o) const {
  check_compatible(o);
  Element out(graph_, field_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      // (a b^*)(c d^*)
      const Path &a = m1.mu, &b = m1.nu, &c = m2.mu, &d = m2.nu;
      if (is_prefix(b, c)) {
        out.add_reduced(compose(a, c, b.edges.size()), d, c1 * c2);
      } else if (is_prefix(c, b)) {
        out.add_reduced(a, compose(d, b, c.edges.size()), c1 * c2);
      }
    }
  }
  return out;
}

void ElementBuilder::add(const Path& mu, const Path& nu, const Scalar& c) {
  if (!e_.graph()->valid_path(mu) || !e_.graph()->valid_path(nu))
    throw UnknownPath("path not in graph");
  e_.add_reduced(mu, nu, c);
}

void ElementBuilder::add(const Element& x) { e_ = e_ + x; }

Element zero_element(const GraphPtr& g, Field f) { return Element(g, f); }

Element monomial(const GraphPtr& g, Field f, const Path& mu, const Path& nu,
                 const Scalar& c) {
  if (!g->valid_path(mu) || !g->valid_path(nu))
    throw UnknownPath("path not in graph");
  Element out(g, f);
  out.add_reduced(mu, nu, c);
  return out;
}

Element vertex_element(const GraphPtr& g, Field f, int v) {
  return monomial(g, f, Path{v, {}}, Path{v, {}}, Scalar::one(f));
}

Element edge_element(const GraphPtr& g, Field f, int e) {
  return monomial(g, f, Path{g->source(e), {e}}, Path{g->range(e), {}},
                  Scalar::one(f));
}

Element ghost_element(const GraphPtr& g, Field f, int e) {
  return monomial(g, f, Path{g->range(e), {}}, Path{g->source(e), {e}},
                  Scalar::one(f));
}

Element identity_element(const GraphPtr& g, Field f) {
  Element out(g, f);
  for (int v = 0; v < g->vertex_count(); ++v)
    out = out + vertex_element(g, f, v);
  return out;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }

Element scale(const Scalar& c, const Element& a) {
  Element out(a.graph(), a.field());
  if (c.is_zero()) return out;
  for (const auto& [m, s] : a.terms()) out.accumulate(m, c * s);
  return out;
}

Element star(const Element& a) {
  Element out(a.graph(), a.field());
  for (const auto& [m, c] : a.terms()) out.add_reduced(m.nu, m.mu, c);
  return out;
}

long long monomial_degree(const DirectedGraph& g, const Monomial& m,
                          const WeightGrading* w) {
  if (!w) return m.mu.length() - m.nu.length();
  long long d = 0;
  for (int e : m.mu.edges) d += w->weight[e];
  for (int e : m.nu.edges) d -= w->weight[e];
  return d;
}

long long degree(const Element& a, const WeightGrading* w) {
  if (a.is_zero()) throw ZeroHasNoDegree("zero element");
  bool first = true;
  long long d = 0;
  for (const auto& [m, c] : a.terms()) {
    long long dm = monomial_degree(*a.graph(), m, w);
    if (first) {
      d = dm;
      first = false;
    } else if (dm != d) {
      throw NotHomogeneous("mixed degrees " + std::to_string(d) + " and " +
                           std::to_string(dm));
    }
  }
  return d;
}

bool is_homogeneous(const Element& a, const WeightGrading* w) {
  if (a.is_zero()) return false;
  try {
    degree(a, w);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::map<long long, Element> homogeneous_components(const Element& a,
                                                    const WeightGrading* w) {
  std::map<long long, Element> out;
  for (const auto& [m, c] : a.terms()) {
    long long d = monomial_degree(*a.graph(), m, w);
    auto it = out.find(d);
    if (it == out.end())
      it = out.emplace(d, zero_element(a.graph(), a.field())).first;
    it->second = it->second + monomial(a.graph(), a.field(), m.mu, m.nu, c);
  }
  return out;
}

std::vector<Monomial> basis_monomials(const GraphPtr& g, long long deg,
                                      int maxLen, const WeightGrading* w) {
  std::vector<Monomial> out;
  auto paths = g->enumerate_paths(maxLen);
  // group by range vertex
  std::vector<std::vector<const Path*>> by_range(g->vertex_count());
  for (const auto& p : paths) by_range[g->path_range(p)].push_back(&p);
  for (int v = 0; v < g->vertex_count(); ++v) {
    for (const Path* mu : by_range[v]) {
      for (const Path* nu : by_range[v]) {
        if (mu->length() + nu->length() > maxLen) continue;
        Monomial m{*mu, *nu};
        if (monomial_degree(*g, m, w) != deg) continue;
        if (!mu->trivial() && !nu->trivial() &&
            mu->edges.back() == nu->edges.back()) {
          int e = mu->edges.back();
          if (g->is_regular(g->source(e)) &&
              g->distinguished_out_edge(g->source(e)) == e)
            continue; // reducible
        }
        out.push_back(std::move(m));
      }
    }
  }
  std::sort(out.begin(), out.end(), MonomialLess{g.get()});
  return out;
}

Element local_unit(const std::vector<Element>& xs) {
  if (xs.empty()) throw NotApplicable("local_unit of empty list");
  const GraphPtr& g = xs.front().graph();
  Field f = xs.front().field();
  std::set<int> vs;
  for (const Element& x : xs) {
    if (x.graph().get() != g.get()) throw AlgebraMismatch("mixed graphs");
    for (const auto& [m, c] : x.terms()) {
      vs.insert(m.mu.start);
      vs.insert(m.nu.start);
      vs.insert(g->path_range(m.mu));
    }
  }
  Element out(g, f);
  for (int v : vs) out = out + vertex_element(g, f, v);
  return out;
}

std::string to_string(const DirectedGraph& g, const Monomial& m) {
  if (m.mu.trivial() && m.nu.trivial()) return g.vertex_name(m.mu.start);
  std::string s;
  bool first = true;
  for (int e : m.mu.edges) {
    if (!first) s += '.';
    s += g.edge_name(e);
    first = false;
  }
  for (auto it = m.nu.edges.rbegin(); it != m.nu.edges.rend(); ++it) {
    if (!first) s += '.';
    s += g.edge_name(*it) + "^*";
    first = false;
  }
  return s;
}

std::string to_string(const Element& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : a.terms()) {
    if (!s.empty()) s += " + ";
    std::string cs = c.to_string();
    if (c.is_negative()) cs = "(" + cs + ")";
    s += cs + "*" + to_string(*a.graph(), m);
  }
  return s;
}

std::string Element::to_string() const { return lpa::to_string(*this); }

namespace {

void strip_ws(std::string& t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front())))
    t.erase(t.begin());
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back())))
    t.pop_back();
}

Element parse_term(const GraphPtr& g, Field f, std::string text) {
  strip_ws(text);
  if (text.empty()) throw parse_error("empty term");
  Scalar c = Scalar::one(f);
  // the scalar separator is a '*' not preceded by '^'
  std::size_t sep = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] == '*' && (i == 0 || text[i - 1] != '^')) {
      sep = i;
      break;
    }
  std::string factors = text;
  if (sep != std::string::npos) {
    c = Scalar::parse(f, text.substr(0, sep));
    factors = text.substr(sep + 1);
    strip_ws(factors);
  }
  if (factors.empty()) throw parse_error("missing generators in term");
  Element acc = zero_element(g, f); // replaced on first factor
  bool first = true;
  std::size_t pos = 0;
  while (pos <= factors.size()) {
    auto dot = factors.find('.', pos);
    std::string fac = factors.substr(pos, dot == std::string::npos
                                              ? std::string::npos
                                              : dot - pos);
    strip_ws(fac);
    if (fac.empty()) throw parse_error("empty factor in '" + factors + "'");
    bool ghost = false;
    if (fac.size() >= 2 && fac.substr(fac.size() - 2) == "^*") {
      ghost = true;
      fac = fac.substr(0, fac.size() - 2);
      strip_ws(fac);
    }
    Element gen = zero_element(g, f);
    int v = g->find_vertex(fac);
    if (v >= 0) {
      gen = vertex_element(g, f, v); // v^* = v
    } else {
      int e = g->find_edge(fac);
      if (e < 0)
        throw UnknownEdge("unknown generator '" + fac + "'");
      gen = ghost ? ghost_element(g, f, e) : edge_element(g, f, e);
    }
    acc = first ? gen : acc * gen;
    first = false;
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return scale(c, acc);
}

} // namespace

Element parse_element(const GraphPtr& g, Field f, const std::string& text) {
  std::string t = text;
  strip_ws(t);
  if (t == "0") return zero_element(g, f);
  Element acc = zero_element(g, f);
  std::size_t pos = 0;
  int depth = 0;
  std::size_t start = 0;
  for (; pos <= t.size(); ++pos) {
    if (pos == t.size() || (t[pos] == '+' && depth == 0)) {
      acc = acc + parse_term(g, f, t.substr(start, pos - start));
      start = pos + 1;
    } else if (t[pos] == '(') {
      ++depth;
    } else if (t[pos] == ')') {
      --depth;
    }
  }
  return acc;
}

} // namespace lpa
