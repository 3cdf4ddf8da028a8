#ifndef LPA_ELEMENT_HPP
#define LPA_ELEMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

/// Optional Z-valued edge weights; the canonical grading is weight 1 on
/// every edge. Ghost edges implicitly carry the negated weight,
/// vertices weight 0.
struct WeightGrading {
  std::vector<long long> weight; // indexed by edge

  static WeightGrading canonical(const DirectedGraph& g) {
    return WeightGrading{std::vector<long long>(g.edge_count(), 1)};
  }
};

/// A normal-form monomial mu nu^*: r(mu) = r(nu) and the pair is not
/// reducible at the top, i.e. mu and nu do not both end in the
/// distinguished out-edge of a regular vertex.
struct Monomial {
  Path mu, nu;
  bool operator==(const Monomial&) const = default;
};

/// Deterministic monomial order: by total length, then mu, then nu
/// (paths compared by length, then edge names, then start vertex name).
struct MonomialLess {
  const DirectedGraph* g;
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// An element of L_K(E) kept permanently in normal form: a finite map
/// from normal-form monomials to nonzero scalars.
class Element {
public:
  using TermMap = std::map<Monomial, Scalar, MonomialLess>;

  Element(GraphPtr g, Field f);

  const GraphPtr& graph() const { return graph_; }
  const Field& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Longest |mu|+|nu| over the support; 0 for the zero element.
  int max_monomial_length() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;

  std::string to_string() const;

private:
  friend Element monomial(const GraphPtr&, Field, const Path&, const Path&,
                          const Scalar&);
  friend Element star(const Element&);
  friend Element scale(const Scalar&, const Element&);
  friend class ElementBuilder;

  void add_reduced(const Path& mu, const Path& nu, const Scalar& c);
  void accumulate(const Monomial& m, const Scalar& c);
  void check_compatible(const Element& o) const;

  GraphPtr graph_;
  Field field_;
  TermMap terms_;
};

/// Accumulates (possibly reducible) mu nu^* terms and normalizes.
class ElementBuilder {
public:
  ElementBuilder(GraphPtr g, Field f) : e_(std::move(g), f) {}
  void add(const Path& mu, const Path& nu, const Scalar& c);
  void add(const Element& x);
  Element take() { return std::move(e_); }
private:
  Element e_;
};

// --- constructors -----------------------------------------------------

Element zero_element(const GraphPtr& g, Field f);
/// Normal form of c * mu nu^*; zero when r(mu) != r(nu).
Element monomial(const GraphPtr& g, Field f, const Path& mu, const Path& nu,
                 const Scalar& c);
Element vertex_element(const GraphPtr& g, Field f, int v);
Element edge_element(const GraphPtr& g, Field f, int e);
Element ghost_element(const GraphPtr& g, Field f, int e);
/// Sum of all vertices; the identity when the graph is finite.
Element identity_element(const GraphPtr& g, Field f);

// --- operations -------------------------------------------------------

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element scale(const Scalar& c, const Element& a);
Element star(const Element& a);

long long monomial_degree(const DirectedGraph& g, const Monomial& m,
                          const WeightGrading* w = nullptr);

/// Common degree of all terms; NotHomogeneous if mixed, ZeroHasNoDegree
/// on zero.
long long degree(const Element& a, const WeightGrading* w = nullptr);
bool is_homogeneous(const Element& a, const WeightGrading* w = nullptr);

std::map<long long, Element> homogeneous_components(const Element& a,
                                                    const WeightGrading* w = nullptr);

/// All normal-form monomials of the given degree with |mu|+|nu| <= maxLen,
/// in the deterministic monomial order.
std::vector<Monomial> basis_monomials(const GraphPtr& g, long long deg,
                                      int maxLen, const WeightGrading* w = nullptr);

/// Sum of the distinct vertices meeting the supports: a homogeneous
/// degree-0 idempotent u with u x = x u = x for every input.
Element local_unit(const std::vector<Element>& xs);

// --- I/O --------------------------------------------------------------

/// Canonical syntax: terms joined by " + ", each "<scalar>*<factors>"
/// where factors are '.'-joined generators and ghosts carry "^*",
/// e.g. "1*e.f^* + (-1/2)*v". "0" is the zero element.
std::string to_string(const Element& a);
Element parse_element(const GraphPtr& g, Field f, const std::string& text);

std::string to_string(const DirectedGraph& g, const Monomial& m);

} // namespace lpa

#endif
