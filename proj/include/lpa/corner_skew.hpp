#ifndef LPA_CORNER_SKEW_HPP
#define LPA_CORNER_SKEW_HPP

#include <functional>
#include <map>

#include "lpa/element.hpp"

namespace lpa {

/// Coefficient ring R of a corner skew Laurent polynomial ring
/// R[t+, t-, phi]. Elements of R are LPA elements (degree-0 elements
/// under `one` in the realization; any commutative test stand-in works
/// as long as phi is a corner isomorphism onto p R p).
struct CornerSkewRing {
  GraphPtr graph;
  Field field;
  Element one; // identity of R
  Element p;   // phi(one)
  std::function<Element(const Element&)> phi;
  std::function<Element(const Element&)> phiInv; // inverse on p R p

  /// p_n = phi^n(1); p_0 = 1.
  const Element& p_pow(int n) const;

  static CornerSkewRing trivial(GraphPtr g, Field f); // p = 1, phi = id

  mutable std::vector<Element> pCache_; // internal: phi^n(1) cache
};

/// Formal expression sum_i X_i(r_i) where X_i(r) is r t+^i for i > 0,
/// t-^{-i} r for i < 0 and r itself at i = 0, subject to r_i p_i = r_i
/// (i > 0) and p_{-i} r_i = r_i (i < 0).
struct CornerSkewElement {
  std::map<int, Element> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  bool operator==(const CornerSkewElement& o) const { return coeffs == o.coeffs; }
};

CornerSkewElement cs_zero();
/// Checked construction of a single graded component; throws
/// InternalInvariantBreach when the coefficient constraint fails.
CornerSkewElement cs_term(const CornerSkewRing& ring, int i, const Element& r);

CornerSkewElement cs_add(const CornerSkewElement& a, const CornerSkewElement& b);
CornerSkewElement cs_mul(const CornerSkewRing& ring, const CornerSkewElement& a,
                         const CornerSkewElement& b);
CornerSkewElement cs_degree_component(const CornerSkewElement& a, int i);

std::string cs_to_string(const CornerSkewElement& a);

/// Inner inverse of an element concentrated in one degree, from a
/// degree-0 inner-inverse routine for R.
CornerSkewElement cs_witness(const CornerSkewRing& ring,
                             const CornerSkewElement& a,
                             const std::function<Element(const Element&)>& zeroWitness);

/// L(E) = L(E)_0[t+, t-, phi] for a finite graph without sources:
/// t+ = sum of one chosen in-edge per vertex, phi(a) = t+ a t-.
struct LpaRealization {
  CornerSkewRing ring;
  Element tPlus, tMinus;
  std::vector<int> chosenEdges; // per vertex

  Element to_lpa(const CornerSkewElement& a) const;
  CornerSkewElement from_lpa(const Element& x) const;
};

LpaRealization realize_lpa(const GraphPtr& g, Field f);

} // namespace lpa

#endif
