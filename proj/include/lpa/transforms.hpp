#ifndef LPA_TRANSFORMS_HPP
#define LPA_TRANSFORMS_HPP

#include <functional>
#include <string>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

/// Graded algebra homomorphism L(domain) -> L(codomain) given on
/// generators; extended linearly and multiplicatively over monomials.
struct Embedding {
  GraphPtr domain, codomain;
  Field field;
  std::vector<Element> vertexImage; // by domain vertex
  std::vector<Element> edgeImage;   // by domain edge
  std::vector<Element> ghostImage;  // by domain edge

  Element apply(const Element& x) const;
  static Embedding identity_into(const GraphPtr& dom, const GraphPtr& cod,
                                 Field f);
};

struct SourceRemoval {
  GraphPtr result;
  Embedding emb;
  Element cornerIdempotent; // p = sum of surviving vertices, in L(domain)
  Element removedVertex;    // v as an element of L(domain)
  Element fullnessCertificate; // sum_{s(f)=v} f r(f) f^*, must equal v
};

/// Deletes a non-isolated source v and its out-edges.
SourceRemoval remove_source(const GraphPtr& g, Field f, const std::string& v);

/// Deletes an isolated vertex (its vertex spans a copy of K in degree 0).
GraphPtr remove_isolated(const GraphPtr& g, const std::string& v);

struct SourceEliminationMove {
  enum Kind { RemovedSource, RemovedIsolated } kind;
  std::string vertex;
};

struct SourceElimination {
  GraphPtr result;
  std::vector<SourceEliminationMove> log;
};

/// Repeatedly removes sources and isolated vertices; a final lone
/// isolated vertex is kept.
SourceElimination remove_all_sources(const GraphPtr& g, Field f);

struct Desingularization {
  GraphPtr result;
  Embedding emb;            // L(g) -> L(result)
  WeightGrading edgeDegrees; // on the domain graph
};

/// Adds a depth-truncated tail to every sink and every flagged infinite
/// emitter; listed edge e_i is replaced by the path f_1...f_{i-1} g_i.
/// Requires depth >= listed edge count at every flagged vertex.
Desingularization desingularize(const GraphPtr& g, Field f, int depth);

/// n x n matrix of elements graded by a shift vector: a matrix is
/// homogeneous of degree d when entry (i,j) lies in A_{d + s_j - s_i}.
struct GradedMatrix {
  int n = 0;
  std::vector<long long> shifts;
  std::vector<std::vector<Element>> entries;

  static GradedMatrix zeros(const GraphPtr& g, Field f, int n,
                            std::vector<long long> shifts);
  static GradedMatrix single(const GraphPtr& g, Field f, int n,
                             std::vector<long long> shifts, int i, int j,
                             const Element& a);
  bool operator==(const GradedMatrix& o) const;
};

GradedMatrix matrix_mul(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix matrix_add(const GradedMatrix& a, const GradedMatrix& b);

/// Common degree under the shift grading; NotHomogeneous when entries
/// disagree, ZeroHasNoDegree for the zero matrix.
long long matrix_degree(const GradedMatrix& m);

/// For a single-entry homogeneous matrix e_ij(a) and an inner-inverse
/// routine for the base algebra, returns e_ji(b) with m y m = m.
GradedMatrix transport_witness(const GradedMatrix& m,
                               const std::function<Element(const Element&)>& witnessFn);

} // namespace lpa

#endif
