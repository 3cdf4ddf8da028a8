#ifndef LPA_REGULARITY_HPP
#define LPA_REGULARITY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/linalg.hpp"

namespace lpa {

/// Outcome of an inner-inverse search: y with x y x = x.
struct WitnessReport {
  Element x, y;
  int lengthBound = 0;   // last bound tried
  int solvedAtBound = 0; // bound at which the solve succeeded
  bool verified = false;
};

/// Inner inverse of a homogeneous element. At each length bound the
/// candidate monomials of degree -deg(x) span a finite space on which
/// y -> x y x is linear; an exact solve of x y x = x either yields a
/// witness or the bound is raised. Default bounds: start at the longest
/// monomial of x, stop 6 lengths later.
WitnessReport find_witness(const Element& x, int startBound = -1,
                           int maxBound = -1);

/// Same engine with candidates of every degree; homogeneity is not
/// required. Succeeds for every element when the graph is acyclic; may
/// legitimately exhaust the bound otherwise.
WitnessReport find_witness_unrestricted(const Element& x, int startBound = -1,
                                        int maxBound = -1);

/// Homogeneous degree-0 idempotent e with e A = x_1 A + ... + x_k A,
/// plus exact membership certificates in both directions.
struct IdempotentCertificate {
  std::vector<Element> generators;
  Element e;
  std::vector<Element> membershipIn;  // e * x_i, must equal x_i
  std::vector<Element> membershipOut; // multipliers m_i with e = sum x_i m_i
  bool check() const;
};

IdempotentCertificate idempotent_generator(const std::vector<Element>& xs,
                                           int bound = -1);

/// Nonzero idempotent x y inside the graded right ideal x A.
Element nonzero_ideal_idempotent(const Element& x, int bound = -1);

/// One witness-search trial of the randomized suite.
struct SuiteTrial {
  int index = 0;
  long long degree = 0;
  int boundUsed = 0;
  bool verified = false;
  double elapsedMs = 0.0;
  std::string x, y;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int trials = 0, verified = 0;
  std::vector<SuiteTrial> results;
  bool passed() const { return verified == trials; }
  std::string to_json() const;
  std::string to_text() const;
};

/// Deterministically seeded sampling of random homogeneous elements
/// followed by witness search on each.
SuiteReport regularity_suite(const GraphPtr& g, Field f, int trials,
                             int termCount, int lenCap, std::uint64_t seed);

/// Random nonzero homogeneous element with <= termCount terms and
/// monomial length <= lenCap. Exposed for the test suites.
class ElementSampler {
public:
  ElementSampler(GraphPtr g, Field f, int lenCap, std::uint64_t seed);
  Element homogeneous(int termCount);
  Element arbitrary(int termCount); // possibly non-homogeneous
private:
  Element build(const std::vector<Monomial>& pool, int termCount);
  GraphPtr g_;
  Field f_;
  int lenCap_;
  std::mt19937_64 rng_;
  std::map<long long, std::vector<Monomial>> byDegree_;
  std::vector<Monomial> all_;
};

} // namespace lpa

#endif
