#include "lpa/corner_skew.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lpa {

const Element& CornerSkewRing::p_pow(int n) const {
  if (pCache_.empty()) {
    pCache_.push_back(one); // p_0 = 1
    pCache_.push_back(p);
  }
  while (static_cast<int>(pCache_.size()) <= n)
    pCache_.push_back(phi(pCache_.back()));
  return pCache_[n];
}

CornerSkewRing CornerSkewRing::trivial(GraphPtr g, Field f) {
  CornerSkewRing r{g, f, identity_element(g, f), identity_element(g, f),
                   [](const Element& a) { return a; },
                   [](const Element& a) { return a; }};
  return r;
}

CornerSkewElement cs_zero() { return CornerSkewElement{}; }

namespace {

// t+^i = p_i t+^i and t-^i = t-^i p_i, so coefficients may always be
// projected onto their constrained corner.
Element project(const CornerSkewRing& ring, int i, const Element& r) {
  if (i > 0) return r * ring.p_pow(i);
  if (i < 0) return ring.p_pow(-i) * r;
  return r;
}

void insert_term(const CornerSkewRing& ring, CornerSkewElement& acc, int i,
                 const Element& raw) {
  Element r = project(ring, i, raw);
  if ((i > 0 && !(r * ring.p_pow(i) == r)) ||
      (i < 0 && !(ring.p_pow(-i) * r == r)))
    throw InternalInvariantBreach(
        "coefficient escapes its corner at degree " + std::to_string(i) +
        " (phi is not a corner isomorphism?)");
  auto it = acc.coeffs.find(i);
  if (it == acc.coeffs.end()) {
    if (!r.is_zero()) acc.coeffs.emplace(i, std::move(r));
  } else {
    it->second = it->second + r;
    if (it->second.is_zero()) acc.coeffs.erase(it);
  }
}

Element phi_pow(const CornerSkewRing& ring, int n, Element a) {
  for (int k = 0; k < n; ++k) a = ring.phi(a);
  return a;
}

} // namespace

CornerSkewElement cs_term(const CornerSkewRing& ring, int i, const Element& r) {
  CornerSkewElement out;
  insert_term(ring, out, i, r);
  return out;
}

CornerSkewElement cs_add(const CornerSkewElement& a, const CornerSkewElement& b) {
  CornerSkewElement out = a;
  for (const auto& [i, r] : b.coeffs) {
    auto it = out.coeffs.find(i);
    if (it == out.coeffs.end()) {
      out.coeffs.emplace(i, r);
    } else {
      it->second = it->second + r;
      if (it->second.is_zero()) out.coeffs.erase(it);
    }
  }
  return out;
}

CornerSkewElement cs_mul(const CornerSkewRing& ring, const CornerSkewElement& a,
                         const CornerSkewElement& b) {
  CornerSkewElement out;
  for (const auto& [i, r] : a.coeffs) {
    for (const auto& [j, s] : b.coeffs) {
      // normalize X_i(r) X_j(s) with the rules t- t+ = 1, t+ t- = p,
      // r t- = t- phi(r), t+ r = phi(r) t+
      if (i >= 0 && j >= 0) {
        insert_term(ring, out, i + j, r * phi_pow(ring, i, s));
      } else if (i >= 0 && j < 0) {
        int m = -j;
        if (i >= m) {
          insert_term(ring, out, i - m,
                      r * phi_pow(ring, i - m, ring.p_pow(m) * s));
        } else {
          insert_term(ring, out, i - m,
                      phi_pow(ring, m - i, r * ring.p_pow(i)) * s);
        }
      } else if (i < 0 && j <= 0) {
        insert_term(ring, out, i + j, phi_pow(ring, -j, r) * s);
      } else { // i < 0, j > 0: cancel t- u t+ pairs via phi^{-1}(p u p)
        int m = -i;
        Element u = r * s;
        int k = std::min(m, j);
        for (int step = 0; step < k; ++step)
          u = ring.phiInv(ring.p * u * ring.p);
        insert_term(ring, out, i + j, u);
      }
    }
  }
  return out;
}

CornerSkewElement cs_degree_component(const CornerSkewElement& a, int i) {
  CornerSkewElement out;
  auto it = a.coeffs.find(i);
  if (it != a.coeffs.end()) out.coeffs.insert(*it);
  return out;
}

std::string cs_to_string(const CornerSkewElement& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, r] : a.coeffs) {
    if (!first) os << " + ";
    first = false;
    if (i < 0)
      os << "t-^" << -i << "*(" << to_string(r) << ")";
    else if (i == 0)
      os << "(" << to_string(r) << ")";
    else
      os << "(" << to_string(r) << ")*t+^" << i;
  }
  return os.str();
}

CornerSkewElement cs_witness(const CornerSkewRing& ring,
                             const CornerSkewElement& a,
                             const std::function<Element(const Element&)>& zeroWitness) {
  if (a.is_zero()) throw NotApplicable("witness of zero");
  if (a.coeffs.size() != 1)
    throw NotHomogeneous("element spans several degrees");
  auto [i, r] = *a.coeffs.begin();
  CornerSkewElement y;
  if (i == 0) {
    y = cs_term(ring, 0, zeroWitness(r));
  } else if (i > 0) {
    // x = r p_i t+^i, s with (r p_i) s (r p_i) = r p_i, y = t-^i p_i s
    Element s = zeroWitness(r);
    y = cs_term(ring, -i, ring.p_pow(i) * s);
  } else {
    Element s = zeroWitness(r);
    y = cs_term(ring, -i, s * ring.p_pow(-i));
  }
  CornerSkewElement aya = cs_mul(ring, cs_mul(ring, a, y), a);
  if (!(aya == a))
    throw InternalInvariantBreach("corner skew witness failed a y a = a");
  return y;
}

namespace {

Element pow_mul(const Element& base, int n, const Element& unit) {
  Element acc = unit;
  for (int k = 0; k < n; ++k) acc = acc * base;
  return acc;
}

} // namespace

Element LpaRealization::to_lpa(const CornerSkewElement& a) const {
  Element acc = zero_element(ring.graph, ring.field);
  for (const auto& [i, r] : a.coeffs) {
    if (i > 0)
      acc = acc + r * pow_mul(tPlus, i, ring.one);
    else if (i < 0)
      acc = acc + pow_mul(tMinus, -i, ring.one) * r;
    else
      acc = acc + r;
  }
  return acc;
}

CornerSkewElement LpaRealization::from_lpa(const Element& x) const {
  CornerSkewElement out;
  for (const auto& [d, xd] : homogeneous_components(x)) {
    if (d > std::numeric_limits<int>::max() || d < std::numeric_limits<int>::min())
      throw DecompositionFailure("degree out of range");
    int i = static_cast<int>(d);
    Element r = zero_element(ring.graph, ring.field);
    if (i > 0) {
      r = xd * pow_mul(tMinus, i, ring.one);
      if (!(r * pow_mul(tPlus, i, ring.one) == xd) ||
          !(r * ring.p_pow(i) == r))
        throw DecompositionFailure("degree " + std::to_string(i));
    } else if (i < 0) {
      r = pow_mul(tPlus, -i, ring.one) * xd;
      if (!(pow_mul(tMinus, -i, ring.one) * r == xd) ||
          !(ring.p_pow(-i) * r == r))
        throw DecompositionFailure("degree " + std::to_string(i));
    } else {
      r = xd;
    }
    if (!r.is_zero()) out.coeffs.emplace(i, std::move(r));
  }
  return out;
}

LpaRealization realize_lpa(const GraphPtr& g, Field f) {
  std::vector<int> chosen(g->vertex_count(), -1);
  for (int v = 0; v < g->vertex_count(); ++v) {
    if (g->in_edges(v).empty()) throw GraphHasSource(g->vertex_name(v));
    int best = -1;
    for (int e : g->in_edges(v))
      if (best == -1 || g->edge_lex_rank(e) < g->edge_lex_rank(best)) best = e;
    chosen[v] = best;
  }
  Element tPlus = zero_element(g, f), tMinus = zero_element(g, f);
  for (int e : chosen) {
    tPlus = tPlus + edge_element(g, f, e);
    tMinus = tMinus + ghost_element(g, f, e);
  }
  Element one = identity_element(g, f);
  Element p = tPlus * tMinus;
  CornerSkewRing ring{g, f, one, p,
                      [tPlus, tMinus](const Element& a) { return tPlus * a * tMinus; },
                      [tPlus, tMinus](const Element& a) { return tMinus * a * tPlus; }};
  return LpaRealization{std::move(ring), tPlus, tMinus, std::move(chosen)};
}

} // namespace lpa
