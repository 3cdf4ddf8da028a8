#include "lpa/regularity.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace lpa {

namespace {

// Candidates b = mu_b nu_b^* with x b x possibly nonzero: in
// (mu nu^*)(mu_b nu_b^*) the inner product needs s(mu_b) = s(nu), and
// (nu_b^* mu) needs s(nu_b) = s(mu).
std::vector<Monomial> filter_candidates(const Element& x,
                                        std::vector<Monomial> cands) {
  std::set<int> after, before;
  for (const auto& [m, c] : x.terms()) {
    after.insert(m.nu.start);
    before.insert(m.mu.start);
  }
  std::erase_if(cands, [&](const Monomial& b) {
    return !after.count(b.mu.start) || !before.count(b.nu.start);
  });
  return cands;
}

// Solves sum_b c_b (x b x) = x over the candidate monomials.
std::optional<Element> solve_witness(const Element& x,
                                     const std::vector<Monomial>& cands) {
  if (cands.empty()) return std::nullopt;
  const GraphPtr& g = x.graph();
  Field f = x.field();
  std::vector<Element> images;
  images.reserve(cands.size());
  for (const Monomial& b : cands)
    images.push_back(x * monomial(g, f, b.mu, b.nu, Scalar::one(f)) * x);
  // coordinates over the union of supports
  std::map<Monomial, int, MonomialLess> coord{MonomialLess{g.get()}};
  auto index_terms = [&](const Element& e) {
    for (const auto& [m, c] : e.terms())
      coord.emplace(m, static_cast<int>(coord.size()));
  };
  index_terms(x);
  for (const Element& im : images) index_terms(im);
  ScalarMatrix a(static_cast<int>(coord.size()), static_cast<int>(cands.size()), f);
  std::vector<Scalar> rhs(coord.size(), Scalar::zero(f));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [m, c] : images[j].terms())
      a.at(coord.at(m), static_cast<int>(j)) = c;
  for (const auto& [m, c] : x.terms()) rhs[coord.at(m)] = c;
  auto sol = solve_exact(std::move(a), std::move(rhs));
  if (!sol) return std::nullopt;
  Element y = zero_element(g, f);
  for (std::size_t j = 0; j < cands.size(); ++j)
    if (!(*sol)[j].is_zero())
      y = y + monomial(g, f, cands[j].mu, cands[j].nu, (*sol)[j]);
  return y;
}

WitnessReport search(const Element& x, int startBound, int maxBound,
                     bool restricted) {
  if (x.is_zero()) throw NotApplicable("witness of zero");
  long long deg = 0;
  if (restricted) deg = degree(x); // throws NotHomogeneous when mixed
  if (startBound < 0) startBound = std::max(1, x.max_monomial_length());
  if (maxBound < 0) maxBound = startBound + 6;
  if (startBound > maxBound)
    throw NotApplicable("startBound exceeds maxBound");
  const GraphPtr& g = x.graph();
  Field f = x.field();
  for (int bound = startBound; bound <= maxBound; ++bound) {
    std::vector<Monomial> cands;
    if (restricted) {
      cands = basis_monomials(g, -deg, bound);
    } else {
      for (long long d = -bound; d <= bound; ++d) {
        auto part = basis_monomials(g, d, bound);
        cands.insert(cands.end(), part.begin(), part.end());
      }
    }
    cands = filter_candidates(x, cands);
    auto y = solve_witness(x, cands);
    if (y) {
      WitnessReport r{x, *y, bound, bound, false};
      r.verified = (x * *y * x == x) &&
                   (!restricted || y->is_zero() || degree(*y) == -deg);
      if (!r.verified)
        throw InternalInvariantBreach("witness solve produced an invalid y");
      return r;
    }
  }
  throw NoWitnessWithinBound("no witness up to length bound " +
                             std::to_string(maxBound));
}

} // namespace

WitnessReport find_witness(const Element& x, int startBound, int maxBound) {
  return search(x, startBound, maxBound, true);
}

WitnessReport find_witness_unrestricted(const Element& x, int startBound,
                                        int maxBound) {
  return search(x, startBound, maxBound, false);
}

bool IdempotentCertificate::check() const {
  if (!(e * e == e)) return false;
  if (!e.is_zero() && degree(e) != 0) return false;
  Element recon = zero_element(e.graph(), e.field());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!(e * generators[i] == generators[i])) return false;
    if (!(membershipIn[i] == generators[i])) return false;
    recon = recon + generators[i] * membershipOut[i];
  }
  return recon == e;
}

IdempotentCertificate idempotent_generator(const std::vector<Element>& xs,
                                           int bound) {
  if (xs.empty()) throw NotApplicable("no generators");
  const GraphPtr& g = xs.front().graph();
  Field f = xs.front().field();
  Element e = zero_element(g, f);
  std::vector<Element> m; // e = sum x_i m_i
  for (const Element& x : xs) {
    if (x.is_zero()) throw NotApplicable("zero generator");
    degree(x); // must be homogeneous
    Element xr = x - e * x; // e * xr = 0
    if (xr.is_zero()) {
      m.push_back(zero_element(g, f));
      continue;
    }
    WitnessReport w = find_witness(xr, -1, bound < 0 ? -1 : bound);
    const Element& y = w.y;
    Element fp = xr * y; // idempotent with e * fp = 0
    // representation of fp over the generators seen so far
    std::vector<Element> n(m.size(), zero_element(g, f));
    Element xy = x * y;
    for (std::size_t i = 0; i < m.size(); ++i) n[i] = -(m[i] * xy);
    n.push_back(y);
    // combine: new e = e + fp - fp e
    std::vector<Element> next(n.size(), zero_element(g, f));
    for (std::size_t i = 0; i < m.size(); ++i)
      next[i] = m[i] + n[i] - n[i] * e;
    next.back() = n.back() - n.back() * e;
    e = e + fp - fp * e;
    m = std::move(next);
  }
  IdempotentCertificate cert{xs, e, {}, m};
  for (const Element& x : xs) cert.membershipIn.push_back(e * x);
  if (!cert.check())
    throw InternalInvariantBreach("idempotent certificate failed validation");
  return cert;
}

Element nonzero_ideal_idempotent(const Element& x, int bound) {
  if (x.is_zero()) throw NotApplicable("zero element");
  WitnessReport w = find_witness(x, -1, bound < 0 ? -1 : bound);
  Element e = x * w.y;
  if (e.is_zero() || !(e * e == e) || !(e * x == x))
    throw InternalInvariantBreach("ideal idempotent failed validation");
  return e;
}

ElementSampler::ElementSampler(GraphPtr g, Field f, int lenCap,
                               std::uint64_t seed)
    : g_(std::move(g)), f_(f), lenCap_(lenCap), rng_(seed) {
  for (long long d = -lenCap; d <= lenCap; ++d) {
    auto pool = basis_monomials(g_, d, lenCap);
    if (!pool.empty()) {
      all_.insert(all_.end(), pool.begin(), pool.end());
      byDegree_.emplace(d, std::move(pool));
    }
  }
  if (all_.empty()) throw NotApplicable("graph has no monomials");
}

Element ElementSampler::build(const std::vector<Monomial>& pool,
                              int termCount) {
  auto random_scalar = [&]() {
    if (f_.is_rational()) {
      std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
      int n = 0;
      while (n == 0) n = num(rng_);
      return Scalar(f_, Rational(n, den(rng_)));
    }
    std::uniform_int_distribution<std::uint64_t> res(1, f_.characteristic() - 1);
    return Scalar(f_, Rational(res(rng_)));
  };
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> nterms(1, termCount);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element x = zero_element(g_, f_);
    int k = nterms(rng_);
    for (int t = 0; t < k; ++t) {
      const Monomial& mn = pool[pick(rng_)];
      x = x + monomial(g_, f_, mn.mu, mn.nu, random_scalar());
    }
    if (!x.is_zero()) return x;
  }
  throw InternalInvariantBreach("sampler kept producing zero");
}

Element ElementSampler::homogeneous(int termCount) {
  std::uniform_int_distribution<std::size_t> pick(0, byDegree_.size() - 1);
  auto it = byDegree_.begin();
  std::advance(it, pick(rng_));
  return build(it->second, termCount);
}

Element ElementSampler::arbitrary(int termCount) {
  return build(all_, termCount);
}

SuiteReport regularity_suite(const GraphPtr& g, Field f, int trials,
                             int termCount, int lenCap, std::uint64_t seed) {
  SuiteReport report;
  report.seed = seed;
  report.trials = trials;
  if (trials == 0) return report;
  ElementSampler sampler(g, f, lenCap, seed);
  for (int i = 0; i < trials; ++i) {
    Element x = sampler.homogeneous(termCount);
    SuiteTrial t;
    t.index = i;
    t.degree = degree(x);
    t.x = to_string(x);
    auto t0 = std::chrono::steady_clock::now();
    try {
      WitnessReport w = find_witness(x);
      t.boundUsed = w.solvedAtBound;
      t.verified = w.verified;
      t.y = to_string(w.y);
    } catch (const Error& e) {
      t.verified = false;
      t.y = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    t.elapsedMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (t.verified) ++report.verified;
    report.results.push_back(std::move(t));
  }
  return report;
}

std::string SuiteReport::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["trials"] = trials;
  j["verified"] = verified;
  j["passed"] = passed();
  j["results"] = nlohmann::json::array();
  for (const auto& t : results) {
    // elapsedMs is deliberately omitted: identical seeds must give
    // byte-identical structured reports.
    j["results"].push_back({{"trial", t.index},
                            {"degree", t.degree},
                            {"bound", t.boundUsed},
                            {"verified", t.verified},
                            {"x", t.x},
                            {"y", t.y}});
  }
  return j.dump(2);
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "seed " << seed << "\n";
  for (const auto& t : results)
    os << "trial " << t.index << " deg " << t.degree << " bound " << t.boundUsed
       << " " << (t.verified ? "VERIFIED" : "FAILED") << " ("
       << t.elapsedMs << " ms)\n";
  os << verified << "/" << trials << " VERIFIED\n";
  return os.str();
}

} // namespace lpa
