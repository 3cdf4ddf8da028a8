// lpa: command-line front end for the Leavitt path algebra library.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lpa/corner_skew.hpp"
#include "lpa/regularity.hpp"
#include "lpa/transforms.hpp"

using json = nlohmann::ordered_json;
using namespace lpa;

namespace {

struct Session {
  std::string graphPath;
  std::string fieldSpec = "q";
  std::optional<std::uint64_t> seed;
  int lenCap = 3;
  std::string format = "text";

  GraphPtr graph;
  Field field = Field::rationals();
  std::uint64_t graphHash = 0;

  bool structured() const { return format == "json"; }

  void open() {
    if (graphPath.empty())
      throw parse_error("--graph is required for this command");
    std::ifstream in(graphPath, std::ios::binary);
    if (!in) throw parse_error("cannot open graph file: " + graphPath);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    // FNV-1a 64 over the raw file bytes; reports are self-describing.
    graphHash = 1469598103934665603ull;
    for (unsigned char c : text) {
      graphHash ^= c;
      graphHash *= 1099511628211ull;
    }
    graph = parse_graph_string(text);
    if (fieldSpec == "q") {
      field = Field::rationals();
    } else if (fieldSpec.rfind("fp:", 0) == 0) {
      int p = 0;
      try {
        p = std::stoi(fieldSpec.substr(3));
      } catch (const std::exception&) {
        throw parse_error("bad field spec: " + fieldSpec);
      }
      field = Field::prime(p);
    } else {
      throw parse_error("bad field spec (want q or fp:<p>): " + fieldSpec);
    }
    if (lenCap < 1) throw parse_error("--len-cap must be >= 1");
  }

  std::uint64_t require_seed() const {
    if (!seed) throw parse_error("--seed is required for randomized commands");
    return *seed;
  }

  json header() const {
    json j;
    char hex[20];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(graphHash));
    j["graph"] = graphPath;
    j["graphHash"] = hex;
    j["field"] = fieldSpec;
    if (seed) j["seed"] = *seed;
    return j;
  }

  void emit(const json& body, const std::string& text) const {
    if (structured()) {
      json j = header();
      for (auto& [k, v] : body.items()) j[k] = v;
      std::cout << j.dump(2) << std::endl;
    } else {
      std::cout << text << std::endl;
    }
  }
};

std::string mapping_text(const Embedding& emb) {
  std::ostringstream out;
  const DirectedGraph& d = *emb.domain;
  for (int v = 0; v < d.vertex_count(); ++v)
    out << d.vertex_name(v) << " -> " << to_string(emb.vertexImage[v]) << "\n";
  for (int e = 0; e < d.edge_count(); ++e) {
    out << d.edge_name(e) << " -> " << to_string(emb.edgeImage[e]) << "\n";
    out << d.edge_name(e) << "^* -> " << to_string(emb.ghostImage[e]) << "\n";
  }
  return out.str();
}

json mapping_json(const Embedding& emb) {
  json j = json::object();
  const DirectedGraph& d = *emb.domain;
  for (int v = 0; v < d.vertex_count(); ++v)
    j[d.vertex_name(v)] = to_string(emb.vertexImage[v]);
  for (int e = 0; e < d.edge_count(); ++e) {
    j[d.edge_name(e)] = to_string(emb.edgeImage[e]);
    j[d.edge_name(e) + "^*"] = to_string(emb.ghostImage[e]);
  }
  return j;
}

void write_sidecar(const std::string& path, const Embedding& emb) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write mapping file: " + path);
  out << mapping_text(emb);
}

GradedMatrix matrix_from_args(const Session& s,
                              const std::vector<long long>& shifts,
                              const std::vector<std::string>& entrySpecs) {
  int n = static_cast<int>(shifts.size());
  if (n == 0) throw parse_error("--shifts is required");
  auto m = GradedMatrix::zeros(s.graph, s.field, n, shifts);
  for (const auto& spec : entrySpecs) {
    auto c1 = spec.find(',');
    auto c2 = spec.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw parse_error("bad --entry (want i,j,<element>): " + spec);
    int i, j;
    try {
      i = std::stoi(spec.substr(0, c1));
      j = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
    } catch (const std::exception&) {
      throw parse_error("bad --entry indices: " + spec);
    }
    if (i < 1 || i > n || j < 1 || j > n)
      throw parse_error("entry indices out of range (1-based): " + spec);
    auto a = parse_element(s.graph, s.field, spec.substr(c2 + 1));
    m.entries[i - 1][j - 1] = m.entries[i - 1][j - 1] + a;
  }
  return m;
}

std::string matrix_text(const GradedMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (!m.entries[i][j].is_zero())
        out << "(" << i + 1 << "," << j + 1
            << ") = " << to_string(m.entries[i][j]) << "\n";
  if (out.str().empty()) return "0\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computation in Leavitt path algebras"};
  app.require_subcommand(1);

  Session s;
  app.add_option("--graph", s.graphPath, "graph file");
  app.add_option("--field", s.fieldSpec, "q or fp:<p>")->default_str("q");
  app.add_option("--seed", s.seed, "seed for randomized commands");
  app.add_option("--len-cap", s.lenCap, "monomial length cap")->default_str("3");
  app.add_option("--format", s.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string elemText, elemText2;
  std::vector<std::string> genTexts;
  int trials = 50, termCount = 3, depth = 1, startBound = -1, maxBound = -1;
  int cornerDegree = 0;
  std::string vertexName, mapPath, cornerMode;
  std::vector<long long> shifts;
  std::vector<std::string> entrySpecs;

  auto* normalize = app.add_subcommand("normalize", "print the normal form");
  normalize->add_option("element", elemText)->required();

  auto* mulCmd = app.add_subcommand("mul", "multiply two elements");
  mulCmd->add_option("a", elemText)->required();
  mulCmd->add_option("b", elemText2)->required();

  auto* degreeCmd = app.add_subcommand("degree", "canonical degree");
  degreeCmd->add_option("element", elemText)->required();

  auto* witness = app.add_subcommand("witness", "homogeneous inner inverse");
  witness->add_option("element", elemText)->required();
  witness->add_option("--start", startBound, "initial length bound");
  witness->add_option("--max", maxBound, "final length bound");

  auto* witnessAny = app.add_subcommand("witness-any", "unrestricted inner inverse");
  witnessAny->add_option("element", elemText)->required();
  witnessAny->add_option("--start", startBound, "initial length bound");
  witnessAny->add_option("--max", maxBound, "final length bound");

  auto* idgen = app.add_subcommand("idgen", "idempotent ideal generator");
  idgen->add_option("generators", genTexts)->required()->expected(-1);

  auto* suite = app.add_subcommand("suite", "randomized regularity suite");
  suite->add_option("--trials", trials)->default_str("50");
  suite->add_option("--terms", termCount)->default_str("3");

  auto* desource = app.add_subcommand("desource", "source elimination");
  desource->add_option("--vertex", vertexName, "remove this source only");
  desource->add_option("--map", mapPath, "sidecar mapping file");

  auto* desing = app.add_subcommand("desing", "desingularize");
  desing->add_option("--depth", depth)->required();
  desing->add_option("--map", mapPath, "sidecar mapping file");

  auto* corner = app.add_subcommand("corner", "corner skew Laurent realization");
  corner->add_option("mode", cornerMode)
      ->required()
      ->check(CLI::IsMember({"realize", "witness"}));
  corner->add_option("degree", cornerDegree, "degree of the component");
  corner->add_option("coefficient", elemText, "coefficient ring element");

  auto* matrix = app.add_subcommand("matrix", "graded matrix operations");
  matrix->add_option("mode", cornerMode)
      ->required()
      ->check(CLI::IsMember({"degree", "transport"}));
  matrix->add_option("--shifts", shifts, "grading shifts, one per row")
      ->delimiter(',');
  matrix->add_option("--entry", entrySpecs, "i,j,<element>; repeatable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // usage problems are exit 2
  }
  s.open();

  if (*normalize) {
    auto x = parse_element(s.graph, s.field, elemText);
    s.emit({{"normalForm", to_string(x)}}, to_string(x));
  } else if (*mulCmd) {
    auto x = parse_element(s.graph, s.field, elemText) *
             parse_element(s.graph, s.field, elemText2);
    s.emit({{"product", to_string(x)}}, to_string(x));
  } else if (*degreeCmd) {
    auto d = degree(parse_element(s.graph, s.field, elemText));
    s.emit({{"degree", d}}, std::to_string(d));
  } else if (*witness || *witnessAny) {
    auto x = parse_element(s.graph, s.field, elemText);
    auto w = *witness ? find_witness(x, startBound, maxBound)
                      : find_witness_unrestricted(x, startBound, maxBound);
    s.emit({{"x", to_string(w.x)},
            {"y", to_string(w.y)},
            {"bound", w.solvedAtBound},
            {"verified", w.verified}},
           "y = " + to_string(w.y) + "\nbound = " +
               std::to_string(w.solvedAtBound) + "\nVERIFIED");
  } else if (*idgen) {
    std::vector<Element> gens;
    for (const auto& t : genTexts)
      gens.push_back(parse_element(s.graph, s.field, t));
    auto cert = idempotent_generator(gens);
    if (!cert.check()) throw InternalInvariantBreach("certificate check failed");
    json multipliers = json::array();
    std::string text = "e = " + to_string(cert.e) + "\n";
    for (std::size_t i = 0; i < cert.membershipOut.size(); ++i) {
      multipliers.push_back(to_string(cert.membershipOut[i]));
      text += "m" + std::to_string(i + 1) + " = " +
              to_string(cert.membershipOut[i]) + "\n";
    }
    text += "CERTIFIED";
    s.emit({{"e", to_string(cert.e)}, {"multipliers", multipliers}}, text);
  } else if (*suite) {
    auto rep = regularity_suite(s.graph, s.field, trials, termCount, s.lenCap,
                                s.require_seed());
    if (s.structured()) {
      json body = json::parse(rep.to_json());
      s.emit({{"suite", body}}, "");
    } else {
      std::cout << rep.to_text() << std::endl;
    }
    if (!rep.passed()) return 1;
  } else if (*desource) {
    if (!vertexName.empty()) {
      auto out = remove_source(s.graph, s.field, vertexName);
      write_sidecar(mapPath, out.emb);
      s.emit({{"result", out.result->to_file_format()},
              {"mapping", mapping_json(out.emb)},
              {"fullnessCertificate", to_string(out.fullnessCertificate)}},
             out.result->to_file_format() +
                 (mapPath.empty() ? "\n" + mapping_text(out.emb) : ""));
    } else {
      auto out = remove_all_sources(s.graph, s.field);
      if (out.log.empty()) {
        s.emit({{"result", out.result->to_file_format()},
                {"moves", json::array()}},
               "no sources");
      } else {
        json moves = json::array();
        std::string text;
        for (const auto& m : out.log) {
          const char* kind = m.kind == SourceEliminationMove::RemovedSource
                                 ? "source"
                                 : "isolated";
          moves.push_back({{"kind", kind}, {"vertex", m.vertex}});
          text += std::string("removed ") + kind + " " + m.vertex + "\n";
        }
        s.emit({{"result", out.result->to_file_format()}, {"moves", moves}},
               text + out.result->to_file_format());
      }
    }
  } else if (*desing) {
    auto out = desingularize(s.graph, s.field, depth);
    write_sidecar(mapPath, out.emb);
    json degs = json::array();
    for (auto d : out.edgeDegrees.weight) degs.push_back(d);
    s.emit({{"result", out.result->to_file_format()},
            {"mapping", mapping_json(out.emb)},
            {"edgeDegrees", degs}},
           out.result->to_file_format() +
               (mapPath.empty() ? "\n" + mapping_text(out.emb) : ""));
  } else if (*corner) {
    auto real = realize_lpa(s.graph, s.field);
    if (cornerMode == "realize") {
      s.emit({{"tPlus", to_string(real.tPlus)},
              {"tMinus", to_string(real.tMinus)},
              {"p", to_string(real.ring.p)}},
             "t+ = " + to_string(real.tPlus) + "\nt- = " +
                 to_string(real.tMinus) + "\np = " + to_string(real.ring.p));
    } else {
      if (elemText.empty())
        throw parse_error("corner witness needs <degree> <coefficient>");
      auto r = parse_element(s.graph, s.field, elemText);
      auto a = cs_term(real.ring, cornerDegree, r);
      auto y = cs_witness(real.ring, a, [](const Element& z) {
        return z.is_zero() ? z : find_witness(z).y;
      });
      s.emit({{"a", cs_to_string(a)}, {"y", cs_to_string(y)}},
             "y = " + cs_to_string(y) + "\nVERIFIED");
    }
  } else if (*matrix) {
    auto m = matrix_from_args(s, shifts, entrySpecs);
    if (cornerMode == "degree") {
      auto d = matrix_degree(m);
      s.emit({{"degree", d}}, std::to_string(d));
    } else {
      auto y = transport_witness(
          m, [](const Element& a) { return find_witness(a).y; });
      json entries = json::array();
      for (int i = 0; i < y.n; ++i)
        for (int j = 0; j < y.n; ++j)
          if (!y.entries[i][j].is_zero())
            entries.push_back({{"i", i + 1},
                               {"j", j + 1},
                               {"value", to_string(y.entries[i][j])}});
      s.emit({{"witness", entries}}, matrix_text(y) + "VERIFIED");
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    switch (e.kind()) {
      case ErrorKind::Parse: return 2;
      case ErrorKind::Domain: return 1;
      case ErrorKind::Internal: return 1;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
}
