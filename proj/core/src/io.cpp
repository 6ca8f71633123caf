#include "bposet/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bposet/errors.hpp"

namespace bposet {

using nlohmann::json;

namespace {

int line_at(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Line of the k-th entry in the "covers" array, 0 if not found.
int cover_line(const std::string& text, std::size_t k) {
  auto key = text.find("\"covers\"");
  if (key == std::string::npos) return 0;
  int depth = 0;
  std::size_t seen = 0;
  for (std::size_t i = key; i < text.size(); ++i) {
    if (text[i] == '[') {
      ++depth;
      if (depth == 2 && seen++ == k) return line_at(text, i);
    } else if (text[i] == ']') {
      if (--depth == 0) break;
    }
  }
  return 0;
}

std::string at_line(int line) { return line > 0 ? "line " + std::to_string(line) + ": " : ""; }

json composition_array(const std::vector<int>& parts) { return json(parts); }

json coeff_json(const Integer& k) {
  if (k >= std::numeric_limits<std::int64_t>::min() && k <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(k));
  return json(k.str());
}

std::string label_text(const HeckeModule& M, int i) {
  if (!M.labeled()) return "v" + std::to_string(i);
  std::string s = "[";
  for (std::size_t k = 0; k < M.labels()[i].size(); ++k) {
    if (k) s += ",";
    s += std::to_string(M.labels()[i][k]);
  }
  return s + "]";
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BnPoset parse_poset_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(at_line(line_at(text, e.byte)) + "malformed JSON (" + std::string(e.what()) + ")");
  }
  if (!j.is_object()) throw InvalidInput("line 1: poset file must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw InvalidInput("missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 0) throw InvalidInput("\"n\" must be nonnegative");
  if (n > kDefaultRankCap) throw RankTooLarge("rank " + std::to_string(n) + " exceeds the cap " + std::to_string(kDefaultRankCap));
  bool sym = false;
  if (j.contains("symmetrize")) {
    if (!j["symmetrize"].is_boolean()) throw InvalidInput("\"symmetrize\" must be a boolean");
    sym = j["symmetrize"].get<bool>();
  }
  std::vector<Relation> rel;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw InvalidInput("\"covers\" must be an array");
    const auto& c = j["covers"];
    for (std::size_t k = 0; k < c.size(); ++k) {
      const std::string where = at_line(cover_line(text, k)) + "covers[" + std::to_string(k) + "]: ";
      if (!c[k].is_array() || c[k].size() != 2 || !c[k][0].is_number_integer() || !c[k][1].is_number_integer())
        throw InvalidInput(where + "expected a pair of integers");
      const int a = c[k][0].get<int>(), b = c[k][1].get<int>();
      if (std::abs(a) > n || std::abs(b) > n) throw InvalidInput(where + "element outside [-n,n]");
      if (a == b) throw InvalidInput(where + "reflexive pair");
      rel.emplace_back(a, b);
    }
  }
  return BnPoset::from_relations(n, rel, sym);
}

BnPoset load_poset_file(const std::string& path) { return parse_poset_json(read_text_file(path)); }

std::string poset_to_json(const BnPoset& P) {
  json c = json::array();
  for (auto [a, b] : P.covers()) c.push_back({a, b});
  json j{{"n", P.rank()}, {"covers", c}};
  return j.dump();
}

std::string hasse_dot(const BnPoset& P) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  ordering=out;\n";
  for (int x = -P.rank(); x <= P.rank(); ++x) os << "  \"" << x << "\";\n";
  for (auto [a, b] : P.covers()) os << "  \"" << a << "\" -> \"" << b << "\" [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

std::string module_to_json(const HeckeModule& M) {
  json acts = json::array();
  for (std::size_t g = 0; g < M.generators().size(); ++g) {
    json e = json::array();
    for (int r = 0; r < M.dim(); ++r)
      for (auto [c, v] : M.actions()[g].row(r)) e.push_back({r, c, v});
    acts.push_back({{"generator", M.generators()[g]}, {"entries", e}});
  }
  json j{{"type", M.type() == HeckeType::B ? "B" : "A"},
         {"rank", M.rank()},
         {"dim", M.dim()},
         {"name", M.name()},
         {"generators", M.generators()},
         {"labels", M.labels()},
         {"actions", acts}};
  return j.dump();
}

HeckeModule parse_module_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(at_line(line_at(text, e.byte)) + "malformed JSON (" + std::string(e.what()) + ")");
  }
  try {
    const std::string t = j.at("type").get<std::string>();
    if (t != "A" && t != "B") throw InvalidInput("\"type\" must be \"A\" or \"B\"");
    const int rank = j.at("rank").get<int>(), dim = j.at("dim").get<int>();
    if (dim <= 0) throw InvalidInput("empty module");
    std::vector<int> gens = j.at("generators").get<std::vector<int>>();
    std::vector<std::vector<int>> labels = j.value("labels", std::vector<std::vector<int>>{});
    std::vector<SparseMatrix> acts(gens.size(), SparseMatrix(dim));
    for (const auto& a : j.at("actions")) {
      const int g = a.at("generator").get<int>();
      auto it = std::find(gens.begin(), gens.end(), g);
      if (it == gens.end()) throw InvalidInput("action for unknown generator " + std::to_string(g));
      for (const auto& e : a.at("entries")) {
        const int r = e.at(0).get<int>(), c = e.at(1).get<int>();
        if (r < 0 || r >= dim || c < 0 || c >= dim) throw InvalidInput("action entry outside the basis");
        acts[it - gens.begin()].add(r, c, e.at(2).get<std::int64_t>());
      }
    }
    HeckeModule M(t == "B" ? HeckeType::B : HeckeType::A, rank, std::move(gens), std::move(acts), std::move(labels),
                  j.value("name", std::string{}), dim);
    auto bad = relation_failures(M);
    if (!bad.empty()) throw InvalidInput("module dump violates " + bad.front());
    return M;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad module dump: ") + e.what());
  }
}

std::string quiver_dot(const HeckeModule& M) {
  if (M.dim() == 0) throw InvalidInput("empty module");
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (int i = 0; i < M.dim(); ++i) os << "  n" << i << " [label=\"" << label_text(M, i) << "\"];\n";
  for (std::size_t g = 0; g < M.generators().size(); ++g)
    for (int r = 0; r < M.dim(); ++r)
      for (auto [c, v] : M.actions()[g].row(r)) {
        os << "  n" << r << " -> n" << c << " [label=\"";
        if (c == r || v != 1) os << v << " ";
        os << "pibar_" << M.generators()[g] << "\"];\n";
      }
  os << "}\n";
  return os.str();
}

std::string qsym_to_json(const QSymBElement& f) {
  json a = json::array();
  const std::string b = f.basis() == Basis::Monomial ? "M^B" : "F^B";
  for (const auto& [c, k] : f.terms()) a.push_back({{"basis", b}, {"composition", composition_array(c.parts())}, {"coeff", coeff_json(k)}});
  return a.dump();
}

std::string qsym_to_json(const QSymElement& f) {
  json a = json::array();
  const std::string b = f.basis() == Basis::Monomial ? "M" : "F";
  for (const auto& [c, k] : f.terms()) a.push_back({{"basis", b}, {"composition", composition_array(c.parts())}, {"coeff", coeff_json(k)}});
  return a.dump();
}

}  // namespace bposet
