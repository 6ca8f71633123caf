#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "bposet/checks.hpp"
#include "bposet/errors.hpp"
#include "bposet/extensions.hpp"
#include "bposet/hecke.hpp"
#include "bposet/io.hpp"
#include "bposet/regular.hpp"

using namespace bposet;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string input;
  std::string suite;
  int n = 2;
  int trunc = -1;
  unsigned seed = 1;
  int samples = 100;
  std::string format = "text";
  std::string basis = "fundamental";
  std::string out;
  std::string module;
  bool dot = false;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string cmd_extensions(const RunConfig& c) {
  const auto P = load_poset_file(c.input);
  const auto ext = linear_extensions_B(P);
  if (c.format == "json") {
    json a = json::array();
    for (const auto& g : ext) a.push_back({{"window", g.window()}, {"descents", g.descents()}});
    return a.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& g : ext) os << g.str() << "  Des={" << join(g.descents()) << "}\n";
  return os.str();
}

std::string cmd_kbp(const RunConfig& c) {
  const auto P = load_poset_file(c.input);
  auto f = kbp(P);
  if (c.basis == "monomial") f = to_monomial(f);
  if (c.format == "json") return qsym_to_json(f) + "\n";
  return f.str() + "\n";
}

std::string cmd_interval(const RunConfig& c) {
  const auto P = load_poset_file(c.input);
  json j;
  std::string text;
  if (auto x = distinguished_witness(P)) {
    j = {{"regular", false}, {"reason", "not distinguished"}, {"witness", {*x}}};
    text = "not regular: not distinguished, " + std::to_string(*x) + " is comparable to " + std::to_string(-*x) +
           " but not to 0\n";
  } else if (auto t = regularity_witness(P)) {
    j = {{"regular", false}, {"reason", "betweenness"}, {"witness", *t}};
    text = "not regular: witness triple (" + join({(*t)[0], (*t)[1], (*t)[2]}) + ")\n";
  } else {
    auto [s, r] = sigma_rho_endpoints(P);
    j = {{"regular", true}, {"sigma", s.window()}, {"rho", r.window()}};
    text = "sigma = [" + join(s.window()) + "]\nrho = [" + join(r.window()) + "]\n";
  }
  return c.format == "json" ? j.dump(2) + "\n" : text;
}

std::string cmd_check(const RunConfig& c, bool& failed) {
  if (c.n < 1 || c.n > kDefaultRankCap) throw UsageError("--n must lie in [1, " + std::to_string(kDefaultRankCap) + "]");
  CheckOptions o;
  o.n = c.n;
  o.seed = c.seed;
  o.samples = c.samples;
  o.trunc = c.trunc;
  const SuiteReport r = run_suite(c.suite, o);
  failed = !r.pass();
  if (c.format == "json") return report_json(r) + "\n";
  std::ostringstream os;
  for (const auto& k : r.cases)
    os << (k.pass ? "pass  " : "FAIL  ") << k.name << (k.details.empty() ? "" : "  [" + k.details + "]") << "\n";
  os << r.summary() << "\n";
  return os.str();
}

std::string cmd_export(const RunConfig& c) {
  const std::string text = read_text_file(c.input);
  const bool is_module = [&] {
    try {
      auto j = json::parse(text);
      return j.is_object() && j.contains("actions");
    } catch (const json::exception&) {
      return false;
    }
  }();
  if (is_module) {
    const auto M = parse_module_json(text);
    return c.dot ? quiver_dot(M) : module_to_json(M) + "\n";
  }
  const auto P = parse_poset_json(text);
  if (!c.module.empty()) {
    HeckeModule M;
    if (c.module == "M")
      M = module_MBP(P);
    else if (c.module == "sfM")
      M = module_sfMBP(P);
    else
      throw UsageError("--module must be M or sfM");
    return c.dot ? quiver_dot(M) : module_to_json(M) + "\n";
  }
  return c.dot ? hasse_dot(P) : poset_to_json(P) + "\n";
}

void emit(const RunConfig& c, const std::string& s) {
  if (c.out.empty()) {
    std::cout << s;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B_n posets, type-B 0-Hecke modules and their verification harness"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    s->add_option("--out", c.out, "write to a file instead of stdout");
  };
  auto* ext = app.add_subcommand("extensions", "type-B linear extensions with descent sets");
  ext->add_option("poset", c.input, "poset JSON file")->required();
  add_common(ext);

  auto* kb = app.add_subcommand("kbp", "P-partition enumerator K^B_P");
  kb->add_option("poset", c.input, "poset JSON file")->required();
  kb->add_option("--basis", c.basis, "fundamental or monomial")->check(CLI::IsMember({"fundamental", "monomial"}));
  add_common(kb);

  auto* iv = app.add_subcommand("interval", "endpoints of a regular poset, or a witness that it is not regular");
  iv->add_option("poset", c.input, "poset JSON file")->required();
  add_common(iv);

  auto* ck = app.add_subcommand("check", "run a verification suite");
  ck->add_option("suite", c.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ck->add_option("--n", c.n, "largest rank")->capture_default_str();
  ck->add_option("--trunc", c.trunc, "truncation V (default n+1)");
  ck->add_option("--seed", c.seed, "random seed")->capture_default_str();
  ck->add_option("--samples", c.samples, "sampled posets per rank")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(ck);

  auto* ex = app.add_subcommand("export", "poset or module as JSON or DOT");
  ex->add_option("file", c.input, "poset or module JSON file")->required();
  ex->add_flag("--dot", c.dot, "emit DOT (Hasse diagram or module quiver)");
  ex->add_option("--module", c.module, "build M or sfM from a poset file")->check(CLI::IsMember({"M", "sfM"}));
  add_common(ex);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (c.format == "dot") c.dot = true;

  try {
    bool failed = false;
    std::string s;
    if (*ext)
      s = cmd_extensions(c);
    else if (*kb)
      s = cmd_kbp(c);
    else if (*iv)
      s = cmd_interval(c);
    else if (*ck)
      s = cmd_check(c, failed);
    else
      s = cmd_export(c);
    emit(c, s);
    return failed ? kExitFailure : kExitPass;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RankTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RankMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal failure: " << e.what() << "\n";
    return kExitFailure;
  }
}
