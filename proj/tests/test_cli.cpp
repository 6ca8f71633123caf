#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BPOSET_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& f) { return std::string(BPOSET_TEST_DATA) + "/" + f; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t lines(const std::string& s) { return count(s, "\n"); }

}  // namespace

TEST(Cli, Extensions) {
  const auto r = run("extensions " + data("p2_3.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 2u);
  EXPECT_NE(r.out.find("[-1,2]"), std::string::npos);
  EXPECT_NE(r.out.find("[2,-1]"), std::string::npos);
  EXPECT_EQ(lines(run("extensions " + data("linear.json")).out), 1u);
  const auto j = run("extensions --format json " + data("p2_3.json"));
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(j.out.front(), '[');
}

TEST(Cli, Deterministic) {
  for (const std::string args : {"extensions " + data("b3_worked.json"), "kbp --basis monomial " + data("b3_worked.json"),
                                 std::string("check twists --n 2 --seed 3 --samples 5")})
    EXPECT_EQ(run(args).out, run(args).out) << args;
}

TEST(Cli, Kbp) {
  const auto lin = run("kbp " + data("linear.json"));
  EXPECT_EQ(lin.code, 0);
  EXPECT_EQ(count(lin.out, "F^B["), 1u);
  EXPECT_EQ(count(run("kbp " + data("p2_3.json")).out, "F^B["), 2u);
  const auto mono = run("kbp --basis monomial " + data("p2_3.json"));
  EXPECT_EQ(mono.code, 0);
  EXPECT_NE(mono.out.find("M^B["), std::string::npos);
  EXPECT_EQ(mono.out.find("F^B["), std::string::npos);
}

TEST(Cli, Interval) {
  const auto r = run("interval " + data("b6_interval.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sigma = [-3,2,1,4,6,5]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("rho = [1,-2,-3,4,-5,-6]"), std::string::npos) << r.out;
  const auto nd = run("interval " + data("not_distinguished.json"));
  EXPECT_NE(nd.out.find("not regular"), std::string::npos);
  EXPECT_NE(nd.out.find("1 is comparable to -1"), std::string::npos) << nd.out;
  EXPECT_NE(run("interval " + data("not_regular.json")).out.find("witness"), std::string::npos);
  const auto lin = run("interval " + data("linear.json"));
  const auto s = lin.out.substr(lin.out.find('[')), t = lin.out.substr(lin.out.rfind('['));
  EXPECT_EQ(s.substr(0, s.find(']')), t.substr(0, t.find(']')));
}

TEST(Cli, Check) {
  const auto r = run("check relations --n 2");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto iv = run("check regular-interval --n 2 --format json");
  EXPECT_EQ(iv.code, 0);
  EXPECT_NE(iv.out.find("\"status\""), std::string::npos);
  EXPECT_NE(iv.out.find("27 comparable pairs"), std::string::npos) << iv.out;
  EXPECT_EQ(run("check").code, 2);
  EXPECT_EQ(run("check nope").code, 2);
  EXPECT_EQ(run("check relations --n 9").code, 2);
}

TEST(Cli, Export) {
  const auto h = run("export --dot " + data("p2_3.json"));
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(count(h.out, "\";\n"), 5u) << h.out;
  const auto q = run("export --dot --module M " + data("p2_3.json"));
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(count(q.out, "label=\"["), 2u) << q.out;
  EXPECT_EQ(run("export --dot " + data("empty_module.json")).code, 2);
}

TEST(Cli, Errors) {
  const auto m = run("extensions " + data("malformed.json"));
  EXPECT_EQ(m.code, 2);
  EXPECT_NE(m.out.find("line "), std::string::npos) << m.out;
  EXPECT_EQ(run("extensions " + data("asymmetric.json")).code, 2);
  EXPECT_EQ(run("extensions /nonexistent.json").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}
