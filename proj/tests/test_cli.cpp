#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace sp4bg;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  std::string cmd = std::string(SP4BG_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const std::string& name) { return std::string(SP4BG_SAMPLES) + "/" + name; }
std::string scratch(const std::string& name) { return std::string(SP4BG_SCRATCH) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, VerifyRelations) {
  EXPECT_EQ(run("--ring Z verify-relations --samples 100").code, 0);
  EXPECT_EQ(run("--ring F4 verify-relations --samples 100").code, 0);
  EXPECT_EQ(run("--ring Z verify-relations --samples 0").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("--ring Q verify-relations").code, 2);
  EXPECT_EQ(run("classify").code, 2);
  EXPECT_EQ(run("--ring Z factor --input " + sample("missing.json")).code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, PseudoGoodTable) {
  CliRun r = run("pseudo-good --bound-D 100");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1^2*29=5^2+4"), std::string::npos);
  EXPECT_NE(r.out.find("3^2*93=29^2-4"), std::string::npos);
  EXPECT_NE(r.out.find("5^2*61=39^2+4"), std::string::npos);
  EXPECT_NE(r.out.find("6+sqrt37"), std::string::npos);
}

TEST(Cli, FactorAndCheckCertificate) {
  const std::string cert = scratch("cli_certificate.json");
  CliRun r = run("--ring Z factor --input " + sample("matrix.json") + " --out " + cert);
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run("factor --check " + cert).code, 0);

  nlohmann::json j = nlohmann::json::parse(slurp(cert));
  auto& v = j["factors"][0]["value"][0];
  v = nlohmann::json(std::stol(v.dump()) + 2);
  const std::string bad = scratch("cli_certificate_bad.json");
  std::ofstream(bad) << j.dump();
  EXPECT_EQ(run("factor --check " + bad).code, 1);
}

TEST(Cli, ClassifyBoundsLowerBound) {
  CliRun c = run("--ring Z classify --set " + sample("sets.json"));
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("yes"), std::string::npos);
  EXPECT_EQ(run("--ring F4 classify --set " + sample("sets_f4.json")).code, 0);

  CliRun b = run("--ring Z --json bounds --k 1 --L 384 --K 646");
  ASSERT_EQ(b.code, 0);
  nlohmann::json j = nlohmann::json::parse(b.out);
  EXPECT_EQ(j.at("upper").dump(), "248069");
  EXPECT_TRUE(j.contains("constants_provenance"));

  EXPECT_EQ(run("--ring Z lower-bound --k 2 --aux 3").code, 0);
  EXPECT_EQ(run("--ring Z lower-bound --k 2 --aux 9").code, 2);
}

TEST(Cli, NormsAndCovering) {
  CliRun n = run("norms --q 2 --gen b:1");
  EXPECT_EQ(n.code, 0);
  EXPECT_NE(n.out.find("274"), std::string::npos);
  EXPECT_EQ(run("norms --q 2 --oracle s6").code, 0);
  EXPECT_EQ(run("covering --q s6").code, 0);
  EXPECT_EQ(run("covering --q 5").code, 2);
}

TEST(Cli, ManifestIsDeterministic) {
  const std::string m1 = scratch("m1.json"), m2 = scratch("m2.json");
  CliRun a = run("--ring 'O(5)' --seed 7 --manifest " + m1 + " verify-relations --samples 50");
  CliRun b = run("--ring 'O(5)' --seed 7 --manifest " + m2 + " verify-relations --samples 50");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  RunManifest x = RunManifest::from_json(nlohmann::json::parse(slurp(m1)));
  RunManifest y = RunManifest::from_json(nlohmann::json::parse(slurp(m2)));
  EXPECT_TRUE(x.same_run(y));
  EXPECT_EQ(x.digest, y.digest);
  EXPECT_EQ(x.digest, hex_digest(a.out));
  EXPECT_EQ(x.command, "verify-relations");
  EXPECT_EQ(x.seed, 7u);
  EXPECT_EQ(RunManifest::from_json(x.to_json()).to_json(), x.to_json());
}

TEST(Cli, ReportTagsEveryLine) {
  CliRun r = run("report");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("8J+6"), std::string::npos);
  EXPECT_NE(r.out.find("[quoted]"), std::string::npos);
  EXPECT_NE(r.out.find("[computed]"), std::string::npos);
}
