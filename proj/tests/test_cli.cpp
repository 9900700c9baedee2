#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + CTW_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::json> lines(const std::string& out) {
  std::vector<nlohmann::json> v;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) v.push_back(nlohmann::json::parse(line));
  return v;
}

}  // namespace

TEST(Cli, VerifyQDyson) {
  const CliRun r = run("verify --theorem qdyson --a 1,1");
  ASSERT_EQ(r.code, 0);
  const auto j = lines(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["verdict"], "MATCH");
  EXPECT_EQ(j[0]["lhs_ct"], "1 + q");
}

TEST(Cli, VerifyCyclicBg) {
  const CliRun r = run("verify --theorem bg --n 3 --Q '[[1,3]]' --a 1,1,1");
  ASSERT_EQ(r.code, 0);
  const auto j = lines(r.out);
  EXPECT_EQ(j[0]["lhs_ct"], "0");
  EXPECT_EQ(j[0]["rhs"]["num"], "0");
  EXPECT_EQ(j[0]["transitive"], false);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run("verify --a 1").code, 2);
  EXPECT_EQ(run("verify --theorem nope --a 1").code, 2);
  EXPECT_EQ(run("verify --theorem bg --Q '[[1,' --a 1,1").code, 2);
  EXPECT_EQ(run("verify --theorem main1 --a 0,0,1").code, 2);
  EXPECT_EQ(run("verify --theorem qdyson --a 1,1 --instances '[]'").code, 2);
  EXPECT_EQ(run("sweep --theorem bg --n 3..2").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, OutputRoundTripsThroughInstanceParser) {
  const CliRun first = run("verify --theorem main1 --a 1,2,1,2 --Q '[[2,3]]'");
  ASSERT_EQ(first.code, 0);
  const auto inst = lines(first.out)[0]["instance"];
  const std::string path = ::testing::TempDir() + "ctw_instance.json";
  std::ofstream(path) << inst.dump();
  const CliRun second = run("verify --instances " + path);
  ASSERT_EQ(second.code, 0);
  EXPECT_EQ(lines(second.out)[0]["instance"], inst);
}

TEST(Cli, BatchVerify) {
  const CliRun r = run(R"(verify --instances '[{"theorem":"qdyson","a":[1,2]},{"theorem":"dixon","n":2}]')");
  ASSERT_EQ(r.code, 0);
  const auto j = lines(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[2]["summary"]["match"], 2);
}

TEST(Cli, SweepDixon) {
  const CliRun r = run("sweep --theorem dixon --n 0..8");
  ASSERT_EQ(r.code, 0);
  const auto j = lines(r.out);
  ASSERT_EQ(j.size(), 10u);
  for (int k = 0; k < 9; ++k) EXPECT_EQ(j[static_cast<std::size_t>(k)]["verdict"], "MATCH");
  EXPECT_EQ(j[9]["summary"]["match"], 9);
}

TEST(Cli, SweepMain1) {
  const CliRun r = run("sweep --theorem main1 --n 2..3 --amax 2 --jobs 2");
  ASSERT_EQ(r.code, 0);
  const auto j = lines(r.out);
  EXPECT_EQ(j.back()["summary"]["mismatch"], 0);
  EXPECT_EQ(j.back()["summary"]["match"], j.back()["summary"]["total"]);
}

TEST(Cli, SweepCeilingProducesSkips) {
  const CliRun r = run("sweep --theorem bg --n 3 --amax 2 --ceiling 20");
  ASSERT_EQ(r.code, 0);
  EXPECT_GT(lines(r.out).back()["summary"]["skipped"].get<int>(), 0);
  const CliRun env = run("sweep --theorem bg --n 3 --amax 2", "CT_WORKBENCH_CEILING=20");
  EXPECT_EQ(lines(env.out).back()["summary"]["skipped"], lines(r.out).back()["summary"]["skipped"]);
  EXPECT_GT(lines(env.out).back()["summary"]["skipped"].get<int>(), 0);
}

TEST(Cli, SweepQList) {
  const CliRun r = run("sweep --theorem main2 --n 4 --amax 1 --q-policy list --Q-list '[[],[[3,4]]]'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).back()["summary"]["total"], 2);
}

TEST(Cli, ConstantTermOfSpecs) {
  EXPECT_EQ(run(R"(ct --format pretty --spec '{"nvars":2,"factors":[{"type":"pochhammer","i":0,"j":1,"qshift":0,"order":1}]}')").out,
            "1\n");
  EXPECT_EQ(run(R"(ct --format pretty --spec '{"nvars":2,"factors":[{"type":"pochhammer","i":0,"j":1,"qshift":0,"order":1},{"type":"pochhammer","i":1,"j":0,"qshift":1,"order":1}]}')").out,
            "1 + q\n");
  EXPECT_EQ(run(R"(ct --format pretty --spec '{"nvars":2,"factors":[{"type":"monomial","sign":1,"exps":[1,-1],"qshift":0}]}')").out,
            "0\n");
  const CliRun j = run(R"(ct --expand --spec '{"nvars":2,"factors":[{"type":"pochhammer","i":0,"j":1,"order":2}]}')");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(lines(j.out)[0]["terms"], 3);
  EXPECT_EQ(run(R"(ct --ceiling 1 --spec '{"nvars":2,"factors":[{"type":"pochhammer","i":0,"j":1,"order":3}]}')").code, 2);
  EXPECT_EQ(run("ct --spec '{\"nvars\":2,\"factors\":[{}]}'").code, 2);
}

TEST(Cli, Tournaments) {
  const CliRun three = run("tournaments --n 3");
  ASSERT_EQ(three.code, 0);
  const auto rows = lines(three.out);
  ASSERT_EQ(rows.size(), 8u);
  int cyclic = 0;
  for (const auto& row : rows) cyclic += row["transitive"].get<bool>() ? 0 : 1;
  EXPECT_EQ(cyclic, 2);

  const auto two = lines(run("tournaments --n 2").out);
  ASSERT_EQ(two.size(), 2u);
  for (const auto& row : two) EXPECT_TRUE(row["transitive"].get<bool>());

  const CliRun r2 = run("tournaments --n 4 --family r2 --Q '[[3,4]]'");
  ASSERT_EQ(r2.code, 0);
  const auto row = lines(r2.out).at(0);
  EXPECT_EQ(row["family"], nlohmann::json::parse("[[1],[1,2],[1,4],[1,2,4],[1,2,3,4]]"));
  EXPECT_EQ(row["shortcut_consistent"], true);
  EXPECT_EQ(run("tournaments --n 4 --family r2 --Q '[[2,3]]'").code, 2);
}

TEST(Cli, LemmaChecks) {
  EXPECT_EQ(run("lemma import1 --s-max 3 --amax 2").code, 0);
  const CliRun d = run("lemma degree --a 2,2 --k 1 --q0 3/2");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(lines(d.out)[0]["bound"], 1);
  EXPECT_EQ(run("lemma degree --a 2,2 --k 1 --q0 1").code, 2);
  EXPECT_EQ(run("lemma census --n 4").code, 0);
}
