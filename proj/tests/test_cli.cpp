#include <gtest/gtest.h>

#include <sys/wait.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("parity-ramsey-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  Result invoke(const std::string& args) const {
    const std::string cmd = std::string(PARITY_RAMSEY_BIN) + " " + args + " >" + path("stdout") + " 2>" + path("stderr");
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(path("stdout"));
    r.err = slurp(path("stderr"));
    return r;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ColorWorkedExample) {
  const auto r = invoke("color --beta 2 00000000 00010000");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("xi2   = (1,{0000,0001})"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("xi1   = ((2,{00,01}), 0)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("xi0   = (0, (2,{0,1}), 0, 0)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("Delta = (+1, 0)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("hex   = 00000022"), std::string::npos) << r.out;
}

TEST_F(Cli, ColorErrors) {
  EXPECT_EQ(invoke("color --beta 2 00000000 00000000").code, 2);
  EXPECT_EQ(invoke("color --beta 2 0000000 00010000").code, 2);
  EXPECT_EQ(invoke("color --beta 1 0 1").code, 2);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(invoke("").code, 2);
  EXPECT_EQ(invoke("verify --beta 2").code, 2);
  EXPECT_EQ(invoke("frobnicate").code, 2);
  EXPECT_EQ(invoke("verify --n 10 --mode sample --samples 10").code, 2);
  EXPECT_EQ(invoke("verify --n 10 --vertices random").code, 2);
  EXPECT_EQ(invoke("verify --n 10 --m 4 --checks parity-even-K5").code, 2);
  EXPECT_EQ(invoke("--help").code, 0);
}

TEST_F(Cli, VerifyCleanAndCorrupted) {
  const auto clean = invoke("verify --beta 2 --n 24 --m 5 --jobs 2 --out " + path("v.jsonl"));
  EXPECT_EQ(clean.code, 0) << clean.err;
  const auto j = nlohmann::json::parse(clean.out);
  EXPECT_EQ(j["total_violations"], 0);
  EXPECT_EQ(j["subsets_scanned"], 42504);
  EXPECT_TRUE(slurp(path("v.jsonl")).empty());

  // Ids 0, 1, 22 are the edges of triangle {0,1,2}; merging them forces a violation.
  const auto bad = invoke("verify --beta 2 --n 24 --m 5 --corrupt 1,0 --corrupt 22,0 --csv " + path("k.csv") + " --out " + path("b.jsonl"));
  EXPECT_EQ(bad.code, 1) << bad.err;
  const auto lines = slurp(path("b.jsonl"));
  ASSERT_FALSE(lines.empty());
  const auto first = nlohmann::json::parse(lines.substr(0, lines.find('\n')));
  EXPECT_TRUE(first.contains("kind"));
  EXPECT_EQ(first["vertices"][0].get<std::string>().size(), 8u);
  EXPECT_EQ(slurp(path("k.csv")).rfind("kind,violations\n", 0), 0u);
}

TEST_F(Cli, Classify) {
  const auto ok = invoke("classify --out " + path("c.json"));
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto j = nlohmann::json::parse(slurp(path("c.json")));
  EXPECT_EQ(j["survivors"], 5);
  const auto ablated = invoke("classify --skip-filter claim31 --skip-filter forbidden");
  EXPECT_EQ(ablated.code, 1);
  EXPECT_NE(ablated.err.find("differs"), std::string::npos);
  EXPECT_EQ(invoke("classify --type 2224").code, 0);
  EXPECT_EQ(invoke("classify --type 3333").code, 2);
}

TEST_F(Cli, Construct) {
  const auto ok = invoke("construct --n 20 --p 4 --c 2 --seed 7 --out " + path("col.csv"));
  EXPECT_EQ(ok.code, 0) << ok.err;
  const auto text = slurp(path("col.csv"));
  const auto header = nlohmann::json::parse(text.substr(0, text.find('\n')));
  EXPECT_EQ(header["t"], 15);
  EXPECT_EQ(header["seed"], 7);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 190);

  const auto fail = invoke("construct --n 10 --p 4 --t 1 --seed 1 --max-rounds 100 --out " + path("f.json"));
  EXPECT_EQ(fail.code, 1);
  const auto f = nlohmann::json::parse(slurp(path("f.json")));
  EXPECT_EQ(f["rounds_attempted"], 100);
  EXPECT_EQ(f["remaining_bad"], 210);

  EXPECT_EQ(invoke("construct --n 20 --p 6 --seed 1").code, 2);
  EXPECT_EQ(invoke("construct --n 20 --p 4").code, 2);
}

TEST_F(Cli, Code) {
  const auto ok = invoke("code --n 6 --beta 2 --out " + path("c.bin") + " --report " + path("c.json"));
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(slurp(path("c.bin")).size(), 8u + 4096u);
  const auto j = nlohmann::json::parse(slurp(path("c.json")));
  EXPECT_EQ(j["total_graphs"], 32768);
  EXPECT_TRUE(j["verification"]["violations"].empty());
  EXPECT_EQ(invoke("code --n 8 --beta 2").code, 2);
  const auto planted = invoke("code --n 6 --beta 2 --plant --report " + path("p.json"));
  EXPECT_EQ(planted.code, 1);
  EXPECT_EQ(nlohmann::json::parse(slurp(path("p.json")))["verification"]["violations"].size(), 1u);
}

TEST_F(Cli, Stats) {
  const auto r = invoke("stats --beta 2 --sizes 2,16");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "beta,n,vertices,colors,delta_parts");
  EXPECT_NE(r.out.find("2,2,lex,1,1\n"), std::string::npos);
}

TEST_F(Cli, JobsFromEnvironment) {
  const auto a = invoke("verify --n 20 --m 4 --out " + path("a.jsonl"));
  const std::string cmd = "PARITY_RAMSEY_JOBS=3 " + std::string(PARITY_RAMSEY_BIN) + " verify --n 20 --m 4 --out " +
                          path("b.jsonl") + " >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), a.code);
  EXPECT_EQ(slurp(path("a.jsonl")), slurp(path("b.jsonl")));
  const std::string bad = "PARITY_RAMSEY_JOBS=zero " + std::string(PARITY_RAMSEY_BIN) + " verify --n 20 --m 4 >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}
