#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include "anth/anthyphairesis.hpp"
#include "anth/pell.hpp"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

std::string run(const std::string& args) {
  const std::string cmd = std::string(ANTH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

}  // namespace

TEST(CliJson, ExpandRoundTrips) {
  for (const char* expr : {"sqrt(7)", "7/3", "(1+sqrt(5))/2", "(3+sqrt(13))/7"}) {
    const Json j = Json::parse(run(std::string("expand '") + expr + "' --format json --convergents 4"));
    anth::CFExpansion cf;
    for (const auto& k : j.at("head")) cf.head.emplace_back(k.get<std::string>());
    for (const auto& k : j.at("period")) cf.period.emplace_back(k.get<std::string>());
    EXPECT_EQ(cf, anth::CFExpansion::parse(j.at("expansion").get<std::string>()));
    EXPECT_EQ(cf.str(), j.at("expansion").get<std::string>());
    const auto table = anth::convergents(cf, 4);
    ASSERT_EQ(j.at("convergents").size(), table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      EXPECT_EQ(j["convergents"][i]["p"].get<std::string>(), table[i].p.get_str());
      EXPECT_EQ(j["convergents"][i]["q"].get<std::string>(), table[i].q.get_str());
    }
  }
}

TEST(CliJson, PellRows) {
  const Json j = Json::parse(run("pell 2..10 --format json"));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 7u);  // 4 and 9 skipped
  for (const auto& row : j) {
    const anth::Integer N(row.at("N").get<std::string>());
    const anth::Integer x(row.at("x").get<std::string>()), y(row.at("y").get<std::string>());
    EXPECT_EQ(y * y - N * x * x, 1);
    EXPECT_EQ(row.at("period_len").get<std::size_t>(), anth::pell_fundamental(N).period_len);
  }
}

TEST(CliJson, ClassifySchema) {
  const Json j = Json::parse(run("classify 'sqrt(5)-2' '3+sqrt(5)' '(sqrt(15)-sqrt(3))/3' --format json"));
  ASSERT_EQ(j.size(), 3u);
  for (const char* key : {"value", "zeta", "eta", "kind", "order", "criterion_i", "criterion_ii", "theta_sq",
                          "alogos_kind", "pell_number"}) {
    EXPECT_TRUE(j[0].contains(key)) << key;
  }
  EXPECT_EQ(j[0]["order"], 5);
  EXPECT_EQ(j[1]["kind"], "binomial");
  EXPECT_EQ(j[1]["order"], 1);
  EXPECT_EQ(j[2]["order"], 6);
  EXPECT_TRUE(j[2]["pell_number"].is_null());
}

TEST(CliJson, VerifyIsBitIdenticalForFixedSeed) {
  const std::string a = run("verify all --seed 9 --count 15 --format json");
  const std::string b = run("verify all --seed 9 --count 15 --format json");
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  for (const auto& suite : j) {
    EXPECT_TRUE(suite.at("passed").get<bool>()) << suite.at("suite");
    for (const auto& c : suite.at("checks")) EXPECT_EQ(c.at("failures"), 0);
  }
}
