#include "test_support.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lerch");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lerch::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval-eta direct") {
  const auto r = run({"eval-eta", "--z", "2", "--s", "1", "--m", "3", "--method", "direct"});
  CHECK(r.code == 0);
  CHECK(r.out == "6.666666666666667\n");
}

TEST_CASE("eval-eta other methods and formats") {
  const auto c = run({"eval-eta", "--z", "2", "--s", "1", "--m", "20", "--method", "convergent",
                      "--format", "json"});
  REQUIRE(c.code == 0);
  const auto j = nlohmann::json::parse(c.out);
  CHECK(j.at("value")[0].get<double>() == doctest::Approx(111142.37444756826).epsilon(1e-12));
  const auto csv = run({"eval-eta", "--z", "2", "--s", "-1", "--m", "5", "--format", "csv"});
  CHECK(csv.out == "value_re,value_im\r\n258,0\r\n");
}

TEST_CASE("eval-f domain error") {
  const auto r = run({"eval-f", "--z", "2", "--s", "1", "--a", "1.0", "--order", "5"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Re a > 1 required") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("eval-f methods") {
  const auto asy = run({"eval-f", "--z", "5", "--s", "3", "--a", "50+1i", "--order", "15"});
  CHECK(asy.code == 0);
  CHECK(asy.out.find("i\n") != std::string::npos);
  const auto q = run({"eval-f", "--z", "2", "--s", "1", "--a", "5.5", "--method", "quadrature"});
  CHECK(q.code == 0);
  CHECK(std::stod(q.out) == doctest::Approx(-0.2977547716975848).epsilon(1e-11));
  const auto conv = run({"eval-f", "--z", "2", "--s", "1", "--a", "3", "--method", "convergent"});
  CHECK(std::stod(conv.out) == doctest::Approx(-0.5).epsilon(1e-13));
  const auto bad = run({"eval-f", "--z", "2", "--s", "1", "--a", "3.5", "--method", "convergent"});
  CHECK(bad.code == 64);
  const auto json = run({"eval-f", "--z", "2", "--s", "1", "--a", "5", "--order", "1", "--format", "json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j.at("value")[0].get<double>() == -0.1875);
  CHECK(j.at("order") == 1);
}

TEST_CASE("order cap from the environment") {
  setenv("LERCH_MAX_ORDER", "8", 1);
  const auto r = run({"eval-f", "--z", "2", "--s", "1", "--a", "5.5", "--order", "9"});
  const auto ok = run({"eval-f", "--z", "2", "--s", "1", "--a", "5.5", "--order", "8"});
  setenv("LERCH_MAX_ORDER", "zero", 1);
  const auto garbage = run({"eval-f", "--z", "2", "--s", "1", "--a", "5.5", "--order", "2"});
  unsetenv("LERCH_MAX_ORDER");
  CHECK(r.code == 64);
  CHECK(r.err.find("LERCH_MAX_ORDER") != std::string::npos);
  CHECK(ok.code == 0);
  CHECK(garbage.code == 64);
}

TEST_CASE("complex literals") {
  for (const char* lit : {"10+1i", "10+i", "10.0+1.0i", "1e1+1e0i"}) {
    const auto r = run({"eval-f", "--z", "2", "--s", "2", "--a", lit, "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == run({"eval-f", "--z", "2", "--s", "2", "--a", "10+1i", "--order", "5"}).out);
  }
  CHECK(run({"eval-phi", "--z", "-0.5i", "--s", "2", "--a", "1"}).code == 0);
  for (const char* lit : {"abc", "1+", "1+2", "i1", "", "2 3"}) {
    CAPTURE(lit);
    CHECK(run({"eval-f", "--z", lit, "--s", "1", "--a", "5", "--order", "3"}).code == 64);
  }
}

TEST_CASE("eval-phi") {
  const auto r = run({"eval-phi", "--z", "0", "--s", "2", "--a", "3"});
  CHECK(r.out == "0.1111111111111111\n");
  CHECK(run({"eval-phi", "--z", "2", "--s", "2", "--a", "3"}).code == 2);
  const auto cl = run({"eval-phi", "--z", "0.5", "--s", "2", "--a", "50", "--method", "classic",
                       "--order", "8"});
  CHECK(cl.code == 0);
}

TEST_CASE("coeffs") {
  const auto h = run({"coeffs", "--z", "2", "--a", "5", "--count", "2"});
  CHECK(h.out == "path integer-direct\nC_0 = -0.9375\nC_1 = -1.625\n");
  const auto j = run({"coeffs", "--z", "2", "--a", "5", "--count", "1", "--path", "explicit",
                      "--format", "json"});
  CHECK(j.out == "{\"z\":[2.0,0.0],\"a\":[5.0,0.0],\"path\":\"explicit\",\"C\":[[-0.9375,0.0]]}\n");
  CHECK(run({"coeffs", "--z", "2", "--a", "5.5", "--path", "integer-direct"}).code == 64);
}

TEST_CASE("table1 csv") {
  const auto r = run({"table1", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0, passes = 0;
  std::getline(in, line);
  while (std::getline(in, line)) {
    ++rows;
    if (line.find(",true\r") != std::string::npos) ++passes;
  }
  CHECK(rows == 36);
  CHECK(passes == 36);
}

TEST_CASE("output is deterministic and can go to a file") {
  const auto a = run({"table1", "--format", "json"});
  const auto b = run({"table1", "--format", "json"});
  CHECK(a.out == b.out);
  const auto path = std::filesystem::temp_directory_path() / "lerch_cli_test.csv";
  const auto w = run({"sweep", "--axis", "z", "--fixed", "5", "--s", "1", "--samples", "4",
                      "--format", "csv", "--out", path.string()});
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream f(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  CHECK(text.rfind("z,reference_re,reference_im,order_1_re", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  std::filesystem::remove(path);
}

TEST_CASE("sweep human and json") {
  const auto h = run({"sweep", "--axis", "a", "--fixed", "2", "--s", "1", "--lo", "1", "--hi", "3",
                      "--orders", "2,5", "--samples", "3", "--format", "human"});
  CHECK(h.code == 0);
  CHECK(h.out.rfind("note: a range clamped", 0) == 0);
  const auto j = run({"sweep", "--fixed", "5", "--s", "1", "--samples", "2", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("rows").size() == 2);
  CHECK(run({"sweep", "--fixed", "5", "--s", "1", "--orders", "2,x"}).code == 64);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  CHECK(run({"eval-eta", "--z", "2"}).code == 64);
  CHECK(run({"eval-eta", "--z", "2", "--s", "1", "--m", "0"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("accuracy errors exit 1") {
  const auto r = run({"eval-f", "--z", "1", "--s", "1", "--a", "20", "--method", "convergent",
                      "--max-order", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("best estimate") != std::string::npos);
}

TEST_CASE("check reports every property") {
  const auto r = run({"check"});
  CHECK(r.out.find("PASS coefficient path agreement") != std::string::npos);
  CHECK(r.out.find("PASS oracle triangle") != std::string::npos);
  CHECK(r.out.find("PASS eta recursion") != std::string::npos);
  // The summation-by-parts series diverges for these inputs, so check exits nonzero.
  CHECK(r.out.find("FAIL summation-by-parts residual") != std::string::npos);
  CHECK(r.code == 1);
}
