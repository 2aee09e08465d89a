#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "json.hpp"
#include "logimap/dist.hpp"

using namespace logimap;
using namespace logimap::cli;

namespace {

RunConfig config_for(std::string subcommand) {
  RunConfig c;
  c.subcommand = std::move(subcommand);
  return c;
}

struct Output {
  int code;
  std::string out;
  std::string diag;
};

Output run_capture(const RunConfig& c) {
  std::ostringstream out, diag;
  const int code = run(c, out, diag);
  return {code, out.str(), diag.str()};
}

std::vector<std::string> split(const std::string& text, const std::string& sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find(sep, start)) != std::string::npos;
       start = pos + sep.size())
    parts.push_back(text.substr(start, pos - start));
  if (start < text.size()) parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

TEST_CASE("distribution spec grammar") {
  CHECK(parse_dist_spec("uniform").family() == Family::Uniform);
  CHECK(parse_dist_spec("arcsine").family() == Family::Arcsine);
  const DistSpec b = parse_dist_spec("beta:0.5,0.5");
  CHECK(b.family() == Family::Beta);
  CHECK(*b.alpha() == 0.5);
  const DistSpec k = parse_dist_spec("kumaraswamy:1,0.5");
  CHECK(k.family() == Family::Kumaraswamy);
  CHECK(*k.beta() == 0.5);
  for (const char* bad : {"", "normal", "beta", "beta:1", "beta:1,", "beta:x,1",
                          "kumaraswamy:1,0", "uniform:1,2", "beta:1,2,3"})
    CHECK_THROWS_AS(parse_dist_spec(bad), std::invalid_argument);
}

TEST_CASE("iterate") {
  SUBCASE("two steps from uniform is K(1/2, 1/2)") {
    RunConfig c = config_for("iterate");
    c.steps = 2;
    const Table t = iterate_table(c);
    REQUIRE(t.names == std::vector<std::string>{"y", "D0", "D1", "D2"});
    const auto& y = t.column("y");
    const auto& d2 = t.column("D2");
    CHECK(y.size() == 1025);
    for (std::size_t i = 0; i < y.size(); ++i)
      REQUIRE(std::fabs(d2[i] - cdf_kumaraswamy(0.5, 0.5, y[i])) <= 1e-10);
  }
  SUBCASE("zero steps is the identity column") {
    RunConfig c = config_for("iterate");
    c.steps = 0;
    const Table t = iterate_table(c);
    REQUIRE(t.names.size() == 2);
    CHECK(t.column("D0") == t.column("y"));
  }
  SUBCASE("r = 2 saturates past 1/2") {
    RunConfig c = config_for("iterate");
    c.r = 2.0;
    c.steps = 1;
    const Table t = iterate_table(c);
    const auto& y = t.column("y");
    const auto& d1 = t.column("D1");
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] >= 0.5) REQUIRE(d1[i] == 1.0);
  }
  SUBCASE("beyond the exact limit the grid strategy takes over") {
    RunConfig c = config_for("iterate");
    c.steps = 14;
    c.grid = 256;
    const Table t = iterate_table(c);
    CHECK(t.names.back() == "D14");
  }
}

TEST_CASE("figure data") {
  const Table t = figure_table(config_for("figure"));
  CHECK(t.names ==
        std::vector<std::string>{"y", "D0", "D1", "D2", "D3", "D4", "U", "K", "B"});
  CHECK(t.rows() == 1025);
  for (const CheckResult& c : check_figure(t)) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
  CHECK(t.column("D0") == t.column("U"));
}

TEST_CASE("csv and json carry the same values") {
  RunConfig c = config_for("figure");
  c.grid = 64;
  const Table t = figure_table(c);
  std::ostringstream csv, json;
  write_csv(t, csv);
  write_json(t, json);

  const auto lines = split(csv.str(), "\r\n");
  REQUIRE(lines.size() == t.rows() + 1);
  CHECK(lines[0] == "y,D0,D1,D2,D3,D4,U,K,B");

  const auto doc = nlohmann::json::parse(json.str());
  CHECK(doc["meta"]["subcommand"] == "figure");
  CHECK(doc["meta"]["flags"]["grid"] == 64);
  for (std::size_t row = 1; row < lines.size(); ++row) {
    const auto fields = split(lines[row], ",");
    REQUIRE(fields.size() == t.names.size());
    for (std::size_t col = 0; col < fields.size(); ++col) {
      const double from_csv = std::strtod(fields[col].c_str(), nullptr);
      const double from_json = doc["columns"][t.names[col]][row - 1].get<double>();
      REQUIRE(from_csv == from_json);
      REQUIRE(from_csv == t.columns[col][row - 1]);
    }
  }
}

TEST_CASE("csv floats round-trip") {
  for (double v : {0.1, 1.0 / 3.0, 2.3530952119142438e-06, 1e-300, 0.0, 1.0})
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
}

TEST_CASE("verify") {
  SUBCASE("default run passes") {
    const Output o = run_capture(config_for("verify"));
    CHECK(o.code == kExitOk);
    CHECK(o.out.find("FAIL") == std::string::npos);
    CHECK(o.out.rfind("check,status,measured,threshold,detail", 0) == 0);
  }
  SUBCASE("the arcsine law is not invariant at r = 3.9") {
    RunConfig c = config_for("verify");
    c.r = 3.9;
    const Output o = run_capture(c);
    CHECK(o.code == kExitVerificationFailed);
    CHECK(o.out.find("arcsine_fixed_point[r=3.9],FAIL") != std::string::npos);
  }
  SUBCASE("same seed, same bytes") {
    RunConfig c = config_for("verify");
    c.seed = 5;
    CHECK(run_capture(c).out == run_capture(c).out);
    c.format = OutputFormat::Json;
    const Output o = run_capture(c);
    CHECK(o.out == run_capture(c).out);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["all_pass"] == true);
    CHECK(doc["checks"].size() == 10);
  }
}

TEST_CASE("simulate") {
  SUBCASE("orbit mode") {
    RunConfig c = config_for("simulate");
    c.steps = 1'000'000;
    c.seed = 7;
    std::ostringstream diag;
    const Table t = simulate_table(c, diag);
    CHECK(t.names == std::vector<std::string>{"y", "empirical", "arcsine"});
    REQUIRE(t.footer.size() == 1);
    CHECK(t.footer[0].first == "ks");
    CHECK(t.footer[0].second[0] <= 0.01);
    CHECK(diag.str().empty());
  }
  SUBCASE("ensemble mode, two steps") {
    RunConfig c = config_for("simulate");
    c.mode = SimulateMode::Ensemble;
    c.push_steps = 2;
    c.n = 100'000;
    std::ostringstream diag;
    const Table t = simulate_table(c, diag);
    CHECK(t.names.back() == "D2");
    CHECK(t.footer[0].second[0] < t.footer[0].second[1]);
    CHECK(t.footer[0].second[1] == doctest::Approx(1.63 / std::sqrt(1e5)));
  }
  SUBCASE("r = 2 reports a degenerate attractor") {
    RunConfig c = config_for("simulate");
    c.r = 2.0;
    c.steps = 10'000;
    const Output o = run_capture(c);
    CHECK(o.code == kExitOk);
    CHECK(o.diag.find("degenerate attractor") != std::string::npos);
    std::ostringstream diag;
    const Table t = simulate_table(c, diag);
    const auto& y = t.column("y");
    const auto& e = t.column("empirical");
    for (std::size_t i = 0; i < y.size(); ++i) REQUIRE(e[i] == (y[i] >= 0.5 ? 1.0 : 0.0));
  }
  SUBCASE("csv footer record has the header width") {
    RunConfig c = config_for("simulate");
    c.steps = 10'000;
    c.grid = 8;
    const Output o = run_capture(c);
    const auto lines = split(o.out, "\r\n");
    CHECK(lines.back().rfind("ks,", 0) == 0);
    CHECK(split(lines.back(), ",").size() == 3);
  }
}

TEST_CASE("convergence subcommand") {
  RunConfig c = config_for("convergence");
  c.steps = 4;
  c.grid = 1024;
  const Table t = convergence_table(c);
  CHECK(t.rows() == 5);
  CHECK(t.column("to_uniform")[0] == 0.0);
  CHECK(t.column("to_kumaraswamy")[2] <= 1e-10);
}

TEST_CASE("exit codes") {
  RunConfig c = config_for("iterate");
  c.init = "gamma:1,2";
  CHECK(run_capture(c).code == kExitUsage);
  c = config_for("figure");
  c.r = 5.0;
  CHECK(run_capture(c).code == kExitUsage);
  c = config_for("nonsense");
  CHECK(run_capture(c).code == kExitUsage);
  c = config_for("simulate");
  c.steps = 10;  // below the ergodic minimum
  CHECK(run_capture(c).code == kExitUsage);
  c = config_for("iterate");
  c.steps = 1;
  c.init = "beta:1e8,1e8";  // continued fraction cannot converge
  CHECK(run_capture(c).code == kExitIntegrity);
}
