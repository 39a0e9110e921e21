#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/app.hpp"
#include "cli/run_config.hpp"
#include "cli/scenarios.hpp"
#include "doctest.h"
#include "dtls/errors.hpp"

using namespace dtls;
using namespace dtls::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header = nullptr) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dtls_cli_test_" + name);
}

}  // namespace

TEST_CASE("config parsing") {
  std::istringstream in(
      "# comment\n"
      "delta0 = 1.5\n"
      "  alpha0_L=0.25   # trailing comment\n"
      "\n"
      "grid_points = 101\n"
      "sweep_var = delta0\n"
      "sweep_from = -1\n"
      "sweep_to = 1\n"
      "sweep_steps = 5\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.params.delta0 == 1.5);
  CHECK(cfg.params.alpha0_L == 0.25);
  CHECK(cfg.solver.grid_points == 101);
  REQUIRE(cfg.sweep.has_value());
  CHECK(cfg.sweep->variable == SweepVariable::delta0);
  CHECK(cfg.sweep->steps == 5);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("config errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
  };
  CHECK_THROWS_AS(parse("delta0 1.0\n"), ConfigError);
  CHECK_THROWS_AS(parse("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse("phi = 1.0x\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid_points = 2.5\n"), ConfigError);
  CHECK_THROWS_AS(parse("sweep_var = gamma\n"), ConfigError);
  CHECK_THROWS_AS(parse("grid_points = 10\n").validate(), ConfigError);
  CHECK_THROWS_AS(parse("shoot_tol = 0\n").validate(), ConfigError);
  CHECK_THROWS_AS(parse("sweep_var = phi\nsweep_steps = 1\n").validate(), ConfigError);
  CHECK_THROWS_AS(parse("sweep_var = phi\nsweep_to = inf\n").validate(), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/dtls.cfg"), ConfigError);
}

TEST_CASE("config round trip is exact") {
  RunConfig cfg;
  cfg.params.phi = 0.1 + 0.2;
  cfg.params.delta0 = -1.0 / 3.0;
  cfg.bc.omega_pi_minus_in = 0.16000000000000003;
  cfg.solver.grid_points = 257;
  cfg.sweep = SweepSpec{SweepVariable::alpha0_L, 0.0, 0.7, 4};
  std::istringstream in(serialize(cfg));
  const auto back = parse_config(in);
  CHECK(serialize(back) == serialize(cfg));
  CHECK(back.params.phi == cfg.params.phi);
  CHECK(back.params.delta0 == cfg.params.delta0);
  CHECK(back.bc.omega_pi_minus_in == cfg.bc.omega_pi_minus_in);

  std::ostringstream a, b;
  run_scenario(cfg, a);
  run_scenario(back, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("serialized config reproduces the run through the command line") {
  const auto path = temp_file("roundtrip.cfg");
  const auto first = run({"config", "--alpha0L", "0.45", "--phi", "0.3", "--grid", "129"});
  REQUIRE(first.code == 0);
  std::ofstream(path) << first.out;
  const auto a = run({"propagate", "--alpha0L", "0.45", "--phi", "0.3", "--grid", "129"});
  const auto b = run({"propagate", "--config", path.string()});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"config", "--config", path.string()}).out == first.out);
  std::filesystem::remove(path);
}

TEST_CASE("flags override the config file") {
  const auto path = temp_file("override.cfg");
  std::ofstream(path) << "phi = 0.5\nalpha0_L = 0.2\n";
  const auto r = run({"config", "--config", path.string(), "--phi", "1.25"});
  CHECK(r.out.find("phi = 1.25\n") != std::string::npos);
  CHECK(r.out.find("alpha0_L = 0.20000000000000001\n") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("profile CSV layout") {
  std::string header;
  const auto r = run({"propagate", "--grid", "101", "--phi", "0.7"});
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(r.out, &header);
  CHECK(header ==
        "y,re_pi_plus,im_pi_plus,re_pi_minus,im_pi_minus,re_sigma_plus,im_sigma_plus,"
        "re_sigma_minus,im_sigma_minus,I_pi_plus,I_pi_minus,T_sigma_plus,R_sigma_minus,"
        "phase_pi_plus,phase_pi_minus,phase_sigma_plus,phase_sigma_minus");
  REQUIRE(rows.size() == 101);
  for (const auto& row : rows) CHECK(row.size() == 17);
  CHECK(rows.front()[0] == 0.0);
  CHECK(rows.back()[0] == 1.0);
  CHECK(rows.front()[11] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rows.back()[10] == doctest::Approx(0.0256).epsilon(1e-12));
}

TEST_CASE("numbers carry at least 12 significant digits") {
  const auto r = run({"propagate", "--grid", "64"});
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  std::getline(in, line);
  // second data row, first field is y = 1/63
  const std::string y = line.substr(0, line.find(','));
  CHECK(std::abs(std::stod(y) - 1.0 / 63.0) < 1e-16);
}

TEST_CASE("empty sample gives exact rows") {
  const auto r = run({"propagate", "--alpha0L", "0", "--grid", "64"});
  const auto rows = parse_csv(r.out);
  for (const auto& row : rows) {
    CHECK(row[9] == rows.front()[9]);
    CHECK(row[10] == rows.front()[10]);
    CHECK(row[11] == 1.0);
    CHECK(row[12] == 0.0);
  }
  const auto s = run({"sweep", "--alpha0L", "0", "--grid", "64", "--var", "phi", "--from", "0",
                      "--to", "3", "--steps", "4"});
  for (const auto& row : parse_csv(s.out)) {
    CHECK(row[1] == 0.0);
    CHECK(row[2] == 1.0);
  }
}

TEST_CASE("sweep output is deterministic and ordered") {
  const std::vector<std::string> args{"sweep", "--grid", "129", "--var", "delta0", "--from", "-2",
                                      "--to", "2", "--steps", "7", "--threads", "3"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::string header;
  const auto rows = parse_csv(a.out, &header);
  CHECK(header == "sweep_value,R,T,T_analytic,R_analytic,max_abs_alpha0L_cj,newton_iters");
  REQUIRE(rows.size() == 7);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i][0] == doctest::Approx(-2.0 + i * 2.0 / 3.0));
  auto single = args;
  single.back() = "1";
  CHECK(run(single).out == a.out);
}

TEST_CASE("output file") {
  const auto path = temp_file("out.csv");
  const auto r = run({"propagate", "--grid", "64", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == run({"propagate", "--grid", "64"}).out);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kConfigError);
  CHECK(run({"bogus"}).code == kConfigError);
  CHECK(run({"propagate", "--grid", "10"}).code == kConfigError);
  CHECK(run({"propagate", "--config", "/nonexistent.cfg"}).code == kConfigError);
  CHECK(run({"propagate", "--set", "colour=red"}).code == kConfigError);
  CHECK(run({"sweep"}).code == kConfigError);
  CHECK(run({"figure", "fig2"}).code == kConfigError);
  const auto node = run({"propagate", "--omega-pi-minus", "0.4", "--grid", "64"});
  CHECK(node.code == kNodeError);
  CHECK(node.err.find("y = ") != std::string::npos);
  const auto stall = run({"propagate", "--alpha0L", "2.5", "--max-newton", "1", "--grid", "64"});
  CHECK(stall.code == kNoConvergence);
  CHECK(run({"propagate", "--out", "/nonexistent/dir/out.csv"}).code == kConfigError);
  CHECK(run({"--help"}).code == kOk);
}

TEST_CASE("figure presets") {
  CHECK(figure_names().size() == 7);
  for (const auto& name : figure_names()) CHECK_NOTHROW(figure_config(name).validate());
  CHECK(figure_config("fig3").sweep->steps == 128);
  CHECK(figure_config("fig8").params.phi == doctest::Approx(kPi / 2));
  CHECK(figure_config("fig9").params.phi == 0.0);
  CHECK_THROWS_AS(figure_config("fig10"), ConfigError);

  const auto fig8 = parse_csv(run({"figure", "fig8", "--grid", "401"}).out);
  CHECK(fig8.back()[11] == doctest::Approx(2.17).epsilon(0.01));
  const auto fig9 = parse_csv(run({"figure", "fig9", "--grid", "401"}).out);
  CHECK(fig9.back()[16] == doctest::Approx(3.14).epsilon(0.01));
  const auto fig9b = parse_csv(run({"figure", "fig9", "--grid", "401", "--phi", "0.785398163397448"}).out);
  CHECK(fig9b.back()[16] != doctest::Approx(3.14).epsilon(0.01));
}

TEST_CASE("fig7 writes both detunings and a shift summary") {
  const auto r = run({"figure", "fig7", "--grid", "129", "--steps", "16"});
  REQUIRE(r.code == 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  CHECK(header.rfind("delta0,sweep_value,", 0) == 0);
  REQUIRE(rows.size() == 32);
  CHECK(rows.front()[0] == 0.0);
  CHECK(rows.back()[0] == 2.0);
  CHECK(r.err.find("extremum shift: ") != std::string::npos);
  CHECK(r.err.find("analytic phi_L: 0.1475836") != std::string::npos);
}

TEST_CASE("coefficients and oracle reports") {
  const auto c = run({"coefficients", "--grid", "64"});
  REQUIRE(c.code == 0);
  std::string header;
  const auto rows = parse_csv(c.out, &header);
  CHECK(rows.size() == 64);
  CHECK(header.rfind("y,r_abs,a,b,eta,eta_p,c0,", 0) == 0);

  const auto b = run({"oracle", "bloch", "--samples", "20", "--seed", "3"});
  REQUIRE(b.code == 0);
  for (const auto& row : parse_csv(b.out)) {
    CHECK(row[6] < 1e-10);
    CHECK(row[7] < 1e-10);
  }
  CHECK(run({"oracle", "bloch", "--samples", "20", "--seed", "3"}).out == b.out);

  const auto f = run({"oracle", "fourier"});
  for (const auto& row : parse_csv(f.out)) CHECK(row[5] < 1e-8);
  const auto d = run({"oracle", "dephasing", "--samples", "11", "--phi", "0.5", "--alpha0L", "1"});
  CHECK(parse_csv(d.out).size() == 11);
  CHECK(d.err.find("max |closed form - ODE|") != std::string::npos);
  CHECK(run({"oracle", "nothing"}).code == kConfigError);
}
