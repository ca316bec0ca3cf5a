#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "szeta/cli.hpp"
#include "szeta/errors.hpp"

using namespace szeta;
using namespace szeta::cli;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the szeta binary with the given arguments (already shell-quoted).
Run szeta_cli(const std::string& args, const std::string& env = "") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / "szeta_cli_test.out", err = dir / "szeta_cli_test.err";
  const std::string cmd = env + " " + SZETA_CLI_PATH + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

}  // namespace

TEST_CASE("complex literals") {
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_complex("2+0i") == Complex(2.0, 0.0));
  CHECK(parse_complex(" 0.5 - 14.5i ") == Complex(0.5, -14.5));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("3i") == Complex(0.0, 3.0));
  CHECK(parse_complex("1e-3+2e2i") == Complex(1e-3, 200.0));
  CHECK(parse_complex("-1.5E+1-2.5e-1i") == Complex(-15.0, -0.25));
  CHECK(parse_complex("+2-i") == Complex(2.0, -1.0));
  CHECK_THROWS_AS(parse_complex(""), ParseError);
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex("1+2"), ParseError);
  CHECK_THROWS_AS(parse_complex("1+2ii"), ParseError);
}

TEST_CASE("config files") {
  std::istringstream in("# defaults\nzero_table = /data/zeros.txt\nout_format=csv  # inline\n\nquad_min_nodes = 20\n");
  const auto cfg = parse_config(in);
  CHECK(cfg.zero_table == "/data/zeros.txt");
  CHECK(cfg.out_format == OutFormat::csv);
  CHECK(cfg.quad_min_nodes == 20);
  CHECK(quadrature_order_at_least(20) == 32);
  CHECK(quadrature_order_at_least(3) == 4);
  CHECK_THROWS(quadrature_order_at_least(64));

  std::istringstream bad_key("colour = blue\n");
  CHECK_THROWS_AS(parse_config(bad_key), ParseError);
  std::istringstream bad_line("zero_table\n");
  CHECK_THROWS_AS(parse_config(bad_line), ParseError);
  std::istringstream bad_format("out_format = xml\n");
  CHECK_THROWS_AS(parse_config(bad_format), ParseError);
  CHECK_THROWS_AS(load_config("/nonexistent/szeta.conf"), ParseError);
}

TEST_CASE("table path precedence") {
  RunConfig cfg;
  CHECK_FALSE(resolve_table_path(std::nullopt, cfg, nullptr).has_value());
  CHECK(resolve_table_path(std::nullopt, cfg, "env.txt") == "env.txt");
  cfg.zero_table = "config.txt";
  CHECK(resolve_table_path(std::nullopt, cfg, "env.txt") == "config.txt");
  CHECK(resolve_table_path(std::string("flag.txt"), cfg, "env.txt") == "flag.txt");
  CHECK(resolve_table_path(std::nullopt, RunConfig{}, "") == std::nullopt);
}

TEST_CASE("csv rendering") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(-0.0) == "0");
  CHECK(format_real(1e300) == "1.0000000000000001e+300");
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_row({"x", "1,2", ""}) == "x,\"1,2\",\r\n");
}

TEST_CASE("command line") {
  const auto eval = szeta_cli("eval --s \"2+0i\"");
  REQUIRE(eval.code == 0);
  const auto doc = nlohmann::json::parse(eval.out);
  CHECK(doc["result"]["value_re"].get<double>() == doctest::Approx(0.023105).epsilon(1e-4));
  CHECK(std::abs(doc["result"]["value_im"].get<double>()) < 1e-15);
  CHECK(doc["result"]["method"] == "direct");
  CHECK(doc["result"]["abs_error"].get<double>() < 1e-10);
  CHECK(doc["header"]["height_ceiling"].get<double>() > 1e4);
  CHECK(doc["header"].contains("table_source"));
  CHECK(doc["header"]["version"] == kVersion);
  CHECK(szeta_cli("eval --s \"2+0i\"").out == eval.out);

  const auto zeros = szeta_cli("zeros --from 10 --to 15 --tol 1e-8");
  CHECK(zeros.code == 0);
  CHECK(zeros.out == "14.13472514\n");

  const auto pole = szeta_cli("eval --s 1");
  CHECK(pole.code == 1);
  CHECK(pole.err.find("PoleError") != std::string::npos);

  CHECK(szeta_cli("eval --s 2 --frobnicate").code == 2);
  CHECK(szeta_cli("bogus").code == 2);
  CHECK(szeta_cli("").code == 2);
  CHECK(szeta_cli("eval --s \"x+yi\"").code == 1);

  const auto csv = szeta_cli("--format csv dyadic --x 200 --T 500 --method pair_count");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("# table_source: ") != std::string::npos);
  CHECK(csv.out.find("# height_ceiling: ") != std::string::npos);
  CHECK(csv.out.find("\r\nT,x,value,error,method,band_ratio\r\n") != std::string::npos);

  const auto super = szeta_cli("super --alpha 3 --s \"2\" --route all");
  REQUIRE(super.code == 0);
  const auto routes = nlohmann::json::parse(super.out)["rows"];
  REQUIRE(routes.size() == 3);
  for (const auto& r : routes) CHECK(r["value_re"].get<double>() == doctest::Approx(-0.0448701505).epsilon(1e-8));
}

TEST_CASE("configuration precedence on the command line") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto conf = dir / "szeta_cli_test.conf";
  {
    std::ofstream out(conf);
    out << "zero_table = /nonexistent/zeros.txt\nout_format = csv\n";
  }
  const std::string cfg = "--config " + conf.string() + " ";
  // the config table is missing, so the config beats the environment...
  const auto broken = szeta_cli(cfg + "eval --s 2");
  CHECK(broken.code == 1);
  CHECK(broken.err.find("ParseError") != std::string::npos);
  // ...and the flag beats the config
  const char* env = std::getenv("SZETA_ZEROS");
  REQUIRE(env != nullptr);
  const auto fixed = szeta_cli(cfg + "--zeros " + std::string(env) + " eval --s 2");
  CHECK(fixed.code == 0);
  CHECK(fixed.out.rfind("# tool: szeta", 0) == 0);
  const auto json = szeta_cli(cfg + "--zeros " + std::string(env) + " --format json eval --s 2");
  CHECK(json.out.front() == '{');
  // no table anywhere
  const auto none = szeta_cli("eval --s 2", "env -u SZETA_ZEROS");
  CHECK(none.code == 1);
  CHECK(none.err.find("DomainError") != std::string::npos);
  std::filesystem::remove(conf);
}
