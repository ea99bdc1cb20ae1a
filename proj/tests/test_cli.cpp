#include "cli.hpp"
#include "cpvdw/potentials.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cpvdw;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string atom(const std::string &name) {
  return std::string(CPVDW_EXAMPLES_DIR) + "/" + name + ".yaml";
}

struct Table {
  std::vector<std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::vector<double> column(const std::string &name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    REQUIRE(it != header.end());
    std::vector<double> out;
    for (const auto &r : rows)
      out.push_back(r[it - header.begin()]);
    return out;
  }
};

Table parse_csv(const std::string &text) {
  Table t;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.empty())
      continue;
    if (line[0] == '#') {
      t.meta.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');)
      cells.push_back(c);
    if (t.header.empty()) {
      t.header = cells;
      continue;
    }
    std::vector<double> row;
    for (const auto &c : cells)
      row.push_back(std::stod(c));
    t.rows.push_back(row);
  }
  return t;
}

} // namespace

TEST_CASE("mirror: diamagnetic atom, both plates") {
  const auto cond = call({"mirror", "--atom", atom("diamagnetic"), "--units", "natural",
                          "--grid", "0.5:5:10"});
  REQUIRE(cond.code == 0);
  const auto t = parse_csv(cond.out);
  CHECK(t.header == std::vector<std::string>{"distance", "channel:e", "channel:p", "channel:d", "total"});
  CHECK(t.rows.size() == 10);
  const auto z = t.column("distance");
  const auto u = t.column("total");
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(u[i] < 0.0);
    if (i > 0)
      CHECK(std::log(u[i] / u[i - 1]) / std::log(z[i] / z[i - 1]) ==
            doctest::Approx(-4.0).epsilon(1e-8));
  }
  const auto perm = call({"mirror", "--atom", atom("diamagnetic"), "--units", "natural",
                          "--grid", "0.5:5:10", "--plate", "permeable"});
  REQUIRE(perm.code == 0);
  const auto up = parse_csv(perm.out).column("total");
  for (std::size_t i = 0; i < u.size(); ++i)
    CHECK(up[i] == doctest::Approx(-u[i]).epsilon(1e-12));

  bool has_engine = false, has_units = false, has_grid = false;
  for (const auto &m : t.meta) {
    has_engine |= m.find("cpvdw") != std::string::npos;
    has_units |= m.find("natural") != std::string::npos;
    has_grid |= m.find("0.5:5:10") != std::string::npos;
  }
  CHECK(has_engine);
  CHECK(has_units);
  CHECK(has_grid);
}

TEST_CASE("usage and configuration errors") {
  const auto missing = call({"mirror", "--atom", "/nonexistent/helium.yaml", "--grid", "1:2:3"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("/nonexistent/helium.yaml") != std::string::npos);
  CHECK(call({}).code == 2);
  CHECK(call({"bogus"}).code == 2);
  CHECK(call({"mirror", "--atom", atom("electric")}).code == 2);
  CHECK(call({"mirror", "--atom", atom("electric"), "--grid", "1:2"}).code == 2);
  CHECK(call({"mirror", "--atom", atom("electric"), "--grid", "2:1:5"}).code == 2);
  CHECK(call({"mirror", "--atom", atom("electric"), "--grid", "1:2:5", "--plate", "glass"}).code == 2);
  CHECK(call({"mirror", "--atom", atom("electric"), "--grid", "1:2:5", "--units", "cgs"}).code == 2);
  CHECK(call({"mirror", "--atom", atom("electric"), "--grid", "1:2:5", "--format", "xml"}).code == 2);
  CHECK(call({"pair", "--atom", atom("electric"), "--grid", "1:2:5"}).code == 2);
  CHECK(call({"selftest", "--rel-tol", "0"}).code == 2);
  CHECK(call({"selftest", "--rel-tol", "0.5"}).code == 2);
  CHECK(call({"tables", "--fixture-beta-d", "0.5"}).code == 2);
}

TEST_CASE("pair: dd matches the closed form and swapping is byte-identical") {
  const auto r = call({"pair", "--atom", atom("diamagnetic"), "--atom-b", atom("diamagnetic"),
                       "--units", "natural", "--grid", "0.1:100:20"});
  REQUIRE(r.code == 0);
  const auto t = parse_csv(r.out);
  CHECK(t.header.size() == 11);
  const auto l = t.column("distance");
  const auto dd = t.column("channel:dd");
  const auto k = units::constants_for(units::UnitSystem::natural);
  for (std::size_t i = 0; i < l.size(); ++i)
    CHECK(dd[i] == doctest::Approx(potentials::vdw_dd_closed(-1, -1, l[i], k)).epsilon(1e-9));

  const auto ab = call({"pair", "--atom", atom("electric"), "--atom-b", atom("diamagnetic"),
                        "--units", "natural", "--grid", "0.1:10:6"});
  const auto ba = call({"pair", "--atom", atom("diamagnetic"), "--atom-b", atom("electric"),
                        "--units", "natural", "--grid", "0.1:10:6"});
  REQUIRE(ab.code == 0);
  REQUIRE(ba.code == 0);
  CHECK(parse_csv(ab.out).column("channel:ed") == parse_csv(ba.out).column("channel:de"));
  CHECK(parse_csv(ab.out).column("total") == parse_csv(ba.out).column("total"));
  const auto ab2 = call({"pair", "--atom", atom("diamagnetic"), "--atom-b", atom("diamagnetic"),
                         "--units", "natural", "--grid", "0.1:100:20"});
  CHECK(ab2.out == r.out);
}

TEST_CASE("pair JSON and --out") {
  const auto r = call({"pair", "--atom", atom("electric"), "--atom-b", atom("paramagnetic"),
                       "--units", "natural", "--grid", "1:10:4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("distances"));
  const auto path = std::filesystem::temp_directory_path() / "cpvdw_cli_test.csv";
  const auto w = call({"mirror", "--atom", atom("electric"), "--units", "natural",
                       "--grid", "1:10:4", "--out", path.string()});
  REQUIRE(w.code == 0);
  CHECK(w.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(parse_csv(ss.str()).rows.size() == 4);
  std::filesystem::remove(path);
}

TEST_CASE("slopes") {
  const auto dd = call({"slopes", "--atom", atom("diamagnetic"), "--atom-b", atom("diamagnetic"),
                        "--units", "natural", "--grid", "0.5:2:15"});
  REQUIRE(dd.code == 0);
  for (double s : parse_csv(dd.out).column("slope"))
    CHECK(s == doctest::Approx(-7.0).epsilon(1e-6));

  const auto lo = call({"slopes", "--atom", atom("diamagnetic"), "--atom-b", atom("electric"),
                        "--units", "natural", "--grid", "0.00099:0.00101:5", "--channel", "de"});
  REQUIRE(lo.code == 0);
  for (double s : parse_csv(lo.out).column("slope"))
    CHECK(std::abs(s + 5.0) < 0.05);
  const auto hi = call({"slopes", "--atom", atom("diamagnetic"), "--atom-b", atom("electric"),
                        "--units", "natural", "--grid", "990:1010:5", "--channel", "de"});
  REQUIRE(hi.code == 0);
  for (double s : parse_csv(hi.out).column("slope"))
    CHECK(std::abs(s + 7.0) < 0.05);

  CHECK(call({"slopes", "--atom", atom("diamagnetic"), "--units", "natural",
              "--grid", "1:2:5", "--channel", "dd"}).code == 2);
  CHECK(call({"slopes", "--atom", atom("diamagnetic"), "--units", "natural",
              "--grid", "1:2:4"}).code == 2);
}

TEST_CASE("tables") {
  const auto t = call({"tables"});
  CHECK(t.code == 0);
  CHECK(t.out.find("all cells PASS") != std::string::npos);
  const auto j = call({"tables", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::accept(j.out));
  CHECK(call({"tables", "--fixture-beta-d", "-2.5"}).code == 0);
}

TEST_CASE("selftest") {
  const auto s = call({"selftest"});
  CHECK(s.code == 0);
  CHECK(s.out.find("32π² supported") != std::string::npos);
  CHECK(call({"selftest", "--rel-tol", "1e-4"}).code == 0);
  const auto j = call({"selftest", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(nlohmann::json::parse(j.out)["all_passed"] == true);
}
