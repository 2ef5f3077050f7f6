#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using hyperpend::cli::run_cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / ("hyperpend_test_" + name)).string(); }

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("simulate: geodesic summary and csv")
{
    const std::string csv = temp_path("geo.csv");
    const Run r = run({"simulate", "--class", "elliptic", "--z0", "0", "0", "1", "1", "0", "0", "--steps", "2000", "--out", csv});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["maxHdrift"].get<double>() <= 1e-8);
    CHECK(slurp(csv).rfind("t,x1,x2,x3,y1,y2,y3,H,J,c1res,c2res\n", 0) == 0);
    std::remove(csv.c_str());
}

TEST_CASE("simulate: zero steps gives one row")
{
    const Run r = run({"simulate", "--class", "hyperbolic", "--steps", "0"});
    CHECK(r.code == 0);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 2);  // header + one row
}

TEST_CASE("simulate: random seed point conserves J")
{
    const Run r = run({"simulate", "--class", "elliptic", "--c", "1", "--seed", "99", "--steps", "3000", "--out", temp_path("j.csv")});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["maxJdrift"].get<double>() <= 1e-8);
}

TEST_CASE("simulate: failures map to exit codes")
{
    CHECK(run({"simulate", "--dt", "-1"}).code == 2);
    CHECK(run({"simulate", "--class", "loxodromic"}).code == 2);
    CHECK(run({"simulate", "--z0", "1", "0", "0", "0", "0", "0"}).code == 2);
    CHECK(run({"simulate", "--z0", "0", "0", "1", "60", "0", "0", "--dt", "1", "--steps", "10"}).code == 3);
    CHECK(run({"simulate", "--steps", "2", "--out", "/nonexistent-dir/x.csv"}).code == 5);
}

TEST_CASE("reduce: comparison, stationary start and membership")
{
    const Run cmp = run({"reduce", "--class", "elliptic", "--c", "1", "--steps", "5000", "--compare", "--out", temp_path("r.csv")});
    CHECK(cmp.code == 0);
    CHECK(nlohmann::json::parse(cmp.out)["max_commutation_error"].get<double>() <= 1e-6);

    const Run still = run({"reduce", "--class", "elliptic", "--c", "1", "--w0", "2", "0", "1.5", "--steps", "50", "--dt", "0.01"});
    CHECK(still.code == 0);
    std::istringstream in(still.out);
    std::string header, first, line, last;
    std::getline(in, header);
    std::getline(in, first);
    while (std::getline(in, line)) last = line;
    CHECK(first.substr(first.find(',')) == last.substr(last.find(',')));

    CHECK(run({"reduce", "--class", "parabolic", "--c", "1", "--w0", "0.5", "0", "1"}).code == 4);
}

TEST_CASE("classify")
{
    const Run r = run({"classify", "--class", "hyperbolic", "--c", "1", "--energy", "2", "--jsq", "3.9"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "3");
    CHECK(j["critical_w1"].size() == 2);
    CHECK(nlohmann::json::parse(run({"classify", "--class", "hyperbolic", "--c", "1", "--energy", "0"}).out)["case"] == "1");
    CHECK(nlohmann::json::parse(run({"classify", "--class", "parabolic", "--c", "-1", "--energy", "-1"}).out)["empty"] == true);
    CHECK(run({"classify", "--class", "hyperbolic", "--c", "0"}).code == 2);
    CHECK(run({"classify", "--class", "hyperbolic", "--c", "1", "--jsq", "-1"}).code == 2);
}

TEST_CASE("verify")
{
    const Run ok = run({"verify", "--count", "30"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out == run({"verify", "--count", "30"}).out);
    const Run bad = run({"verify", "--count", "10", "--corrupt-bracket"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("FAIL planted_corruption") != std::string::npos);
    const Run vac = run({"verify", "--count", "0"});
    CHECK(vac.code == 0);
    CHECK(vac.out.find("WARNING") != std::string::npos);
}

TEST_CASE("plot")
{
    const Run a = run({"plot", "--class", "elliptic", "--c", "1", "--jsq", "4"});
    CHECK(a.code == 0);
    CHECK(a.out.find("<circle") != std::string::npos);
    CHECK(a.out == run({"plot", "--class", "elliptic", "--c", "1", "--jsq", "4"}).out);
    const Run e = run({"plot", "--class", "parabolic", "--c", "-1", "--energy", "-1", "--jsq", "0"});
    CHECK(e.code == 0);
    CHECK(e.out.find("<path") == std::string::npos);
    CHECK(run({"plot", "--class", "elliptic", "--c", "1", "--jsq", "4", "--out", "/nonexistent-dir/p.svg"}).code == 5);
    CHECK(run({"plot", "--class", "elliptic", "--trajectory", "/nonexistent-file.csv"}).code == 5);

    // Overlay a reduced trajectory written by `reduce`.
    const std::string csv = temp_path("traj.csv");
    REQUIRE(run({"reduce", "--class", "elliptic", "--c", "1", "--w0", "2", "0.5", "1.5", "--steps", "3000", "--out", csv}).code == 0);
    const Run t = run({"plot", "--class", "elliptic", "--c", "1", "--jsq", "4", "--trajectory", csv});
    CHECK(t.code == 0);
    CHECK(t.out.find("id=\"trajectories\"") != std::string::npos);
    std::remove(csv.c_str());
}

TEST_CASE("config files")
{
    const std::string cfg = temp_path("cfg.json");
    {
        std::ofstream f(cfg);
        f << R"({"schema": "hyperpend-scenario/1", "class": "hyperbolic", "potential": [0, 1],
                 "z0": [0, 0, 1, 0, 1, 0], "dt": 0.001, "steps": 100, "tolerances": {"drift": 1e-6}})";
    }
    const Run r = run({"simulate", "--config", cfg});
    CHECK(r.code == 0);
    // Command line overrides the file.
    const Run s = run({"simulate", "--config", cfg, "--steps", "0"});
    int lines = 0;
    for (char ch : s.out) lines += ch == '\n';
    CHECK(lines == 2);

    {
        std::ofstream f(cfg);
        f << R"({"class": "hyperbolic"})";
    }
    CHECK(run({"simulate", "--config", cfg}).code == 2);
    {
        std::ofstream f(cfg);
        f << R"({"schema": "hyperpend-scenario/1", "colour": "blue"})";
    }
    CHECK(run({"simulate", "--config", cfg}).code == 2);
    CHECK(run({"simulate", "--config", "/nonexistent.json"}).code == 5);
    std::remove(cfg.c_str());
}

TEST_CASE("environment tolerance override")
{
    ::setenv("HYPERPEND_TOL_OVERRIDE", R"({"drift": 1e-30})", 1);
    const Run r = run({"simulate", "--class", "elliptic", "--c", "1", "--steps", "500", "--out", temp_path("env.csv")});
    ::unsetenv("HYPERPEND_TOL_OVERRIDE");
    CHECK(r.code == 1);  // drift above an absurdly strict tolerance
    ::setenv("HYPERPEND_TOL_OVERRIDE", "{oops", 1);
    CHECK(run({"simulate"}).code == 2);
    ::unsetenv("HYPERPEND_TOL_OVERRIDE");
}
