#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "oligopoly/cdblock.hpp"
#include "oligopoly/format.hpp"
#include "oligopoly/jacobian.hpp"
#include "oligopoly/stability.hpp"
#include "oligopoly/threshold.hpp"

#ifndef OLIGOPOLY_CLI_PATH
#define OLIGOPOLY_CLI_PATH "oligopoly"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
    const fs::path out_file = fs::temp_directory_path() / "oligopoly_cli_test_out.txt";
    const std::string command =
        std::string(OLIGOPOLY_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
    const int raw = std::system(command.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    result.output = ss.str();
    return result;
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("simulate converges below the duopoly threshold") {
    const fs::path csv = temp_file("cli_traj.csv");
    fs::remove(csv);
    const RunResult r = run_cli("simulate --preset gb --k 1.8 --c 0.5 --steps 5000 --out " +
                                csv.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("classification: ConvergedToFixedPoint") != std::string::npos);
    std::ifstream in(csv);
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "t,q_1,q_2,Q,price");
    fs::remove(csv);
}

TEST_CASE("simulate exits with code 2 when the orbit leaves the map's domain") {
    // the gradient firm overshoots to a small negative output, so the rival
    // faces negative supply on the following step
    const fs::path csv = temp_file("cli_traj_invalid.csv");
    fs::remove(csv);
    const RunResult r = run_cli("simulate --preset gb --k 1.68 --c 0.5 --q0 \"0.9,0.4\" --out " +
                                csv.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("InvalidState") != std::string::npos);
    CHECK(fs::exists(csv));  // the partial trajectory is still written
    fs::remove(csv);
}

TEST_CASE("simulate rejects a negative initial quantity without writing output") {
    const fs::path csv = temp_file("cli_traj_rejected.csv");
    fs::remove(csv);
    const RunResult r =
        run_cli("simulate --preset gb --k 1 --c 0.5 --q0 \"0.5,-0.1\" --out " + csv.string());
    CHECK(r.exit_code == 1);
    CHECK(!fs::exists(csv));
}

TEST_CASE("simulate accepts a config file with flags overriding") {
    const fs::path config = temp_file("cli_config.json");
    {
        std::ofstream out(config);
        out << R"({"preset": "gb", "k": 1.8, "c": 0.5, "steps": 4000, "q0": [0.55, 0.55]})";
    }
    const RunResult r =
        run_cli("simulate --config " + config.string() + " --out /dev/null");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ConvergedToFixedPoint") != std::string::npos);

    // a flag overrides the config: push k above the threshold
    const RunResult r2 =
        run_cli("simulate --config " + config.string() + " --k 2.2 --steps 100000 --out /dev/null");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("ConvergedToFixedPoint") == std::string::npos);
    fs::remove(config);
}

TEST_CASE("stability JSON round-trips the in-process values exactly") {
    using namespace oligopoly;
    const double k = 455.0 / 256.0, l = 71.0 / 256.0, c = 0.25;
    const RunResult r = run_cli("stability --preset gba --k 1.77734375 --l 0.27734375 --c 0.25 --json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);

    CHECK(doc.at("verdict").get<std::string>() == "stable");
    const Matrix jac = jacobian_analytic(Preset::Gba, k, l, c);
    for (std::size_t i = 0; i < jac.size(); ++i)
        for (std::size_t j = 0; j < jac.size(); ++j)
            CHECK(doc.at("jacobian")[i][j].get<double>() == jac(i, j));
    const auto poly = char_poly(jac);
    for (std::size_t i = 0; i < poly.a.size(); ++i)
        CHECK(doc.at("char_poly").at("coeffs")[i].get<double>() == poly.a[i]);
    const auto schur = schur_cohn(poly);
    CHECK(doc.at("schur_cohn").at("at_one").get<double>() == schur.at_one);
    CHECK(doc.at("schur_cohn").at("at_minus_one_signed").get<double>() ==
          schur.at_minus_one_signed);
    const auto block = cd_block(Preset::Gba, k, l, c);
    for (std::size_t i = 0; i < block.values.size(); ++i) {
        CHECK(doc.at("conditions").at("values")[i].get<double>() == block.values[i]);
        CHECK(doc.at("conditions").at("satisfied")[i].get<bool>() == block.satisfied[i]);
    }
    CHECK(doc.at("threshold").get<double>() == stability_threshold(Preset::Gba, l));
}

TEST_CASE("stability reports a marginal verdict exactly at the threshold") {
    // c = 0.5 puts the duopoly flip at k = 2 exactly
    const RunResult r = run_cli("stability --preset gb --k 2 --c 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("verdict: marginal") != std::string::npos);
}

TEST_CASE("stability flags an unstable published point") {
    const RunResult r =
        run_cli("stability --preset gbalr --k 2800.09375 --l 0.98046875 --c 0.5 --json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("verdict").get<std::string>() == "unstable");
}

TEST_CASE("threshold command prints the chain") {
    const RunResult r = run_cli("threshold --l 1 --json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("gb").get<double>() == doctest::Approx(std::sqrt(2.0)));
    CHECK(doc.at("gba").get<double>() == doctest::Approx(891.0 / 506.0));
    CHECK(doc.at("ordering_strict").get<bool>());
    CHECK(run_cli("threshold --l 0").exit_code == 1);
}

TEST_CASE("scan writes a combined CSV and rejects l = 0") {
    const fs::path csv = temp_file("cli_scan.csv");
    fs::remove(csv);
    const RunResult r = run_cli(
        "scan --ksqrtc-min 1 --ksqrtc-max 2 --ksqrtc-steps 3 --l-min 0.5 --l-max 1 --l-steps 2 "
        "--c 0.5 --csv " + csv.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(csv);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1 + 4 * 3 * 2);  // header + four presets x 6 nodes
    fs::remove(csv);

    const RunResult bad = run_cli("scan --l-min 0 --csv /dev/null");
    CHECK(bad.exit_code == 1);

    // single-node grid
    const fs::path single = temp_file("cli_scan_single.csv");
    const RunResult one = run_cli(
        "scan --ksqrtc-min 1 --ksqrtc-max 1 --ksqrtc-steps 1 --l-min 0.5 --l-max 0.5 "
        "--l-steps 1 --presets gb --csv " + single.string());
    CHECK(one.exit_code == 0);
    std::ifstream sin(single);
    lines = 0;
    while (std::getline(sin, line)) ++lines;
    CHECK(lines == 2);
    fs::remove(single);
}

TEST_CASE("OLIGOPOLY_WORKERS overrides the worker flag without changing output") {
    const fs::path a = temp_file("cli_scan_w1.csv");
    const fs::path b = temp_file("cli_scan_env.csv");
    const std::string grid_args =
        "scan --ksqrtc-min 0.5 --ksqrtc-max 2.5 --ksqrtc-steps 20 --l-min 0.1 --l-max 1 "
        "--l-steps 8 --presets gbal ";
    CHECK(run_cli(grid_args + "--workers 1 --csv " + a.string()).exit_code == 0);
    const std::string env_command = "OLIGOPOLY_WORKERS=5 " OLIGOPOLY_CLI_PATH " " + grid_args +
                                    "--workers 1 --csv " + b.string() + " >/dev/null 2>&1";
    REQUIRE(std::system(env_command.c_str()) == 0);
    std::ifstream ia(a), ib(b);
    std::stringstream sa, sb;
    sa << ia.rdbuf();
    sb << ib.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("scan SVG contains the four nested layers") {
    const fs::path svg = temp_file("cli_scan.svg");
    fs::remove(svg);
    const RunResult r = run_cli(
        "scan --ksqrtc-steps 24 --l-steps 10 --csv /dev/null --svg " + svg.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(svg);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string body = ss.str();
    CHECK(body.find("<g id=\"gbalr\"") < body.find("<g id=\"gbal\""));
    CHECK(body.find("<g id=\"gbal\"") < body.find("<g id=\"gba\""));
    CHECK(body.find("<g id=\"gba\"") < body.find("<g id=\"gb\""));
    fs::remove(svg);
}

TEST_CASE("verify-paper exits cleanly and reports the known findings") {
    const RunResult r = run_cli("verify-paper --json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.output);
    CHECK(doc.at("internal_ok").get<bool>());
    CHECK(doc.at("tables").at("rows").get<int>() == 33);
    CHECK(doc.at("tables").at("matched").get<int>() == 32);
    CHECK(doc.at("tables").at("mismatches").get<int>() == 1);
    CHECK(doc.at("ordering").at("strict").get<int>() == 100);
    CHECK(doc.at("jacobians").at("fd_vs_derived").get<double>() < 1e-6);
    CHECK(doc.at("findings").size() >= 3);
}

TEST_CASE("unknown preset names the offending field") {
    const RunResult r = run_cli("simulate --preset bogus");
    CHECK(r.exit_code == 1);
}
