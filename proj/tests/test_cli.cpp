#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lzs/cli.hpp"

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"lzs-sim"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return lzs::cli_main(static_cast<int>(argv.size()), argv.data());
}

std::string config_path(const char* name) {
    return std::string(LZS_CONFIG_DIR) + "/" + name;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("unknown flags exit with the usage code") {
    CHECK(run_cli({"sweep", "--frobnicate"}) == 2);
    CHECK(run_cli({"no-such-command"}) == 2);
    CHECK(run_cli({}) == 2);
}

TEST_CASE("steady command runs on the bundled config") {
    CHECK(run_cli({"steady", "--config", config_path("fig2.cfg"), "--dphi", "0", "--phirf", "0"}) == 0);
}

TEST_CASE("rate command runs and bad pair is rejected") {
    CHECK(run_cli({"rate", "--config", config_path("fig2.cfg"), "--pair", "02", "--dphi", "1",
                   "--phirf", "2"}) == 0);
    CHECK(run_cli({"rate", "--config", config_path("fig2.cfg"), "--pair", "04", "--dphi", "1",
                   "--phirf", "2"}) == 2);
}

TEST_CASE("missing config file is a config error") {
    CHECK(run_cli({"steady", "--config", "/nonexistent.cfg", "--dphi", "0", "--phirf", "0"}) == 2);
}

TEST_CASE("model override without the needed gaps is a config error") {
    CHECK(run_cli({"steady", "--config", config_path("fig2.cfg"), "--model", "combined", "--dphi",
                   "0", "--phirf", "0"}) == 2);
}

TEST_CASE("sweep command writes the requested files") {
    const auto csv = temp_file("lzs_cli_sweep.csv");
    // shrink the grid through a copied config to keep the test quick
    std::ifstream in(config_path("fig2.cfg"));
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto shrink = [&text](const std::string& key, const std::string& repl) {
        const auto pos = text.find(key);
        REQUIRE(pos != std::string::npos);
        const auto eol = text.find('\n', pos);
        text.replace(pos, eol - pos, repl);
    };
    shrink("grid.dphi_steps = 201", "grid.dphi_steps = 5");
    shrink("grid.phirf_steps = 241", "grid.phirf_steps = 5");
    const auto cfg = temp_file("lzs_cli_small.cfg");
    std::ofstream(cfg) << text;

    CHECK(run_cli({"sweep", "--config", cfg.string(), "--out", csv.string()}) == 0);
    CHECK(std::filesystem::exists(csv));

    const auto base = temp_file("lzs_cli_sweep_both");
    CHECK(run_cli({"sweep", "--config", cfg.string(), "--out", base.string(), "--format", "both",
                   "--threads", "2"}) == 0);
    CHECK(std::filesystem::exists(base.string() + ".csv"));
    CHECK(std::filesystem::exists(base.string() + ".pgm"));

    std::filesystem::remove(csv);
    std::filesystem::remove(base.string() + ".csv");
    std::filesystem::remove(base.string() + ".pgm");
    std::filesystem::remove(cfg);
}

TEST_CASE("dynamics command writes a trajectory") {
    const auto out = temp_file("lzs_cli_dyn.csv");
    CHECK(run_cli({"dynamics", "--config", config_path("fig2.cfg"), "--dphi", "0", "--phirf", "2",
                   "--tmax", "50", "--out", out.string()}) == 0);
    std::ifstream f(out);
    REQUIRE(f);
    std::string line;
    bool header = false;
    int rows = 0;
    while (std::getline(f, line)) {
        if (line == "t_ns,p0,p1,p2,p3") header = true;
        else if (header && !line.empty()) ++rows;
    }
    CHECK(header);
    CHECK(rows >= 2);
    std::filesystem::remove(out);
}
