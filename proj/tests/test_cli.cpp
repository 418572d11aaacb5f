// Integration tests that drive the installed CLI binary end to end. The
// binary path and scenario directory come from ISAC_CLI / ISAC_SCENARIOS
// (set by ctest), with compile-time fallbacks for manual runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string cli_path() {
    if (const char* env = std::getenv("ISAC_CLI")) return env;
#ifdef ISAC_CLI_DEFAULT
    return ISAC_CLI_DEFAULT;
#else
    return "isac";
#endif
}

std::string scenario_dir() {
    if (const char* env = std::getenv("ISAC_SCENARIOS")) return env;
#ifdef ISAC_SCENARIOS_DEFAULT
    return ISAC_SCENARIOS_DEFAULT;
#else
    return "scenarios";
#endif
}

int run_cli(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

std::string table1() { return scenario_dir() + "/table1-defaults.json"; }

} // namespace

TEST_CASE("analytic sweep from zeta_s = 0 starts at certainty") {
    const int code = run_cli("analytic --config " + table1() + " --sweep zeta_s:0:10000:3");
    CHECK(code == 0);
    const auto rows = parse_csv(slurp("cli_stdout.txt"));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"param", "value", "p_d", "est_error"});
    CHECK(rows[1][1] == "0");
    CHECK(rows[1][2] == "1");
}

TEST_CASE("detection probability strictly decreases with distance") {
    const int code = run_cli("analytic --config " + table1() + " --sweep d:5:50:4");
    CHECK(code == 0);
    const auto rows = parse_csv(slurp("cli_stdout.txt"));
    REQUIRE(rows.size() == 5);
    double prev = 2.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(rows[i][2]);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("coverage sweeps emit the coverage header") {
    const int code = run_cli("analytic --config " + table1() + " --sweep zeta_c:0:4000000:3");
    CHECK(code == 0);
    const auto rows = parse_csv(slurp("cli_stdout.txt"));
    CHECK(rows[0] == std::vector<std::string>{"param", "value", "p_c", "est_error"});
    CHECK(rows[1][2] == "1");
}

TEST_CASE("ambiguous sweep parameter needs --metric") {
    CHECK(run_cli("analytic --config " + table1() + " --sweep alpha:2:3:2") == 2);
    CHECK(run_cli("analytic --config " + table1() + " --sweep alpha:2:3:2 --metric detection") == 0);
}

TEST_CASE("mc output is deterministic and thread-count independent") {
    const std::string base = "mc --config " + table1() +
                             " --sweep d:5:50:3 --trials 4000 --seed 99 ";
    CHECK(run_cli(base + "--threads 1 --out mc_a.csv") == 0);
    CHECK(run_cli(base + "--threads 2 --out mc_b.csv") == 0);
    CHECK(run_cli(base + "--threads 1 --out mc_c.csv") == 0);
    const std::string a = slurp("mc_a.csv");
    CHECK(a == slurp("mc_b.csv"));
    CHECK(a == slurp("mc_c.csv"));

    const auto rows = parse_csv(a);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"param", "value", "p_hat", "ci_low", "ci_high",
                                              "n_trials"});
    CHECK(rows[1][5] == "4000");
}

TEST_CASE("seed override changes the sample") {
    const std::string base = "mc --config " + table1() + " --sweep d:20:20:1 --trials 4000 ";
    CHECK(run_cli(base + "--seed 1 --out mc_s1.csv") == 0);
    CHECK(run_cli(base + "--seed 2 --out mc_s2.csv") == 0);
    CHECK(slurp("mc_s1.csv") != slurp("mc_s2.csv"));
}

TEST_CASE("detection probability rises with transmit power on the power-sweep scenario") {
    const std::string cfg = scenario_dir() + "/fig3-assumed.json";
    CHECK(run_cli("analytic --config " + cfg + " --sweep p_s_dbm:0:30:7") == 0);
    const auto rows = parse_csv(slurp("cli_stdout.txt"));
    REQUIRE(rows.size() == 8);
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double v = std::stod(rows[i][2]);
        CHECK(v + 1e-12 >= prev);
        prev = v;
    }
    CHECK(prev > 0.5);  // near-full power detects most of the time here
}

TEST_CASE("single forced-success trial reports p_hat = 1") {
    const int code = run_cli("mc --config " + table1() + " --sweep zeta_s:0:0:1 --trials 1");
    CHECK(code == 0);
    const auto rows = parse_csv(slurp("cli_stdout.txt"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][2] == "1");
    CHECK(rows[1][4] == "1");  // ci_high pinned at 1
}

TEST_CASE("tradeoff emits saturated rows with degenerate endpoints") {
    const int code = run_cli("tradeoff --config " + table1() + " --budget power --steps 11");
    CHECK(code == 0);
    const auto rows = parse_csv(slurp("cli_stdout.txt"));
    REQUIRE(rows.size() == 12);
    CHECK(rows[0] == std::vector<std::string>{"rho", "p_s_or_b_s", "p_c_or_b_c", "p_d", "p_c",
                                              "dominated"});
    CHECK(std::stod(rows[1][3]) == 0.0);         // rho = 0 -> P_D = 0
    CHECK(std::stod(rows[11][4]) == 0.0);        // rho = 1 -> P_C = 0
    const double total = std::stod(rows[1][1]) + std::stod(rows[1][2]);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double sum = std::stod(rows[i][1]) + std::stod(rows[i][2]);
        CHECK(sum == doctest::Approx(total).epsilon(1e-12));
    }
}

TEST_CASE("validate passes on the baseline scenario and is byte-stable") {
    const std::string base = "validate --config " + table1() + " --trials 4000 --seed 7 ";
    CHECK(run_cli(base + "--threads 1 --out val_a.csv") == 0);
    CHECK(run_cli(base + "--threads 2 --out val_b.csv") == 0);
    CHECK(slurp("val_a.csv") == slurp("val_b.csv"));
    const auto rows = parse_csv(slurp("val_a.csv"));
    REQUIRE(rows.size() == 3);  // header + detection + coverage
    CHECK(rows[0][0] == "param");
    CHECK(rows[1][7] == "1");
    CHECK(rows[2][7] == "1");
}

TEST_CASE("config errors exit with code 2 and a field-precise message") {
    CHECK(run_cli("analytic --config /nonexistent.json --sweep d:5:50:4") == 2);

    std::ofstream bad("bad_scenario.json");
    bad << "{ \"sensing\": { \"p_s_dbm\": 23.0, \"bogus_field\": 1 } }";
    bad.close();
    CHECK(run_cli("analytic --config bad_scenario.json --sweep d:5:50:4") == 2);
    const std::string err = slurp("cli_stderr.txt");
    CHECK(err.find("bogus_field") != std::string::npos);

    CHECK(run_cli("analytic --config " + table1() + " --sweep nope:0:1:2") == 2);
    CHECK(run_cli("analytic --config " + table1()) == 2);  // missing required --sweep
    CHECK(run_cli("tradeoff --config " + table1() + " --budget time") == 2);
}

TEST_CASE("shipped scenario files all load") {
    for (const char* name :
         {"table1-defaults", "fig2-assumed", "fig3-assumed", "fig4-assumed", "fig5-assumed"}) {
        const std::string cfg = scenario_dir() + "/" + std::string(name) + ".json";
        CHECK(run_cli("analytic --config " + cfg + " --sweep zeta_s:0:1000:2") == 0);
    }
}
