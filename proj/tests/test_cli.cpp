#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("QCHAOS_CLI");
    return p ? p : "";
}

int run_cli(const std::string& args, const fs::path& dir) {
    fs::create_directories(dir);
    const std::string cmd = "cd " + dir.string() + " && " + cli_path() + " " + args +
                            " > /dev/null 2> stderr.txt";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::map<std::string, std::string> dir_contents(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().filename() != "stderr.txt")
            out[e.path().filename().string()] = slurp(e.path());
    return out;
}

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("qchaos_cli_" + name);
    fs::remove_all(p);
    return p;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream f(p);
    std::string line;
    while (std::getline(f, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("cli binary is wired into the test environment") {
    REQUIRE_MESSAGE(!cli_path().empty(), "QCHAOS_CLI must point at the executable");
}

TEST_CASE("identical command and seed give byte-identical outputs") {
    const std::vector<std::string> cmds{
        "spectrum --n 5 --xi 2 --seed 7 --out t",
        "overlap --n 4 --xi 1 --iterations 64 --seed 7 --out t",
        "angles --n 4 --xi 1 --kind digital --seed 7 --out t",
        "qft-check --n 4 --out t",
    };
    for (std::size_t i = 0; i < cmds.size(); ++i) {
        const fs::path d1 = scratch("det_a" + std::to_string(i));
        const fs::path d2 = scratch("det_b" + std::to_string(i));
        REQUIRE(run_cli(cmds[i], d1) == 0);
        REQUIRE(run_cli(cmds[i], d2) == 0);
        const auto c1 = dir_contents(d1), c2 = dir_contents(d2);
        REQUIRE(!c1.empty());
        CHECK(c1 == c2);
    }
}

TEST_CASE("argument errors exit with status 2") {
    const fs::path d = scratch("args");
    CHECK(run_cli("spectrum --algorithm nonsense", d) == 2);
    CHECK(run_cli("overlap --algorithm grover --kind digital", d) == 2);
    CHECK(run_cli("angles --algorithm qft --kind independent", d) == 2);
    CHECK(run_cli("spectrum --n 3 --xi 9", d) == 2);
    CHECK(run_cli("overlap --epsilon 7.0", d) == 2);
    CHECK(run_cli("sym-split --n-min 6 --n-max 4", d) == 2);
    CHECK(run_cli("no-such-subcommand", d) == 2);
}

TEST_CASE("spectrum output: marked-search phases pile up at 0 and +-pi") {
    const fs::path d = scratch("spectrum");
    REQUIRE(run_cli("spectrum --algorithm grover --n 7 --xi 64 --out g", d) == 0);
    const auto rows = read_csv(d / "g_phases.csv");
    REQUIRE(rows.size() == 129); // header + 128 phases
    CHECK(rows[0] == std::vector<std::string>{"index", "phase"});
    int far = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double phase = std::stod(rows[i][1]);
        const double pi = 3.14159265358979323846;
        const double dist = std::min(std::abs(phase), std::abs(std::abs(phase) - pi));
        if (dist > 1e-6) ++far;
    }
    CHECK(far <= 4);
    CHECK(fs::exists(d / "g_spacings.csv"));
    CHECK(fs::exists(d / "g_meta.json"));
}

TEST_CASE("qft-check reports residuals at round-off scale") {
    const fs::path d = scratch("qftcheck");
    REQUIRE(run_cli("qft-check --n 5 --out q", d) == 0);
    const auto rows = read_csv(d / "q_summary.csv");
    REQUIRE(rows.size() >= 4);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][0] == "fourth_power_vs_identity_max_abs" ||
            rows[i][0] == "circuit_vs_closed_max_abs")
            CHECK(std::stod(rows[i][1]) <= 1e-10);
    }
    const auto approx = read_csv(d / "q_approx.csv");
    REQUIRE(approx.size() == 5); // header + cutoffs 1..4
}

TEST_CASE("evec-stats emits a proper empirical distribution") {
    const fs::path d = scratch("evec");
    REQUIRE(run_cli("evec-stats --n 5 --xi 2 --seed 3 --out e", d) == 0);
    const auto rows = read_csv(d / "e_evec.csv");
    REQUIRE(rows.size() == 1 + 32 * 32);
    CHECK(rows[0] == std::vector<std::string>{"y", "empirical_cdf", "pt_cdf"});
    CHECK(std::stod(rows.back()[1]) == doctest::Approx(1.0));
    double prev = -1.0;
    for (std::size_t i = 1; i < rows.size(); i += 37) {
        const double y = std::stod(rows[i][0]);
        CHECK(y >= prev);
        prev = y;
    }
}

TEST_CASE("outputs do not depend on the worker count") {
    const fs::path d1 = scratch("thr1");
    const fs::path d2 = scratch("thr4");
    fs::create_directories(d1);
    fs::create_directories(d2);
    const std::string base = " error-sweep --ensemble 8 --seed 5 --out w > /dev/null 2>&1";
    REQUIRE(std::system(("cd " + d1.string() + " && QCHAOS_THREADS=1 " + cli_path() + base)
                            .c_str()) == 0);
    REQUIRE(std::system(("cd " + d2.string() + " && QCHAOS_THREADS=4 " + cli_path() + base)
                            .c_str()) == 0);
    CHECK(dir_contents(d1) == dir_contents(d2));
}

TEST_CASE("json format produces the sidecar plus json tables") {
    const fs::path d = scratch("json");
    REQUIRE(run_cli("roots --algorithm qft --n 4 --format json --out r", d) == 0);
    CHECK(fs::exists(d / "r_roots.json"));
    CHECK(fs::exists(d / "r_meta.json"));
    const std::string body = slurp(d / "r_roots.json");
    CHECK(body.find("\"defect\"") != std::string::npos);
}
