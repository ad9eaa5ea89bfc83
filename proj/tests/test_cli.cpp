#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tbi/core.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the installed binary (path baked in at configure time, overridable
// through the environment) with the given argument string, discarding stderr.
// Used both for behavior checks and for the byte-determinism guarantee.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("TBI_CLI_BIN");
#ifdef TBI_CLI_BIN
    if (bin == nullptr) bin = TBI_CLI_BIN;
#endif
    REQUIRE_MESSAGE(bin != nullptr, "TBI_CLI_BIN must point at the binary");
    const std::string cmd =
        env_prefix + "\"" + bin + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        res.out.append(buf, got);
    }
    const int status = pclose(pipe);
    res.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

// Value of a named column in a two-line CSV document.
std::string csv_field(const std::string& doc, const std::string& column) {
    const auto lines = split(doc, '\n');
    REQUIRE(lines.size() >= 2);
    const auto header = split(lines[0], ',');
    const auto row = split(lines[1], ',');
    REQUIRE(header.size() == row.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == column) return row[i];
    }
    FAIL("column not found: ", column);
    return {};
}

double csv_value(const std::string& doc, const std::string& column = "value") {
    return std::strtod(csv_field(doc, column).c_str(), nullptr);
}

}  // namespace

TEST_CASE("worked example: smallest base integral") {
    const auto r = run_cli("gamma -k 0 -l 0 -n 0 -a 1 -b 1 -c 1");
    CHECK(r.exit_code == 0);
    CHECK(csv_value(r.out) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(csv_field(r.out, "converged") == "1");
}

TEST_CASE("worked example: order-0 Bessel integral from the published table") {
    const auto r = run_cli(
        "bessel --order 0 -k 3 -l 2 -n 1 -a 2.35 -b 1.41 -c 0.567 --V 0.5");
    CHECK(r.exit_code == 0);
    CHECK(csv_value(r.out) ==
          doctest::Approx(0.15968050735256670).epsilon(1e-11));
}

TEST_CASE("CSV output is byte-identical across runs") {
    const std::string args =
        "bessel --order 2 -k 1 -l 1 -n 0 -a 1.7 -b 1.2 -c 0.9 --V 0.8";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("values are printed in 17-significant-digit scientific notation") {
    const auto r = run_cli("gamma -k 2 -l 1 -n 1 -a 1.5 -b 1.1 -c 0.7");
    const std::string v = csv_field(r.out, "value");
    REQUIRE(v.size() >= 22);
    CHECK(v[1] == '.');
    CHECK(v.find('E') == 18);  // d.dddddddddddddddd E+ee
}

TEST_CASE("JSON mode carries the record fields and a wall time") {
    const auto r = run_cli("--format json gamma -k 0 -l 0 -n 0 -a 1 -b 1 -c 1");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("operation") == "gamma");
    CHECK(std::strtod(doc.at("value").get<std::string>().c_str(), nullptr) ==
          doctest::Approx(0.25));
    CHECK(doc.at("converged") == true);
    CHECK(doc.at("wall_time_seconds").get<double>() >= 0.0);
    const std::string echoed = doc.at("inputs").at("a").get<std::string>();
    CHECK(std::strtod(echoed.c_str(), nullptr) == doctest::Approx(1.0));
}

TEST_CASE("usage problems exit with code 2") {
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("table").exit_code == 2);           // missing required flag
    CHECK(run_cli("bessel2 --orders 1").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);                // a subcommand is required
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("domain violations exit with code 3") {
    CHECK(run_cli("gamma -k -1 -l 0 -n 0 -a 1 -b 1 -c 1").exit_code == 3);
    CHECK(run_cli("gamma -k 0 -l 0 -n 0 -a 1 -b -3 -c 1").exit_code == 3);
    CHECK(run_cli("uehling-point --r 0").exit_code == 3);
}

TEST_CASE("honest truncation exits with code 4 but still prints the record") {
    const auto r = run_cli(
        "bessel2 --orders 0 1 -k 0 -l 0 -n 0 -a 1 -b 1 -c 1 --V 1");
    CHECK(r.exit_code == 4);
    CHECK(csv_field(r.out, "converged") == "0");
    CHECK(csv_value(r.out) == doctest::Approx(4.843e-2).epsilon(1e-3));
}

TEST_CASE("tolerance can come from the environment") {
    const std::string args =
        "bessel --order 0 -k 5 -l 2 -n 1 -a 2.35 -b 1.41 -c 0.567 --V 2";
    const auto strict = run_cli(args);
    const auto loose = run_cli(args, "TBI_DEFAULT_TOL=1e-4 ");
    CHECK(strict.exit_code == 0);
    CHECK(loose.exit_code == 0);
    const long nstrict = std::strtol(csv_field(strict.out, "terms").c_str(), nullptr, 10);
    const long nloose = std::strtol(csv_field(loose.out, "terms").c_str(), nullptr, 10);
    CHECK(nloose < nstrict);
    CHECK(csv_value(loose.out) ==
          doctest::Approx(csv_value(strict.out)).epsilon(1e-3));
}

TEST_CASE("published-table reproduction commands") {
    const auto t1 = run_cli("table --which I");
    CHECK(t1.exit_code == 0);
    const auto lines1 = split(t1.out, '\n');
    REQUIRE(lines1.size() >= 21);  // header + 20 data rows
    for (std::size_t i = 1; i <= 20; ++i) {
        const auto cells = split(lines1[i], ',');
        REQUIRE(cells.size() == 5);
        CHECK(std::strtod(cells[4].c_str(), nullptr) < 1e-12);
    }

    const auto t2 = run_cli("table --which II");
    CHECK(t2.exit_code == 0);
    const auto lines2 = split(t2.out, '\n');
    REQUIRE(lines2.size() >= 11);  // header + 10 data rows
    int suspect_rows = 0;
    for (std::size_t i = 1; i <= 10; ++i) {
        const auto cells = split(lines2[i], ',');
        REQUIRE(cells.size() == 9);
        const double rel0 = std::strtod(cells[4].c_str(), nullptr);
        const bool suspect = cells[8] == "1";
        if (suspect) {
            ++suspect_rows;
            CHECK(rel0 > 1e-3);  // published digits do not belong to this row
        } else {
            CHECK(rel0 < 1e-11);
            CHECK(std::strtod(cells[7].c_str(), nullptr) < 1e-11);
        }
    }
    CHECK(suspect_rows == 1);
}

TEST_CASE("coordinate conversion round-trips through the CLI") {
    const auto fwd = run_cli("oracle --convert r2u --coords 3 4 5");
    CHECK(fwd.exit_code == 0);
    const auto lines = split(fwd.out, '\n');
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "u1,u2,u3");
    const auto u = split(lines[1], ',');
    CHECK(std::strtod(u[0].c_str(), nullptr) == doctest::Approx(3.0));
    CHECK(std::strtod(u[1].c_str(), nullptr) == doctest::Approx(2.0));
    CHECK(std::strtod(u[2].c_str(), nullptr) == doctest::Approx(1.0));
    const auto bad = run_cli("oracle --convert r2u --coords 5 1 1");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("oracle subcommand agrees with the in-process library") {
    const auto r = run_cli(
        "oracle --kind gamma -k 1 -l 1 -n 1 -a 1.0 -b 0.8 -c 0.6 --nodes 48");
    CHECK(r.exit_code == 0);
    const double direct =
        tbi::core::gamma_klm({1, 1, 1}, {1.0, 0.8, 0.6}).value;
    CHECK(csv_value(r.out) == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("series subcommand matches a direct library call") {
    const auto r = run_cli("series --term 2,0 --term 3,1 -a 1.4 -b 1.1 -c 0.9");
    CHECK(r.exit_code == 0);
    const double expected =
        2.0 * tbi::core::gamma_klm({1, 1, 1}, {1.4, 1.1, 0.9}).value +
        3.0 * tbi::core::gamma_klm({2, 1, 1}, {1.4, 1.1, 0.9}).value;
    CHECK(csv_value(r.out) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(run_cli("series --term nonsense").exit_code == 3);
}

TEST_CASE("point evaluations through the CLI") {
    const auto k0 = run_cli("uehling-point --ki 0 --z 1");
    CHECK(k0.exit_code == 0);
    CHECK(csv_value(k0.out) ==
          doctest::Approx(0.42102443824070834).epsilon(1e-13));
    const auto j = run_cli(
        "j-integral -k 0 -l 0 -n 0 -a 2 -b 2 -c 1 --t 0.3");
    CHECK(j.exit_code == 0);
    CHECK(csv_value(j.out) ==
          doctest::Approx(5.17431003187720714e-02).epsilon(1e-12));
}

TEST_CASE("survey output is deterministic for a fixed seed") {
    const std::string args = "addition-survey --count 3 --seed 902 --k 1.0";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(split(a.out, '\n').size() >= 4);  // header + 3 rows
    const auto leg = run_cli("addition-survey --legendre 2,0.5");
    CHECK(csv_value(leg.out) == doctest::Approx(-0.125).epsilon(1e-14));
}
