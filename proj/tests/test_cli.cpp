#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "thermo/cli/config.hpp"
#include "thermo/cli/output.hpp"
#include "thermo/cli/sweep.hpp"
#include "thermo/cli/validate.hpp"
#include "thermo/ies.hpp"

using namespace thermo;
using namespace thermo::cli;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(THERMO_EXE) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture(const std::string& args) {
    const std::string cmd = std::string(THERMO_EXE) + " " + args + " 2>/dev/null";
    std::string out;
    if (FILE* f = popen(cmd.c_str(), "r")) {
        char buf[4096];
        std::size_t n;
        while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
        pclose(f);
    }
    return out;
}

std::string csv(const SweepTable& t) {
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_number(2.5) == "2.50000000000e+00");
    CHECK(format_number(-1e-300) == "-1.00000000000e-300");
    CHECK(format_number(0.0) == "0.00000000000e+00");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
}

TEST_CASE("config grammar") {
    const auto cfg = parse_config(R"(# comment
mode = bath
formula = weak
[params]
kappa = 1e4   # trailing comment
n_qubits = 8
[sweep]
variable = n_qubits
min = 1
max = 8
count = 8
scale = log
[output]
format = json
)");
    CHECK(cfg.mode == Mode::Bath);
    CHECK(cfg.formula == "weak");
    CHECK(cfg.params.kappa == 1e4);
    CHECK(cfg.params.n_qubits == 8);
    CHECK(cfg.explicit_params.contains("kappa"));
    REQUIRE(cfg.sweep);
    CHECK(cfg.sweep->log);
    CHECK(cfg.format == "json");
    CHECK_NOTHROW(check_config(cfg));
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("[params]\nkappa = abc\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[params]\nnope = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[weird]\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("just text\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("mode = quantum\n"), ConfigError);

    auto cfg = parse_config("[sweep]\nvariable = r\nmin = 0\nmax = 1\ncount = 1\n");
    CHECK_THROWS_AS(check_config(cfg), ConfigError);
    cfg = parse_config("[sweep]\nvariable = r\nmin = 0\nmax = 1\ncount = 3\nscale = log\n");
    CHECK_THROWS_AS(check_config(cfg), ConfigError);
    cfg = parse_config("[sweep]\nvariable = bogus\nmin = 1\nmax = 2\n");
    CHECK_THROWS_AS(check_config(cfg), ConfigError);
    cfg = parse_config("mode = ics\nformula = steady\n");
    CHECK_THROWS_AS(check_config(cfg), ConfigError);
}

TEST_CASE("axis values") {
    const auto v = axis_values({"n_qubits", 1, 1000, 50, true});
    CHECK(v.front() == 1);
    CHECK(v.back() == 1000);
    CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    const auto l = axis_values({"r", 0, 2, 5, false});
    CHECK(l == std::vector<double>{0, 0.5, 1, 1.5, 2});
}

TEST_CASE("sweep over the drive halves delta T in bath mode") {
    auto cfg = parse_config("mode = bath\n[sweep]\nvariable = alpha_in\nmin = 100\nmax = 200\ncount = 2\n");
    const auto t = run_sweep(cfg);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1].delta_T == doctest::Approx(t.rows[0].delta_T / 2).epsilon(1e-13));
}

TEST_CASE("sweeps are deterministic and flag failing points") {
    auto cfg = parse_config("mode = ies\n[sweep]\nvariable = chi\nmin = 0\nmax = 2\ncount = 5\n[sweep2]\nvariable = r\nmin = 0\nmax = 1\ncount = 2\n");
    const auto a = csv(run_sweep(cfg));
    CHECK(a == csv(run_sweep(cfg)));
    const auto t = run_sweep(cfg);
    REQUIRE(t.rows.size() == 10);
    CHECK(t.rows[0].status == "degenerate");
    CHECK(t.rows[1].status == "ok");
    CHECK(a.substr(0, a.find('\n')) == "chi,r,deltaT,formula,regime_warning,status");
}

TEST_CASE("fig2 preset") {
    ScenarioConfig cfg;
    cfg.mode = Mode::Bath;
    cfg.fig2 = true;
    const auto t = run_sweep(cfg);
    CHECK(t.axis_names == std::vector<std::string>{"n_qubits", "r"});
    CHECK(t.minima.size() == 3);
    CHECK(t.rows.size() == 3 * bath::fig2_n_grid().size());
    std::ostringstream svg;
    write_svg(svg, t, true);
    CHECK(svg.str().find("<polyline") != std::string::npos);
    CHECK(svg.str().rfind("</svg>") != std::string::npos);
}

TEST_CASE("validation passes and its json schema is stable") {
    const auto checks = run_validation();
    std::ostringstream os;
    CHECK(write_report(os, checks, true) == 0);
    const auto doc = nlohmann::json::parse(os.str());
    CHECK(doc["pass"] == true);
    REQUIRE(doc["checks"].is_array());
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("value"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("pass"));
        CHECK(c["name"].is_string());
        CHECK(c["pass"].is_boolean());
    }
}

TEST_CASE("a sign flip in the squeezed-noise term trips the oracle check") {
    ValidateHooks hooks;
    hooks.ies_branch_variance = [](const ReadoutParams& p, int s) {
        auto q = p;
        q.r = -p.r;  // flips the sign of the sinh 2r term, keeps cosh 2r
        return ies::branch_moments(q, s).variance;
    };
    const auto checks = run_validation(hooks);
    std::ostringstream os;
    CHECK(write_report(os, checks, false) == 1);
    CHECK(os.str().find("FAIL ies.oracle.noise") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("bounds") == 0);
    CHECK(run("ies --chi 0") == 0);
    CHECK(run("ies --kappa -1") == 2);
    CHECK(run("ies --unknown-flag") == 2);
    CHECK(run("") == 2);
    CHECK(run("ies --config /nonexistent/file.cfg") == 2);
    CHECK(run("ies --format xml") == 2);
    CHECK(run("validate") == 0);
}

TEST_CASE("command output is byte-identical across runs") {
    const auto a = capture("bath --fig2");
    CHECK(a.size() > 1000);
    CHECK(a == capture("bath --fig2"));
    const auto j = capture("validate --json");
    CHECK(j == capture("validate --json"));
    CHECK(nlohmann::json::parse(j)["checks"].size() > 10);
}

TEST_CASE("flags override the config file") {
    const std::string path = "thermo_test_config.cfg";
    {
        std::ofstream f(path);
        f << "mode = bath\n[params]\nalpha_in = 100\n";
    }
    const auto base = capture("bath --config " + path);
    const auto over = capture("bath --config " + path + " --alpha-in 200");
    CHECK(base != over);
    CHECK(over == capture("bath --alpha-in 200"));
    std::remove(path.c_str());
}
