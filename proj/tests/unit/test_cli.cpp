#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result cli(const std::string& args) {
    const std::string cmd = std::string("\"") + RYDGIANT_CLI + "\" " + args + " 2>&1";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    while (const std::size_t n = std::fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    const auto d = std::filesystem::temp_directory_path() / ("rydgiant_cli_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("run writes data and manifest") {
    const auto dir = scratch("run");
    std::ofstream(dir / "c.toml") << R"(
name = "tiny"
observables = ["rr", "g2"]
[params]
gamma = 0.001
Gamma = 1
Omega_c = 1
Delta_c = 30
phi = 40pi
[integrator]
t_end = 1
samples = 11
[sweep]
parameter = "phi"
values = [40pi, 41pi]
)";
    const auto r = cli("run " + (dir / "c.toml").string() + " --out " + (dir / "out").string() + " --workers 2");
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "out" / "tiny_0.csv"));
    CHECK(std::filesystem::exists(dir / "out" / "tiny_1.csv"));
    CHECK(std::filesystem::exists(dir / "out" / "tiny_manifest.json"));

    const auto o = cli("run " + (dir / "c.toml").string() + " --set params.phi=41pi --set sweep.values=[1pi] --out " +
                       (dir / "o2").string());
    CHECK(o.code == 0);
    CHECK(std::filesystem::exists(dir / "o2" / "tiny_0.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("configuration problems exit with 2") {
    const auto dir = scratch("bad");
    std::ofstream(dir / "bad.toml") << "model = \"nope\"\nwhat = 1\n";
    const auto r = cli("run " + (dir / "bad.toml").string());
    CHECK(r.code == 2);
    CHECK(r.out.find("model") != std::string::npos);
    CHECK(r.out.find("unknown key 'what'") != std::string::npos);
    CHECK(cli("run /nonexistent.toml").code == 2);
    CHECK(cli("preset fig9").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("").code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("numerical failures exit with 3") {
    const auto dir = scratch("num");
    std::ofstream(dir / "g.toml") << R"(
name = "g"
model = "giant"
[params]
Gamma = 1
Omega_c = 1
Delta_c = 30
phi = 40pi
[integrator]
t_end = 1
samples = 3
[sweep]
parameter = "Delta_c"
values = [30, 0]
)";
    const auto r = cli("run " + (dir / "g.toml").string() + " --out " + (dir / "out").string());
    CHECK(r.code == 3);
    CHECK(std::filesystem::exists(dir / "out" / "g_0.csv"));
    CHECK(cli("rates --phi 2pi --theta 1 --tol 1e-17").code == 3);
    std::filesystem::remove_all(dir);
}

TEST_CASE("informational subcommands") {
    const auto list = cli("preset --list");
    CHECK(list.code == 0);
    for (const char* n : {"fig2a", "fig2b", "fig3", "fig4"}) CHECK(list.out.find(n) != std::string::npos);

    const auto rates = cli("rates --phi 41pi --theta 2.5pi");
    CHECK(rates.code == 0);
    CHECK(rates.out.find("quadrature") != std::string::npos);
    CHECK(rates.out.find("max relative difference") != std::string::npos);

    const auto geo = cli("geometry");
    CHECK(geo.code == 0);
    CHECK(geo.out.find("phi") != std::string::npos);
    CHECK(cli("geometry --r-bar 400 --surface-distance 449").code == 2);

    CHECK(cli("--version").code == 0);
}

TEST_CASE("selftest passes") {
    const auto r = cli("selftest");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("preset runs with overrides") {
    const auto dir = scratch("preset");
    const auto r = cli("preset fig2b --set integrator.t_end=5 --set integrator.samples=6 --out " + dir.string());
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(dir / "fig2b_pair_2.csv"));
    CHECK(std::filesystem::exists(dir / "fig2b_reference.csv"));
    std::filesystem::remove_all(dir);
}
