#include "rydgiant/config.hpp"

#include <doctest.h>

#include <numbers>

using namespace rydgiant;

namespace {

std::vector<std::string> problems_of(std::string_view text, const std::vector<std::string>& overrides = {}) {
    try {
        parse_config(text, overrides);
    } catch (const ConfigError& e) {
        return e.problems();
    }
    return {};
}

bool mentions(const std::vector<std::string>& problems, std::string_view word) {
    for (const auto& p : problems)
        if (p.find(word) != std::string::npos) return true;
    return false;
}

constexpr std::string_view kSample = R"(
# comment line
name = "demo"
model = "pair"
initial_state = "double_excited"
observables = ["rr", "concurrence", "g2"]

[params]
gamma = 0.001
Gamma = 1.0
Omega_c = 1.0   # trailing comment
Delta_c = 30
phi = 40.5pi
V6 = 19822.9

[integrator]
mode = "fixed"
dt = 1e-3
t_end = 300
samples = 301

[sweep]
parameter = "phi"
values = [
  40pi,
  40.5pi,
  41pi,
]

[output]
dir = "out/demo"
format = "jsonl"
)";

}  // namespace

TEST_CASE("value literals") {
    auto v = parse_value("40.5pi");
    CHECK(v.has_pi);
    CHECK(v.number == 40.5);
    CHECK(v.as_double() == doctest::Approx(40.5 * std::numbers::pi));
    CHECK(parse_value("-pi").number == -1.0);
    CHECK(parse_value("pi").number == 1.0);
    CHECK(parse_value("5pi/2").number == 2.5);
    CHECK(parse_value("2.5e-3").number == 2.5e-3);
    CHECK_FALSE(parse_value("3").has_pi);
    CHECK(parse_value("\"a \\\"q\\\"\"").text == "a \"q\"");
    CHECK(parse_value("true").flag);
    CHECK(parse_value("[1, [2, 3]]").items.at(1).items.size() == 2);
    CHECK(parse_value("[]").items.empty());
    CHECK_THROWS_AS(parse_value("12abc"), ConfigError);
    CHECK_THROWS_AS(parse_value("\"open"), ConfigError);
    CHECK_THROWS_AS(parse_value("[1, 2"), ConfigError);
    CHECK_THROWS_AS(parse_value(""), ConfigError);
}

TEST_CASE("full configuration") {
    const auto c = parse_config(kSample);
    CHECK(c.name == "demo");
    CHECK(c.model == ModelKind::pair);
    CHECK(c.params.gamma == 0.001);
    CHECK(c.params.Delta_c == 30.0);
    CHECK(c.params.phi.pi_units() == 40.5);
    CHECK(c.integrator.mode == StepMode::fixed);
    CHECK(c.integrator.sample_count == 301);
    REQUIRE(c.sweep.has_value());
    CHECK(c.sweep->parameter == "phi");
    CHECK(c.sweep->values == std::vector<double>{40.0, 40.5, 41.0});
    CHECK(c.point_count() == 3);
    CHECK(c.format == "jsonl");
    CHECK(c.output_dir == "out/demo");
    CHECK(c.observables == std::vector<std::string>{"rr", "concurrence", "g2"});

    const auto p = at_sweep_point(c, 2);
    CHECK_FALSE(p.sweep.has_value());
    CHECK(p.params.phi.pi_units() == 41.0);
    CHECK_THROWS_AS(at_sweep_point(c, 3), std::out_of_range);
}

TEST_CASE("phi given in radians is stored in units of pi") {
    const auto c = parse_config("[params]\nphi = 3.141592653589793\nDelta_c = 30\n");
    CHECK(c.params.phi.pi_units() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("command-line overrides") {
    const auto c = parse_config(kSample, {"params.phi=41pi", "integrator.t_end=10", "name=\"x\""});
    CHECK(c.params.phi.pi_units() == 41.0);
    CHECK(c.integrator.t_end == 10.0);
    CHECK(c.name == "x");
    CHECK(mentions(problems_of(kSample, {"params.phi"}), "key=value"));
    CHECK(mentions(problems_of(kSample, {"params.nope=1"}), "unknown key 'params.nope'"));
}

TEST_CASE("all problems are reported together") {
    const auto probs = problems_of(R"(
model = "quantum"
bogus = 1
[params]
gamma = -1
Gamma = "one"
[integrator]
mode = "leapfrog"
[output]
format = "xml"
)");
    CHECK(mentions(probs, "model"));
    CHECK(mentions(probs, "unknown key 'bogus'"));
    CHECK(mentions(probs, "params.Gamma must be a number"));
    CHECK(mentions(probs, "integrator.mode"));
    CHECK(probs.size() >= 4);

    const auto semantic = problems_of(R"(
[params]
gamma = -1
Delta_c = 30
[integrator]
t_end = -5
[output]
format = "xml"
)");
    CHECK(mentions(semantic, "gamma"));
    CHECK(mentions(semantic, "t_end"));
    CHECK(mentions(semantic, "output.format"));

    CHECK(mentions(problems_of("a = 1\na = 2\n"), "duplicate key 'a'"));
    CHECK(mentions(problems_of("[params\n"), "malformed table header"));
    CHECK(mentions(problems_of("just text\n"), "expected key = value"));
}

TEST_CASE("model-specific validation") {
    CHECK(mentions(problems_of("model = \"giant\"\n[params]\nDelta_c = 0\n"), "Delta_c != 0"));
    CHECK(mentions(problems_of("model = \"giant\"\ninitial_state = \"plus\"\n[params]\nDelta_c = 30\n"),
                   "does not exist for the giant model"));
    CHECK(mentions(problems_of("model = \"giant\"\nobservables = [\"concurrence\"]\n[params]\nDelta_c = 30\n"),
                   "concurrence"));
    CHECK(mentions(problems_of("model = \"pair_continuous\"\n[params]\nphi = 0\ntheta = 1\n"), "phi must be > 0"));
    CHECK(mentions(problems_of("[params]\ntheta = 1\n"), "only used by model pair_continuous"));
    CHECK(mentions(problems_of("initial_state = \"excited\"\n"), "initial_state"));
}

TEST_CASE("sweep validation") {
    CHECK(mentions(problems_of("[sweep]\nparameter = \"mass\"\nvalues = [1]\n"), "mass"));
    CHECK(mentions(problems_of("[sweep]\nparameter = \"phi\"\nvalues = []\n"), "must not be empty"));
    CHECK(mentions(problems_of("[sweep]\nvalues = [1]\n"), "without sweep.parameter"));
    for (const auto& p : sweepable_parameters()) {
        const auto c = parse_config("model = \"pair_continuous\"\n[params]\nphi = 40pi\ntheta = 1\n[sweep]\nparameter = \"" +
                                    p + "\"\nvalues = [1, 2]\n");
        CHECK(c.point_count() == 2);
    }
    const auto c = parse_config("[sweep]\nparameter = \"params.Delta_c\"\nvalues = [10, 20]\n");
    CHECK(at_sweep_point(c, 1).params.Delta_c == 20.0);
}

TEST_CASE("custom initial matrix") {
    const auto c = parse_config(R"(
initial_state = "custom"
[initial]
real = [[0.5, 0, 0, 0.2], [0, 0, 0, 0], [0, 0, 0, 0], [0.2, 0, 0, 0.5]]
imag = [[0, 0, 0, 0.1], [0, 0, 0, 0], [0, 0, 0, 0], [-0.1, 0, 0, 0]]
)");
    REQUIRE(c.custom_initial.has_value());
    CHECK((*c.custom_initial)(0, 3) == Complex(0.2, 0.1));
    CHECK((*c.custom_initial)(3, 0) == Complex(0.2, -0.1));

    CHECK(mentions(problems_of(R"(
initial_state = "custom"
[initial]
real = [[0.5, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0.5]]
imag = [[0, 0, 0, 0.1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
)"),
                   "not a valid density matrix"));
    CHECK(mentions(problems_of("initial_state = \"custom\"\n[initial]\nreal = [[1, 0], [0, 0]]\n"), "4x4"));
    CHECK(mentions(problems_of("initial_state = \"custom\"\n[initial]\nreal = [[1, 0], [0]]\n"), "square"));
    CHECK(mentions(problems_of("initial_state = \"custom\"\n"), "needs initial.real"));
    CHECK(mentions(problems_of("[initial]\nreal = [[1]]\n"), "not \"custom\""));
}

TEST_CASE("configuration text round trip") {
    auto c = parse_config(kSample);
    c.params.Omega_c = Complex(0.3, 1.0 / 3.0);
    c.params.gamma = 0.1 + 0.2;
    c.integrator.sample_times = {0.0, 1.0 / 7.0, 300.0};
    c.custom_initial = ComplexMatrix::Identity(4, 4) * 0.25;
    c.initial_state = "custom";
    const std::string text = to_config_text(c);
    const auto back = parse_config(text);
    CHECK(to_config_text(back) == text);
    CHECK(back.params.gamma == c.params.gamma);
    CHECK(back.params.Omega_c == c.params.Omega_c);
    CHECK(back.params.phi == c.params.phi);
    CHECK(back.integrator.sample_times == c.integrator.sample_times);
    CHECK(back.sweep->values == c.sweep->values);
    CHECK(*back.custom_initial == *c.custom_initial);

    ScenarioConfig cont;
    cont.model = ModelKind::pair_continuous;
    cont.params.phi = Phase::from_pi_units(41.0);
    cont.theta = 2.5 * std::numbers::pi;
    const auto cb = parse_config(to_config_text(cont));
    CHECK(cb.model == ModelKind::pair_continuous);
    CHECK(cb.theta == cont.theta);
}

TEST_CASE("load_config reads files and reports missing ones") {
    CHECK_THROWS_AS(load_config("/nonexistent/dir/x.toml"), ConfigError);
}

TEST_CASE("defaults") {
    CHECK(default_observables(ModelKind::giant) == std::vector<std::string>{"gg", "rr"});
    CHECK(default_observables(ModelKind::pair).size() == 6);
    CHECK(to_string(ModelKind::pair_continuous) == "pair_continuous");
    CHECK(to_string(StepMode::adaptive) == "adaptive");
    CHECK_NOTHROW(validate(ScenarioConfig{}));
}
