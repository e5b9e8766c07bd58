#include "rydgiant/config.hpp"

#include "rydgiant/observables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace rydgiant {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string number_text(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// Strip a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view line) {
    bool in_str = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (in_str && c == '\\') {
            ++i;
            continue;
        }
        if (c == '"') in_str = !in_str;
        if (c == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

class ValueParser {
public:
    explicit ValueParser(std::string_view s) : s_(s) {}

    ConfigValue parse_all() {
        ConfigValue v = parse();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing text");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ConfigError({"cannot parse value '" + std::string(s_) + "': " + why});
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool starts_with(std::string_view w) const { return s_.substr(pos_, w.size()) == w; }

    ConfigValue parse() {
        skip_ws();
        if (pos_ >= s_.size()) fail("empty value");
        const char c = s_[pos_];
        if (c == '"') return parse_string();
        if (c == '[') return parse_array();
        if (starts_with("true") || starts_with("false")) {
            ConfigValue v;
            v.kind = ConfigValue::Kind::boolean;
            v.flag = starts_with("true");
            pos_ += v.flag ? 4 : 5;
            return v;
        }
        return parse_number();
    }

    ConfigValue parse_string() {
        ++pos_;
        ConfigValue v;
        v.kind = ConfigValue::Kind::string;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
            v.text += s_[pos_++];
        }
        if (pos_ >= s_.size()) fail("unterminated string");
        ++pos_;
        return v;
    }

    ConfigValue parse_array() {
        ++pos_;
        ConfigValue v;
        v.kind = ConfigValue::Kind::array;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']') {
            ++pos_;
            return v;
        }
        while (true) {
            v.items.push_back(parse());
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated array");
            if (s_[pos_] == ',') {
                ++pos_;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == ']') {
                    ++pos_;
                    return v;
                }
                continue;
            }
            if (s_[pos_] == ']') {
                ++pos_;
                return v;
            }
            fail("expected ',' or ']'");
        }
    }

    double parse_plain() {
        double x = 0.0;
        const char* b = s_.data() + pos_;
        const char* e = s_.data() + s_.size();
        if (b < e && *b == '+') ++b;
        const auto r = std::from_chars(b, e, x);
        if (r.ec != std::errc()) fail("not a number");
        pos_ = static_cast<std::size_t>(r.ptr - s_.data());
        return x;
    }

    ConfigValue parse_number() {
        ConfigValue v;
        v.kind = ConfigValue::Kind::number;
        double coef = 1.0;
        if (starts_with("-pi") || starts_with("+pi")) {
            coef = s_[pos_] == '-' ? -1.0 : 1.0;
            ++pos_;
        } else if (!starts_with("pi")) {
            coef = parse_plain();
        }
        skip_ws();
        if (starts_with("pi")) {
            v.has_pi = true;
            pos_ += 2;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip_ws();
                const double div = parse_plain();
                if (div == 0.0) fail("division by zero");
                coef /= div;
            }
        }
        if (!std::isfinite(coef)) fail("non-finite number");
        v.number = coef;
        return v;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

int bracket_balance(std::string_view s) {
    int depth = 0;
    bool in_str = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (in_str && c == '\\') {
            ++i;
            continue;
        }
        if (c == '"') in_str = !in_str;
        if (in_str) continue;
        if (c == '[') ++depth;
        if (c == ']') --depth;
    }
    return depth;
}

struct FieldSpec {
    const char* key;
    ConfigValue::Kind kind;
};

const std::vector<FieldSpec>& known_fields() {
    using K = ConfigValue::Kind;
    static const std::vector<FieldSpec> f{
        {"name", K::string},          {"model", K::string},
        {"initial_state", K::string}, {"observables", K::array},
        {"params.gamma", K::number},  {"params.Gamma", K::number},
        {"params.Omega_c", K::number}, {"params.Omega_c_im", K::number},
        {"params.Delta_c", K::number}, {"params.phi", K::number},
        {"params.V6", K::number},     {"params.theta", K::number},
        {"integrator.mode", K::string}, {"integrator.dt", K::number},
        {"integrator.rel_tol", K::number}, {"integrator.abs_tol", K::number},
        {"integrator.max_dt", K::number}, {"integrator.t_end", K::number},
        {"integrator.samples", K::number}, {"integrator.sample_times", K::array},
        {"integrator.max_steps", K::number}, {"integrator.retain_states", K::boolean},
        {"integrator.dense_output", K::boolean},
        {"sweep.parameter", K::string}, {"sweep.values", K::array},
        {"output.dir", K::string},    {"output.format", K::string},
        {"initial.real", K::array},   {"initial.imag", K::array},
    };
    return f;
}

const char* kind_name(ConfigValue::Kind k) {
    switch (k) {
        case ConfigValue::Kind::number: return "a number";
        case ConfigValue::Kind::string: return "a string";
        case ConfigValue::Kind::boolean: return "a boolean";
        case ConfigValue::Kind::array: return "an array";
    }
    return "?";
}

std::string canonical_parameter(std::string p) {
    if (p.rfind("params.", 0) == 0) p = p.substr(7);
    return p;
}

// Value of a numeric parameter in its own unit (phi in units of pi).
double param_in_unit(const std::string& name, const ConfigValue& v) {
    if (name == "phi") return v.has_pi ? v.number : v.number / std::numbers::pi;
    return v.as_double();
}

void set_parameter(ScenarioConfig& c, const std::string& name, double value) {
    if (name == "gamma") c.params.gamma = value;
    else if (name == "Gamma") c.params.Gamma = value;
    else if (name == "Omega_c") c.params.Omega_c.real(value);
    else if (name == "Omega_c_im") c.params.Omega_c.imag(value);
    else if (name == "Delta_c") c.params.Delta_c = value;
    else if (name == "phi") c.params.phi = Phase::from_pi_units(value);
    else if (name == "V6") c.params.V6 = value;
    else if (name == "theta") c.theta = value;
    else throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

std::optional<ComplexMatrix> matrix_from(const ConfigValue* re, const ConfigValue* im,
                                         std::vector<std::string>& problems) {
    if (re == nullptr) {
        problems.push_back("initial_state = \"custom\" needs initial.real (and optionally initial.imag)");
        return std::nullopt;
    }
    auto read = [&problems](const ConfigValue& v, const char* what, ComplexMatrix& m, bool imag) {
        const auto n = static_cast<Eigen::Index>(v.items.size());
        if (imag && n != m.rows()) {
            problems.push_back(std::string(what) + " must have the same shape as initial.real");
            return;
        }
        if (!imag) m = ComplexMatrix::Zero(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& row = v.items[static_cast<std::size_t>(i)];
            if (row.kind != ConfigValue::Kind::array || static_cast<Eigen::Index>(row.items.size()) != n) {
                problems.push_back(std::string(what) + " must be a square array of arrays");
                return;
            }
            for (Eigen::Index j = 0; j < n; ++j) {
                const auto& x = row.items[static_cast<std::size_t>(j)];
                if (x.kind != ConfigValue::Kind::number) {
                    problems.push_back(std::string(what) + " entries must be numbers");
                    return;
                }
                if (imag) m(i, j) += Complex(0.0, x.as_double());
                else m(i, j) = x.as_double();
            }
        }
    };
    ComplexMatrix m;
    const std::size_t before = problems.size();
    read(*re, "initial.real", m, false);
    if (im != nullptr && problems.size() == before) read(*im, "initial.imag", m, true);
    if (problems.size() != before) return std::nullopt;
    return m;
}

}  // namespace

// ---------------------------------------------------------------- public

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error("configuration error: " + join(problems, "; ")),
      problems_(std::move(problems)) {}

std::string to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::pair: return "pair";
        case ModelKind::giant: return "giant";
        case ModelKind::pair_continuous: return "pair_continuous";
    }
    return "?";
}

std::string to_string(StepMode mode) { return mode == StepMode::fixed ? "fixed" : "adaptive"; }

double ConfigValue::as_double() const { return has_pi ? number * std::numbers::pi : number; }

ConfigValue parse_value(std::string_view text) { return ValueParser(trim(text)).parse_all(); }

std::map<std::string, ConfigValue> parse_tables(std::string_view text) {
    std::map<std::string, ConfigValue> out;
    std::vector<std::string> problems;
    std::string section;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line(trim(strip_comment(raw)));
        if (line.empty()) continue;
        if (line.front() == '[' && line.find('=') == std::string::npos) {
            if (line.back() != ']') {
                problems.push_back("line " + std::to_string(lineno) + ": malformed table header");
                continue;
            }
            section = std::string(trim(std::string_view(line).substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            problems.push_back("line " + std::to_string(lineno) + ": expected key = value");
            continue;
        }
        const std::string key(trim(std::string_view(line).substr(0, eq)));
        std::string value(trim(std::string_view(line).substr(eq + 1)));
        const int start = lineno;
        while (bracket_balance(value) > 0 && std::getline(in, raw)) {
            ++lineno;
            value += " ";
            value += trim(strip_comment(raw));
        }
        const std::string full = section.empty() ? key : section + "." + key;
        if (out.count(full)) {
            problems.push_back("line " + std::to_string(start) + ": duplicate key '" + full + "'");
            continue;
        }
        try {
            out[full] = parse_value(value);
        } catch (const ConfigError& e) {
            for (const auto& p : e.problems())
                problems.push_back("line " + std::to_string(start) + " (" + full + "): " + p);
        }
    }
    if (!problems.empty()) throw ConfigError(problems);
    return out;
}

std::vector<std::string> sweepable_parameters() {
    return {"gamma", "Gamma", "Omega_c", "Omega_c_im", "Delta_c", "phi", "V6", "theta"};
}

std::vector<std::string> default_observables(ModelKind model) {
    if (model == ModelKind::giant) return {"gg", "rr"};
    return {"gg", "rr", "plus", "minus", "concurrence", "g2"};
}

ScenarioConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    auto tables = parse_tables(text);
    std::vector<std::string> problems;
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) {
            problems.push_back("override '" + o + "' must look like key=value");
            continue;
        }
        const std::string key(trim(std::string_view(o).substr(0, eq)));
        try {
            tables[key] = parse_value(std::string_view(o).substr(eq + 1));
        } catch (const ConfigError& e) {
            for (const auto& p : e.problems()) problems.push_back("override " + key + ": " + p);
        }
    }

    // Offending keys are dropped so the remaining checks still run and every
    // problem is reported in one pass.
    std::set<std::string> known;
    for (const auto& f : known_fields()) {
        known.insert(f.key);
        const auto it = tables.find(f.key);
        if (it != tables.end() && it->second.kind != f.kind) {
            problems.push_back(std::string(f.key) + " must be " + kind_name(f.kind));
            tables.erase(it);
        }
    }
    for (auto it = tables.begin(); it != tables.end();) {
        if (known.count(it->first)) {
            ++it;
            continue;
        }
        problems.push_back("unknown key '" + it->first + "'");
        it = tables.erase(it);
    }

    auto get = [&tables](const char* k) -> const ConfigValue* {
        const auto it = tables.find(k);
        return it == tables.end() ? nullptr : &it->second;
    };
    ScenarioConfig c;
    if (auto v = get("name")) c.name = v->text;
    if (auto v = get("model")) {
        if (v->text == "pair") c.model = ModelKind::pair;
        else if (v->text == "giant") c.model = ModelKind::giant;
        else if (v->text == "pair_continuous") c.model = ModelKind::pair_continuous;
        else problems.push_back("model must be pair, giant or pair_continuous (got '" + v->text + "')");
    }
    if (auto v = get("initial_state")) c.initial_state = v->text;
    if (auto v = get("observables")) {
        for (const auto& item : v->items) {
            if (item.kind != ConfigValue::Kind::string) problems.push_back("observables must be strings");
            else c.observables.push_back(item.text);
        }
    }
    for (const auto& p : sweepable_parameters()) {
        const std::string key = "params." + p;
        if (auto v = get(key.c_str())) set_parameter(c, p, param_in_unit(p, *v));
    }
    auto& ic = c.integrator;
    if (auto v = get("integrator.mode")) {
        if (v->text == "fixed") ic.mode = StepMode::fixed;
        else if (v->text == "adaptive") ic.mode = StepMode::adaptive;
        else problems.push_back("integrator.mode must be fixed or adaptive (got '" + v->text + "')");
    }
    if (auto v = get("integrator.dt")) ic.dt = v->as_double();
    if (auto v = get("integrator.rel_tol")) ic.rel_tol = v->as_double();
    if (auto v = get("integrator.abs_tol")) ic.abs_tol = v->as_double();
    if (auto v = get("integrator.max_dt")) ic.max_dt = v->as_double();
    if (auto v = get("integrator.dense_output")) ic.dense_output = v->flag;
    if (auto v = get("integrator.t_end")) ic.t_end = v->as_double();
    auto count = [&problems](const ConfigValue& v, const char* what) -> std::size_t {
        const double x = v.as_double();
        if (!(x >= 0.0) || x != std::floor(x) || x > 1e15) {
            problems.push_back(std::string(what) + " must be a non-negative integer");
            return 0;
        }
        return static_cast<std::size_t>(x);
    };
    if (auto v = get("integrator.samples")) ic.sample_count = count(*v, "integrator.samples");
    if (auto v = get("integrator.max_steps")) ic.max_steps = count(*v, "integrator.max_steps");
    if (auto v = get("integrator.sample_times")) {
        for (const auto& item : v->items) {
            if (item.kind != ConfigValue::Kind::number) problems.push_back("integrator.sample_times must be numbers");
            else ic.sample_times.push_back(item.as_double());
        }
    }
    if (auto v = get("integrator.retain_states")) ic.retain_states = v->flag;

    if (auto v = get("sweep.parameter")) {
        SweepSpec s;
        s.parameter = canonical_parameter(v->text);
        if (auto vals = get("sweep.values")) {
            for (const auto& item : vals->items) {
                if (item.kind != ConfigValue::Kind::number) problems.push_back("sweep.values must be numbers");
                else s.values.push_back(param_in_unit(s.parameter, item));
            }
        }
        c.sweep = s;
    } else if (get("sweep.values")) {
        problems.push_back("sweep.values given without sweep.parameter");
    }
    if (auto v = get("output.dir")) c.output_dir = v->text;
    if (auto v = get("output.format")) c.format = v->text;
    if (c.initial_state == "custom") {
        c.custom_initial = matrix_from(get("initial.real"), get("initial.imag"), problems);
    } else if (get("initial.real") || get("initial.imag")) {
        problems.push_back("initial.real/imag given but initial_state is not \"custom\"");
    }

    for (auto& p : validation_problems(c)) problems.push_back(std::move(p));
    if (!problems.empty()) throw ConfigError(problems);
    return c;
}

ScenarioConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file '" + path.string() + "'"});
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), overrides);
}

std::vector<std::string> validation_problems(const ScenarioConfig& c) {
    std::vector<std::string> problems;
    auto note = [&problems](const std::string& prefix, const std::exception& e) {
        problems.push_back(prefix + e.what());
    };
    try {
        validate(c.params);
    } catch (const std::exception& e) {
        note("", e);
    }
    if (c.model == ModelKind::pair_continuous) {
        if (!(c.theta >= 0.0)) problems.push_back("params.theta must be >= 0");
        if (c.theta > 0.0 && !(c.params.phi.pi_units() > 0.0) && !c.sweep)
            problems.push_back("params.phi must be > 0 for a continuous coupling with theta > 0");
    } else if (c.theta != 0.0) {
        problems.push_back("params.theta is only used by model pair_continuous");
    }
    if (c.model == ModelKind::giant && c.params.Delta_c == 0.0 &&
        !(c.sweep && c.sweep->parameter == "Delta_c"))
        problems.push_back("giant model needs Delta_c != 0");
    try {
        c.integrator.validate();
    } catch (const std::exception& e) {
        note("", e);
    }
    const Eigen::Index dim = c.model == ModelKind::giant ? 2 : 4;
    const auto known = known_observables(dim);
    for (const auto& o : c.observables)
        if (std::find(known.begin(), known.end(), o) == known.end())
            problems.push_back("observable '" + o + "' is not available for model " + to_string(c.model) +
                               " (known: " + join(known, ", ") + ")");
    static const std::vector<std::string> states{"ground", "double_excited", "plus", "minus", "custom"};
    if (std::find(states.begin(), states.end(), c.initial_state) == states.end())
        problems.push_back("initial_state must be one of ground, double_excited, plus, minus, custom");
    if (dim == 2 && (c.initial_state == "plus" || c.initial_state == "minus"))
        problems.push_back("initial_state " + c.initial_state + " does not exist for the giant model");
    if (c.initial_state == "custom") {
        if (!c.custom_initial) {
            problems.push_back("initial_state = \"custom\" needs a matrix");
        } else {
            const auto& m = *c.custom_initial;
            if (m.rows() != dim) {
                problems.push_back("custom initial matrix must be " + std::to_string(dim) + "x" +
                                   std::to_string(dim));
            } else if (!check_validity(m).ok()) {
                const auto r = check_validity(m);
                std::ostringstream os;
                os << "custom initial matrix is not a valid density matrix (trace error "
                   << r.trace_error << ", Hermiticity error " << r.hermiticity_error
                   << ", smallest eigenvalue " << r.min_eigenvalue << ")";
                problems.push_back(os.str());
            }
        }
    }
    if (c.sweep) {
        const auto params = sweepable_parameters();
        if (std::find(params.begin(), params.end(), c.sweep->parameter) == params.end())
            problems.push_back("sweep.parameter '" + c.sweep->parameter +
                               "' is not a numeric parameter (one of " + join(params, ", ") + ")");
        if (c.sweep->values.empty()) problems.push_back("sweep.values must not be empty");
        for (double v : c.sweep->values)
            if (!std::isfinite(v)) problems.push_back("sweep.values must be finite");
    }
    if (c.format != "csv" && c.format != "jsonl")
        problems.push_back("output.format must be csv or jsonl (got '" + c.format + "')");
    return problems;
}

void validate(const ScenarioConfig& c) {
    auto problems = validation_problems(c);
    if (!problems.empty()) throw ConfigError(problems);
}

ScenarioConfig at_sweep_point(const ScenarioConfig& c, std::size_t index) {
    ScenarioConfig p = c;
    if (!c.sweep) {
        if (index != 0) throw std::out_of_range("at_sweep_point: no sweep, index must be 0");
        return p;
    }
    if (index >= c.sweep->values.size()) throw std::out_of_range("at_sweep_point: index out of range");
    p.sweep.reset();
    set_parameter(p, c.sweep->parameter, c.sweep->values[index]);
    return p;
}

std::string to_config_text(const ScenarioConfig& c) {
    std::ostringstream os;
    auto list = [](const std::vector<std::string>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + quote(v[i]);
        return s + "]";
    };
    os << "name = " << quote(c.name) << "\n";
    os << "model = " << quote(to_string(c.model)) << "\n";
    os << "initial_state = " << quote(c.initial_state) << "\n";
    if (!c.observables.empty()) os << "observables = " << list(c.observables) << "\n";
    os << "\n[params]\n";
    os << "gamma = " << number_text(c.params.gamma) << "\n";
    os << "Gamma = " << number_text(c.params.Gamma) << "\n";
    os << "Omega_c = " << number_text(c.params.Omega_c.real()) << "\n";
    if (c.params.Omega_c.imag() != 0.0) os << "Omega_c_im = " << number_text(c.params.Omega_c.imag()) << "\n";
    os << "Delta_c = " << number_text(c.params.Delta_c) << "\n";
    os << "phi = " << number_text(c.params.phi.pi_units()) << "pi\n";
    os << "V6 = " << number_text(c.params.V6) << "\n";
    if (c.model == ModelKind::pair_continuous || c.theta != 0.0) os << "theta = " << number_text(c.theta) << "\n";
    const auto& ic = c.integrator;
    os << "\n[integrator]\n";
    os << "mode = " << quote(to_string(ic.mode)) << "\n";
    os << "dt = " << number_text(ic.dt) << "\n";
    os << "rel_tol = " << number_text(ic.rel_tol) << "\n";
    os << "abs_tol = " << number_text(ic.abs_tol) << "\n";
    os << "max_dt = " << number_text(ic.max_dt) << "\n";
    if (ic.dense_output) os << "dense_output = true\n";
    os << "t_end = " << number_text(ic.t_end) << "\n";
    os << "samples = " << ic.sample_count << "\n";
    if (!ic.sample_times.empty()) {
        os << "sample_times = [";
        for (std::size_t i = 0; i < ic.sample_times.size(); ++i)
            os << (i ? ", " : "") << number_text(ic.sample_times[i]);
        os << "]\n";
    }
    os << "max_steps = " << ic.max_steps << "\n";
    os << "retain_states = " << (ic.retain_states ? "true" : "false") << "\n";
    if (c.sweep) {
        os << "\n[sweep]\nparameter = " << quote(c.sweep->parameter) << "\nvalues = [";
        const char* suffix = c.sweep->parameter == "phi" ? "pi" : "";
        for (std::size_t i = 0; i < c.sweep->values.size(); ++i)
            os << (i ? ", " : "") << number_text(c.sweep->values[i]) << suffix;
        os << "]\n";
    }
    os << "\n[output]\ndir = " << quote(c.output_dir) << "\nformat = " << quote(c.format) << "\n";
    if (c.custom_initial) {
        const auto& m = *c.custom_initial;
        auto rows = [&m](bool imag) {
            std::string s = "[";
            for (Eigen::Index i = 0; i < m.rows(); ++i) {
                s += i ? ", [" : "[";
                for (Eigen::Index j = 0; j < m.cols(); ++j)
                    s += (j ? ", " : "") + number_text(imag ? m(i, j).imag() : m(i, j).real());
                s += "]";
            }
            return s + "]";
        };
        os << "\n[initial]\nreal = " << rows(false) << "\nimag = " << rows(true) << "\n";
    }
    return os.str();
}

}  // namespace rydgiant
