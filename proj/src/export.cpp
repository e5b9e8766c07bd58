#include "rydgiant/export.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>

namespace rydgiant {

namespace {

using nlohmann::json;

void append_number(std::string& out, double v) {
    if (!std::isfinite(v)) return;  // undefined: empty cell
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.append(buf, r.ptr);
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string data_file_name(const ScenarioConfig& c, std::size_t index) {
    const std::string ext = c.format == "jsonl" ? ".jsonl" : ".csv";
    if (!c.sweep) return c.name + ext;
    return c.name + "_" + std::to_string(index) + ext;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << text;
    out.close();
    if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace

std::string to_csv(const TimeSeries& ts) {
    std::string out = "t_us";
    for (const auto& n : ts.names) out += "," + n;
    out += "\n";
    for (std::size_t i = 0; i < ts.times.size(); ++i) {
        append_number(out, ts.times[i]);
        for (const auto& col : ts.columns) {
            out += ",";
            append_number(out, col[i]);
        }
        out += "\n";
    }
    return out;
}

std::string to_jsonl(const TimeSeries& ts) {
    std::string out;
    for (std::size_t i = 0; i < ts.times.size(); ++i) {
        json rec = json::object();
        rec["t_us"] = ts.times[i];
        for (std::size_t k = 0; k < ts.names.size(); ++k) rec[ts.names[k]] = finite_or_null(ts.columns[k][i]);
        out += rec.dump() + "\n";
    }
    return out;
}

std::string manifest_json(const ScenarioResult& r) {
    const auto& m = r.manifest;
    json j;
    j["name"] = m.config.name;
    j["version"] = m.version;
    j["model"] = to_string(m.config.model);
    j["config"] = to_config_text(m.config);
    j["workers"] = m.workers;
    j["wall_seconds"] = m.wall_seconds;
    j["files"] = m.files;
    j["points"] = json::array();
    for (const auto& p : r.points) {
        json pj;
        pj["index"] = p.index;
        if (p.sweep_value) {
            pj["sweep_parameter"] = m.config.sweep->parameter;
            pj["sweep_value"] = *p.sweep_value;
        }
        pj["ok"] = p.ok;
        if (!p.ok) pj["error"] = p.error;
        pj["wall_seconds"] = p.wall_seconds;
        pj["warnings"] = p.warnings;
        if (p.ok) {
            const auto& s = p.series;
            std::size_t steps = s.diagnostics.empty() ? 0 : s.diagnostics.back().steps;
            pj["diagnostics"] = {{"samples", s.size()},
                                 {"steps", steps},
                                 {"rejected_steps", s.rejected_steps},
                                 {"rhs_evaluations", s.rhs_evaluations},
                                 {"max_trace_error", s.max_trace_error()},
                                 {"max_hermiticity_error", s.max_hermiticity_error()},
                                 {"min_eigenvalue", finite_or_null(s.min_eigenvalue())},
                                 {"degraded", s.degraded}};
            json d;
            d["J_ex"] = p.derived.exchange.J_ex;
            d["Gamma_ex"] = p.derived.exchange.Gamma_ex;
            if (p.derived.upsilon) d["Upsilon"] = complex_json(*p.derived.upsilon);
            if (p.derived.continuous) {
                const auto& c = *p.derived.continuous;
                d["coupling_rates"] = {{"Gamma_eff", c.Gamma_eff},
                                       {"Gamma_ex_eff", c.Gamma_ex_eff},
                                       {"J_ex_eff", c.J_ex_eff},
                                       {"J_self", c.J_self},
                                       {"theta", c.theta}};
            }
            if (p.derived.upsilon_continuous) d["Upsilon_continuous"] = complex_json(*p.derived.upsilon_continuous);
            pj["derived"] = d;
        }
        j["points"].push_back(pj);
    }
    return j.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_outputs(ScenarioResult& r, const std::filesystem::path& dir) {
    const auto& cfg = r.manifest.config;
    const std::filesystem::path base = dir.empty() ? std::filesystem::path(cfg.output_dir) : dir;
    std::error_code ec;
    std::filesystem::create_directories(base, ec);
    if (ec) throw std::runtime_error("cannot create output directory '" + base.string() + "': " + ec.message());
    std::vector<std::filesystem::path> written;
    r.manifest.files.clear();
    for (const auto& p : r.points) {
        if (!p.ok) continue;
        const auto path = base / data_file_name(cfg, p.index);
        write_file(path, cfg.format == "jsonl" ? to_jsonl(p.series) : to_csv(p.series));
        written.push_back(path);
        r.manifest.files.push_back(path.filename().string());
    }
    const auto manifest = base / (cfg.name + "_manifest.json");
    write_file(manifest, manifest_json(r));
    written.push_back(manifest);
    return written;
}

}  // namespace rydgiant
