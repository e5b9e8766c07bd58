#include "rydgiant/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace rydgiant {

// ------------------------------------------------------------------ config

void IntegratorConfig::validate() const {
    std::ostringstream os;
    if (!(t_end > 0.0) || !std::isfinite(t_end)) os << "t_end must be > 0; ";
    if (mode == StepMode::fixed && !(dt > 0.0)) os << "dt must be > 0; ";
    if (mode == StepMode::adaptive) {
        if (!(rel_tol > 0.0)) os << "rel_tol must be > 0; ";
        if (!(abs_tol > 0.0)) os << "abs_tol must be > 0; ";
        if (!(max_dt >= 0.0)) os << "max_dt must be >= 0; ";
    }
    if (max_steps == 0) os << "max_steps must be > 0; ";
    if (!sample_times.empty()) {
        for (std::size_t i = 0; i < sample_times.size(); ++i) {
            const double s = sample_times[i];
            if (!(s >= 0.0 && s <= t_end)) {
                os << "sample time " << s << " outside [0, t_end]; ";
                break;
            }
            if (i > 0 && !(s > sample_times[i - 1])) {
                os << "sample times must be strictly increasing; ";
                break;
            }
        }
    } else if (sample_count < 2) {
        os << "sample_count must be >= 2; ";
    }
    const auto msg = os.str();
    if (!msg.empty()) throw std::invalid_argument("IntegratorConfig: " + msg);
}

std::vector<double> IntegratorConfig::resolved_sample_times() const {
    if (!sample_times.empty()) return sample_times;
    std::vector<double> s(sample_count);
    const double n = static_cast<double>(sample_count - 1);
    for (std::size_t i = 0; i < sample_count; ++i) s[i] = t_end * static_cast<double>(i) / n;
    s.back() = t_end;
    return s;
}

// -------------------------------------------------------------- TimeSeries

bool TimeSeries::has(const std::string& name) const {
    return std::find(names.begin(), names.end(), name) != names.end();
}

const std::vector<double>& TimeSeries::column(const std::string& name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("TimeSeries: unknown observable '" + name + "'");
    return columns[static_cast<std::size_t>(it - names.begin())];
}

double TimeSeries::max_trace_error() const {
    double m = 0.0;
    for (const auto& d : diagnostics) m = std::max(m, d.trace_error);
    return m;
}

double TimeSeries::max_hermiticity_error() const {
    double m = 0.0;
    for (const auto& d : diagnostics) m = std::max(m, d.hermiticity_error);
    return m;
}

double TimeSeries::min_eigenvalue() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& d : diagnostics) m = std::min(m, d.min_eigenvalue);
    return m;
}

// -------------------------------------------------------------- internals

namespace {

constexpr double kMinStep = 1e-12;
constexpr double kBreach = -1e-6;
constexpr double kDegraded = 1e-7;

ComplexMatrix random_matrix(Eigen::Index dim, std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j)
        for (Eigen::Index i = 0; i < dim; ++i) m(i, j) = Complex(n(rng), n(rng));
    return m;
}

class Recorder {
public:
    Recorder(TimeSeries& ts, const std::vector<Observer>& obs, bool retain)
        : ts_(ts), obs_(obs), retain_(retain) {
        for (const auto& o : obs_) ts_.names.push_back(o.name);
        ts_.columns.resize(obs_.size());
    }

    void record(double t, const ComplexMatrix& rho, std::size_t steps) {
        SampleDiagnostics d;
        d.trace_error = trace_error(rho);
        d.hermiticity_error = hermiticity_error(rho);
        d.min_eigenvalue = min_eigenvalue(rho);
        d.steps = steps;
        if (!(d.min_eigenvalue >= kBreach)) {
            std::ostringstream os;
            os << "physicality breach at t = " << t << " us: smallest eigenvalue "
               << d.min_eigenvalue;
            throw NumericalError(os.str());
        }
        ts_.times.push_back(t);
        for (std::size_t k = 0; k < obs_.size(); ++k) ts_.columns[k].push_back(obs_[k].evaluate(rho));
        ts_.diagnostics.push_back(d);
        if (retain_) ts_.states.push_back(rho);
    }

private:
    TimeSeries& ts_;
    const std::vector<Observer>& obs_;
    bool retain_;
};

void run_fixed(const RhsFunction& f, ComplexMatrix y, const IntegratorConfig& cfg,
               const std::vector<double>& samples, Recorder& rec, TimeSeries& ts) {
    const Eigen::Index n = y.rows();
    ComplexMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), tmp(n, n);
    double t = 0.0;
    std::size_t steps = 0;
    std::size_t next = 0;
    while (next < samples.size() && samples[next] <= 0.0) rec.record(samples[next++], y, 0);
    while (next < samples.size()) {
        const double target = samples[next];
        double h = cfg.dt;
        bool land = false;
        if (t + h >= target - 1e-9 * cfg.dt) {
            h = target - t;
            land = true;
        }
        if (++steps > cfg.max_steps) throw NumericalError("integrate: max_steps exceeded");
        f(y, k1);
        tmp = y + (0.5 * h) * k1;
        f(tmp, k2);
        tmp = y + (0.5 * h) * k2;
        f(tmp, k3);
        tmp = y + h * k3;
        f(tmp, k4);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        ts.rhs_evaluations += 4;
        t = land ? target : t + h;
        if (land) rec.record(samples[next++], y, steps);
    }
}

// Dormand-Prince 5(4)
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

double scaled_rms(const ComplexMatrix& e, const ComplexMatrix& y0, const ComplexMatrix& y1,
                  double atol, double rtol) {
    double acc = 0.0;
    const Eigen::Index n = e.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex a = y0.data()[i], b = y1.data()[i], d = e.data()[i];
        const double sr = atol + rtol * std::max(std::abs(a.real()), std::abs(b.real()));
        const double si = atol + rtol * std::max(std::abs(a.imag()), std::abs(b.imag()));
        acc += (d.real() / sr) * (d.real() / sr) + (d.imag() / si) * (d.imag() / si);
    }
    return std::sqrt(acc / (2.0 * static_cast<double>(n)));
}

// Error-control norm: the largest scaled component, so a defect confined to a
// few matrix elements is not diluted by the untouched ones.
double scaled_max(const ComplexMatrix& e, const ComplexMatrix& y0, const ComplexMatrix& y1,
                  double atol, double rtol) {
    double m = 0.0;
    const Eigen::Index n = e.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        const Complex a = y0.data()[i], b = y1.data()[i], d = e.data()[i];
        const double sr = atol + rtol * std::max(std::abs(a.real()), std::abs(b.real()));
        const double si = atol + rtol * std::max(std::abs(a.imag()), std::abs(b.imag()));
        m = std::max({m, std::abs(d.real()) / sr, std::abs(d.imag()) / si});
    }
    return m;
}

double initial_step(const RhsFunction& f, const ComplexMatrix& y0, const ComplexMatrix& f0,
                    const IntegratorConfig& cfg, TimeSeries& ts) {
    const double d0 = scaled_rms(y0, y0, y0, cfg.abs_tol, cfg.rel_tol);
    const double d1 = scaled_rms(f0, y0, y0, cfg.abs_tol, cfg.rel_tol);
    const double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    const ComplexMatrix y1 = y0 + h0 * f0;
    ComplexMatrix f1(y0.rows(), y0.cols());
    f(y1, f1);
    ++ts.rhs_evaluations;
    const double d2 = scaled_rms(f1 - f0, y0, y0, cfg.abs_tol, cfg.rel_tol) / h0;
    const double dm = std::max(d1, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, 1e-3 * h0) : std::pow(0.01 / dm, 1.0 / 5.0);
    return std::min(100.0 * h0, h1);
}

void run_adaptive(const RhsFunction& f, ComplexMatrix y, const IntegratorConfig& cfg,
                  const std::vector<double>& samples, Recorder& rec, TimeSeries& ts) {
    const Eigen::Index n = y.rows();
    ComplexMatrix k1(n, n), k2(n, n), k3(n, n), k4(n, n), k5(n, n), k6(n, n), k7(n, n);
    ComplexMatrix tmp(n, n), y1(n, n), err(n, n), dense(n, n);
    double t = 0.0;
    std::size_t steps = 0;
    std::size_t next = 0;
    while (next < samples.size() && samples[next] <= 0.0) rec.record(samples[next++], y, 0);
    if (next == samples.size()) return;

    f(y, k1);
    ++ts.rhs_evaluations;
    double h = initial_step(f, y, k1, cfg, ts);
    if (cfg.max_dt > 0.0) h = std::min(h, cfg.max_dt);
    bool rejected_last = false;

    while (next < samples.size()) {
        bool last = false;
        if (t + h >= cfg.t_end) {
            h = cfg.t_end - t;
            last = true;
        }
        // A step that would pass a sample is shortened to end on it. With dense
        // output only a step passing exactly one sample is shortened; several
        // samples inside one step are served by the interpolant.
        const double s = samples[next];
        const double h_proposed = h;
        bool land = false;
        if (t + h > s &&
            (!cfg.dense_output || next + 1 == samples.size() || samples[next + 1] > t + h)) {
            h = s - t;
            land = true;
        }
        if (h < kMinStep) {
            std::ostringstream os;
            os << "integrate: step size underflow (h = " << h << " us) at t = " << t << " us";
            throw NumericalError(os.str());
        }
        if (steps + ts.rejected_steps >= cfg.max_steps) {
            std::ostringstream os;
            os << "integrate: max_steps (" << cfg.max_steps << ") exceeded at t = " << t << " us";
            throw NumericalError(os.str());
        }
        tmp = y + (h * a21) * k1;
        f(tmp, k2);
        tmp = y + h * (a31 * k1 + a32 * k2);
        f(tmp, k3);
        tmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(tmp, k4);
        tmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(tmp, k5);
        tmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(tmp, k6);
        y1 = y + h * (a71 * k1 + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        f(y1, k7);
        ts.rhs_evaluations += 6;
        err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        const double en = scaled_max(err, y, y1, cfg.abs_tol, cfg.rel_tol);
        if (!std::isfinite(en)) {
            std::ostringstream os;
            os << "integrate: non-finite error estimate at t = " << t << " us";
            throw NumericalError(os.str());
        }

        if (en <= 1.0) {
            ++steps;
            const double t1 = land ? s : last ? cfg.t_end : t + h;
            while (next < samples.size() && samples[next] <= t1) {
                const double s = samples[next];
                if (s == t1) {
                    rec.record(s, y1, steps);
                } else {
                    const double th = (s - t) / h;
                    const double th2 = th * th, th3 = th2 * th;
                    const double h00 = 2 * th3 - 3 * th2 + 1, h10 = th3 - 2 * th2 + th;
                    const double h01 = -2 * th3 + 3 * th2, h11 = th3 - th2;
                    dense = h00 * y + (h10 * h) * k1 + h01 * y1 + (h11 * h) * k7;
                    rec.record(s, dense, steps);
                }
                ++next;
            }
            t = t1;
            y.swap(y1);
            k1.swap(k7);
            double fac = en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
            if (rejected_last) fac = std::min(fac, 1.0);
            rejected_last = false;
            h = land ? std::max(h * fac, std::min(h_proposed, h * 5.0)) : h * fac;
        } else {
            ++ts.rejected_steps;
            rejected_last = true;
            h *= std::max(0.2, 0.9 * std::pow(en, -0.2));
        }
        if (cfg.max_dt > 0.0) h = std::min(h, cfg.max_dt);
    }
}

}  // namespace

double linearity_defect(const RhsFunction& rhs, Eigen::Index dim, unsigned seed) {
    std::mt19937_64 rng(seed);
    const ComplexMatrix r1 = random_matrix(dim, rng);
    const ComplexMatrix r2 = random_matrix(dim, rng);
    const Complex a(0.7, -0.3), b(-1.1, 0.4);
    ComplexMatrix f1(dim, dim), f2(dim, dim), f12(dim, dim);
    rhs(r1, f1);
    rhs(r2, f2);
    rhs(a * r1 + b * r2, f12);
    const ComplexMatrix expect = a * f1 + b * f2;
    const double scale = std::max({1.0, f1.cwiseAbs().maxCoeff(), f2.cwiseAbs().maxCoeff()});
    return (f12 - expect).cwiseAbs().maxCoeff() / scale;
}

TimeSeries integrate(const RhsFunction& rhs, const DensityMatrix& rho0,
                     const IntegratorConfig& config, const std::vector<Observer>& observers) {
    config.validate();
    const auto report = rho0.check();
    if (report.trace_error > 1e-9 || report.hermiticity_error > 1e-12 ||
        report.min_eigenvalue < -1e-9) {
        std::ostringstream os;
        os << "integrate: initial state is not a valid density matrix (trace error "
           << report.trace_error << ", Hermiticity error " << report.hermiticity_error
           << ", smallest eigenvalue " << report.min_eigenvalue << ")";
        throw std::invalid_argument(os.str());
    }
    if (config.check_linearity) {
        const double defect = linearity_defect(rhs, rho0.dim());
        if (defect > 1e-9) {
            std::ostringstream os;
            os << "integrate: right-hand side is not linear (relative defect " << defect << ")";
            throw std::invalid_argument(os.str());
        }
    }
    TimeSeries ts;
    ts.basis = rho0.labels();
    const auto samples = config.resolved_sample_times();
    ts.times.reserve(samples.size());
    Recorder rec(ts, observers, config.retain_states);
    if (config.mode == StepMode::fixed)
        run_fixed(rhs, rho0.matrix(), config, samples, rec, ts);
    else
        run_adaptive(rhs, rho0.matrix(), config, samples, rec, ts);
    ts.degraded = ts.max_trace_error() > kDegraded;
    return ts;
}

TimeSeries integrate(const Lindbladian& generator, const DensityMatrix& rho0,
                     const IntegratorConfig& config, const std::vector<Observer>& observers) {
    if (generator.dim() != rho0.dim())
        throw std::invalid_argument("integrate: generator and state dimensions differ");
    return integrate([&generator](const ComplexMatrix& r, ComplexMatrix& o) { generator.apply(r, o); },
                     rho0, config, observers);
}

ConvergenceOrder convergence_order(const RhsFunction& rhs, const DensityMatrix& rho0, double t_end,
                                   double dt) {
    auto final_state = [&](double step) {
        IntegratorConfig cfg;
        cfg.mode = StepMode::fixed;
        cfg.dt = step;
        cfg.t_end = t_end;
        cfg.sample_times = {t_end};
        cfg.retain_states = true;
        cfg.check_linearity = false;
        return integrate(rhs, rho0, cfg, {}).states.back();
    };
    const ComplexMatrix ref = final_state(dt / 8.0);
    ConvergenceOrder out;
    out.err_coarse = (final_state(dt) - ref).cwiseAbs().maxCoeff();
    out.err_fine = (final_state(dt / 2.0) - ref).cwiseAbs().maxCoeff();
    constexpr double floor = 1e-13;
    if (out.err_coarse < floor || out.err_fine < floor) {
        out.saturated = true;
        out.order = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.order = std::log2(out.err_coarse / out.err_fine);
    return out;
}

}  // namespace rydgiant
