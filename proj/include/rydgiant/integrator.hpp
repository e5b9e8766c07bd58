#pragma once

#include "rydgiant/quantum_core.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rydgiant {

enum class StepMode { fixed, adaptive };

struct IntegratorConfig {
    StepMode mode = StepMode::adaptive;
    double dt = 1e-3;         // fixed-mode step (us)
    double rel_tol = 1e-8;    // adaptive mode
    double abs_tol = 1e-10;
    double max_dt = 0.0;      // adaptive step cap, 0 = none
    // Adaptive mode: let one step cover several samples and fill them by cubic
    // Hermite interpolation. Off: every sample is a step endpoint.
    bool dense_output = false;
    double t_end = 1.0;       // us
    std::vector<double> sample_times;  // explicit grid; overrides sample_count
    std::size_t sample_count = 101;    // uniform grid over [0, t_end] including both ends
    std::size_t max_steps = 100'000'000;
    bool retain_states = false;
    bool check_linearity = true;

    void validate() const;  // throws std::invalid_argument listing every problem
    std::vector<double> resolved_sample_times() const;
};

/// In-place right-hand side: out = f(rho). Must be linear in rho.
using RhsFunction = std::function<void(const ComplexMatrix& rho, ComplexMatrix& out)>;

struct Observer {
    std::string name;
    std::function<double(const ComplexMatrix&)> evaluate;
};

struct SampleDiagnostics {
    double trace_error = 0.0;
    double hermiticity_error = 0.0;
    double min_eigenvalue = 0.0;
    std::size_t steps = 0;  // accepted steps up to this sample
};

/// Sampled trajectory. Undefined observable values are stored as NaN.
struct TimeSeries {
    std::vector<double> times;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
    std::vector<ComplexMatrix> states;  // empty unless retained
    std::vector<SampleDiagnostics> diagnostics;
    std::vector<std::string> basis;
    std::size_t rhs_evaluations = 0;
    std::size_t rejected_steps = 0;
    bool degraded = false;  // max trace error above 1e-7

    bool has(const std::string& name) const;
    const std::vector<double>& column(const std::string& name) const;  // throws on unknown name
    std::size_t size() const { return times.size(); }

    double max_trace_error() const;
    double max_hermiticity_error() const;
    double min_eigenvalue() const;
};

/// Relative linear-map mismatch of f on random inputs; > 1e-9 means f is not linear.
double linearity_defect(const RhsFunction& rhs, Eigen::Index dim, unsigned seed = 7);

TimeSeries integrate(const RhsFunction& rhs, const DensityMatrix& rho0,
                     const IntegratorConfig& config, const std::vector<Observer>& observers);
TimeSeries integrate(const Lindbladian& generator, const DensityMatrix& rho0,
                     const IntegratorConfig& config, const std::vector<Observer>& observers);

struct ConvergenceOrder {
    double order = 0.0;
    bool saturated = false;  // errors at the floating-point floor; order meaningless
    double err_coarse = 0.0;
    double err_fine = 0.0;
};

/// Fixed-step RK4 at dt and dt/2 measured against a dt/8 reference at t_end.
ConvergenceOrder convergence_order(const RhsFunction& rhs, const DensityMatrix& rho0, double t_end,
                                   double dt);

}  // namespace rydgiant
