#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace invsq {

enum class ExperimentKind { Solve, Traces, Hardy, Carleman, Hum, Sweep };

std::string to_string(ExperimentKind k);
ExperimentKind experiment_kind_from_string(const std::string& s);

/// Named coefficient presets: "zero", "drift" (constant first-order of the
/// given value), "hardy_potential" (value / y), or "tabulated".
struct CoefficientSpec {
    std::string preset = "zero";
    double value = 0.0;
    std::vector<double> values;
};

/// Named field profiles: "zero", "sin_modes" (sum of c_j sin(j pi x / L)),
/// "gaussian" (center/width bump, zeroed at the boundary), or "tabulated".
struct ProfileSpec {
    std::string profile = "zero";
    std::vector<double> coefficients{1.0};
    double center = 0.5;
    double width = 0.1;
    bool normalize = false;  // scale to unit discrete H^{-1} norm
    std::vector<double> values;
};

struct GridSpecConfig {
    std::size_t n = 200;
    double L = 1.0;
    double blend_width = 0.2;
};

struct TimeSpecConfig {
    double T = 1.0;
    std::size_t m_steps = 400;
    double theta = 1.0;
};

struct SolveConfig {
    std::string problem = "adjoint";  // or "controlled"
    ProfileSpec data;                 // final datum (adjoint) or initial state
    std::string pulse_side = "left";
    double pulse_amplitude = 0.0;     // controlled: boundary pulse height
    double pulse_begin = 0.2;         // fractions of T
    double pulse_end = 0.5;
    bool write_trajectory = false;
};

struct TracesConfig {
    std::size_t stencil_depth = 3;
    ProfileSpec final_datum;
    std::string side = "left";
};

struct HardyConfig {
    double coefficient = 0.25;
};

struct CarlemanConfig {
    double p_margin = 0.1;
    double z = 0.0;                 // 0 = auto selection
    std::vector<double> lambdas;    // empty = {2,4,8} * bisected lambda0
    double ball_radius = 0.0;       // 0 = auto
    std::size_t delta_cells = 4;
    double quantile = 0.999;
    std::string x0_side = "left";
    double bump_center = 0.0;       // fractions of the ball radius
    double bump_radius = 0.9;
};

struct HumConfig {
    double epsilon = 0.1;
    bool epsilon_relative = true;  // epsilon given as a fraction of ||v_T||_{H^-1}
    std::string side = "left";
    double window_begin = 0.0;  // fractions of T
    double window_end = 1.0;
    ProfileSpec target;
    ProfileSpec initial;
    std::size_t max_iter = 5000;
    double tolerance = 1e-6;
    std::vector<double> epsilon_list;  // sweep rows (descending)
};

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::Solve;
    double sigma = 0.0;
    std::uint64_t seed = 1;
    GridSpecConfig grid;
    TimeSpecConfig time;
    CoefficientSpec drift;
    CoefficientSpec potential;
    SolveConfig solve;
    TracesConfig traces;
    HardyConfig hardy;
    CarlemanConfig carleman;
    HumConfig hum;
    std::string output_dir;  // overridable from the command line
};

/// Parses and validates a JSON experiment config. Unknown keys, duplicate
/// keys, and out-of-range numeric values are rejected with field-level
/// messages (out-of-range sigma cites the admissible interval).
ExperimentConfig parse_config(const std::string& path);

/// Same, from an in-memory JSON document (used by tests).
ExperimentConfig parse_config_text(const std::string& text);

}  // namespace invsq
