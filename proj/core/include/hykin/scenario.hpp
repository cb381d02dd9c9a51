#pragma once

#include <cmath>
#include <iosfwd>
#include <string>

#include "hykin/obstacle.hpp"

namespace hykin {

enum class InitKind { sod, uniform_flow, bimodal_wave };

enum class EpsilonProfile { uniform, atan_well };

/// Interpretation of |laplacian(u)|^2 inside the second-order breakdown
/// indicator: sum of squared component Laplacians (default) or the square of
/// their signed sum.
enum class LaplacianNorm { squared_sum, signed_sum };

/// Full description of a run. Presets 1..5 reproduce the published test
/// cases; every field can be overridden from a key = value config file.
struct ScenarioConfig {
    int scenario = 0; // 1..5, 0 = custom

    // Spatial grid.
    int nx = 100;
    int ny = 16;
    double lx = 1.0;
    double ly = 0.0; // <= 0: choose ly so that dy == dx
    double origin_x = 0.0;
    double origin_y = 0.0;

    // Velocity grid (cube [-vmax, vmax]^3, nv nodes per axis).
    int nv = 32;
    double vmax = 8.0;

    // Spectral collision kernel.
    double spectral_r = 3.3; // support radius, physical velocity units
    int a1 = 4;              // polar quadrature size
    int a2 = 4;              // azimuthal quadrature size

    // Knudsen number.
    double epsilon = 1e-6;
    EpsilonProfile eps_profile = EpsilonProfile::uniform;

    // Regime-switch thresholds.
    double eta0 = 1e-5;
    double eta1 = 3.5e-10;
    double delta0 = 1e-3;

    // Physics parameters.
    double heat_ratio = 5.0 / 3.0; // specific heat ratio of the Euler layer
    double esbgk_beta = -0.5;      // Prandtl correction (-1/2 -> Pr = 2/3)
    double mu0 = 1.0;              // viscosity prefactor, mu = mu0 sqrt(T)
    double kappa0 = 1.0;           // conductivity prefactor, kappa = kappa0 sqrt(T)
    double nu_coeff = M_PI / 2.0;  // ES-BGK collision frequency nu = nu_coeff * rho
    double penalty_coeff = 2.0 * M_PI; // Boltzmann penalization rate = penalty_coeff * rho
    LaplacianNorm lap_norm = LaplacianNorm::squared_sum;

    // Time loop.
    double t_end = 0.16;
    int snapshot_every = 0; // steps between snapshots; 0 = final state only
    int workers = 0;        // 0 = hardware concurrency
    std::string out_dir = "out";

    // Initial condition.
    InitKind init = InitKind::sod;
    double init_rho = 1.0;
    double init_pressure = 1.0;
    double init_ux = 0.0;
    double init_uy = 0.0;
    int regime_init = 0; // initial layer for non-forced cells (0 or 1)

    ObstacleSpec obstacle;

    // Reference-run controls.
    bool force_layer = false; // freeze the regime map to forced_layer
    int forced_layer = 0;
    int kinetic_sample_steps = 2; // steps timed for the all-Boltzmann estimate

    /// Local Knudsen number at physical coordinate x.
    double epsilon_at(double x) const {
        if (eps_profile == EpsilonProfile::atan_well)
            return epsilon + 0.5 * (std::atan(1.0 + 30.0 * x) + std::atan(1.0 - 30.0 * x));
        return epsilon;
    }

    /// Throws config_error when sizes, thresholds or geometry are unusable.
    void validate() const;
};

/// Published parameter presets for tests 1..5.
ScenarioConfig scenario_preset(int scenario);

/// Reads `key = value` lines (# comments) and overrides fields of `cfg`.
void apply_config_file(ScenarioConfig& cfg, const std::string& path);
void apply_config_stream(ScenarioConfig& cfg, std::istream& in, const std::string& origin);

/// Writes the full configuration in the same key = value format.
void write_config(const ScenarioConfig& cfg, std::ostream& out);

} // namespace hykin
