#pragma once

#include <Eigen/Dense>
#include <vector>

#include "floqamp/green.hpp"

namespace floqamp {

struct Trajectory {
    std::vector<double> times;
    std::vector<std::vector<cplx>> modes;  // modes[m][j]; one mode, or (a, b, c*)
};

struct IntegratorOptions {
    double rtol = 1e-9;
    double atol = 1e-12;
    int samples_per_period = 256;
    double max_abs = 1e150;  // divergence cap
};

// Mean-field Langevin equation with a coherent drive at the static port:
//   dα/dt = [-iω₀(t) + (P - γ - κ(t))/2] α - √γ α_d e^{-iω_d t}.
// Adaptive DOPRI5 with dense-output sampling; throws DivergenceError with
// the last valid time on blowup.
Trajectory integrate_one_mode(const ModelParams& p, const DriveSpec& drive,
                              double t_span, const IntegratorOptions& opt = {},
                              cplx alpha0 = {});

// Floquet steady state assembled from one Green's-function column:
//   α_G(t) = -i √γ α_d Σ_n G_{n,n_d}(ω̄_d) e^{-i(ω̄_d + nΩ)t}.
struct ReconstructedSteadyState {
    double omega_bar_d = 0.0;
    double omega_mod = 0.0;
    int n_trunc = 0;
    Eigen::VectorXcd coeffs;

    cplx operator()(double t) const;
};

ReconstructedSteadyState reconstruct_steady_state(const SambeMatrix& sambe,
                                                  const ModelParams& p,
                                                  const DriveSpec& drive);

// Microscopic three-mode model: auxiliary mode b mediates the modulated
// decay κ(t) = 4g_b(t)²/κ_b with g_b(t) = g_b0 cos(Ωt/2), auxiliary mode c
// pumps at P = 4g_c²/κ_c through a parametric coupling.
struct MicroParams {
    ModelParams base;
    double kappa_b = 0.0;
    double kappa_c = 0.0;
    double g_b0 = 0.0;
    double g_c = 0.0;

    // Inverts the adiabatic-elimination formulas for the couplings.
    static MicroParams from_effective(const ModelParams& base, double kappa_b,
                                      double kappa_c);
    bool adiabatic_warning() const;  // κ_aux/Ω < 10
    void check_consistency() const;  // rates must reproduce η_κ, η_P
};

// Coupled mean-field system for (α, α_b, α_c*); the two-mode-squeezing
// term enters through the conjugate amplitude α_c*, which keeps the
// system linear in the state variables.
Trajectory integrate_three_mode(const MicroParams& micro,
                                const DriveSpec& drive, double t_span,
                                const IntegratorOptions& opt = {});

struct PhotonOdeResult {
    std::vector<double> times;
    std::vector<double> values;
    // Least-squares log-slope at integer-period samples over the last half
    // of the valid span; NaN when the trajectory is nonpositive there.
    double growth_rate = 0.0;
    bool stable = false;
    bool diverged = false;  // trajectory capped in the unstable regime
};

// d⟨a†a⟩/dt = Ω[η_κ(β-1) - η_κ cos(Ωt)]⟨a†a⟩ + Ωη_P.
PhotonOdeResult photon_number_ode(const ModelParams& p, double n_init,
                                  double t_span,
                                  const IntegratorOptions& opt = {});

// Transient cutoff 10/((1-β)η_κΩ), clipped to at least 20 periods.
// Requires β < 1.
double transient_time(const ModelParams& p);

// max_t |α(t) - α_G(t)| / max_t |α_G(t)| over samples with t ≥ t_start.
double steady_state_discrepancy(const Trajectory& traj,
                                const ReconstructedSteadyState& rec,
                                double t_start);

// max_t |a_mode(t) - b_mode(t)| / max_t |b_mode(t)|; same sampling required.
double trajectory_discrepancy(const Trajectory& a, const Trajectory& b,
                              int mode, double t_start);

}  // namespace floqamp
