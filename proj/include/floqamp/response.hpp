#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "floqamp/scattering.hpp"

namespace floqamp {

// Coherent output photon flux S_out(t) = |α_d Σ_n e^{-inΩt} R_{n,n_d}(ω̄_d)|².
double signal_out(const ScatteringMatrices& scat, const DriveSpec& drive,
                  double t);

// ω̄-integrated pump-noise kernel K_{nm} = Σ_l ∫₀^Ω dω̄ P*_{nl} P_{ml};
// the cyclostationary noise flux is N_out(t) = (1/2π) Σ_{nm} e^{i(n-m)Ωt} K_{nm}.
struct NoiseKernel {
    double omega_mod = 0.0;
    int n_trunc = 0;
    Eigen::MatrixXcd k;
    double refinement = 0.0;  // relative disagreement between Q and Q/2 nodes
    int quad_points = 0;
};

// Composite midpoint rule on [0, Ω), one Green solve per node. The kernel
// is also evaluated at half the nodes; disagreement above 1% throws
// QuadratureError. Node contributions are summed in node order, so the
// result is bitwise independent of the thread count.
NoiseKernel build_noise_kernel(const ModelParams& p, int n_trunc,
                               int quad_points, int threads = 1);

// Straightforward serial accumulation, reference for tests/benchmarks.
NoiseKernel build_noise_kernel_reference(const ModelParams& p, int n_trunc,
                                         int quad_points);

double noise_at(const NoiseKernel& kernel, double t);

// One-call form: builds the kernel and evaluates at t.
double noise_out(const ModelParams& p, int n_trunc, int quad_points, double t);

struct SnrResult {
    double beta = 0.0;
    double snr_max = 0.0;  // +inf marker when the noise flux vanishes
    double t_star = 0.0;
    std::vector<double> signal_series;
    std::vector<double> noise_series;
};

struct SnrOptions {
    double omega_bar_d = 0.0;
    std::optional<int> n_d{};  // default: -round(n0(β)), 0 outside the window
    cplx alpha_d{1.0, 0.0};
    int quad_points = 128;
    int samples_per_period = 256;
    int n_trunc = 0;  // 0 = default_n_trunc
};

struct SnrPoint {
    double eta_p = 0.0;
    bool stable = false;
    DriveSpec drive;
    SnrResult snr;
};

SnrPoint snr_point(const ModelParams& p, const SnrOptions& opt,
                   int threads = 1);

// β(η_P) sweep at the per-point optimal-conversion drive. Points are
// independent and fill preallocated slots.
std::vector<SnrPoint> snr_sweep(const ModelParams& base,
                                const std::vector<double>& eta_p_values,
                                const SnrOptions& opt, int threads = 1);

std::vector<SnrPoint> snr_sweep_reference(const ModelParams& base,
                                          const std::vector<double>& eta_p_values,
                                          const SnrOptions& opt);

}  // namespace floqamp
