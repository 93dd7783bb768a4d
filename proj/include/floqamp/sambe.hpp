#pragma once

#include <Eigen/Dense>

#include "floqamp/model.hpp"

namespace floqamp {

// Truncated dynamical matrix in harmonic space, n ∈ [-N, N], with hard-cut
// (open) boundaries. Index mapping: row/column i = n + N.
//
// H(n,n)   = Ω [ -n + i(η_P - η_γ - η_κ)/2 ]
// H(n,n+1) = Ω ( η_ω e^{+iφ} - i η_κ/4 )
// H(n,n-1) = Ω ( η_ω e^{-iφ} - i η_κ/4 )
struct SambeMatrix {
    int n_trunc = 0;
    double omega_mod = 0.0;
    Eigen::MatrixXcd entries;

    int dim() const { return 2 * n_trunc + 1; }
    int index_of(int n) const { return n + n_trunc; }
    int harmonic_of(int i) const { return i - n_trunc; }
};

SambeMatrix build_sambe(const ModelParams& p, int n_trunc);

struct TimeSignals {
    double omega0;  // 2 η_ω Ω cos(Ωt + φ)
    double kappa;   // 2 η_κ Ω cos²(Ωt/2)
};

TimeSignals time_signals(const ModelParams& p, double t);

// Frozen-n Bloch symbol h(k; n, ω̄) = ω̄ - Ω[2η_ω cos(k+φ) - i(η_κ/2)cos k
// + i(η_P-η_γ-η_κ)/2 - n]; its zeros mark band touchings.
cplx bloch_symbol(const ModelParams& p, int n, double omega_bar, double k);

// n-independent part; bloch_symbol(n) = symbol_base + Ω n exactly.
cplx symbol_base(const ModelParams& p, double omega_bar, double k);

// Truncation rule N ≥ ceil(n0 + 6σ_r) so soliton tails fit with negligible
// weight, never below 2·ceil(2η_ω) + 10.
int default_n_trunc(const ModelParams& p);

}  // namespace floqamp
