#pragma once

#include <complex>
#include <numbers>

namespace floqamp {

using cplx = std::complex<double>;

// Dimensionless modulation amplitudes of the driven-dissipative mode.
// omega_mod (Ω) carries the units; every physical rate is eta * Ω.
struct ModelParams {
    double eta_omega = 0.0;  // frequency-modulation amplitude η_ω
    double eta_kappa = 0.0;  // modulated-decay amplitude η_κ
    double eta_gamma = 0.0;  // static-loss amplitude η_γ
    double eta_p = 0.0;      // incoherent-pump amplitude η_P
    double phi = 0.0;        // modulation phase (radians)
    double omega_mod = 2.0 * std::numbers::pi;  // modulation frequency Ω

    double period() const { return 2.0 * std::numbers::pi / omega_mod; }
};

// Coherent tone injected at the static port, ω_d = ω̄_d + n_d Ω.
struct DriveSpec {
    cplx amplitude{0.0, 0.0};  // α_d
    int n_d = 0;
    double omega_bar_d = 0.0;  // reduced frequency in [0, Ω)
};

// Pump-loss imbalance β = (η_P - η_γ)/η_κ. Degenerate for η_κ = 0.
double beta(const ModelParams& p);

// (η_P, η_γ, η_κ) -> s·(η_P, η_γ, η_κ); leaves β unchanged.
ModelParams scaled_dissipation(const ModelParams& p, double s);

// Net-loss condition η_P < η_γ + η_κ (β < 1 when η_κ > 0).
bool is_stable(const ModelParams& p);

struct Validated {
    ModelParams params;
    bool stable;
};

// Sign/positivity checks; annotates the stability flag. Idempotent.
Validated validate(const ModelParams& p);

void validate_drive(const DriveSpec& d, const ModelParams& p);

double drive_frequency(const DriveSpec& d, const ModelParams& p);

}  // namespace floqamp
