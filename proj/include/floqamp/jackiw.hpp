#pragma once

#include <Eigen/Dense>
#include <utility>

#include "floqamp/model.hpp"

namespace floqamp {

// Expansion point of the continuum theory: left sits at (+k0, -n0) and
// lives on the u sublattice, right at (-k0, +n0) on the v sublattice.
enum class SolitonSide { left, right };

// Continuum zero-mode data at the band-touching points.
struct SolitonPrediction {
    SolitonSide side = SolitonSide::left;
    double k0 = 0.0;              // Dirac momentum, |arccos(β-1)|
    double n0 = 0.0;              // Dirac harmonic offset, 2η_ω√(β(2-β))
    double a_velocity = 0.0;      // A(β) = 2η_ω(β-1)
    double b_velocity = 0.0;      // B(β) = (η_κ/2)√(β(2-β))
    double sigma_r_sq = 0.0;      // (A²+B²)/|B|
    double sigma_i_sq = 0.0;      // (A²+B²)/A, signed; ±inf marker at β=1
    double inv_sigma_i_sq = 0.0;  // A/(A²+B²), finite everywhere

    double center() const { return side == SolitonSide::left ? -n0 : n0; }
    double bloch_k() const { return side == SolitonSide::left ? k0 : -k0; }
};

// (k0, n0); requires 0 < β < 2.
std::pair<double, double> dirac_points(const ModelParams& p);

SolitonPrediction soliton_prediction(const ModelParams& p, SolitonSide side);

// Gaussian envelope exp(-(n∓n0)²/(2σ_r²) - i(n∓n0)²/(2σ_i²)) discretized
// on harmonics [n_min, n_max] and renormalized to unit discrete norm.
// include_bloch multiplies by the fast factor e^{i·bloch_k·n}.
Eigen::VectorXcd soliton_profile(const ModelParams& p, SolitonSide side,
                                 int n_min, int n_max, bool include_bloch);

// |⟨a, b⟩|²; invariant under global phases of either argument.
double fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

struct SolitonMatch {
    double fidelity = 0.0;
    bool bloch_included = false;
};

// Fidelity of a numeric singular vector against the analytic profile,
// maximized over inclusion of the Bloch factor.
SolitonMatch soliton_match(const ModelParams& p, SolitonSide side,
                           const Eigen::VectorXcd& numeric, int n_min, int n_max);

}  // namespace floqamp
