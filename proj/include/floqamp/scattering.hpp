#pragma once

#include <Eigen/Dense>

#include "floqamp/green.hpp"

namespace floqamp {

// Input-output matrices at the static port:
//   R = 1 - iΩη_γ G,   P = iΩ√(η_P η_γ) G.
// The κ(t)-port matrix (Ω/2 sidebands) is not assembled; that port is in
// vacuum and contributes neither to means nor to the pump-noise flux.
struct ScatteringMatrices {
    double omega_bar = 0.0;
    double omega_mod = 0.0;
    Eigen::MatrixXcd r;
    Eigen::MatrixXcd p;

    int n_trunc() const { return (static_cast<int>(r.rows()) - 1) / 2; }
};

ScatteringMatrices scattering_matrices(const SambeMatrix& sambe,
                                       const ModelParams& params,
                                       double omega_bar);

// Delta-stripped mean output amplitudes α_d R_{·,n_d}(ω̄_d); the √(2π)δ
// bookkeeping factor is dropped symmetrically on input and output.
Eigen::VectorXcd mean_output(const ScatteringMatrices& scat,
                             const DriveSpec& drive);

}  // namespace floqamp
