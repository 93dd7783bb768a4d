#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "floqamp/model.hpp"

namespace floqamp {

// Per-harmonic winding values in {-1, 0, +1}; boundary[i] marks cells on
// a gap closing, where the invariant is undefined.
struct WindingMap {
    double omega_bar = 0.0;
    int n_trunc = 0;
    std::vector<int> values;
    std::vector<std::uint8_t> boundary;
};

// Winding of the doubled-space Bloch vector (Re h, -Im h) around the
// origin as k traverses the synthetic Brillouin zone, accumulated from
// per-step phase increments mapped to (-π, π]. Sign follows the curve
// orientation, sgn(ν) = sgn(sin φ) inside the window. Returns nullopt
// when the symbol touches the origin (gap closing).
std::optional<int> winding_numeric(const ModelParams& p, int n,
                                   double omega_bar, int k_points);

// Closed form at φ = ±π/2: sgn(sin φ) when (ω̄/Ω+n)² < (2η_ω)²β(2-β)
// strictly, 0 when it fails strictly, nullopt on the boundary. Throws
// std::domain_error for any other phase.
std::optional<int> winding_analytic(const ModelParams& p, int n,
                                    double omega_bar);

struct TopoWindow {
    double n_minus;
    double n_plus;
};

// Window endpoints -ω̄/Ω ∓ 2η_ω√(β(2-β)); present only for 0 < β < 2.
std::optional<TopoWindow> topo_window(const ModelParams& p, double omega_bar);

// Per-harmonic winding over n ∈ [-N, N]; analytic path at φ = ±π/2,
// numeric otherwise. Parallelizes over harmonics.
WindingMap winding_map(const ModelParams& p, double omega_bar, int n_trunc,
                       int k_points, int threads = 1);

// Plain serial loop over winding_numeric, kept as the reference
// implementation for tests and benchmarks.
WindingMap winding_map_reference(const ModelParams& p, double omega_bar,
                                 int n_trunc, int k_points);

}  // namespace floqamp
