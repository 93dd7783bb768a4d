#pragma once

#include <Eigen/Dense>
#include <vector>

#include "floqamp/sambe.hpp"

namespace floqamp {

struct GreenFunction {
    double omega_bar = 0.0;
    Eigen::MatrixXcd entries;
    double cond1 = 0.0;  // ‖ω̄-H̄‖₁ · ‖G‖₁
};

// Resolvent G(ω̄) = (ω̄ - H̄)^{-1}, computed column-wise with a pivoted
// tridiagonal elimination. Throws SingularSystemError when the 1-norm
// condition estimate exceeds 1e12.
GreenFunction green_function(const SambeMatrix& sambe, double omega_bar);

// Hermitian doubling [[0, ω̄-H̄], [(ω̄-H̄)†, 0]]; chiral under
// S = diag(+1, -1) blocks, eigenvalues come in ± pairs.
Eigen::MatrixXcd doubled_matrix(const SambeMatrix& sambe, double omega_bar);

// Singular value E with input profile u and output profile v:
//   (ω̄-H̄) v = E u,   (ω̄-H̄)† u = E v,   G = Σ_l v_l u_l† / E_l.
struct SingularTriple {
    double value = 0.0;
    Eigen::VectorXcd u;
    Eigen::VectorXcd v;
};

// The `count` smallest triples in ascending order, from the doubled
// Hermitian eigenproblem. Phase convention: the largest-|u| component is
// real positive, and v is rotated so that v†(ω̄-H̄)†u is real nonnegative.
std::vector<SingularTriple> singular_triples(const SambeMatrix& sambe,
                                             double omega_bar, int count);

}  // namespace floqamp
