#pragma once

// Hot loops of the fusion computation. Each kernel has a serial reference and
// an OpenMP version that performs the same arithmetic per output cell, so the
// two agree bit for bit.

#include "fusionring/characters.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace fusionring::kernels {

/// Per-weight Weyl orbits of λ+ρ, shared by both kernel flavours.
std::vector<WeylOrbit> shifted_orbits(const LevelData& ld, const std::vector<Weight>& weights);

/// Raw fusion sums s[(λ·P+μ)·P+ν] = |T_k|⁻¹ Σ_t χ_λ(t) χ_μ(t) conj(χ_ν(t)) Δ(t), rounded
/// to integers by the caller. `chars` is |P_k| × |Σ_k|.
struct FusionInput {
    const Eigen::MatrixXcd& chars;
    const std::vector<double>& delta;
    std::int64_t norm_const;
};

namespace serial {
/// J_ξ(t) for every ξ in `weights` (rows) and t ∈ Σ_k (columns).
Eigen::MatrixXcd weyl_numerator_matrix(const LevelData& ld, const std::vector<Weight>& weights);
std::vector<Complex> fusion_sums(const FusionInput& in);
}  // namespace serial

namespace parallel {
Eigen::MatrixXcd weyl_numerator_matrix(const LevelData& ld, const std::vector<Weight>& weights);
std::vector<Complex> fusion_sums(const FusionInput& in);
}  // namespace parallel

/// Sets the OpenMP team size (no-op without OpenMP). 0 keeps the runtime default.
void set_threads(int n);
int max_threads();

}  // namespace fusionring::kernels
