#pragma once

#include "fusionring/characters.hpp"
#include "fusionring/fusion.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace fusionring {

/// Linear isomorphism ε from the weight lattice of g̊′ to the coweight lattice
/// of g̊: ε(ω′_i) = ω̌_{sigma[i]}.
struct EpsilonMap {
    AffineType source;
    AffineType target;
    std::vector<int> sigma;

    Coweight apply(const Weight& mu_prime) const;
    bool operator==(const EpsilonMap&) const = default;
};

/// Duality condition: Å′_ij = Å_{σ(j)σ(i)} and ǎ′_{i} = θ_{σ(i)} (nodes ≥ 1), so
/// that ε carries P′_k onto P̌_k.
bool epsilon_is_valid(const AffineType& a, const AffineType& a_prime, const std::vector<int>& sigma);

/// Searches node permutations for the unique one satisfying epsilon_is_valid.
/// Requires a twisted type other than A_{2n}^(2); throws InternalError if none exists.
EpsilonMap epsilon_map(const AffineType& a, const AffineType& a_prime);

struct SMatrix {
    AffineType source;
    AffineType target;
    int level = 0;
    std::vector<Weight> rows;  // P_k(A)
    std::vector<Weight> cols;  // P_k(A′)
    Eigen::MatrixXcd entries;
    double tolerance = 1e-8;

    bool operator==(const SMatrix& o) const {
        return source == o.source && target == o.target && level == o.level && rows == o.rows && cols == o.cols &&
               entries.rows() == o.entries.rows() && entries.cols() == o.entries.cols() && entries == o.entries &&
               tolerance == o.tolerance;
    }
};

/// S_{λ,μ′} = i^{|Φ⁺|} |T_k|^{-1/2} J_λ(t_{μ′}).
SMatrix s_matrix(const AffineType& a, int k, const Limits& limits = {});

/// ‖S S̄ᵗ − I‖_max
double unitarity_residual(const SMatrix& s);

struct TransposeReport {
    bool ok = false;
    double max_deviation = 0;
    std::size_t row = 0;  // first offending entry of Sᵗ, if any
    std::size_t col = 0;
};

/// Builds S (A → A′) and S′ (A′ → A) and compares Sᵗ with S′.
TransposeReport check_transpose(const AffineType& a, int k, double tol = 1e-8, const Limits& limits = {});

/// max |Σ_τ S_λτ S_μτ conj(S_ντ)/S_0τ − c_{λμ}^ν| for a self-adjacent S sharing
/// its row/column weights with the table.
double verlinde_diagonalization_residual(const SMatrix& s, const FusionTable& table);

/// True when A′ = A and Σ_k is built from P_k (untwisted and A_{2n}^(2)).
bool shares_weight_points(const AffineType& a);

}  // namespace fusionring
