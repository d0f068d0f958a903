#pragma once

#include "fusionring/characters.hpp"
#include "fusionring/errors.hpp"

#include <Eigen/Dense>

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace fusionring {

/// A fusion sum whose distance to the nearest integer exceeds the tolerance.
class IntegralityViolation : public NumericalFailure {
public:
    IntegralityViolation(std::array<std::size_t, 3> triple, Complex raw, std::string what);
    const std::array<std::size_t, 3>& triple() const { return triple_; }
    Complex raw() const { return raw_; }

private:
    std::array<std::size_t, 3> triple_;
    Complex raw_;
};

enum class Backend { Serial, Parallel };

/// Either a wall (contributes 0) or a signed weight of P_k.
struct FoldResult {
    bool wall = true;
    std::size_t index = 0;
    Weight nu;
    int sign = 0;

    static FoldResult on_wall() { return {}; }
    bool operator==(const FoldResult&) const = default;
};

/// Character data of R_k(A): J_λ and χ_λ on Σ_k for λ ∈ P_k, and Δ.
class FusionRing {
public:
    explicit FusionRing(LevelData ld, Tolerances tol = {}, Backend backend = Backend::Parallel);

    const LevelData& level() const { return ld_; }
    const Tolerances& tolerances() const { return tol_; }
    Backend backend() const { return backend_; }
    std::size_t size() const { return ld_.size(); }

    /// J_λ(t), rows P_k, columns Σ_k.
    const Eigen::MatrixXcd& numerators() const { return numerators_; }
    /// χ_λ(t), rows P_k, columns Σ_k.
    const Eigen::MatrixXcd& characters() const { return chars_; }
    const std::vector<double>& delta() const { return delta_; }

    /// Position of λ in P_k; throws InvalidInput if λ ∉ P_k.
    std::size_t require_index(const Weight& w) const;

    /// Memoized projection fold of a classical constituent.
    FoldResult cached_fold(const Weight& xi) const;

private:
    LevelData ld_;
    Tolerances tol_;
    Backend backend_;
    Eigen::MatrixXcd numerators_;
    Eigen::MatrixXcd chars_;
    std::vector<double> delta_;
    mutable std::mutex fold_mutex_;
    mutable std::map<Weight, FoldResult> fold_cache_;
};

struct FusionTable {
    AffineType type;
    int level = 0;
    std::vector<Weight> weights;
    std::vector<std::size_t> dual;        // λ ↦ λ*
    std::vector<std::int64_t> coeffs;     // coeffs[(λ·P + μ)·P + ν] = c_{λμ}^ν
    double max_residual = 0;

    std::size_t size() const { return weights.size(); }
    std::int64_t operator()(std::size_t l, std::size_t m, std::size_t n) const {
        return coeffs[(l * size() + m) * size() + n];
    }
    /// N_{λμν} = c_{λμ}^{ν*}
    std::int64_t symmetric(std::size_t l, std::size_t m, std::size_t n) const { return (*this)(l, m, dual[n]); }
    bool operator==(const FusionTable&) const = default;
};

/// Raw value (1/|T_k|) Σ_t χ_λ χ_μ conj(χ_ν) Δ.
Complex fusion_raw(const FusionRing& ring, std::size_t l, std::size_t m, std::size_t n);
/// Rounded fusion coefficient; throws IntegralityViolation.
std::int64_t fusion_coefficient(const FusionRing& ring, const Weight& l, const Weight& m, const Weight& n);

/// All |P_k|³ coefficients. Throws IntegralityViolation on the first bad cell.
FusionTable fusion_table(const FusionRing& ring);

/// Descriptions of failed ring axioms (unit, commutativity, S_3 symmetry,
/// associativity). Empty when the table is a commutative unital ring.
std::vector<std::string> ring_axiom_failures(const FusionTable& table);
/// Triples with negative coefficients.
std::vector<std::array<std::size_t, 3>> negative_entries(const FusionTable& table);

/// Folding by projection onto {J_ν}: p_ν = |T_k|⁻¹ Σ_t J_ξ(t) conj(J_ν(t)).
/// Throws NumericalFailure if the projections are not a signed unit vector or zero.
FoldResult alcove_fold(const FusionRing& ring, const Weight& xi);
/// Folding by exact reflections: simple reflections and the affine wall
/// <x,θ̌> = k+ȟ of W̊ ⋉ (k+ȟ)M acting on ξ+ρ.
FoldResult alcove_fold_exact(const LevelData& ld, const Weight& xi);

/// Kac–Walton value for one triple.
std::int64_t kac_walton(const FusionRing& ring, const Weight& l, const Weight& m, const Weight& n);
/// χ_λ·χ_μ expanded over P_k by folding the classical constituents of V_λ⊗V_μ.
std::vector<std::int64_t> kac_walton_product(const FusionRing& ring, std::size_t l, std::size_t m);
/// Same, using alcove_fold_exact.
std::vector<std::int64_t> kac_walton_product_exact(const FusionRing& ring, std::size_t l, std::size_t m);

struct VerlindeResult {
    Complex raw;
    std::int64_t value = 0;
    double residual = 0;  // distance from raw to the integer value
    bool integral = false;
};

/// |T_k|^{g−1} Σ_{t∈Σ_k} Π_i χ_{λ_i}(t) Δ(t)^{1−g}.
VerlindeResult verlinde_trace(const FusionRing& ring, int genus, const std::vector<Weight>& weights);

struct Stabilization {
    bool applies = false;
    std::int64_t classical = 0;
    std::int64_t fusion = 0;
};

/// Compares c_{λμ}^ν with the classical multiplicity; applies iff <λ+μ+ν,θ̌> ≤ 2k.
Stabilization stabilization_check(const FusionRing& ring, const Weight& l, const Weight& m, const Weight& n);

struct IsoReport {
    bool equal = false;
    std::string diff;  // first difference, empty when equal
    FusionTable twisted;
    FusionTable untwisted;
};

/// Compares R_{2k+1}(A_{2n}^(2)) with R_k(C_n^(1)): weight lists, Σ phases, coefficient arrays.
IsoReport twisted_iso_check(int n, int k, const Limits& limits = {}, const Tolerances& tol = {});

}  // namespace fusionring
