#pragma once

#include "fusionring/affine_data.hpp"
#include "fusionring/lattice.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace fusionring {

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

struct DominantFold {
    Weight dominant;
    int parity = 1;        // (-1)^{ℓ(w)} of the folding word
    bool on_wall = false;  // dominant weight has a nontrivial stabilizer
};

/// Finite root system of g̊ with the invariant form inherited from the affine
/// algebra. Conventions:
///   cartan()[i][j] = <α_j, α̌_i>, so the simple root α_j in ω-coordinates is
///   column j; the form is (α_i|α_j) = d_i·Å_ij with d_i = (α_i|α_i)/2 = ǎ_i/a_i.
/// Indices are 0-based.
class RootSystem {
public:
    /// Builds g̊ of an affine type, form factors taken from its marks/comarks.
    static RootSystem build(const AffineData& d);
    /// Builds a finite root system with explicit form factors d_i.
    static RootSystem build(const FiniteType& f, std::vector<Rational> form_factors);

    int rank() const { return rank_; }
    const FiniteType& finite_type() const { return type_; }
    const IntMatrix& cartan() const { return cartan_; }
    const Rational& form_factor(int i) const { return form_factors_[i]; }
    /// (ω_i|ω_j)
    const RationalMatrix& weight_gram() const { return gram_; }

    Rational form(const Weight& x, const Weight& y) const;
    /// Integer (x|y)·form_denominator(), exact.
    std::int64_t scaled_form(const Weight& x, const Weight& y) const;
    std::int64_t form_denominator() const { return gram_den_; }

    Weight simple_root(int i) const;
    /// Positive roots in ω-coordinates, sorted by height then coordinates.
    const std::vector<Weight>& positive_roots() const { return roots_; }
    /// The same roots in the simple-root basis.
    const std::vector<std::vector<int>>& positive_roots_simple() const { return roots_simple_; }
    /// Coroots α^∨ = 2κ⁻¹(α)/(α|α) of positive_roots(), simple-coroot basis.
    const std::vector<CorootVector>& positive_coroots() const { return coroots_; }

    const Weight& highest_root() const { return theta_; }
    const Weight& highest_short_root() const { return theta_short_; }
    /// θ in the simple-root basis.
    const std::vector<int>& highest_root_simple() const { return theta_simple_; }
    /// Highest root of the coroot system Φ̌ (the coroot of the highest short root).
    const CorootVector& highest_coroot() const { return highest_coroot_; }
    /// Highest short element of Φ̌ (the coroot of θ).
    const CorootVector& highest_short_coroot() const { return highest_short_coroot_; }

    Weight rho() const { return Weight::ones(rank_); }
    Coweight rho_check() const { return Coweight::ones(rank_); }
    long long weyl_order() const { return weyl_order_; }

    /// s_i(λ) = λ − <λ,α̌_i> α_i. Throws std::out_of_range for a bad index.
    Weight reflect(const Weight& w, int i) const;
    /// s_i(μ̌) = μ̌ − <α_i,μ̌> α̌_i on coweights.
    Coweight reflect(const Coweight& w, int i) const;
    DominantFold fold_dominant(Weight w) const;
    /// λ* = −w₀λ; requires dominant λ.
    Weight dual(const Weight& w) const;
    /// Weyl dimension formula; any dominant λ.
    std::int64_t weyl_dimension(const Weight& w) const;

private:
    FiniteType type_;
    int rank_ = 0;
    IntMatrix cartan_;
    std::vector<Rational> form_factors_;
    RationalMatrix gram_;
    std::vector<std::vector<std::int64_t>> gram_scaled_;
    std::int64_t gram_den_ = 1;
    std::vector<Weight> roots_;
    std::vector<std::vector<int>> roots_simple_;
    std::vector<CorootVector> coroots_;
    Weight theta_, theta_short_;
    std::vector<int> theta_simple_;
    CorootVector highest_coroot_, highest_short_coroot_;
    long long weyl_order_ = 1;
};

inline RootSystem build_root_system(const AffineData& d) { return RootSystem::build(d); }

/// Rational matrix inverse by exact Gauss–Jordan; throws InternalError if singular.
RationalMatrix inverse(const RationalMatrix& m);
/// Exact determinant (fraction-free Bareiss).
std::int64_t determinant(const IntMatrix& m);

/// Multiplicities of every weight of the irreducible module V̊_λ (Freudenthal).
std::map<Weight, std::int64_t> freudenthal_weight_multiplicities(const RootSystem& rs, const Weight& highest);

/// Dominant weights of V̊_λ with multiplicities.
std::map<Weight, std::int64_t> dominant_weight_multiplicities(const RootSystem& rs, const Weight& highest);

/// V̊_λ ⊗ V̊_μ = ⊕ mult(ν) V̊_ν via Racah–Speiser.
std::map<Weight, std::int64_t> tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu);

}  // namespace fusionring
