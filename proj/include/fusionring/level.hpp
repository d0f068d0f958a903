#pragma once

#include "fusionring/affine_data.hpp"
#include "fusionring/root_system.hpp"
#include "fusionring/weyl_group.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusionring {

/// Exact rational q with 0 <= q < 1, standing for e^{2πiq}.
class RationalPhase {
public:
    RationalPhase() = default;
    explicit RationalPhase(Rational q);
    RationalPhase(std::int64_t num, std::int64_t den) : RationalPhase(Rational(num, den)) {}

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.numerator() == 0; }

    friend RationalPhase operator+(const RationalPhase& a, const RationalPhase& b) {
        return RationalPhase(a.value_ + b.value_);
    }
    friend RationalPhase operator-(const RationalPhase& a) { return RationalPhase(-a.value_); }
    friend RationalPhase operator*(std::int64_t s, const RationalPhase& a) { return RationalPhase(a.value_ * s); }
    bool operator==(const RationalPhase&) const = default;
    bool operator<(const RationalPhase& o) const { return value_ < o.value_; }

    /// "p/q" (or "0").
    std::string str() const;
    static RationalPhase parse(const std::string& text);

private:
    Rational value_{0};
};

struct Limits {
    long long weyl_cap = kDefaultWeylCap;
    long long torus_cap = 1'000'000;
};

/// Point of the torus Hom(P̊, C^×), given by its phase covector:
/// μ(t) = exp(2πi Σ_j μ_j q_j) with q_j = numerators[j] / denominator.
struct TorusPoint {
    std::vector<std::int64_t> numerators;  // reduced into [0, denominator)
    std::int64_t denominator = 1;
    std::vector<int> label;  // source λ ∈ P_k or λ̌ ∈ P̌_k (empty for bare elements of T_k)

    std::vector<RationalPhase> phases() const;
    /// Σ μ_j numerators[j] mod denominator.
    std::int64_t phase_index(const Weight& mu) const;
    /// torus_eval: the exact phase of μ(t).
    RationalPhase eval(const Weight& mu) const;
};

inline RationalPhase torus_eval(const TorusPoint& t, const Weight& mu) { return t.eval(mu); }

/// θ̌ of the level condition: κ⁻¹(θ) for X^(1) and A_{2n}^(2), the highest
/// coroot otherwise. Computed from the root system.
CorootVector theta_check(const AffineData& d, const RootSystem& rs);

/// Basis of M in ω-coordinates: κ(α̌_i) (X^(1), A_{2n}^(2)) or α_i.
std::vector<Weight> lattice_M(const AffineData& d, const RootSystem& rs);

/// {λ dominant : <λ,θ̌> <= k}, lexicographic.
std::vector<Weight> level_weights(const CorootVector& theta_check, int k);

/// {λ̌ dominant : <θ,λ̌> <= k}, lexicographic.
std::vector<Coweight> dual_level_coweights(const RootSystem& rs, int k);

class LevelData {
public:
    static LevelData build(const AffineType& t, int k, const Limits& limits = {});

    const AffineData& affine() const { return affine_; }
    const AffineType& type() const { return affine_.type; }
    const RootSystem& roots() const { return rs_; }
    int level() const { return k_; }
    /// k + ȟ
    int shifted_level() const { return shifted_; }
    const Limits& limits() const { return limits_; }
    const CorootVector& theta_check() const { return theta_check_; }
    const std::vector<Weight>& lattice_basis() const { return m_basis_; }
    std::int64_t lattice_index() const { return m_index_; }

    const std::vector<Weight>& weights() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    std::optional<std::size_t> index_of(const Weight& w) const;
    bool contains(const Weight& w) const { return index_of(w).has_value(); }
    /// Position of λ* in weights().
    std::size_t dual_index(std::size_t i) const { return dual_index_[i]; }

    /// P̌_k; empty unless type_class == Twisted.
    const std::vector<Coweight>& dual_weights() const { return dual_weights_; }
    /// Σ_k, index-aligned with weights() or dual_weights().
    const std::vector<TorusPoint>& sigma() const { return sigma_; }
    /// |P̊/(k+ȟ)M| = |T_k|
    std::int64_t norm_const() const { return norm_const_; }

    /// Non-regular iff α(t) = 1 for some root.
    bool is_regular(const TorusPoint& t) const;
    /// Σ_k point for a weight (weight-type classes) or coweight (twisted).
    TorusPoint point_for_weight(const Weight& lambda) const;
    TorusPoint point_for_coweight(const Coweight& lambda) const;

private:
    AffineData affine_;
    RootSystem rs_;
    int k_ = 0;
    int shifted_ = 0;
    Limits limits_;
    CorootVector theta_check_;
    std::vector<Weight> m_basis_;
    std::int64_t m_index_ = 1;
    std::vector<Weight> weights_;
    std::vector<std::size_t> dual_index_;
    std::vector<Coweight> dual_weights_;
    std::vector<TorusPoint> sigma_;
    std::int64_t norm_const_ = 1;
};

/// Every element of T_k (|T_k| = norm_const). Throws CapExceeded above limits.torus_cap.
std::vector<TorusPoint> enumerate_T_k(const LevelData& ld);

/// t' with μ(t') = (wμ)(t), i.e. w⁻¹·t, for w given by its matrix on ω-coordinates.
TorusPoint act(const IntMatrix& w, const TorusPoint& t);

}  // namespace fusionring
