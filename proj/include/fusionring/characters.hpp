#pragma once

#include "fusionring/level.hpp"

#include <complex>
#include <vector>

namespace fusionring {

using Complex = std::complex<double>;

struct Tolerances {
    double orthonormality = 1e-8;
    double path_agreement = 1e-9;
    double integrality = 1e-6;
    double unitarity = 1e-8;
};

/// exp(2πi j/den) for j = 0..den-1, evaluated exactly once per residue.
class UnitRoots {
public:
    explicit UnitRoots(std::int64_t den);
    std::int64_t denominator() const { return den_; }
    const Complex& operator[](std::int64_t j) const { return table_[j]; }

private:
    std::int64_t den_;
    std::vector<Complex> table_;
};

/// Values of a character indexed by Σ_k order.
struct CharacterVector {
    Weight label;
    std::vector<Complex> values;
};

/// Σ_e parity_e · e^{2πi·image_e(t)} for a precomputed orbit; Neumaier-compensated
/// above 10^5 terms.
Complex orbit_sum(const WeylOrbit& orbit, const TorusPoint& t, const UnitRoots& roots);

/// J_λ(t) = Σ_w (-1)^{ℓ(w)} w(λ+ρ)(t). Throws CapExceeded if |W̊| exceeds the cap.
Complex j_function(const LevelData& ld, const Weight& lambda, const TorusPoint& t);

/// J_λ(t) by Weyl sum when |W̊| is within the cap, otherwise χ_λ(t)·J_0(t) with
/// J_0 from the denominator product. Any dominant λ.
Complex weyl_numerator(const LevelData& ld, const Weight& lambda, const TorusPoint& t);

/// J_0(t) = Π_{α>0} (α(t)^{1/2} − α(t)^{-1/2}), evaluated as ρ(t) Π_{α>0} (1 − α(t)^{-1}).
Complex weyl_denominator_product(const LevelData& ld, const TorusPoint& t);

/// χ_λ(t) = J_λ(t)/J_0(t); falls back to chi_via_weights above the Weyl cap.
Complex chi(const LevelData& ld, const Weight& lambda, const TorusPoint& t);

/// Σ_μ mult_λ(μ) μ(t) from Freudenthal multiplicities.
Complex chi_via_weights(const LevelData& ld, const Weight& lambda, const TorusPoint& t);

/// Δ(t) = |J_0(t)|²
double delta(const LevelData& ld, const TorusPoint& t);
/// Δ(t) = Π_{α∈Φ} (1 − α(t))
double delta_by_product(const LevelData& ld, const TorusPoint& t);

CharacterVector character_vector(const LevelData& ld, const Weight& lambda);

/// (f,g) = |T_k|⁻¹ Σ_t f(t) conj(g(t)) Δ(t)
Complex inner_product(const LevelData& ld, const CharacterVector& f, const CharacterVector& g);

}  // namespace fusionring
