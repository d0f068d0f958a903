#include "fusionring/characters.hpp"

#include "fusionring/errors.hpp"

#include <cmath>
#include <numbers>

namespace fusionring {

namespace detail {

// Neumaier summation on both components.
class CompensatedSum {
public:
    void add(const Complex& z) {
        add(re_, cre_, z.real());
        add(im_, cim_, z.imag());
    }
    Complex value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add(double& sum, double& comp, double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

inline constexpr std::size_t kCompensateAbove = 100'000;

}  // namespace detail

Complex orbit_sum(const WeylOrbit& orbit, const TorusPoint& t, const UnitRoots& roots) {
    const int n = orbit.rank;
    auto term = [&](std::size_t e) {
        const int* x = orbit.image(e);
        std::int64_t s = 0;
        for (int j = 0; j < n; ++j) s += static_cast<std::int64_t>(x[j]) * t.numerators[j];
        s %= t.denominator;
        if (s < 0) s += t.denominator;
        return orbit.parity[e] > 0 ? roots[s] : -roots[s];
    };
    if (orbit.size() > detail::kCompensateAbove) {
        detail::CompensatedSum acc;
        for (std::size_t e = 0; e < orbit.size(); ++e) acc.add(term(e));
        return acc.value();
    }
    Complex acc = 0;
    for (std::size_t e = 0; e < orbit.size(); ++e) acc += term(e);
    return acc;
}

UnitRoots::UnitRoots(std::int64_t den) : den_(den), table_(static_cast<std::size_t>(den)) {
    for (std::int64_t j = 0; j < den; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(den);
        table_[j] = {std::cos(angle), std::sin(angle)};
    }
}

namespace {

Complex unit(const TorusPoint& t, const Weight& mu) {
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(t.phase_index(mu)) / static_cast<double>(t.denominator);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Complex j_function(const LevelData& ld, const Weight& lambda, const TorusPoint& t) {
    const WeylOrbit orbit = weyl_orbit(ld.roots(), lambda + ld.roots().rho(), ld.limits().weyl_cap);
    return orbit_sum(orbit, t, UnitRoots(t.denominator));
}

Complex weyl_denominator_product(const LevelData& ld, const TorusPoint& t) {
    // J_0 = e^ρ Π_{α>0} (1 − e^{−α})
    Complex z = unit(t, ld.roots().rho());
    for (const auto& alpha : ld.roots().positive_roots()) z *= 1.0 - unit(t, -alpha);
    return z;
}

Complex weyl_numerator(const LevelData& ld, const Weight& lambda, const TorusPoint& t) {
    if (ld.roots().weyl_order() <= ld.limits().weyl_cap) return j_function(ld, lambda, t);
    return chi_via_weights(ld, lambda, t) * weyl_denominator_product(ld, t);
}

Complex chi_via_weights(const LevelData& ld, const Weight& lambda, const TorusPoint& t) {
    Complex acc = 0;
    for (const auto& [mu, m] : freudenthal_weight_multiplicities(ld.roots(), lambda))
        acc += static_cast<double>(m) * unit(t, mu);
    return acc;
}

Complex chi(const LevelData& ld, const Weight& lambda, const TorusPoint& t) {
    if (ld.roots().weyl_order() > ld.limits().weyl_cap) return chi_via_weights(ld, lambda, t);
    return j_function(ld, lambda, t) / j_function(ld, Weight::zero(ld.roots().rank()), t);
}

double delta(const LevelData& ld, const TorusPoint& t) {
    if (ld.roots().weyl_order() > ld.limits().weyl_cap) return std::norm(weyl_denominator_product(ld, t));
    return std::norm(j_function(ld, Weight::zero(ld.roots().rank()), t));
}

double delta_by_product(const LevelData& ld, const TorusPoint& t) {
    double d = 1;
    for (const auto& alpha : ld.roots().positive_roots()) d *= std::norm(1.0 - unit(t, alpha));
    return d;
}

CharacterVector character_vector(const LevelData& ld, const Weight& lambda) {
    CharacterVector v;
    v.label = lambda;
    const auto& sigma = ld.sigma();
    if (ld.roots().weyl_order() > ld.limits().weyl_cap) {
        const auto mult = freudenthal_weight_multiplicities(ld.roots(), lambda);
        for (const auto& t : sigma) {
            Complex acc = 0;
            for (const auto& [mu, m] : mult) acc += static_cast<double>(m) * unit(t, mu);
            v.values.push_back(acc);
        }
        return v;
    }
    const WeylOrbit orbit = weyl_orbit(ld.roots(), lambda + ld.roots().rho(), ld.limits().weyl_cap);
    const WeylOrbit base = weyl_orbit(ld.roots(), ld.roots().rho(), ld.limits().weyl_cap);
    if (sigma.empty()) return v;
    const UnitRoots roots(sigma.front().denominator);
    for (const auto& t : sigma) v.values.push_back(orbit_sum(orbit, t, roots) / orbit_sum(base, t, roots));
    return v;
}

Complex inner_product(const LevelData& ld, const CharacterVector& f, const CharacterVector& g) {
    const auto& sigma = ld.sigma();
    if (f.values.size() != sigma.size() || g.values.size() != sigma.size())
        throw InvalidInput("character vectors do not match |Σ_k|");
    Complex acc = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) acc += f.values[i] * std::conj(g.values[i]) * delta_by_product(ld, sigma[i]);
    return acc / static_cast<double>(ld.norm_const());
}

}  // namespace fusionring
