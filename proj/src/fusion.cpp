#include "fusionring/fusion.hpp"

#include "fusionring/kernels.hpp"

#include <cmath>
#include <sstream>

namespace fusionring {

namespace {

std::string triple_str(const std::vector<Weight>& w, std::size_t l, std::size_t m, std::size_t n) {
    return "(" + w[l].str() + " | " + w[m].str() + " | " + w[n].str() + ")";
}

struct Rounded {
    std::int64_t value;
    double residual;
};

Rounded round_complex(Complex z) {
    const double r = std::round(z.real());
    return {static_cast<std::int64_t>(r), std::abs(z - Complex(r, 0))};
}

std::string complex_str(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

Weight affine_wall_step(const LevelData& ld) {
    const auto& rs = ld.roots();
    Weight v;
    switch (type_class(ld.type())) {
    case TypeClass::Untwisted:
        v = rs.highest_root();
        break;
    case TypeClass::EvenTwisted: {
        v = rs.highest_root();
        for (auto& c : v.coords) {
            if (c % 2 != 0) throw InternalError("θ/2 is not integral for " + ld.type().str());
            c /= 2;
        }
        break;
    }
    case TypeClass::Twisted:
        v = rs.highest_short_root();
        break;
    }
    if (ld.theta_check()(v) != 2) throw InternalError("affine reflection is not an involution for " + ld.type().str());
    return v;
}

std::vector<Complex> shifted_numerator_on_sigma(const LevelData& ld, const Weight& xi) {
    const auto& sigma = ld.sigma();
    std::vector<Complex> out;
    out.reserve(sigma.size());
    if (ld.roots().weyl_order() <= ld.limits().weyl_cap) {
        const WeylOrbit orbit = weyl_orbit(ld.roots(), xi + ld.roots().rho(), ld.limits().weyl_cap);
        const UnitRoots roots(sigma.empty() ? 1 : sigma.front().denominator);
        for (const auto& t : sigma) out.push_back(orbit_sum(orbit, t, roots));
    } else {
        for (const auto& t : sigma) out.push_back(weyl_numerator(ld, xi, t));
    }
    return out;
}

template <class Fold>
std::vector<std::int64_t> product_by_folding(const FusionRing& ring, std::size_t l, std::size_t m, Fold&& fold) {
    const auto& ld = ring.level();
    std::vector<std::int64_t> out(ld.size(), 0);
    for (const auto& [xi, mult] : tensor_decompose(ld.roots(), ld.weights().at(l), ld.weights().at(m))) {
        const FoldResult f = fold(xi);
        if (!f.wall) out[f.index] += mult * f.sign;
    }
    return out;
}

}  // namespace

IntegralityViolation::IntegralityViolation(std::array<std::size_t, 3> triple, Complex raw, std::string what)
    : NumericalFailure(std::move(what)), triple_(triple), raw_(raw) {}

FusionRing::FusionRing(LevelData ld, Tolerances tol, Backend backend)
    : ld_(std::move(ld)), tol_(tol), backend_(backend) {
    const auto& weights = ld_.weights();
    const auto& sigma = ld_.sigma();
    if (weights.empty() || weights.front() != Weight::zero(ld_.roots().rank()))
        throw InternalError("P_k must start with the zero weight");
    const auto P = static_cast<Eigen::Index>(weights.size());
    const auto T = static_cast<Eigen::Index>(sigma.size());

    if (ld_.roots().weyl_order() <= ld_.limits().weyl_cap) {
        numerators_ = backend_ == Backend::Parallel ? kernels::parallel::weyl_numerator_matrix(ld_, weights)
                                                    : kernels::serial::weyl_numerator_matrix(ld_, weights);
        chars_.resize(P, T);
        for (Eigen::Index t = 0; t < T; ++t) chars_.col(t) = numerators_.col(t) / numerators_(0, t);
    } else {
        chars_.resize(P, T);
        numerators_.resize(P, T);
        std::vector<Complex> j0(static_cast<std::size_t>(T));
        for (Eigen::Index t = 0; t < T; ++t) j0[t] = weyl_denominator_product(ld_, sigma[t]);
        for (Eigen::Index i = 0; i < P; ++i) {
            const CharacterVector v = character_vector(ld_, weights[i]);
            for (Eigen::Index t = 0; t < T; ++t) {
                chars_(i, t) = v.values[t];
                numerators_(i, t) = v.values[t] * j0[t];
            }
        }
    }
    delta_.resize(static_cast<std::size_t>(T));
    for (Eigen::Index t = 0; t < T; ++t) delta_[t] = std::norm(numerators_(0, t));
}

std::size_t FusionRing::require_index(const Weight& w) const {
    const auto idx = ld_.index_of(w);
    if (!idx) throw InvalidInput("weight " + w.str() + " is not in P_" + std::to_string(ld_.level()));
    return *idx;
}

FoldResult FusionRing::cached_fold(const Weight& xi) const {
    {
        std::lock_guard lock(fold_mutex_);
        if (auto it = fold_cache_.find(xi); it != fold_cache_.end()) return it->second;
    }
    FoldResult f = alcove_fold(*this, xi);
    std::lock_guard lock(fold_mutex_);
    fold_cache_.emplace(xi, f);
    return f;
}

Complex fusion_raw(const FusionRing& ring, std::size_t l, std::size_t m, std::size_t n) {
    const auto& chars = ring.characters();
    const auto& delta = ring.delta();
    Complex s = 0;
    for (Eigen::Index t = 0; t < chars.cols(); ++t) s += chars(l, t) * chars(m, t) * std::conj(chars(n, t)) * delta[t];
    return s / static_cast<double>(ring.level().norm_const());
}

std::int64_t fusion_coefficient(const FusionRing& ring, const Weight& l, const Weight& m, const Weight& n) {
    const std::size_t i = ring.require_index(l), j = ring.require_index(m), p = ring.require_index(n);
    const Complex raw = fusion_raw(ring, i, j, p);
    const Rounded r = round_complex(raw);
    if (!(r.residual < ring.tolerances().integrality))
        throw IntegralityViolation({i, j, p}, raw,
                                   "non-integral fusion sum " + complex_str(raw) + " at " +
                                       triple_str(ring.level().weights(), i, j, p));
    return r.value;
}

FusionTable fusion_table(const FusionRing& ring) {
    const auto& ld = ring.level();
    const kernels::FusionInput in{ring.characters(), ring.delta(), ld.norm_const()};
    const std::vector<Complex> raw =
        ring.backend() == Backend::Parallel ? kernels::parallel::fusion_sums(in) : kernels::serial::fusion_sums(in);

    FusionTable table;
    table.type = ld.type();
    table.level = ld.level();
    table.weights = ld.weights();
    const std::size_t P = ld.size();
    for (std::size_t i = 0; i < P; ++i) table.dual.push_back(ld.dual_index(i));
    table.coeffs.resize(raw.size());
    for (std::size_t c = 0; c < raw.size(); ++c) {
        const Rounded r = round_complex(raw[c]);
        if (!(r.residual < ring.tolerances().integrality)) {
            const std::size_t l = c / (P * P), m = (c / P) % P, n = c % P;
            throw IntegralityViolation({l, m, n}, raw[c],
                                       "non-integral fusion sum " + complex_str(raw[c]) + " at " +
                                           triple_str(table.weights, l, m, n));
        }
        table.coeffs[c] = r.value;
        table.max_residual = std::max(table.max_residual, r.residual);
    }
    return table;
}

std::vector<std::string> ring_axiom_failures(const FusionTable& t) {
    std::vector<std::string> failures;
    const std::size_t P = t.size();
    auto fail = [&](const std::string& what, std::size_t l, std::size_t m, std::size_t n) {
        failures.push_back(what + " at " + triple_str(t.weights, l, m, n));
    };
    for (std::size_t l = 0; l < P; ++l)
        for (std::size_t n = 0; n < P; ++n)
            if (t(0, l, n) != (l == n ? 1 : 0)) fail("unit", 0, l, n);
    for (std::size_t l = 0; l < P; ++l)
        for (std::size_t m = 0; m < P; ++m)
            for (std::size_t n = 0; n < P; ++n) {
                if (t(l, m, n) != t(m, l, n)) fail("commutativity", l, m, n);
                const std::int64_t s = t.symmetric(l, m, n);
                if (s != t.symmetric(m, n, l) || s != t.symmetric(n, l, m) || s != t.symmetric(m, l, n) ||
                    s != t.symmetric(l, n, m) || s != t.symmetric(n, m, l))
                    fail("S3 symmetry", l, m, n);
            }
    for (std::size_t l = 0; l < P; ++l)
        for (std::size_t m = 0; m < P; ++m)
            for (std::size_t n = 0; n < P; ++n)
                for (std::size_t tau = 0; tau < P; ++tau) {
                    std::int64_t left = 0, right = 0;
                    for (std::size_t s = 0; s < P; ++s) {
                        left += t(l, m, s) * t(s, n, tau);
                        right += t(m, n, s) * t(l, s, tau);
                    }
                    if (left != right) fail("associativity (target " + t.weights[tau].str() + ")", l, m, n);
                }
    return failures;
}

std::vector<std::array<std::size_t, 3>> negative_entries(const FusionTable& t) {
    std::vector<std::array<std::size_t, 3>> out;
    const std::size_t P = t.size();
    for (std::size_t l = 0; l < P; ++l)
        for (std::size_t m = 0; m < P; ++m)
            for (std::size_t n = 0; n < P; ++n)
                if (t(l, m, n) < 0) out.push_back({l, m, n});
    return out;
}

FoldResult alcove_fold(const FusionRing& ring, const Weight& xi) {
    const auto& ld = ring.level();
    if (xi.size() != ld.roots().rank()) throw InvalidInput("weight rank mismatch: " + xi.str());
    const std::vector<Complex> j = shifted_numerator_on_sigma(ld, xi);
    const auto& num = ring.numerators();
    const double tol = ring.tolerances().integrality;
    FoldResult out;
    for (std::size_t v = 0; v < ld.size(); ++v) {
        Complex p = 0;
        for (std::size_t t = 0; t < j.size(); ++t) p += j[t] * std::conj(num(v, t));
        p /= static_cast<double>(ld.norm_const());
        const Rounded r = round_complex(p);
        if (!(r.residual < tol) || std::abs(r.value) > 1)
            throw NumericalFailure("fold projection of " + xi.str() + " onto " + ld.weights()[v].str() + " is " +
                                   complex_str(p));
        if (r.value == 0) continue;
        if (!out.wall) throw NumericalFailure("fold of " + xi.str() + " has several nonzero projections");
        out = FoldResult{false, v, ld.weights()[v], static_cast<int>(r.value)};
    }
    return out;
}

FoldResult alcove_fold_exact(const LevelData& ld, const Weight& xi) {
    const auto& rs = ld.roots();
    if (xi.size() != rs.rank()) throw InvalidInput("weight rank mismatch: " + xi.str());
    const Weight v = affine_wall_step(ld);
    const int L = ld.shifted_level();
    Weight x = xi + rs.rho();
    int sign = 1;
    for (int steps = 0; steps < 100000; ++steps) {
        const DominantFold f = rs.fold_dominant(x);
        sign *= f.parity;
        if (f.on_wall) return FoldResult::on_wall();
        x = f.dominant;
        const int h = ld.theta_check()(x);
        if (h == L) return FoldResult::on_wall();
        if (h < L) {
            const Weight nu = x - rs.rho();
            const auto idx = ld.index_of(nu);
            if (!idx) throw InternalError("exact fold left P_k at " + nu.str());
            return FoldResult{false, *idx, nu, sign};
        }
        x = x - (h - L) * v;
        sign = -sign;
    }
    throw InternalError("exact fold did not terminate for " + xi.str());
}

std::vector<std::int64_t> kac_walton_product(const FusionRing& ring, std::size_t l, std::size_t m) {
    return product_by_folding(ring, l, m, [&](const Weight& xi) { return ring.cached_fold(xi); });
}

std::vector<std::int64_t> kac_walton_product_exact(const FusionRing& ring, std::size_t l, std::size_t m) {
    return product_by_folding(ring, l, m, [&](const Weight& xi) { return alcove_fold_exact(ring.level(), xi); });
}

std::int64_t kac_walton(const FusionRing& ring, const Weight& l, const Weight& m, const Weight& n) {
    const std::size_t p = ring.require_index(n);
    return kac_walton_product(ring, ring.require_index(l), ring.require_index(m))[p];
}

VerlindeResult verlinde_trace(const FusionRing& ring, int genus, const std::vector<Weight>& weights) {
    if (genus < 0) throw InvalidInput("genus must be non-negative");
    std::vector<std::size_t> idx;
    for (const auto& w : weights) idx.push_back(ring.require_index(w));
    const auto& chars = ring.characters();
    const auto& delta = ring.delta();
    Complex s = 0;
    for (Eigen::Index t = 0; t < chars.cols(); ++t) {
        Complex term = std::pow(delta[t], 1 - genus);
        for (std::size_t i : idx) term *= chars(i, t);
        s += term;
    }
    VerlindeResult out;
    out.raw = s * std::pow(static_cast<double>(ring.level().norm_const()), genus - 1);
    const Rounded r = round_complex(out.raw);
    out.value = r.value;
    out.residual = r.residual;
    out.integral = r.residual < ring.tolerances().integrality;
    return out;
}

Stabilization stabilization_check(const FusionRing& ring, const Weight& l, const Weight& m, const Weight& n) {
    const auto& ld = ring.level();
    Stabilization out;
    out.applies = ld.theta_check()(l + m + n) <= 2 * ld.level();
    out.fusion = fusion_coefficient(ring, l, m, n);
    const auto classical = tensor_decompose(ld.roots(), l, m);
    if (auto it = classical.find(n); it != classical.end()) out.classical = it->second;
    return out;
}

IsoReport twisted_iso_check(int n, int k, const Limits& limits, const Tolerances& tol) {
    if (n < 2 || k < 0) throw InvalidInput("isomorphism check needs n >= 2 and k >= 0");
    const FusionRing tw(LevelData::build(make_affine_type(Family::A, 2 * n, 2), 2 * k + 1, limits), tol);
    const FusionRing un(LevelData::build(make_affine_type(Family::C, n, 1), k, limits), tol);
    IsoReport rep;
    rep.twisted = fusion_table(tw);
    rep.untwisted = fusion_table(un);
    if (rep.twisted.weights != rep.untwisted.weights) {
        rep.diff = "weight lists differ";
        return rep;
    }
    for (std::size_t i = 0; i < tw.size(); ++i)
        if (tw.level().sigma()[i].phases() != un.level().sigma()[i].phases()) {
            rep.diff = "Σ phases differ at " + rep.twisted.weights[i].str();
            return rep;
        }
    const std::size_t P = rep.twisted.size();
    for (std::size_t c = 0; c < rep.twisted.coeffs.size(); ++c)
        if (rep.twisted.coeffs[c] != rep.untwisted.coeffs[c]) {
            const std::size_t l = c / (P * P), m = (c / P) % P, q = c % P;
            rep.diff = "coefficient differs at " + triple_str(rep.twisted.weights, l, m, q) + ": " +
                       std::to_string(rep.twisted.coeffs[c]) + " vs " + std::to_string(rep.untwisted.coeffs[c]);
            return rep;
        }
    rep.equal = true;
    return rep;
}

}  // namespace fusionring
