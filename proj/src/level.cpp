#include "fusionring/level.hpp"

#include "fusionring/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <regex>
#include <set>
#include <tuple>

namespace fusionring {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw CapExceeded("|P/(k+h)M| overflows 64-bit arithmetic");
    return out;
}

void enumerate_box(const std::vector<int>& bound, int level, int pos, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (pos == static_cast<int>(bound.size())) {
        out.push_back(cur);
        return;
    }
    for (int c = 0; c * bound[pos] <= level; ++c) {
        cur[pos] = c;
        enumerate_box(bound, level - c * bound[pos], pos + 1, cur, out);
    }
    cur[pos] = 0;
}

// Column Hermite normal form: returns the diagonal of H = X·U (lower triangular).
std::vector<std::int64_t> hnf_diagonal(std::vector<std::vector<std::int64_t>> h) {
    const int n = static_cast<int>(h.size());
    auto combine = [&](int i, int j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
        // (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
        for (int r = 0; r < n; ++r) {
            const std::int64_t x = h[r][i], y = h[r][j];
            h[r][i] = a * x + b * y;
            h[r][j] = c * x + d * y;
        }
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (h[i][j] == 0) continue;
            // extended gcd of h[i][i], h[i][j]
            std::int64_t a = h[i][i], b = h[i][j];
            std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
            while (b != 0) {
                const std::int64_t q = a / b;
                std::tie(a, b) = std::make_tuple(b, a - q * b);
                std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
                std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
            }
            const std::int64_t p = h[i][i] / a, q = h[i][j] / a;
            combine(i, j, x0, y0, -q, p);
        }
        if (h[i][i] == 0) throw InternalError("degenerate lattice in T_k enumeration");
        if (h[i][i] < 0)
            for (int r = 0; r < n; ++r) h[r][i] = -h[r][i];
    }
    std::vector<std::int64_t> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = h[i][i];
    return diag;
}

}  // namespace

RationalPhase::RationalPhase(Rational q) {
    const std::int64_t den = q.denominator();
    value_ = Rational(mod(q.numerator(), den), den);
}

std::string RationalPhase::str() const {
    if (value_.numerator() == 0) return "0";
    return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

RationalPhase RationalPhase::parse(const std::string& text) {
    static const std::regex pattern(R"(^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw InvalidInput("malformed phase '" + text + "'");
    const std::int64_t num = std::stoll(m[1].str());
    const std::int64_t den = m[2].matched ? std::stoll(m[2].str()) : 1;
    if (den == 0) throw InvalidInput("zero denominator in phase '" + text + "'");
    return RationalPhase(num, den);
}

std::vector<RationalPhase> TorusPoint::phases() const {
    std::vector<RationalPhase> out;
    for (auto n : numerators) out.emplace_back(n, denominator);
    return out;
}

std::int64_t TorusPoint::phase_index(const Weight& mu) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < numerators.size(); ++j) s += static_cast<std::int64_t>(mu[j]) * numerators[j];
    return mod(s, denominator);
}

RationalPhase TorusPoint::eval(const Weight& mu) const { return RationalPhase(phase_index(mu), denominator); }

CorootVector theta_check(const AffineData& d, const RootSystem& rs) {
    if (!uses_weight_points(d.type)) return rs.highest_coroot();
    // <λ, κ⁻¹θ> = (λ|θ) = Σ_j θ_j d_j λ_j
    CorootVector out;
    const auto& theta = rs.highest_root_simple();
    for (int j = 0; j < rs.rank(); ++j) {
        const Rational c = rs.form_factor(j) * theta[j];
        if (c.denominator() != 1) throw InternalError("κ⁻¹(θ) is not integral for " + d.type.str());
        out.coeffs.push_back(static_cast<int>(c.numerator()));
    }
    return out;
}

std::vector<Weight> lattice_M(const AffineData& d, const RootSystem& rs) {
    std::vector<Weight> basis;
    for (int i = 0; i < rs.rank(); ++i) {
        Weight alpha = rs.simple_root(i);
        if (uses_weight_points(d.type)) {
            // κ(α̌_i) = α_i / d_i
            const Rational& f = rs.form_factor(i);
            for (int j = 0; j < rs.rank(); ++j) {
                const Rational c = Rational(alpha[j]) / f;
                if (c.denominator() != 1) throw InternalError("κ(α̌_i) is not integral for " + d.type.str());
                alpha[j] = static_cast<int>(c.numerator());
            }
        }
        basis.push_back(std::move(alpha));
    }
    return basis;
}

std::vector<Weight> level_weights(const CorootVector& theta_check, int k) {
    std::vector<std::vector<int>> raw;
    std::vector<int> cur(theta_check.coeffs.size(), 0);
    for (int c : theta_check.coeffs)
        if (c <= 0) throw InternalError("θ̌ has a non-positive coefficient");
    enumerate_box(theta_check.coeffs, k, 0, cur, raw);
    std::vector<Weight> out;
    for (auto& v : raw) out.emplace_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Coweight> dual_level_coweights(const RootSystem& rs, int k) {
    std::vector<std::vector<int>> raw;
    std::vector<int> cur(rs.rank(), 0);
    enumerate_box(rs.highest_root_simple(), k, 0, cur, raw);
    std::vector<Coweight> out;
    for (auto& v : raw) out.emplace_back(std::move(v));
    std::sort(out.begin(), out.end());
    return out;
}

LevelData LevelData::build(const AffineType& t, int k, const Limits& limits) {
    if (k < 0) throw InvalidInput("level must be non-negative, got " + std::to_string(k));
    LevelData ld;
    ld.affine_ = affine_data(t);
    ld.rs_ = RootSystem::build(ld.affine_);
    ld.k_ = k;
    ld.shifted_ = k + ld.affine_.dual_coxeter;
    ld.limits_ = limits;
    ld.theta_check_ = fusionring::theta_check(ld.affine_, ld.rs_);
    ld.m_basis_ = lattice_M(ld.affine_, ld.rs_);
    const int n = ld.rs_.rank();

    IntMatrix basis(n, std::vector<int>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) basis[i][j] = ld.m_basis_[j][i];
    ld.m_index_ = std::abs(determinant(basis));
    ld.norm_const_ = ld.m_index_;
    for (int i = 0; i < n; ++i) ld.norm_const_ = checked_mul(ld.norm_const_, ld.shifted_);

    ld.weights_ = level_weights(ld.theta_check_, k);
    for (const auto& w : ld.weights_) {
        auto idx = ld.index_of(ld.rs_.dual(w));
        if (!idx) throw InternalError("P_k is not closed under * for " + t.str());
        ld.dual_index_.push_back(*idx);
    }

    if (uses_weight_points(t)) {
        for (const auto& w : ld.weights_) ld.sigma_.push_back(ld.point_for_weight(w));
    } else {
        ld.dual_weights_ = dual_level_coweights(ld.rs_, k);
        for (const auto& w : ld.dual_weights_) ld.sigma_.push_back(ld.point_for_coweight(w));
    }
    for (const auto& p : ld.sigma_)
        if (!ld.is_regular(p)) throw InternalError("non-regular point in Σ_k for " + t.str());
    return ld;
}

std::optional<std::size_t> LevelData::index_of(const Weight& w) const {
    auto it = std::lower_bound(weights_.begin(), weights_.end(), w);
    if (it == weights_.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - weights_.begin());
}

TorusPoint LevelData::point_for_weight(const Weight& lambda) const {
    // q_j = (ρ+λ | ω_j) / (k+ȟ)
    const int n = rs_.rank();
    const Weight x = lambda + rs_.rho();
    TorusPoint p;
    p.denominator = rs_.form_denominator() * shifted_;
    p.label = lambda.coords;
    for (int j = 0; j < n; ++j) {
        Weight e = Weight::zero(n);
        e[j] = 1;
        p.numerators.push_back(mod(rs_.scaled_form(x, e), p.denominator));
    }
    return p;
}

TorusPoint LevelData::point_for_coweight(const Coweight& lambda) const {
    // q_j = <ω_j, ρ̌+λ̌> / (k+ȟ) with <ω_j, ω̌_i> = (Å⁻¹)_ij
    const int n = rs_.rank();
    const std::int64_t det = std::abs(determinant(rs_.cartan()));
    RationalMatrix c(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = rs_.cartan()[i][j];
    const RationalMatrix inv = inverse(c);
    const Coweight x = lambda + rs_.rho_check();
    TorusPoint p;
    p.denominator = det * shifted_;
    p.label = lambda.coords;
    for (int j = 0; j < n; ++j) {
        Rational q(0);
        for (int i = 0; i < n; ++i) q += inv[i][j] * static_cast<std::int64_t>(x[i]);
        q *= det;
        if (q.denominator() != 1) throw InternalError("det(Å)·Å⁻¹ is not integral");
        p.numerators.push_back(mod(q.numerator(), p.denominator));
    }
    return p;
}

bool LevelData::is_regular(const TorusPoint& t) const {
    for (const auto& alpha : rs_.positive_roots())
        if (t.phase_index(alpha) == 0) return false;
    return true;
}

std::vector<TorusPoint> enumerate_T_k(const LevelData& ld) {
    if (ld.norm_const() > ld.limits().torus_cap)
        throw CapExceeded("|T_k| = " + std::to_string(ld.norm_const()) + " exceeds the cap " +
                          std::to_string(ld.limits().torus_cap));
    // t ∈ T_k  <=>  X q ∈ Z^n with X = (k+ȟ)·Bᵀ; q = X⁻¹ m for m ∈ Z^n / X Z^n.
    const int n = ld.roots().rank();
    const auto& basis = ld.lattice_basis();
    std::vector<std::vector<std::int64_t>> x(n, std::vector<std::int64_t>(n));
    RationalMatrix xr(n, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            x[j][i] = static_cast<std::int64_t>(ld.shifted_level()) * basis[j][i];
            xr[j][i] = x[j][i];
        }
    const RationalMatrix xinv = inverse(xr);
    std::int64_t den = 1;
    for (const auto& row : xinv)
        for (const auto& v : row) den = std::lcm(den, v.denominator());
    std::vector<std::vector<std::int64_t>> xinv_scaled(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) xinv_scaled[i][j] = (xinv[i][j] * den).numerator();

    const auto diag = hnf_diagonal(x);
    std::vector<TorusPoint> out;
    std::vector<std::int64_t> m(n, 0);
    for (;;) {
        TorusPoint p;
        p.denominator = den;
        for (int i = 0; i < n; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < n; ++j) s += xinv_scaled[i][j] * m[j];
            p.numerators.push_back(mod(s, den));
        }
        out.push_back(std::move(p));
        int pos = 0;
        while (pos < n && ++m[pos] == diag[pos]) m[pos++] = 0;
        if (pos == n) break;
    }
    if (static_cast<std::int64_t>(out.size()) != ld.norm_const())
        throw InternalError("T_k enumeration size does not match |P/(k+h)M|");
    return out;
}

TorusPoint act(const IntMatrix& w, const TorusPoint& t) {
    const int n = static_cast<int>(w.size());
    TorusPoint out;
    out.denominator = t.denominator;
    for (int j = 0; j < n; ++j) {
        std::int64_t s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<std::int64_t>(w[i][j]) * t.numerators[i];
        out.numerators.push_back(mod(s, t.denominator));
    }
    return out;
}

}  // namespace fusionring
