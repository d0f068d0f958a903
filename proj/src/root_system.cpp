#include "fusionring/root_system.hpp"

#include "fusionring/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fusionring {

namespace {

int height(const std::vector<int>& c) { return std::accumulate(c.begin(), c.end(), 0); }

}  // namespace

RationalMatrix inverse(const RationalMatrix& m) {
    const int n = static_cast<int>(m.size());
    RationalMatrix a = m;
    RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
        if (pivot == n) throw InternalError("singular matrix in exact inverse");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].numerator() == 0) continue;
            const Rational f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::int64_t determinant(const IntMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    std::int64_t sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

RootSystem RootSystem::build(const AffineData& d) {
    std::vector<Rational> factors;
    for (int i = 1; i <= d.rank; ++i) factors.emplace_back(d.comarks[i], d.marks[i]);
    RootSystem rs = build(d.finite_type, std::move(factors));
    if (static_cast<int>(rs.roots_.size()) != positive_root_count(d.finite_type))
        throw InternalError("root count mismatch for " + d.type.str());
    return rs;
}

RootSystem RootSystem::build(const FiniteType& f, std::vector<Rational> form_factors) {
    RootSystem rs;
    rs.type_ = f;
    rs.rank_ = f.rank;
    rs.cartan_ = finite_cartan_matrix(f);
    rs.form_factors_ = std::move(form_factors);
    rs.weyl_order_ = weyl_group_order(f);
    const int n = rs.rank_;
    const auto& A = rs.cartan_;

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rs.form_factors_[i] * A[i][j] != rs.form_factors_[j] * A[j][i])
                throw InternalError("form factors do not symmetrize the Cartan matrix of " + f.str());

    // (ω_i|ω_j) = d_i (Å⁻¹)_ij
    RationalMatrix ar(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ar[i][j] = A[i][j];
    const RationalMatrix ainv = inverse(ar);
    rs.gram_.assign(n, std::vector<Rational>(n));
    std::int64_t den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            rs.gram_[i][j] = rs.form_factors_[i] * ainv[i][j];
            den = std::lcm(den, rs.gram_[i][j].denominator());
        }
    rs.gram_den_ = den;
    rs.gram_scaled_.assign(n, std::vector<std::int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational s = rs.gram_[i][j] * den;
            rs.gram_scaled_[i][j] = s.numerator();
        }

    // Positive roots by closure of the simple roots under simple reflections.
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        found.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& beta : frontier) {
            for (int i = 0; i < n; ++i) {
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += beta[j] * A[i][j];
                if (pairing == 0) continue;
                auto image = beta;
                image[i] -= pairing;
                if (image[i] < 0) continue;  // β = α_i or the image is negative
                if (found.insert(image).second) next.push_back(image);
            }
        }
        frontier = std::move(next);
    }
    rs.roots_simple_.assign(found.begin(), found.end());
    std::stable_sort(rs.roots_simple_.begin(), rs.roots_simple_.end(),
                     [](const auto& x, const auto& y) { return height(x) < height(y); });

    auto length = [&](const std::vector<int>& c) {
        Rational s(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (c[i] && c[j]) s += rs.form_factors_[i] * A[i][j] * (c[i] * c[j]);
        return s;
    };
    Rational long_length(0);
    Rational short_length(0);
    for (const auto& c : rs.roots_simple_) {
        const Rational l = length(c);
        long_length = std::max(long_length, l);
        short_length = short_length.numerator() == 0 ? l : std::min(short_length, l);
    }

    int best_coroot_height = -1, best_short_coroot_height = -1, best_short_root_height = -1;
    for (const auto& c : rs.roots_simple_) {
        Weight w = Weight::zero(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i] += A[i][j] * c[j];
        rs.roots_.push_back(w);

        const Rational l = length(c);
        CorootVector cv;
        for (int i = 0; i < n; ++i) {
            const Rational coeff = Rational(2) * c[i] * rs.form_factors_[i] / l;
            if (coeff.denominator() != 1) throw InternalError("non-integral coroot in " + f.str());
            cv.coeffs.push_back(static_cast<int>(coeff.numerator()));
        }
        const int ch = height(cv.coeffs);
        if (ch > best_coroot_height) {
            best_coroot_height = ch;
            rs.highest_coroot_ = cv;
        }
        if (l == long_length && ch > best_short_coroot_height) {
            best_short_coroot_height = ch;
            rs.highest_short_coroot_ = cv;
        }
        if (l == short_length && height(c) > best_short_root_height) {
            best_short_root_height = height(c);
            rs.theta_short_ = w;
        }
        rs.coroots_.push_back(std::move(cv));
    }
    rs.theta_ = rs.roots_.back();
    rs.theta_simple_ = rs.roots_simple_.back();
    if (!rs.theta_.is_dominant()) throw InternalError("highest root is not dominant in " + f.str());
    return rs;
}

Rational RootSystem::form(const Weight& x, const Weight& y) const {
    return Rational(scaled_form(x, y), gram_den_);
}

std::int64_t RootSystem::scaled_form(const Weight& x, const Weight& y) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (!x[i]) continue;
        std::int64_t row = 0;
        for (int j = 0; j < rank_; ++j) row += gram_scaled_[i][j] * y[j];
        s += row * x[i];
    }
    return s;
}

Weight RootSystem::simple_root(int i) const {
    Weight w = Weight::zero(rank_);
    for (int j = 0; j < rank_; ++j) w[j] = cartan_[j][i];
    return w;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
    Weight r = w;
    const int c = w[i];
    if (c)
        for (int j = 0; j < rank_; ++j) r[j] -= c * cartan_[j][i];
    return r;
}

Coweight RootSystem::reflect(const Coweight& w, int i) const {
    if (i < 0 || i >= rank_) throw std::out_of_range("simple reflection index out of range");
    Coweight r = w;
    const int c = w[i];
    if (c)
        for (int j = 0; j < rank_; ++j) r[j] -= c * cartan_[i][j];
    return r;
}

DominantFold RootSystem::fold_dominant(Weight w) const {
    DominantFold out;
    // Each step strictly raises the weight, so at most |Φ⁺| reflections occur.
    for (;;) {
        int i = 0;
        while (i < rank_ && w[i] >= 0) ++i;
        if (i == rank_) break;
        const int c = w[i];
        for (int j = 0; j < rank_; ++j) w[j] -= c * cartan_[j][i];
        out.parity = -out.parity;
    }
    out.on_wall = std::find(w.coords.begin(), w.coords.end(), 0) != w.coords.end();
    out.dominant = std::move(w);
    return out;
}

Weight RootSystem::dual(const Weight& w) const {
    if (!w.is_dominant()) throw InvalidInput("dual involution requires a dominant weight, got " + w.str());
    return fold_dominant(-w).dominant;
}

std::int64_t RootSystem::weyl_dimension(const Weight& w) const {
    const Weight x = w + rho();
    Rational dim(1);
    for (const auto& alpha : roots_) dim *= Rational(scaled_form(x, alpha), scaled_form(rho(), alpha));
    if (dim.denominator() != 1) throw InternalError("non-integral Weyl dimension for " + w.str());
    return dim.numerator();
}

}  // namespace fusionring
