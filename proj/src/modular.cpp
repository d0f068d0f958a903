#include "fusionring/modular.hpp"

#include "fusionring/kernels.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace fusionring {

namespace {

void require_epsilon_types(const AffineType& a) {
    if (type_class(a) != TypeClass::Twisted)
        throw InvalidInput("ε is only defined for twisted types other than A_{2n}^(2), got " + a.str());
}

// i^m
Complex i_power(int m) {
    switch (((m % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

}  // namespace

Coweight EpsilonMap::apply(const Weight& mu_prime) const {
    if (mu_prime.size() != static_cast<int>(sigma.size())) throw InvalidInput("rank mismatch in ε: " + mu_prime.str());
    Coweight out = Coweight::zero(static_cast<int>(sigma.size()));
    for (std::size_t i = 0; i < sigma.size(); ++i) out[sigma[i]] = mu_prime[static_cast<int>(i)];
    return out;
}

bool epsilon_is_valid(const AffineType& a, const AffineType& a_prime, const std::vector<int>& sigma) {
    const AffineData d = affine_data(a), dp = affine_data(a_prime);
    const RootSystem rs = RootSystem::build(d);
    const auto cp = finite_cartan_matrix(dp.finite_type);
    const auto& c = rs.cartan();
    const int n = rs.rank();
    if (dp.rank != n || static_cast<int>(sigma.size()) != n) return false;
    std::vector<int> sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i) return false;
    for (int i = 0; i < n; ++i) {
        if (dp.comarks[i + 1] != rs.highest_root_simple()[sigma[i]]) return false;
        for (int j = 0; j < n; ++j)
            if (cp[i][j] != c[sigma[j]][sigma[i]]) return false;
    }
    return true;
}

EpsilonMap epsilon_map(const AffineType& a, const AffineType& a_prime) {
    require_epsilon_types(a);
    require_epsilon_types(a_prime);
    const AffineData d = affine_data(a), dp = affine_data(a_prime);
    const RootSystem rs = RootSystem::build(d);
    const auto cp = finite_cartan_matrix(dp.finite_type);
    const auto& c = rs.cartan();
    const auto& theta = rs.highest_root_simple();
    const int n = rs.rank();
    if (dp.rank != n) throw InternalError("adjacent types of different rank: " + a.str() + ", " + a_prime.str());

    std::vector<int> sigma(n, -1);
    std::vector<bool> used(n, false);
    std::vector<std::vector<int>> found;
    // Assign σ(0), σ(1), ... checking every constraint among assigned nodes.
    std::function<void(int)> extend = [&](int i) {
        if (i == n) {
            found.push_back(sigma);
            return;
        }
        for (int s = 0; s < n; ++s) {
            if (used[s] || dp.comarks[i + 1] != theta[s]) continue;
            sigma[i] = s;
            bool ok = cp[i][i] == c[s][s];
            for (int j = 0; ok && j < i; ++j) ok = cp[i][j] == c[sigma[j]][s] && cp[j][i] == c[s][sigma[j]];
            if (ok) {
                used[s] = true;
                extend(i + 1);
                used[s] = false;
            }
        }
        sigma[i] = -1;
    };
    extend(0);
    if (found.empty()) throw InternalError("no node permutation realizes ε for " + a.str() + " -> " + a_prime.str());
    if (found.size() > 1)
        throw InternalError("ε is not unique for " + a.str() + " -> " + a_prime.str() + " (" +
                            std::to_string(found.size()) + " candidates)");
    return EpsilonMap{a, a_prime, found.front()};
}

bool shares_weight_points(const AffineType& a) { return uses_weight_points(a); }

SMatrix s_matrix(const AffineType& a, int k, const Limits& limits) {
    const LevelData ld = LevelData::build(a, k, limits);
    const AffineType ap = adjacent_type(a);
    SMatrix s;
    s.source = a;
    s.target = ap;
    s.level = k;
    s.rows = ld.weights();

    std::vector<TorusPoint> points;
    if (shares_weight_points(a)) {
        s.cols = ld.weights();
        points = ld.sigma();
    } else {
        const LevelData ldp = LevelData::build(ap, k, limits);
        if (positive_root_count(ld.affine().finite_type) != positive_root_count(ldp.affine().finite_type))
            throw InternalError("|Φ⁺| differs between " + a.str() + " and " + ap.str());
        const EpsilonMap eps = epsilon_map(a, ap);
        s.cols = ldp.weights();
        std::set<Coweight> image;
        for (const auto& mu : s.cols) {
            const Coweight c = eps.apply(mu);
            image.insert(c);
            points.push_back(ld.point_for_coweight(c));
        }
        const std::set<Coweight> dual(ld.dual_weights().begin(), ld.dual_weights().end());
        if (image != dual) throw InternalError("ε does not map P′_k onto P̌_k for " + a.str());
    }
    if (s.rows.size() != s.cols.size()) throw InternalError("S-matrix is not square for " + a.str());

    const auto orbits = kernels::shifted_orbits(ld, s.rows);
    const Complex scale =
        i_power(positive_root_count(ld.affine().finite_type)) / std::sqrt(static_cast<double>(ld.norm_const()));
    const UnitRoots roots(points.empty() ? 1 : points.front().denominator);
    s.entries.resize(static_cast<Eigen::Index>(s.rows.size()), static_cast<Eigen::Index>(s.cols.size()));
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (points[j].denominator != roots.denominator()) throw InternalError("mixed Σ_k denominators");
            s.entries(i, j) = scale * orbit_sum(orbits[i], points[j], roots);
        }
    return s;
}

double unitarity_residual(const SMatrix& s) {
    const Eigen::MatrixXcd g = s.entries * s.entries.adjoint();
    return (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

TransposeReport check_transpose(const AffineType& a, int k, double tol, const Limits& limits) {
    const SMatrix s = s_matrix(a, k, limits);
    const SMatrix sp = s_matrix(s.target, k, limits);
    TransposeReport rep;
    if (s.rows != sp.cols || s.cols != sp.rows) return rep;
    const Eigen::MatrixXcd st = s.entries.transpose();
    bool first = true;
    for (Eigen::Index i = 0; i < st.rows(); ++i)
        for (Eigen::Index j = 0; j < st.cols(); ++j) {
            const double dev = std::abs(st(i, j) - sp.entries(i, j));
            rep.max_deviation = std::max(rep.max_deviation, dev);
            if (first && !(dev < tol)) {
                rep.row = static_cast<std::size_t>(i);
                rep.col = static_cast<std::size_t>(j);
                first = false;
            }
        }
    rep.ok = rep.max_deviation < tol;
    return rep;
}

double verlinde_diagonalization_residual(const SMatrix& s, const FusionTable& table) {
    if (s.rows != table.weights || s.cols != table.weights)
        throw InvalidInput("S-matrix and fusion table index different weight sets");
    const auto P = static_cast<Eigen::Index>(table.size());
    const auto& e = s.entries;
    double worst = 0;
    for (Eigen::Index l = 0; l < P; ++l)
        for (Eigen::Index m = 0; m < P; ++m)
            for (Eigen::Index n = 0; n < P; ++n) {
                Complex sum = 0;
                for (Eigen::Index t = 0; t < P; ++t) sum += e(l, t) * e(m, t) * std::conj(e(n, t)) / e(0, t);
                worst = std::max(worst, std::abs(sum - static_cast<double>(table(l, m, n))));
            }
    return worst;
}

}  // namespace fusionring
