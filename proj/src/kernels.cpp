#include "fusionring/kernels.hpp"

#include "fusionring/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fusionring::kernels {

namespace {

using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

UnitRoots roots_for(const LevelData& ld) {
    const auto& sigma = ld.sigma();
    return UnitRoots(sigma.empty() ? 1 : sigma.front().denominator);
}

// One output cell per (pair, ν); both flavours call this with identical operands.
void fusion_pair(const RowMatrix& chars, const RowMatrix& conj_chars, const std::vector<double>& delta,
                 double inv_norm, Eigen::Index a, Eigen::Index b, Complex* out) {
    const Eigen::Index p = chars.rows();
    const Eigen::Index T = chars.cols();
    std::vector<Complex> w(static_cast<std::size_t>(T));
    for (Eigen::Index t = 0; t < T; ++t) w[t] = chars(a, t) * chars(b, t) * delta[t];
    for (Eigen::Index c = 0; c < p; ++c) {
        Complex s = 0;
        for (Eigen::Index t = 0; t < T; ++t) s += w[t] * conj_chars(c, t);
        out[c] = s * inv_norm;
    }
}

void check_input(const FusionInput& in) {
    if (static_cast<std::size_t>(in.chars.cols()) != in.delta.size())
        throw InvalidInput("character matrix and Δ disagree on |Σ_k|");
}

}  // namespace

std::vector<WeylOrbit> shifted_orbits(const LevelData& ld, const std::vector<Weight>& weights) {
    std::vector<WeylOrbit> orbits;
    orbits.reserve(weights.size());
    for (const auto& w : weights) orbits.push_back(weyl_orbit(ld.roots(), w + ld.roots().rho(), ld.limits().weyl_cap));
    return orbits;
}

namespace serial {

Eigen::MatrixXcd weyl_numerator_matrix(const LevelData& ld, const std::vector<Weight>& weights) {
    const auto orbits = shifted_orbits(ld, weights);
    const auto& sigma = ld.sigma();
    const UnitRoots roots = roots_for(ld);
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(weights.size()), static_cast<Eigen::Index>(sigma.size()));
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t t = 0; t < sigma.size(); ++t) m(i, t) = orbit_sum(orbits[i], sigma[t], roots);
    return m;
}

std::vector<Complex> fusion_sums(const FusionInput& in) {
    check_input(in);
    const RowMatrix chars = in.chars;
    const RowMatrix conj_chars = in.chars.conjugate();
    const Eigen::Index p = chars.rows();
    const double inv_norm = 1.0 / static_cast<double>(in.norm_const);
    std::vector<Complex> out(static_cast<std::size_t>(p * p * p));
    for (Eigen::Index a = 0; a < p; ++a)
        for (Eigen::Index b = 0; b < p; ++b)
            fusion_pair(chars, conj_chars, in.delta, inv_norm, a, b, out.data() + (a * p + b) * p);
    return out;
}

}  // namespace serial

namespace parallel {

Eigen::MatrixXcd weyl_numerator_matrix(const LevelData& ld, const std::vector<Weight>& weights) {
    const auto orbits = shifted_orbits(ld, weights);
    const auto& sigma = ld.sigma();
    const UnitRoots roots = roots_for(ld);
    const auto rows = static_cast<long long>(weights.size());
    const auto cols = static_cast<long long>(sigma.size());
    Eigen::MatrixXcd m(rows, cols);
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (long long i = 0; i < rows; ++i)
        for (long long t = 0; t < cols; ++t) m(i, t) = orbit_sum(orbits[i], sigma[t], roots);
    return m;
}

std::vector<Complex> fusion_sums(const FusionInput& in) {
    check_input(in);
    const RowMatrix chars = in.chars;
    const RowMatrix conj_chars = in.chars.conjugate();
    const Eigen::Index p = chars.rows();
    const double inv_norm = 1.0 / static_cast<double>(in.norm_const);
    std::vector<Complex> out(static_cast<std::size_t>(p * p * p));
    const long long pairs = static_cast<long long>(p) * p;
#pragma omp parallel for schedule(dynamic)
    for (long long ab = 0; ab < pairs; ++ab) {
        const Eigen::Index a = ab / p;
        const Eigen::Index b = ab % p;
        fusion_pair(chars, conj_chars, in.delta, inv_norm, a, b, out.data() + ab * p);
    }
    return out;
}

}  // namespace parallel

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace fusionring::kernels
