#pragma once

#include "fusionring/root_system.hpp"

#include <vector>

namespace fusionring {

inline constexpr long long kDefaultWeylCap = 10'000'000;

/// Images w(x) for all w ∈ W̊, stored row-major (rank ints per element).
struct WeylOrbit {
    int rank = 0;
    std::vector<int> images;
    std::vector<signed char> parity;  // (-1)^{ℓ(w)}

    std::size_t size() const { return parity.size(); }
    const int* image(std::size_t e) const { return images.data() + e * rank; }
};

/// Enumerates W̊ by a depth-first walk over reduced words, each element reached
/// exactly once through its smallest left descent. Throws CapExceeded if
/// |W̊| > cap.
WeylOrbit weyl_orbit(const RootSystem& rs, const Weight& x, long long cap = kDefaultWeylCap);

struct WeylElement {
    Weight rho_image;  // w(ρ), regular and distinct per element
    int parity = 1;
    int length = 0;
    IntMatrix matrix;  // action on ω-coordinates: w(λ)_i = Σ_j matrix[i][j] λ_j
};

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, long long cap = kDefaultWeylCap);

}  // namespace fusionring
