#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace fusionring {

using Rational = boost::rational<std::int64_t>;

/// Integer coordinate vector tagged by the basis it is written in.
template <class Tag>
struct LatticeVector {
    std::vector<int> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<int> c) : coords(std::move(c)) {}
    LatticeVector(std::initializer_list<int> c) : coords(c) {}

    static LatticeVector zero(int n) { return LatticeVector(std::vector<int>(n, 0)); }
    static LatticeVector ones(int n) { return LatticeVector(std::vector<int>(n, 1)); }

    int size() const { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[i]; }
    int& operator[](int i) { return coords[i]; }

    bool is_dominant() const {
        for (int c : coords)
            if (c < 0) return false;
        return true;
    }

    LatticeVector& operator+=(const LatticeVector& o) {
        for (int i = 0; i < size(); ++i) coords[i] += o.coords[i];
        return *this;
    }
    LatticeVector& operator-=(const LatticeVector& o) {
        for (int i = 0; i < size(); ++i) coords[i] -= o.coords[i];
        return *this;
    }
    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
    friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
    friend LatticeVector operator-(LatticeVector a) {
        for (int& c : a.coords) c = -c;
        return a;
    }
    friend LatticeVector operator*(int s, LatticeVector a) {
        for (int& c : a.coords) c *= s;
        return a;
    }

    auto operator<=>(const LatticeVector&) const = default;

    /// "1,0,2"
    std::string str() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += std::to_string(coords[i]);
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
        return os << '(' << v.str() << ')';
    }
};

struct WeightTag {};
struct CoweightTag {};

/// Coordinates in the fundamental weight basis: coords[i] = <λ, α̌_i>.
using Weight = LatticeVector<WeightTag>;
/// Coordinates in the fundamental coweight basis: coords[i] = <α_i, μ̌>.
using Coweight = LatticeVector<CoweightTag>;

/// Parses a weight literal "1,0,2". Throws InvalidInput on malformed text or wrong length.
Weight parse_weight(const std::string& text, int rank);

/// Integer linear functional written in the simple coroot basis: β̌ = Σ coeffs[i] α̌_i,
/// so <λ, β̌> = Σ coeffs[i] λ_i for a weight λ.
struct CorootVector {
    std::vector<int> coeffs;

    int operator()(const Weight& w) const {
        int s = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * w.coords[i];
        return s;
    }
    auto operator<=>(const CorootVector&) const = default;
};

}  // namespace fusionring
