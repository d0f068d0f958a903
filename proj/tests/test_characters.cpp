#include "fusionring/characters.hpp"
#include "fusionring/errors.hpp"

#include <doctest.h>

using namespace fusionring;

namespace {

LevelData L(const char* t, int k, Limits lim = {}) { return LevelData::build(parse_affine_type(t), k, lim); }

}  // namespace

TEST_CASE("chi_0 is one and J_0 never vanishes on Sigma_k") {
    for (const char* t : {"A2~1", "G2~1", "A4~2", "A5~2", "D4~3"}) {
        const auto ld = L(t, 2);
        for (const auto& p : ld.sigma()) {
            CHECK(std::abs(chi(ld, Weight::zero(ld.roots().rank()), p) - 1.0) < 1e-12);
            CHECK(std::abs(j_function(ld, Weight::zero(ld.roots().rank()), p)) > 1e-6);
        }
    }
}

TEST_CASE("two evaluation paths") {
    const auto ld = L("B3~1", 2);
    for (const auto& w : ld.weights())
        for (const auto& p : ld.sigma()) {
            const Complex a = chi(ld, w, p), b = chi_via_weights(ld, w, p);
            CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, std::abs(b)));
            CHECK(std::abs(j_function(ld, w, p) - weyl_numerator(ld, w, p)) < 1e-12);
        }
    for (const auto& p : ld.sigma()) {
        CHECK(delta(ld, p) == doctest::Approx(delta_by_product(ld, p)).epsilon(1e-9));
        CHECK(std::abs(weyl_denominator_product(ld, p) - j_function(ld, Weight::zero(3), p)) < 1e-9);
    }
}

TEST_CASE("fallback above the Weyl cap") {
    const auto full = L("G2~1", 2);
    const auto capped = L("G2~1", 2, Limits{4, 1'000'000});
    for (std::size_t i = 0; i < full.size(); ++i) {
        const auto& w = full.weights()[i];
        const auto a = character_vector(full, w), b = character_vector(capped, w);
        for (std::size_t t = 0; t < a.values.size(); ++t) {
            CHECK(std::abs(a.values[t] - b.values[t]) < 1e-9);
            CHECK(std::abs(j_function(full, w, full.sigma()[t]) - weyl_numerator(capped, w, capped.sigma()[t])) < 1e-9);
        }
        CHECK(std::abs(delta(capped, capped.sigma()[0]) - delta(full, full.sigma()[0])) < 1e-9);
    }
    CHECK_THROWS_AS(j_function(capped, Weight{0, 0}, capped.sigma()[0]), CapExceeded);
}

TEST_CASE("conjugation symmetry") {
    const auto ld = L("A2~1", 3);
    for (std::size_t i = 0; i < ld.size(); ++i) {
        const auto a = character_vector(ld, ld.weights()[i]);
        const auto b = character_vector(ld, ld.weights()[ld.dual_index(i)]);
        for (std::size_t t = 0; t < a.values.size(); ++t) CHECK(std::abs(b.values[t] - std::conj(a.values[t])) < 1e-12);
    }
}

TEST_CASE("orthonormality and positivity of the Hermitian form") {
    for (const char* t : {"C2~1", "A6~2", "D5~2"}) {
        const auto ld = L(t, 2);
        std::vector<CharacterVector> cv;
        for (const auto& w : ld.weights()) cv.push_back(character_vector(ld, w));
        for (std::size_t i = 0; i < cv.size(); ++i)
            for (std::size_t j = 0; j < cv.size(); ++j)
                CHECK(std::abs(inner_product(ld, cv[i], cv[j]) - Complex(i == j ? 1 : 0, 0)) < 1e-8);
        CharacterVector f{Weight{}, std::vector<Complex>(ld.sigma().size(), Complex(0.5, -0.25))};
        CHECK(inner_product(ld, f, f).real() > 0);
    }
    const auto ld = L("A1~1", 1);
    CHECK_THROWS_AS(inner_product(ld, CharacterVector{}, character_vector(ld, Weight{0})), InvalidInput);
}

TEST_CASE("unit roots") {
    const UnitRoots r(12);
    CHECK(std::abs(r[3] - Complex(0, 1)) < 1e-15);
    CHECK(std::abs(r[6] - Complex(-1, 0)) < 1e-15);
    CHECK(r.denominator() == 12);
}
