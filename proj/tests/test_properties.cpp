// Randomized invariants. Generators are seeded so failures reproduce.
#include "fusionring/fusion.hpp"
#include "fusionring/serialize.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace fusionring;

namespace {

constexpr unsigned kSeed = 20240611;

const char* const kTypes[] = {"A1~1", "A2~1", "A3~1", "B3~1", "C2~1", "C3~1", "D4~1", "G2~1", "F4~1",
                              "A4~2", "A5~2", "D4~2", "E6~2", "D4~3"};

Weight random_dominant(std::mt19937& g, int rank, int max_coord) {
    std::uniform_int_distribution<int> d(0, max_coord);
    Weight w = Weight::zero(rank);
    for (int i = 0; i < rank; ++i) w[i] = d(g);
    return w;
}

const char* random_type(std::mt19937& g) {
    std::uniform_int_distribution<std::size_t> d(0, std::size(kTypes) - 1);
    return kTypes[d(g)];
}

}  // namespace

TEST_CASE("tensor products have the right dimension") {
    std::mt19937 g(kSeed);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rs = RootSystem::build(affine_data(parse_affine_type(random_type(g))));
        if (rs.rank() > 3) continue;
        const auto a = random_dominant(g, rs.rank(), 2), b = random_dominant(g, rs.rank(), 2);
        std::int64_t dim = 0;
        for (const auto& [nu, m] : tensor_decompose(rs, a, b)) {
            CHECK(m > 0);
            dim += m * rs.weyl_dimension(nu);
        }
        CHECK(dim == rs.weyl_dimension(a) * rs.weyl_dimension(b));
    }
}

TEST_CASE("Freudenthal multiplicities sum to the Weyl dimension") {
    std::mt19937 g(kSeed + 1);
    for (int trial = 0; trial < 30; ++trial) {
        const auto rs = RootSystem::build(affine_data(parse_affine_type(random_type(g))));
        const auto w = random_dominant(g, rs.rank(), rs.rank() > 3 ? 1 : 3);
        std::int64_t total = 0;
        for (const auto& [mu, m] : freudenthal_weight_multiplicities(rs, w)) total += m;
        CHECK(total == rs.weyl_dimension(w));
    }
}

TEST_CASE("dual is an involution preserving dimension") {
    std::mt19937 g(kSeed + 2);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rs = RootSystem::build(affine_data(parse_affine_type(random_type(g))));
        const auto w = random_dominant(g, rs.rank(), 4);
        CHECK(rs.dual(rs.dual(w)) == w);
        CHECK(rs.weyl_dimension(rs.dual(w)) == rs.weyl_dimension(w));
    }
}

TEST_CASE("torus evaluation is additive") {
    std::mt19937 g(kSeed + 3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto ld = LevelData::build(parse_affine_type(random_type(g)), 2);
        std::uniform_int_distribution<std::size_t> pick(0, ld.sigma().size() - 1);
        const auto& t = ld.sigma()[pick(g)];
        const int n = ld.roots().rank();
        const auto a = random_dominant(g, n, 5), b = random_dominant(g, n, 5);
        CHECK(torus_eval(t, a + b) == torus_eval(t, a) + torus_eval(t, b));
        CHECK(torus_eval(t, -a) == -torus_eval(t, a));
    }
}

TEST_CASE("random fusion triples match Kac-Walton and the ring is commutative") {
    std::mt19937 g(kSeed + 4);
    for (int trial = 0; trial < 12; ++trial) {
        const char* t = random_type(g);
        std::uniform_int_distribution<int> lev(1, 3);
        const FusionRing ring(LevelData::build(parse_affine_type(t), lev(g)));
        const auto& w = ring.level().weights();
        std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
        for (int s = 0; s < 20; ++s) {
            const auto &l = w[pick(g)], &m = w[pick(g)], &n = w[pick(g)];
            CAPTURE(t);
            const auto c = fusion_coefficient(ring, l, m, n);
            CHECK(c == kac_walton(ring, l, m, n));
            CHECK(c == fusion_coefficient(ring, m, l, n));
        }
    }
}

TEST_CASE("folds of random weights agree") {
    std::mt19937 g(kSeed + 5);
    for (int trial = 0; trial < 10; ++trial) {
        const FusionRing ring(LevelData::build(parse_affine_type(random_type(g)), 2));
        for (int s = 0; s < 25; ++s) {
            const auto xi = random_dominant(g, ring.level().roots().rank(), 6);
            CHECK(alcove_fold(ring, xi) == alcove_fold_exact(ring.level(), xi));
        }
    }
}

TEST_CASE("type and weight literals round trip") {
    std::mt19937 g(kSeed + 6);
    for (const char* t : kTypes) CHECK(parse_affine_type(parse_affine_type(t).str()) == parse_affine_type(t));
    for (int trial = 0; trial < 50; ++trial) {
        const auto w = random_dominant(g, 1 + trial % 5, 9);
        CHECK(parse_weight(w.str(), w.size()) == w);
    }
    std::vector<Weight> ws;
    for (int i = 0; i < 10; ++i) ws.push_back(random_dominant(g, 3, 3));
    CHECK(weights_from_json(weights_json(ws)) == ws);
}
