#include "fusionring/fusion.hpp"
#include "fusionring/kernels.hpp"

#include <doctest.h>

using namespace fusionring;

TEST_CASE("serial and parallel kernels agree bit for bit") {
    kernels::set_threads(4);
    for (const char* t : {"A2~1", "C2~1", "G2~1", "A4~2", "D4~2", "E6~2"}) {
        CAPTURE(t);
        const auto ld = LevelData::build(parse_affine_type(t), 2);
        const auto a = kernels::serial::weyl_numerator_matrix(ld, ld.weights());
        const auto b = kernels::parallel::weyl_numerator_matrix(ld, ld.weights());
        CHECK(a == b);

        const FusionRing rs(ld, {}, Backend::Serial), rp(ld, {}, Backend::Parallel);
        CHECK(rs.characters() == rp.characters());
        const kernels::FusionInput in{rs.characters(), rs.delta(), ld.norm_const()};
        CHECK(kernels::serial::fusion_sums(in) == kernels::parallel::fusion_sums(in));
        CHECK(fusion_table(rs) == fusion_table(rp));
    }
    kernels::set_threads(0);
    CHECK(kernels::max_threads() >= 1);
}

TEST_CASE("kernel input validation") {
    const auto ld = LevelData::build(parse_affine_type("A1~1"), 1);
    const Eigen::MatrixXcd chars = Eigen::MatrixXcd::Ones(2, 2);
    const std::vector<double> delta{3.0};
    CHECK_THROWS_AS(kernels::serial::fusion_sums({chars, delta, ld.norm_const()}), InvalidInput);
}
