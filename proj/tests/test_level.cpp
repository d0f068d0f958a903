#include "fusionring/errors.hpp"
#include "fusionring/level.hpp"

#include <doctest.h>

#include <set>

using namespace fusionring;

namespace {

LevelData L(const char* t, int k, Limits lim = {}) { return LevelData::build(parse_affine_type(t), k, lim); }

}  // namespace

TEST_CASE("rational phases") {
    CHECK(RationalPhase(Rational(7, 6)).str() == "1/6");
    CHECK(RationalPhase(Rational(-1, 3)).str() == "2/3");
    CHECK(RationalPhase(Rational(2, 6)).str() == "1/3");
    CHECK(RationalPhase(Rational(3)).str() == "0");
    CHECK(RationalPhase::parse("2/6") == RationalPhase(1, 3));
    CHECK(RationalPhase::parse("0") == RationalPhase());
    CHECK(RationalPhase(1, 2) + RationalPhase(3, 4) == RationalPhase(1, 4));
    CHECK(-RationalPhase(1, 3) == RationalPhase(2, 3));
    CHECK(5 * RationalPhase(1, 3) == RationalPhase(2, 3));
    CHECK_THROWS_AS(RationalPhase::parse("1/0"), InvalidInput);
    CHECK_THROWS_AS(RationalPhase::parse("x"), InvalidInput);
}

TEST_CASE("theta check") {
    CHECK(L("A1~1", 1).theta_check().coeffs == std::vector<int>{1});
    CHECK(L("A4~2", 1).theta_check().coeffs == std::vector<int>{2, 2});
    CHECK(L("C2~1", 1).theta_check().coeffs == std::vector<int>{1, 1});
    CHECK(L("G2~1", 1).theta_check().coeffs == std::vector<int>{2, 1});
    CHECK(L("D5~2", 1).theta_check().coeffs == std::vector<int>{2, 2, 2, 1});
}

TEST_CASE("lattice M and |T_k|") {
    const auto a1 = L("A1~1", 1);
    CHECK(a1.lattice_basis() == std::vector<Weight>{Weight{2}});
    CHECK(a1.lattice_index() == 2);
    CHECK(a1.norm_const() == 6);
    CHECK(L("C2~1", 1).lattice_index() == 4);
    CHECK(L("D5~2", 1).lattice_index() == 2);
    // A_4^(2) at level 3 and C_2^(1) at level 1 have tori of the same size
    CHECK(L("A4~2", 3).lattice_index() == 1);
    CHECK(L("A4~2", 3).norm_const() == 64);
    CHECK(L("C2~1", 1).norm_const() == 64);
}

TEST_CASE("level weights") {
    CHECK(L("A1~1", 1).weights() == std::vector<Weight>{Weight{0}, Weight{1}});
    CHECK(L("C2~1", 1).weights() == std::vector<Weight>{Weight{0, 0}, Weight{0, 1}, Weight{1, 0}});
    CHECK(L("A4~2", 3).weights() == std::vector<Weight>{Weight{0, 0}, Weight{0, 1}, Weight{1, 0}});
    CHECK(L("E6~2", 0).size() == 1);
    CHECK(L("C2~1", 0).weights() == std::vector<Weight>{Weight{0, 0}});
    CHECK(L("C2~1", 5).size() == 21);
    CHECK_THROWS_AS(L("C2~1", -1), InvalidInput);
}

TEST_CASE("dual coweights") {
    const auto d5 = L("D5~2", 1);
    CHECK(d5.dual_weights().size() == d5.size());
    CHECK(d5.dual_weights().front() == Coweight::zero(4));
    CHECK(L("E6~2", 0).dual_weights() == std::vector<Coweight>{Coweight::zero(4)});
    CHECK(L("C2~1", 2).dual_weights().empty());
    for (const char* t : {"A5~2", "D4~2", "D5~2", "E6~2", "D4~3"})
        for (int k = 0; k <= 3; ++k) {
            const auto ld = L(t, k);
            CAPTURE(t);
            CAPTURE(k);
            CHECK(ld.dual_weights().size() == ld.size());
        }
}

TEST_CASE("Sigma_k for A1 level 1") {
    const auto ld = L("A1~1", 1);
    REQUIRE(ld.sigma().size() == 2);
    CHECK(ld.sigma()[0].phases() == std::vector<RationalPhase>{RationalPhase(1, 6)});
    CHECK(ld.sigma()[1].phases() == std::vector<RationalPhase>{RationalPhase(1, 3)});
    const Weight alpha{2};
    CHECK(torus_eval(ld.sigma()[0], alpha) == RationalPhase(1, 3));
    CHECK(torus_eval(ld.sigma()[1], alpha) == RationalPhase(2, 3));
    CHECK(torus_eval(ld.sigma()[1], Weight{0}).is_zero());
}

TEST_CASE("regularity") {
    const auto ld = L("A1~1", 1);
    TorusPoint identity{{0}, 1, {}};
    CHECK_FALSE(ld.is_regular(identity));
    TorusPoint half{{1}, 2, {}};
    CHECK_FALSE(ld.is_regular(half));
    for (const auto& t : ld.sigma()) CHECK(ld.is_regular(t));
}

TEST_CASE("T_k enumeration") {
    const auto ld = L("A1~1", 1);
    const auto tk = enumerate_T_k(ld);
    CHECK(tk.size() == 6);
    int regular = 0;
    for (const auto& t : tk) regular += ld.is_regular(t);
    CHECK(regular == 4);
    std::set<std::vector<RationalPhase>> distinct;
    for (const auto& t : tk) distinct.insert(t.phases());
    CHECK(distinct.size() == 6);

    for (const char* t : {"C2~1", "A4~2", "D4~3"}) {
        const auto l1 = L(t, 1);
        CHECK(static_cast<std::int64_t>(enumerate_T_k(l1).size()) == l1.norm_const());
    }
    CHECK_THROWS_AS(enumerate_T_k(L("C2~1", 3, Limits{kDefaultWeylCap, 10})), CapExceeded);
}

TEST_CASE("W action on torus points") {
    const auto ld = L("A2~1", 1);
    const auto ws = weyl_group_elements(ld.roots());
    CHECK(ws.size() == 6);
    const auto& t = ld.sigma()[1];
    for (const auto& w : ws) {
        const TorusPoint s = act(w.matrix, t);
        // μ(w⁻¹t) = (wμ)(t)
        for (const Weight mu : {Weight{1, 0}, Weight{0, 1}, Weight{2, -1}}) {
            Weight wmu = Weight::zero(2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) wmu[i] += w.matrix[i][j] * mu[j];
            CHECK(s.eval(mu) == t.eval(wmu));
        }
    }
}
