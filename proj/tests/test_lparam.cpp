#include <doctest.h>

#include <algorithm>

#include "gspin/instance.hpp"
#include "test_util.hpp"

using namespace gspin;
using testutil::make_levi;

namespace {

CuspParam orth(const std::string& id, int dim) {
    return {id, dim, SelfDualType::orthogonal, ReducPoint::half, {}};
}

CuspParam symp(const std::string& id, int dim, ReducPoint b = ReducPoint::zero) {
    return {id, dim, SelfDualType::symplectic, b, {}};
}

CuspParam plain(const std::string& id, int dim) {
    return {id, dim, SelfDualType::none, {}, {}};
}

LeviSpec levi_for(const std::vector<SegmentParam>& blocks, int m = 1) {
    std::vector<int> sizes;
    int n = m;
    for (const SegmentParam& seg : blocks) {
        sizes.push_back(seg.rho.dim * seg.a);
        n += seg.rho.dim * seg.a;
    }
    return LeviSpec({Family::B, n}, sizes, m);
}

}  // namespace

TEST_CASE("segment factor types") {
    CHECK(segment_factor_type({orth("r", 1), 2}) == FactorTarget::GSp);
    CHECK(segment_factor_type({symp("r", 2), 1}) == FactorTarget::GSp);
    CHECK(segment_factor_type({orth("r", 1), 1}) == FactorTarget::GO);
    CHECK(segment_factor_type({symp("r", 2), 2}) == FactorTarget::GO);
    // incrementing a flips the type
    for (int a = 1; a <= 4; ++a) {
        CHECK(segment_factor_type({orth("r", 1), a}) !=
              segment_factor_type({orth("r", 1), a + 1}));
        CHECK(segment_factor_type({symp("r", 2), a}) !=
              segment_factor_type({symp("r", 2), a + 1}));
    }
    CHECK_THROWS_AS(segment_factor_type({plain("r", 1), 1}), std::invalid_argument);
}

TEST_CASE("Siegel centralizer table") {
    using Kind = CentralizerType::Kind;
    CHECK(siegel_centralizer(symp("r", 2), Family::B, 2) ==
          CentralizerType{Kind::GO11, 2, true});
    CHECK(siegel_centralizer(orth("r", 2), Family::B, 2) == CentralizerType{Kind::GL, 2, false});
    CHECK(siegel_centralizer(orth("r", 3), Family::B, 3) == CentralizerType{Kind::GL, 2, false});
    CHECK(siegel_centralizer(symp("r", 2), Family::D, 2) == CentralizerType{Kind::GL, 2, false});
    CHECK(siegel_centralizer(orth("r", 2), Family::D, 2) == CentralizerType{Kind::GO11, 2, true});
    CHECK(siegel_centralizer(orth("r", 3), Family::D, 3) ==
          CentralizerType{Kind::Torus, 1, false});
    CHECK(siegel_centralizer(plain("r", 2), Family::B, 2) ==
          CentralizerType{Kind::Torus, 2, false});
    CHECK_THROWS_AS(siegel_centralizer(orth("r", 2), Family::B, 3), std::invalid_argument);
}

TEST_CASE("multiplicity centralizers") {
    using Kind = CentralizerType::Kind;
    CHECK(multiplicity_centralizer(FormType::symmetric, FormType::symmetric, 2) ==
          CentralizerType{Kind::GO, 2, true});
    CHECK(multiplicity_centralizer(FormType::symplectic, FormType::symplectic, 3) ==
          CentralizerType{Kind::GO, 3, true});
    CHECK(multiplicity_centralizer(FormType::symmetric, FormType::symplectic, 2) ==
          CentralizerType{Kind::GSp, 2, false});
    CHECK_THROWS_AS(multiplicity_centralizer(FormType::symmetric, FormType::symplectic, 3),
                    std::invalid_argument);
}

TEST_CASE("rank-one reducibility") {
    TauParam tau;
    CHECK(rank_one_reducibility({orth("r", 1), 2}, tau));
    CHECK_FALSE(rank_one_reducibility({orth("r", 1), 1}, tau));
    CHECK(rank_one_reducibility({symp("r", 2), 1}, tau));
    CHECK(rank_one_reducibility({symp("r", 2, ReducPoint::one), 3}, tau));
    CHECK_FALSE(rank_one_reducibility({plain("r", 1), 1}, tau));
    tau.jordan = {{"r", 2}};
    CHECK_FALSE(rank_one_reducibility({orth("r", 1), 2}, tau));
}

TEST_CASE("maximal-case parameter R-groups") {
    TauParam tau;
    CHECK(arthur_r_group_maximal({orth("r", 1), 2}, tau) == ArthurOrder::z2);
    CHECK(arthur_r_group_maximal({orth("r", 1), 1}, tau) == ArthurOrder::trivial);
    CHECK(arthur_r_group_maximal({symp("r", 2), 1}, tau) == ArthurOrder::z2);
    CHECK(arthur_r_group_maximal({plain("r", 1), 1}, tau) == ArthurOrder::trivial);
    tau.jordan = {{"r", 2}};
    CHECK(arthur_r_group_maximal({orth("r", 1), 2}, tau) == ArthurOrder::trivial);
    // adding any admissible Jordan entry trivializes the maximal R-group
    for (int a = 1; a <= 3; ++a) {
        const SegmentParam seg{a % 2 == 0 ? orth("r", 1) : symp("r", 2), a};
        TauParam with;
        with.jordan = {{"r", a}};
        CHECK(arthur_r_group_maximal(seg, with) == ArthurOrder::trivial);
    }
}

TEST_CASE("derive_inertia") {
    TauParam tau;
    {
        const std::vector<SegmentParam> blocks{{orth("r", 1), 2}};
        const InertiaDatum sigma = derive_inertia(levi_for(blocks), blocks, tau);
        REQUIRE(sigma.labels.size() == 1);
        CHECK(sigma.self_dual(0));
        CHECK(sigma.reducible[0] == 1);
    }
    {
        const std::vector<SegmentParam> blocks{{plain("r", 1), 1}};
        const InertiaDatum sigma = derive_inertia(levi_for(blocks), blocks, tau);
        REQUIRE(sigma.labels.size() == 2);
        CHECK(sigma.dual[0] == 1);
        CHECK(sigma.reducible[0] == 0);
    }
    {
        const std::vector<SegmentParam> blocks{{orth("r", 1), 1}, {orth("r", 1), 1}};
        const InertiaDatum sigma = derive_inertia(levi_for(blocks), blocks, tau);
        CHECK(sigma.assign == std::vector<int>{0, 0});
    }
    {
        // explicit dual pairing
        CuspParam x = plain("x", 1);
        CuspParam y = plain("y", 1);
        x.dual_id = "y";
        y.dual_id = "x";
        const std::vector<SegmentParam> blocks{{x, 1}, {y, 1}};
        const InertiaDatum sigma = derive_inertia(levi_for(blocks), blocks, tau);
        REQUIRE(sigma.labels.size() == 2);
        CHECK(sigma.dual[0] == 1);
        CHECK(sigma.assign == std::vector<int>{0, 1});
    }
    {
        // declared partner that never occurs
        CuspParam x = plain("x", 1);
        x.dual_id = "ghost";
        const std::vector<SegmentParam> blocks{{x, 1}};
        CHECK_THROWS_AS(derive_inertia(levi_for(blocks), blocks, tau), std::invalid_argument);
    }
}

TEST_CASE("general parameter R-groups and the match") {
    TauParam tau;
    {
        const std::vector<SegmentParam> blocks{{orth("r", 1), 2}};
        const LeviSpec levi = levi_for(blocks);
        const ArthurRGroup ar = arthur_r_group_general(levi, blocks, tau);
        CHECK(ar.rank == 1);
        REQUIRE(ar.reps.size() == 2);
        CHECK(render_element(ar.reps[1]) == "C_1");
        CHECK(match_check(levi, blocks, tau));
    }
    {
        const std::vector<SegmentParam> blocks{{orth("r", 1), 2}, {orth("r", 1), 2}};
        const LeviSpec levi = levi_for(blocks);
        const ArthurRGroup ar = arthur_r_group_general(levi, blocks, tau);
        CHECK(ar.cosets.size() == 2);
        REQUIRE(ar.reps.size() == 2);
        CHECK(render_element(ar.reps[1]) == "C_2");
        const RGroup ks = r_group_closed_form(levi, derive_inertia(levi, blocks, tau));
        CHECK(ks.rank == 1);
        CHECK(ks.generators[0].flips == 0b10);
        CHECK(match_check(levi, blocks, tau));
    }
    {
        const std::vector<SegmentParam> blocks{{plain("r", 2), 1}};
        const LeviSpec levi = levi_for(blocks);
        CHECK(arthur_r_group_general(levi, blocks, tau).cosets.size() == 1);
        CHECK(match_check(levi, blocks, tau));
    }
    {
        const LeviSpec d({Family::D, 3}, {2}, 1);
        CHECK_THROWS_AS(match_check(d, {{orth("r", 1), 2}}, tau), std::invalid_argument);
    }
}

TEST_CASE("match on the exhaustive small parameter stream") {
    ParamEnumConfig cfg{2, 2, 2, 1};
    const auto stream = enumerate_param_instances(cfg);
    CHECK(stream.size() > 50);
    for (const Instance& inst : stream) {
        REQUIRE(inst.params.has_value());
        REQUIRE_MESSAGE(match_check(inst.levi, inst.params->blocks, inst.params->tau),
                        instance_to_json(inst).dump());
    }
}

TEST_CASE("Siegel reducibility dictionary") {
    for (int n = 1; n <= 4; ++n) {
        // exactly one pole, matching the self-duality type
        CHECK(siegel_pole(orth("r", n)) == PoleKind::symmetric_square);
        if (n % 2 == 0) CHECK(siegel_pole(symp("r", n)) == PoleKind::exterior_square);
        if (n % 2 == 0) {
            CHECK(siegel_reducible(Family::B, orth("r", n)) !=
                  siegel_reducible(Family::D, orth("r", n)));
            CHECK(siegel_reducible(Family::B, symp("r", n)) !=
                  siegel_reducible(Family::D, symp("r", n)));
        } else {
            CHECK_FALSE(siegel_reducible(Family::B, orth("r", n)));
            CHECK_FALSE(siegel_reducible(Family::D, orth("r", n)));
        }
        CHECK_FALSE(siegel_reducible(Family::B, plain("r", n)));
        CHECK_FALSE(siegel_reducible(Family::D, plain("r", n)));
    }
}
