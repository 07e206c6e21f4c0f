#include <doctest.h>

#include <algorithm>

#include "gspin/elliptic.hpp"
#include "gspin/instance.hpp"
#include "test_util.hpp"

using namespace gspin;
using testutil::make_levi;
using testutil::make_sigma;

namespace {

// got.dim must match and every expected vector must lie in the row space
// of got.basis (which fixed_space keeps in reduced echelon form).
bool same_span(const FixedSpace& got, const std::vector<std::vector<Rat>>& expect_basis) {
    if (got.dim != static_cast<int>(expect_basis.size())) return false;
    for (const auto& v : expect_basis) {
        std::vector<Rat> w = v;
        for (const auto& row : got.basis) {
            size_t lead = 0;
            while (lead < row.size() && row[lead] == Rat(0)) ++lead;
            if (lead == row.size() || w[lead] == Rat(0)) continue;
            const Rat f = w[lead];
            for (size_t c = 0; c < w.size(); ++c) w[c] -= f * row[c];
        }
        for (const Rat& q : w)
            if (q != Rat(0)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("fixed spaces of sign changes") {
    const LeviSpec two = make_levi(Family::B, {1, 1}, 1);
    const FixedSpace f1 = fixed_space(two, sign_change(two, 0b01));
    CHECK(f1.dim == 2);
    CHECK(same_span(f1, {{Rat(0), Rat(1), Rat(0)}, {Rat(1), Rat(0), Rat(2)}}));

    CHECK(fixed_space(two, identity(two)).dim == 3);

    const FixedSpace fz = fixed_space(two, sign_change(two, 0b11));
    CHECK(fz == center_line(two));
    CHECK(same_span(fz, {{Rat(1), Rat(1), Rat(2)}}));
}

TEST_CASE("fixed-space dimension formula up to rank five") {
    for (int r = 1; r <= 5; ++r) {
        const LeviSpec levi = make_levi(Family::B, std::vector<int>(static_cast<size_t>(r), 1), 1);
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            const FixedSpace f = fixed_space(levi, sign_change(levi, mask));
            CHECK(f.dim == r + 1 - std::popcount(mask));
        }
    }
}

TEST_CASE("elliptic classification on pinned cases") {
    const LeviSpec two = make_levi(Family::B, {1, 1}, 1);

    const EllipticClass full =
        classify_elliptic(two, make_sigma(two, {"a", "b"}, {}, {"a", "b"}));
    CHECK(full.has_elliptic);
    CHECK(full.all_components_elliptic);
    REQUIRE(full.elliptic_witness.has_value());
    CHECK(full.elliptic_witness->flips == 0b11);

    const EllipticClass half = classify_elliptic(two, make_sigma(two, {"a", "a"}, {}, {"a"}));
    CHECK_FALSE(half.has_elliptic);
    CHECK(half.irreducibly_induced);
    REQUIRE(half.inducing_witness.has_value());
    CHECK(half.inducing_witness->flips == 0b10);
    CHECK(half.a_r == fixed_space(two, sign_change(two, 0b10)));

    // family D, m = 0, three odd self-dual blocks: d_2 = 3 kills both verdicts
    const LeviSpec d3 = make_levi(Family::D, {1, 1, 1}, 0);
    const EllipticClass odd3 = classify_elliptic(d3, make_sigma(d3, {"a", "b", "c"}));
    CHECK_FALSE(odd3.has_elliptic);
    CHECK_FALSE(odd3.irreducibly_induced);

    // r = 1 irreducible: the R-group is trivial and the identity witnesses
    // a_R = a_{1}
    const LeviSpec one = make_levi(Family::B, {1}, 1);
    const EllipticClass triv = classify_elliptic(one, make_sigma(one, {"a"}));
    CHECK_FALSE(triv.has_elliptic);
    CHECK(triv.irreducibly_induced);
    CHECK(triv.inducing_witness->is_identity());
}

TEST_CASE("fixed-space verdict equals closed form across the stream") {
    for (Family family : {Family::B, Family::D}) {
        EnumConfig cfg{family, 3, 2, 3};
        for (const Instance& inst : enumerate_instances(cfg))
            CHECK_NOTHROW(classify_elliptic(inst.levi, inst.sigma));
    }
}

TEST_CASE("splitting section composes by symmetric difference") {
    const LeviSpec three = make_levi(Family::B, {1, 1, 1}, 1);
    const InertiaDatum sigma = make_sigma(three, {"a", "b", "c"}, {}, {"a", "b", "c"});
    const auto section = splitting_section(three, sigma);
    CHECK(section.size() == 8);
    auto op_of = [&](unsigned flips) {
        for (const auto& [w, op] : section)
            if (w.flips == flips) return op;
        FAIL("operator not found");
        return FormalOperator{};
    };
    CHECK(op_of(0) == FormalOperator{0, false});
    CHECK(compose(op_of(0b011), op_of(0b110)) == op_of(0b101));

    // family D with c_n tau ~ tau: two tau-swaps cancel
    const LeviSpec d2 = make_levi(Family::D, {1, 1}, 1);
    const InertiaDatum ds = make_sigma(d2, {"a", "b"}, {}, {"a", "b"}, true);
    const auto dsec = splitting_section(d2, ds);
    CHECK(dsec.size() == 4);
    FormalOperator t1, t2;
    for (const auto& [w, op] : dsec) {
        if (w.flips == 0b01) t1 = op;
        if (w.flips == 0b10) t2 = op;
    }
    CHECK(t1.tau_flag);
    CHECK(t2.tau_flag);
    CHECK_FALSE(compose(t1, t2).tau_flag);
}

TEST_CASE("splitting section is a homomorphism on every instance") {
    for (Family family : {Family::B, Family::D}) {
        EnumConfig cfg{family, 3, 2, 2};
        for (const Instance& inst : enumerate_instances(cfg)) {
            const auto section = splitting_section(inst.levi, inst.sigma);
            for (const auto& [w1, op1] : section)
                for (const auto& [w2, op2] : section) {
                    const WeylElement prod = multiply(inst.levi, w1, w2);
                    bool found = false;
                    for (const auto& [w, op] : section)
                        if (w == prod) {
                            CHECK(compose(op1, op2) == op);
                            found = true;
                        }
                    CHECK(found);
                }
        }
    }
}

TEST_CASE("sign characters") {
    const LeviSpec three = make_levi(Family::B, {1, 1, 1}, 1);
    const RGroup r3 =
        r_group_bruteforce(three, make_sigma(three, {"a", "b", "c"}, {}, {"a", "b", "c"}));
    const auto chars = sign_characters(three, r3);
    REQUIRE(chars.size() == 8);
    // the generator list is C_1, C_2, C_3 and C_0 = C_1C_2C_3
    for (const SignChar& chi : chars) {
        int expect = chi.values[0] * chi.values[1] * chi.values[2];
        CHECK(chi.epsilon == expect);
    }
    // kappa = (-1, -1, +1) has epsilon +1
    bool seen = false;
    for (const SignChar& chi : chars)
        if (chi.values == std::vector<int>{-1, -1, 1}) {
            CHECK(chi.epsilon == 1);
            seen = true;
        }
    CHECK(seen);

    const LeviSpec one = make_levi(Family::B, {1}, 1);
    const auto pair = sign_characters(one, r_group_bruteforce(one, make_sigma(one, {"a"}, {}, {"a"})));
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].epsilon == 1);
    CHECK(pair[1].epsilon == -1);

    const LeviSpec two = make_levi(Family::B, {1, 1}, 1);
    const auto four =
        sign_characters(two, r_group_bruteforce(two, make_sigma(two, {"a", "b"}, {}, {"a", "b"})));
    int plus = 0;
    for (const SignChar& chi : four) plus += chi.epsilon > 0;
    CHECK(plus == 2);

    // calling without ellipticity is a precondition error
    CHECK_THROWS_AS(sign_characters(two, r_group_bruteforce(two, make_sigma(two, {"a", "b"}))),
                    std::invalid_argument);
}

TEST_CASE("sign character counts and C_0 across the stream") {
    for (Family family : {Family::B, Family::D}) {
        EnumConfig cfg{family, 3, 2, 2};
        for (const Instance& inst : enumerate_instances(cfg)) {
            const RGroup r = r_group_bruteforce(inst.levi, inst.sigma);
            const unsigned full = (1u << inst.levi.rank()) - 1u;
            const bool elliptic =
                std::any_of(r.elements.begin(), r.elements.end(),
                            [&](const WeylElement& w) { return w.flips == full; });
            if (!elliptic) continue;
            const auto chars = sign_characters(inst.levi, r);
            size_t plus = 0;
            for (const SignChar& chi : chars) plus += chi.epsilon > 0;
            CHECK(chars.size() == size_t(1) << r.rank);
            CHECK(plus * 2 == chars.size());
        }
    }
}
