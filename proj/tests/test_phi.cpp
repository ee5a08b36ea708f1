// Copyright (c) 2026 the orliczlab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "orlicz/num.hpp"
#include "orlicz/phi.hpp"

#include "helpers.hpp"

using namespace orlicz;
using testing_helpers::random_phi;

TEST_CASE("power evaluation") {
    const auto F = PhiFunction::power(2.0);
    CHECK(F(3.0) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(F(0.0) == 0.0);
    CHECK(PhiFunction::power(1.0)(7.0) == doctest::Approx(7.0).epsilon(1e-14));
    CHECK(PhiFunction::power(0.5).inverse_at(4.0) == doctest::Approx(16.0).epsilon(1e-13));
    CHECK_THROWS_AS(PhiFunction::power(0.0), std::invalid_argument);
    CHECK_THROWS_AS(PhiFunction::power(-1.0), std::invalid_argument);
}

TEST_CASE("two-segment kink") {
    // slope 1 for t <= 1, slope 3 for t >= 1, F(1) = 1
    const auto F = PhiFunction::from_knots({0.0}, {0.0}, {1.0, 1.0}, {3.0, 1.0});
    CHECK(F(2.0) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(F(0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(F(0.0) == 0.0);
}

TEST_CASE("inverse reflects the graph") {
    const auto F = PhiFunction::power(2.0);
    const auto Fi = inverse(F);
    CHECK(Fi.tail_lo().value() == doctest::Approx(0.5));
    CHECK(Fi(9.0) == doctest::Approx(3.0).epsilon(1e-14));

    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        const auto G = random_phi(rng);
        const auto Gi = inverse(G);
        for (double t : {0.01, 0.3, 1.0, 2.5, 40.0}) {
            const double y = G(t);
            CHECK(Gi(y) == doctest::Approx(t).epsilon(1e-12));
        }
        // involution is exact on the representation
        const auto Gii = inverse(Gi);
        REQUIRE(Gii.knots_u().size() == G.knots_u().size());
        for (std::size_t k = 0; k < G.knots_u().size(); ++k) {
            CHECK(Gii.knots_u()[k] == G.knots_u()[k]);
            CHECK(Gii.knots_v()[k] == G.knots_v()[k]);
        }
        CHECK(Gii.tail_lo().value() == G.tail_lo().value());
        CHECK(Gii.tail_hi().value() == G.tail_hi().value());
    }
}

TEST_CASE("tilde is the (u,v) -> (-u,-v) reflection") {
    const auto P = PhiFunction::power(1.7);
    const auto Pt = tilde(P);
    for (double t : {0.1, 0.9, 3.0}) CHECK(Pt(t) == doctest::Approx(P(t)).epsilon(1e-13));

    // F(2) = 8 with slope 3 there: F̃(1/2) = 1/8
    const auto F = PhiFunction::from_knots({0.0}, {0.0}, {1.0, 1.0}, {3.0, 1.0});
    CHECK(tilde(F)(0.5) == doctest::Approx(1.0 / 8.0).epsilon(1e-14));

    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const auto G = random_phi(rng);
        const auto Gtt = tilde(tilde(G));
        REQUIRE(Gtt.knots_u().size() == G.knots_u().size());
        for (std::size_t k = 0; k < G.knots_u().size(); ++k) {
            CHECK(Gtt.knots_u()[k] == G.knots_u()[k]);
            CHECK(Gtt.knots_v()[k] == G.knots_v()[k]);
        }
    }
}

TEST_CASE("compose multiplies slopes") {
    const auto F = compose(PhiFunction::power(2.0), PhiFunction::power(3.0));
    CHECK(F.segment_count() == 0);
    CHECK(F.tail_lo().value() == 6.0);
    CHECK(F(2.0) == doctest::Approx(64.0).epsilon(1e-13));

    // F ∘ F^{-1} collapses to the identity
    const auto P = PhiFunction::power(2.0);
    const auto I = compose(P, inverse(P));
    CHECK(I.segment_count() == 0);
    CHECK(I.tail_lo().value() == 1.0);
    CHECK(I.tail_hi().value() == 1.0);
    CHECK(I(5.0) == doctest::Approx(5.0).epsilon(1e-14));

    // (two-segment F) ∘ T^2 against pointwise evaluation
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const auto G = random_phi(rng);
        const auto H = random_phi(rng);
        const auto C = compose(G, H);
        for (double t : {0.05, 0.4, 1.0, 3.0, 17.0}) {
            CHECK(C(t) == doctest::Approx(G(H(t))).epsilon(1e-11));
        }
    }
}

TEST_CASE("matuszewska indices of powers and kinks") {
    const auto mo = mo_indices(PhiFunction::power(2.5));
    CHECK(mo.p_m == 2.5);
    CHECK(mo.q_m == 2.5);
    CHECK(mo.method == MatuszewskaIndices::Method::exact_from_slopes);

    const auto F = PhiFunction::from_knots({0.0}, {0.0}, {1.0, 1.0}, {3.0, 1.0});
    const auto moF = mo_indices(F);
    CHECK(moF.p_m == 1.0);
    CHECK(moF.q_m == 3.0);
    CHECK(moF.p_m <= moF.q_m);
}

TEST_CASE("alternating slope blocks of growing length read (1,3) by window scan") {
    // log-blocks of length 1, 2, 4, 8, ... alternating slopes 1 and 3; a
    // truncation of the unbounded pattern
    std::vector<double> us{0.0}, vs{0.0};
    double len = 1.0;
    for (int j = 0; j < 8; ++j) {
        const double s = (j % 2 == 0) ? 1.0 : 3.0;
        us.push_back(us.back() + len);
        vs.push_back(vs.back() + s * len);
        len *= 2.0;
    }
    const auto F = PhiFunction::from_knots(us, vs, {1.0, 1.0}, {1.0, 1.0})
                       .with_pattern(std::nullopt);
    const auto mo = mo_indices(F);
    CHECK(mo.method == MatuszewskaIndices::Method::window_scan);
    CHECK(mo.p_m == doctest::Approx(1.0));
    CHECK(mo.q_m == doctest::Approx(3.0));
    CHECK(!mo.window_curve.empty());

    // independent dense-grid chord oracle at the longest-run window
    const auto [olo, ohi] = testing_helpers::window_scan_oracle(F, 32.0, -40.0, 130.0);
    CHECK(mo.p_m == doctest::Approx(olo).epsilon(1e-9));
    // sup chords of the longest 3-run length reach 3 exactly inside that run
    const auto [olo2, ohi2] = testing_helpers::window_scan_oracle(F, 60.0, 60.0, 130.0);
    CHECK(ohi2 <= 3.0 + 1e-12);
    CHECK(mo.q_m == doctest::Approx(3.0).epsilon(1e-9));
    (void)ohi;
    (void)olo2;
}

TEST_CASE("composition law for indices") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 300; ++i) {
        const auto F = random_phi(rng);
        const auto G = random_phi(rng);
        const auto moF = mo_indices(F), moG = mo_indices(G);
        const auto moC = mo_indices(compose(F, G));
        CHECK(moC.p_m >= moF.p_m * moG.p_m - 1e-12);
        // p_m(F∘G^{-1}) >= p_m(F)/q_m(G)
        const auto moFGi = mo_indices(compose(F, inverse(G)));
        CHECK(moFGi.p_m >= moF.p_m / moG.q_m - 1e-12);
        CHECK(moC.p_m <= moC.q_m);
    }
}

TEST_CASE("dilatory and delta2 predicates") {
    CHECK(is_dilatory(PhiFunction::power(2.0)) == Tristate::yes);
    CHECK(satisfies_delta2(PhiFunction::power(2.0)) == Tristate::yes);

    // direct definitional search: chord gains over a long window h obey
    // inf gain >= p_m·h - C_p and sup gain <= q_m·h + C_q exactly, where
    // C_p, C_q are the interior slope deficits/excesses relative to the
    // indices; in particular the dilation constants c1 = e^h, c2 = e^{inf}
    // exist, which is the dilatory condition
    std::mt19937_64 rng(45);
    for (int i = 0; i < 40; ++i) {
        const auto F = random_phi(rng);
        const auto mo = mo_indices(F);
        double C_p = 0.0, C_q = 0.0;
        for (std::size_t s = 0; s < F.segment_count(); ++s) {
            const double len = F.knots_u()[s + 1] - F.knots_u()[s];
            C_p += std::max(0.0, mo.p_m - F.segment_slope(s)) * len;
            C_q += std::max(0.0, F.segment_slope(s) - mo.q_m) * len;
        }
        const double h = 40.0;
        const auto [lo_mean, hi_mean] = testing_helpers::window_scan_oracle(
            F, h, F.knots_u().front() - h - 5.0, F.knots_u().back() + 5.0);
        CHECK(lo_mean * h >= mo.p_m * h - C_p - 1e-7);
        CHECK(hi_mean * h <= mo.q_m * h + C_q + 1e-7);
        CHECK(lo_mean > 0.0);  // some c2 > 1 works, so F is dilatory
        CHECK((is_dilatory(F) == Tristate::yes));
        CHECK((satisfies_delta2(F) == Tristate::yes));
    }
}

TEST_CASE("equivalence") {
    const auto F = PhiFunction::power(2.0);
    CHECK(equivalent(F, F, 1.0));
    // 4·T^2 is a v-shift by ln 4; the required constant is exactly 2
    const auto G = F.vshift(std::log(4.0));
    CHECK(equivalence_constant(F, G) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(equivalent(F, G, 2.0));
    CHECK(!equivalent(F, G, 1.9));
    // different powers are never equivalent
    CHECK(equivalence_constant(PhiFunction::power(1.0), PhiFunction::power(2.0)) ==
          num::pos_inf);
    CHECK(!equivalent(PhiFunction::power(1.0), PhiFunction::power(2.0), 1e9));
    CHECK_THROWS_AS(equivalent(F, F, 0.5), std::invalid_argument);
}

TEST_CASE("complementary function") {
    // T^p -> T^{p'}
    const auto C2 = complementary(PhiFunction::power(2.0));
    CHECK(C2.tail_lo().value() == doctest::Approx(2.0));
    const auto C3 = complementary(PhiFunction::power(3.0));
    CHECK(C3.tail_lo().value() == doctest::Approx(1.5));

    // segment slopes {2,4} -> complementary slopes {2, 4/3}; verify the
    // product identity F^{-1}(t)·F*^{-1}(t) = t numerically on a grid
    const auto F = PhiFunction::from_knots({0.0}, {0.0}, {2.0, 1.0}, {4.0, 1.0});
    const auto Fs = complementary(F);
    CHECK(Fs.tail_lo().value() == doctest::Approx(2.0));
    CHECK(Fs.tail_hi().value() == doctest::Approx(4.0 / 3.0));
    const auto Fi = inverse(F), Fsi = inverse(Fs);
    for (double t : {1e-4, 0.1, 1.0, 7.0, 1e5})
        CHECK(Fi(t) * Fsi(t) == doctest::Approx(t).epsilon(1e-12));

    CHECK_THROWS_AS(complementary(PhiFunction::power(1.0)), NotNFunction);
    CHECK_THROWS_AS(complementary(PhiFunction::from_knots({0.0}, {0.0}, {0.5, 1.0}, {2.0, 1.0})),
                    NotNFunction);
}

TEST_CASE("round trip through inverse on random graphs") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 1000; ++i) {
        const auto F = random_phi(rng);
        const auto Fi = inverse(F);
        for (double t : {0.02, 0.7, 1.0, 5.0, 300.0})
            CHECK(Fi(F(t)) == doctest::Approx(t).epsilon(1e-12));
    }
}
