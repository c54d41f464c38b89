// Projective points, the mobius action, cross ratios, orientation, and
// the point/pair/triple transporters with their golden values.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sl2k/sl2k.hpp"

using namespace sl2k;

namespace {

double chart_mobius(const Mat2<real>& g, double x) {
    return (g.a11 * x + g.a12) / (g.a21 * x + g.a22);
}

}  // namespace

TEST_CASE("homogeneous normalization and charts", "[projective]") {
    const ProjPoint p(2.0, 4.0);
    REQUIRE(std::abs(p.chart_value() - 0.5) < 1e-15);
    REQUIRE(std::abs(ProjPoint::chart(3.25).chart_value() - 3.25) < 1e-12);
    REQUIRE(ProjPoint::infinity().near_infinity(1e-6));
    REQUIRE_FALSE(ProjPoint::chart(100.0).near_infinity(1e-6));
    // scaled representatives are the same point
    REQUIRE(proj_dist(ProjPoint(1.0, 2.0), ProjPoint(-3.0, -6.0)) < 1e-15);
    REQUIRE(proj_dist(ProjPoint::infinity(), ProjPoint::chart(0.0)) > 0.99);
    try {
        ProjPoint::infinity().chart_value();
        FAIL("expected infinite_coordinate");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::infinite_coordinate);
    }
}

TEST_CASE("mobius action matches the chart formula", "[projective]") {
    SamplerConfig cfg;
    Rng rng = derive_stream(3, 0);
    for (int i = 0; i < 300; ++i) {
        const Mat2<real> g = sample_group<real>(rng, cfg).g;
        const double x = rng.uniform(-3.0, 3.0);
        const ProjPoint gx = mobius(g, ProjPoint::chart(x));
        if (gx.near_infinity(1e-6)) continue;
        REQUIRE(std::abs(gx.chart_value() - chart_mobius(g, x)) < 1e-9);
    }
    // infinity maps to a11/a21
    const Mat2<real> g(2.0, 1.0, 1.0, 1.0);
    REQUIRE(std::abs(mobius(g, ProjPoint::infinity()).chart_value() - 2.0) < 1e-12);
}

TEST_CASE("cross ratio golden values and transport route", "[projective]") {
    const ProjPoint inf = ProjPoint::infinity();
    const auto c = [](double x) { return ProjPoint::chart(x); };
    REQUIRE(std::abs(cross_ratio(inf, c(0), c(1), c(2.5)) - 2.5) < 1e-12);
    REQUIRE(std::abs(cross_ratio(c(0), c(1), c(2), c(3)) - 4.0 / 3.0) < 1e-12);
    // transport cross-check: carry (0,1,2) to (inf,0,s) with the triple
    // transporter's inverse and read the image of 3 relative to the
    // branch point; the cross ratio is the mobius-invariant coordinate.
    const TripleTransporter tt = transporter_triple(c(0), c(1), c(2));
    const Mat2<real> back = tt.g.inverse();
    const double image = mobius(back, c(3)).chart_value();
    REQUIRE(std::abs(image / tt.orientation - 4.0 / 3.0) < 1e-10);
    // coincident points in the denominator pair reject
    try {
        cross_ratio(c(0), c(1), c(1), c(0));
        FAIL("expected coincident_points");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::coincident_points);
    }
}

TEST_CASE("cross ratio is mobius invariant", "[projective]") {
    SamplerConfig cfg;
    int done = 0;
    for (std::uint64_t attempt = 0; done < 200; ++attempt) {
        Rng stream = derive_stream(5, attempt + 1);
        const auto pairs = sample_generic_pairs(stream, 2, cfg, false);
        if (!pairs) continue;
        const Mat2<real> g = sample_group<real>(stream, cfg).g;
        const double cr = cross_ratio((*pairs)[0].first, (*pairs)[0].second, (*pairs)[1].first,
                                      (*pairs)[1].second);
        const double crg =
            cross_ratio(mobius(g, (*pairs)[0].first), mobius(g, (*pairs)[0].second),
                        mobius(g, (*pairs)[1].first), mobius(g, (*pairs)[1].second));
        REQUIRE(std::abs(crg - cr) <= 1e-9 * (1.0 + std::abs(cr)));
        ++done;
    }
}

TEST_CASE("orientation branch of finite triples", "[projective]") {
    const auto c = [](double x) { return ProjPoint::chart(x); };
    REQUIRE(orientation(c(0), c(1), c(2)) == 1);
    REQUIRE(orientation(c(0), c(2), c(1)) == -1);
    REQUIRE(orientation(c(1), c(0), c(2)) == -1);
    // swapping the first two flips the branch
    SamplerConfig cfg;
    for (std::uint64_t attempt = 0, done = 0; done < 100; ++attempt) {
        Rng stream = derive_stream(17, attempt);
        const auto pairs = sample_generic_pairs(stream, 2, cfg, false);
        if (!pairs) continue;
        const ProjPoint a = (*pairs)[0].first, b = (*pairs)[0].second, d = (*pairs)[1].first;
        REQUIRE(orientation(a, b, d) == -orientation(b, a, d));
        ++done;
    }
    try {
        orientation(c(0), c(0), c(1));
        FAIL("expected degenerate_triple");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::degenerate_triple);
    }
}

TEST_CASE("pair transporter golden matrices", "[projective]") {
    const auto c = [](double x) { return ProjPoint::chart(x); };
    const Mat2<real> m1 = transporter_pair(c(1), c(0));
    REQUIRE(frob_dist(m1, Mat2<real>(1.0, 0.0, 1.0, 1.0)) < 1e-12);
    const Mat2<real> m2 = transporter_pair(c(2), c(1));
    REQUIRE(frob_dist(m2, Mat2<real>(2.0, 1.0, 1.0, 1.0)) < 1e-12);
}

TEST_CASE("pair transporter action, including points at infinity", "[projective]") {
    SamplerConfig cfg;
    for (std::uint64_t attempt = 0, done = 0; done < 300; ++attempt) {
        Rng stream = derive_stream(19, attempt);
        const auto pairs = sample_generic_pairs(stream, 1, cfg, false);
        if (!pairs) continue;
        const PairGA& x = (*pairs)[0];
        const Mat2<real> h = transporter_pair(x.first, x.second);
        REQUIRE(proj_dist(mobius(h, ProjPoint::infinity()), x.first) < 1e-9);
        REQUIRE(proj_dist(mobius(h, ProjPoint::chart(0.0)), x.second) < 1e-9);
        REQUIRE(std::abs(h.det() - 1.0) < 1e-10);
        ++done;
    }
    // explicit infinite coordinates on both slots
    const Mat2<real> h1 = transporter_pair(ProjPoint::infinity(), ProjPoint::chart(3.0));
    REQUIRE(proj_dist(mobius(h1, ProjPoint::infinity()), ProjPoint::infinity()) < 1e-9);
    REQUIRE(proj_dist(mobius(h1, ProjPoint::chart(0.0)), ProjPoint::chart(3.0)) < 1e-9);
    const Mat2<real> h2 = transporter_pair(ProjPoint::chart(-2.0), ProjPoint::infinity());
    REQUIRE(proj_dist(mobius(h2, ProjPoint::infinity()), ProjPoint::chart(-2.0)) < 1e-9);
    REQUIRE(proj_dist(mobius(h2, ProjPoint::chart(0.0)), ProjPoint::infinity()) < 1e-9);
    try {
        transporter_pair(ProjPoint::chart(1.0), ProjPoint::chart(1.0 + 1e-9));
        FAIL("expected coincident_points");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::coincident_points);
    }
}

TEST_CASE("triple transporter golden branches", "[projective]") {
    const auto c = [](double x) { return ProjPoint::chart(x); };
    const TripleTransporter plus = transporter_triple(c(0), c(1), c(2));
    REQUIRE(plus.orientation == 1);
    REQUIRE(proj_dist(mobius(plus.g, ProjPoint::infinity()), c(0)) < 1e-12);
    REQUIRE(proj_dist(mobius(plus.g, c(0)), c(1)) < 1e-12);
    REQUIRE(proj_dist(mobius(plus.g, c(1)), c(2)) < 1e-12);
    const TripleTransporter minus = transporter_triple(c(0), c(2), c(1));
    REQUIRE(minus.orientation == -1);
    REQUIRE(proj_dist(mobius(minus.g, ProjPoint::infinity()), c(0)) < 1e-12);
    REQUIRE(proj_dist(mobius(minus.g, c(0)), c(2)) < 1e-12);
    REQUIRE(proj_dist(mobius(minus.g, c(-1)), c(1)) < 1e-12);
    try {
        transporter_triple(ProjPoint::infinity(), c(0), c(1));
        FAIL("expected infinite_coordinate");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::infinite_coordinate);
    }
}

TEST_CASE("pair image respects the componentwise action", "[projective]") {
    SamplerConfig cfg;
    for (std::uint64_t attempt = 0, done = 0; done < 100; ++attempt) {
        Rng stream = derive_stream(23, attempt);
        const auto pairs = sample_generic_pairs(stream, 1, cfg, false);
        if (!pairs) continue;
        const Mat2<real> g = sample_group<real>(stream, cfg).g;
        const PairGA img = pair_image(g, (*pairs)[0]);
        REQUIRE(proj_dist(img.first, mobius(g, (*pairs)[0].first)) < 1e-12);
        REQUIRE(proj_dist(img.second, mobius(g, (*pairs)[0].second)) < 1e-12);
        ++done;
    }
}
