// Genericity predicates and the orbit invariants of vector pairs and
// boundary-pair pairs under the diagonal group action.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sl2k/sl2k.hpp"

using namespace sl2k;

TEST_CASE("vector pair genericity and the orbit parameter", "[homogeneous]") {
    const Vec2<real> e1(1.0, 0.0), e2(0.0, 1.0);
    REQUIRE(generic_vec_pair(e1, e2));
    REQUIRE(std::abs(orbit_parameter_N(e1, e2) - 1.0) < 1e-15);
    const Vec2<real> u(0.5, 0.25);
    REQUIRE_FALSE(generic_vec_pair(u, scaled(u, real(3.0))));
    try {
        orbit_parameter_N(u, scaled(u, real(-2.0)));
        FAIL("expected dependent_pair");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::dependent_pair);
    }
    // complex pair
    const Vec2<cplx> cu(cplx(1.0, 0.5), cplx(0.0, -1.0));
    const Vec2<cplx> cv(cplx(0.25, 0.0), cplx(1.0, 1.0));
    REQUIRE(std::abs(orbit_parameter_N(cu, cv) - det_pair(cu, cv)) < 1e-15);
}

TEST_CASE("orbit parameter is the determinant invariant of the diagonal action",
          "[homogeneous]") {
    SamplerConfig cfg;
    for (std::uint64_t attempt = 0, done = 0; done < 200; ++attempt) {
        Rng stream = derive_stream(29, attempt);
        const auto vecs = sample_generic_vectors<real>(stream, 2, cfg);
        if (!vecs) continue;
        const Mat2<real> g = sample_group<real>(stream, cfg).g;
        const real d = orbit_parameter_N((*vecs)[0], (*vecs)[1]);
        const real dg = orbit_parameter_N(g * (*vecs)[0], g * (*vecs)[1]);
        REQUIRE(std::abs(dg - d) < 1e-9 * (1.0 + std::abs(d)));
        ++done;
    }
}

TEST_CASE("boundary pair-of-pairs invariants", "[homogeneous]") {
    const auto c = [](double x) { return ProjPoint::chart(x); };
    const PairGA x(c(0.0), c(1.0));
    const PairGA y(c(2.0), c(3.0));
    const OrbitInvariantGA inv = orbit_invariant_GA(x, y);
    REQUIRE(inv.sign == orientation(c(0.0), c(1.0), c(2.0)));
    REQUIRE(std::abs(inv.b - cross_ratio(c(0.0), c(1.0), c(2.0), c(3.0))) < 1e-12);

    SamplerConfig cfg;
    for (std::uint64_t attempt = 0, done = 0; done < 200; ++attempt) {
        Rng stream = derive_stream(31, attempt);
        const auto pairs = sample_generic_pairs(stream, 2, cfg, false);
        if (!pairs) continue;
        const Mat2<real> g = sample_group<real>(stream, cfg).g;
        const OrbitInvariantGA a = orbit_invariant_GA((*pairs)[0], (*pairs)[1]);
        GenericityConfig img{1e-8, 1e-8, 1e-12};
        const OrbitInvariantGA b = orbit_invariant_GA(pair_image(g, (*pairs)[0]),
                                                      pair_image(g, (*pairs)[1]), img);
        REQUIRE(a.sign == b.sign);
        REQUIRE(std::abs(a.b - b.b) < 1e-9 * (1.0 + std::abs(a.b)));
        ++done;
    }
}

TEST_CASE("degenerate pair-of-pairs configurations reject", "[homogeneous]") {
    const auto c = [](double x) { return ProjPoint::chart(x); };
    const PairGA x(c(0.0), c(1.0));
    const PairGA y(c(0.0 + 1e-9), c(3.0));  // y1 collides with x1
    try {
        orbit_invariant_GA(x, y);
        FAIL("expected degenerate_configuration");
    } catch (const Error& e) {
        REQUIRE(e.kind() == ErrorKind::degenerate_configuration);
    }
}

TEST_CASE("representative second pair reproduces the fourth point", "[homogeneous]") {
    SamplerConfig cfg;
    for (std::uint64_t attempt = 0, done = 0; done < 200; ++attempt) {
        Rng stream = derive_stream(37, attempt);
        const auto pairs = sample_generic_pairs(stream, 2, cfg, true);
        if (!pairs) continue;
        const PairGA& x = (*pairs)[0];
        const PairGA& y = (*pairs)[1];
        const auto [s, t] = representative_second_pair(x, y);
        const TripleTransporter tt = transporter_triple(x.first, x.second, y.first);
        REQUIRE(s == tt.orientation);
        // the transporter carries the representative pair (s, t) onto
        // (y1, y2), completing the four-point configuration
        REQUIRE(proj_dist(mobius(tt.g, ProjPoint::chart(double(s))), y.first) < 1e-8);
        REQUIRE(proj_dist(mobius(tt.g, ProjPoint::chart(t)), y.second) < 1e-8);
        ++done;
    }
}
