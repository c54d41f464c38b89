#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sl2k/sampler.hpp"

namespace sl2k {

// Homogeneous spaces whose points carry the boundary arguments of
// cochains.  A space provides its basepoint, a transporter moving the
// basepoint to a given point, the group action, and samples of the
// basepoint stabilizer for invariance pre-checks.
template <Field K>
struct SpaceGN {
    using Point = Vec2<K>;
    static Point basepoint() { return Point(K(1), K(0)); }
    static Mat2<K> transporter(const Point& v) { return transporter_to_GN_point(v); }
    static Point act(const Mat2<K>& g, const Point& v) { return g * v; }
    static Mat2<K> sample_stabilizer(Rng& rng) {
        return unipotent(detail::sample_box(rng, 2.0, K{}));
    }
};

struct SpaceGA {
    using Point = PairGA;
    static Point basepoint() { return PairGA(ProjPoint::infinity(), ProjPoint::chart(0.0)); }
    static Mat2<real> transporter(const Point& p) { return transporter_pair(p.first, p.second); }
    static Point act(const Mat2<real>& g, const Point& p) { return pair_image(g, p); }
    static Mat2<real> sample_stabilizer(Rng& rng) { return torus<real>(rng.uniform(-1.0, 1.0)); }
};

// Cochain of bidegree (p, q) = (group_arity - 1, space_arity): a function
// of group_arity group elements and space_arity points.  Evaluators are
// pure closures, safe to call from several threads at once.
template <Field K, class Space>
struct Cochain {
    int group_arity; // p + 1, at least 1
    int space_arity; // q, at least 0
    std::function<double(std::span<const Mat2<K>>, std::span<const typename Space::Point>)> eval;
};

namespace detail {

// Alternating sum over argument omission, the homogeneous coboundary.
// apply(face) is called with each subspan-sized face of args in turn.
template <class T, class F>
double alternating_omit_sum(F&& apply, std::span<const T> args) {
    std::vector<T> face(args.begin() + 1, args.end());
    double acc = 0.0, sign = 1.0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i > 0) face[i - 1] = args[i - 1];
        acc += sign * apply(std::span<const T>(face));
        sign = -sign;
    }
    return acc;
}

} // namespace detail

// Simplicial coboundary of a (k-ary) function evaluated on k+1 points.
template <class T, class F>
double coboundary_simplicial(F&& f, std::span<const T> pts) {
    return detail::alternating_omit_sum<T>(f, pts);
}

// Differential in the group direction: the homogeneous coboundary over
// the group slots, bidegree (p, q) -> (p+1, q).
template <Field K, class Space>
Cochain<K, Space> d_up(const Cochain<K, Space>& c) {
    return {c.group_arity + 1, c.space_arity,
            [c](std::span<const Mat2<K>> gs, std::span<const typename Space::Point> pts) {
                return detail::alternating_omit_sum<Mat2<K>>(
                    [&](std::span<const Mat2<K>> face) { return c.eval(face, pts); }, gs);
            }};
}

namespace detail {

template <Field K, class Space>
Cochain<K, Space> d_right_weighted(const Cochain<K, Space>& c, double extra_sign) {
    // (-1)^(p+1) with p = group_arity - 1
    const double weight = ((c.group_arity % 2 == 0) ? 1.0 : -1.0) * extra_sign;
    return {c.group_arity, c.space_arity + 1,
            [c, weight](std::span<const Mat2<K>> gs, std::span<const typename Space::Point> pts) {
                return weight * alternating_omit_sum<typename Space::Point>(
                                    [&](std::span<const typename Space::Point> face) {
                                        return c.eval(gs, face);
                                    },
                                    pts);
            }};
}

} // namespace detail

// Differential in the space direction: the homogeneous coboundary over
// the point slots weighted by (-1)^(p+1), bidegree (p, q) -> (p, q+1).
// The weight makes d_up and d_right anticommute, so their sum squares
// to zero.
template <Field K, class Space>
Cochain<K, Space> d_right(const Cochain<K, Space>& c) {
    return detail::d_right_weighted(c, 1.0);
}

struct InvarianceCheck {
    std::uint64_t seed = 7;
    int probes = 16;
    double tol = 1e-9;
};

// Extend a stabilizer-invariant function of group tuples to a cochain
// with one point slot: eval(g..., x) = f(h_x^{-1} g...) where h_x is the
// transporter to x.  Invariance under the diagonal left action of the
// basepoint stabilizer is what makes the value independent of the choice
// of transporter; it is enforced by a randomized pre-check.
template <Field K, class Space, class F>
Cochain<K, Space> induce(F f, int group_arity, InvarianceCheck chk = {}) {
    const SamplerConfig probe_cfg{};
    for (int p = 0; p < chk.probes; ++p) {
        Rng rng = derive_stream(chk.seed, static_cast<std::uint64_t>(p));
        const Mat2<K> n = Space::sample_stabilizer(rng);
        std::vector<Mat2<K>> gs, ngs;
        gs.reserve(group_arity);
        ngs.reserve(group_arity);
        for (int i = 0; i < group_arity; ++i) {
            gs.push_back(sample_group<K>(rng, probe_cfg).g);
            ngs.push_back(n * gs.back());
        }
        if (std::abs(f(std::span<const Mat2<K>>(gs)) - f(std::span<const Mat2<K>>(ngs))) > chk.tol)
            fail(ErrorKind::not_invariant,
                 "induce: function not invariant under the basepoint stabilizer");
    }
    return {group_arity, 1,
            [f](std::span<const Mat2<K>> gs, std::span<const typename Space::Point> pts) {
                const Mat2<K> hinv = Space::transporter(pts[0]).inverse();
                std::vector<Mat2<K>> moved;
                moved.reserve(gs.size());
                for (const auto& g : gs) moved.push_back(hinv * g);
                return f(std::span<const Mat2<K>>(moved));
            }};
}

// Specialize a function of point tuples to a function of group tuples by
// evaluating at the orbit of a basepoint: (g0, ..., gp) -> f(g0 x, ..., gp x).
template <Field K, class Space, class F>
std::function<double(std::span<const Mat2<K>>)> evaluation_map(F f, typename Space::Point base) {
    return [f, base](std::span<const Mat2<K>> gs) {
        std::vector<typename Space::Point> pts;
        pts.reserve(gs.size());
        for (const auto& g : gs) pts.push_back(Space::act(g, base));
        return f(std::span<const typename Space::Point>(pts));
    };
}

} // namespace sl2k
