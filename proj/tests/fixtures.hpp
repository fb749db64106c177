#pragma once

// Shared in-code test graphs. The JSON fixture files under fixtures/ mirror
// these; tests that exercise parsing load the files instead.

#include "tropjac/metric_graph.hpp"
#include "tropjac/stability.hpp"

namespace testfix {

using namespace tropjac;

// Loop with two vertices of weight one, both edges of length one.
inline MetricGraph make_l2() {
    return MetricGraph({{"v1", 1}, {"v2", 1}},
                       {{"e1", 0, 1, Rational(1)}, {"e2", 0, 1, Rational(1)}});
}

inline Polarization l2_polarization() { return Polarization(Divisor({2, 2})); }

// Unit triangle, weightless.
inline MetricGraph make_triangle() {
    return MetricGraph({{"v1", 0}, {"v2", 0}, {"v3", 0}},
                       {{"e1", 0, 1, Rational(1)},
                        {"e2", 1, 2, Rational(1)},
                        {"e3", 2, 0, Rational(1)}});
}

// Two unit triangles joined by a bridge: b1 = 2.
inline MetricGraph make_dumbbell() {
    return MetricGraph({{"a1", 0}, {"a2", 0}, {"a3", 0}, {"b1", 0}, {"b2", 0}, {"b3", 0}},
                       {{"ea1", 0, 1, Rational(1)},
                        {"ea2", 1, 2, Rational(1)},
                        {"ea3", 2, 0, Rational(1)},
                        {"br", 0, 3, Rational(1)},
                        {"eb1", 3, 4, Rational(1)},
                        {"eb2", 4, 5, Rational(1)},
                        {"eb3", 5, 3, Rational(1)}});
}

inline Polarization unit_polarization(const MetricGraph& g) {
    return Polarization(Divisor(std::vector<Int>(g.vertex_count(), 1)));
}

// Single vertex with one loop.
inline MetricGraph make_loop1() {
    return MetricGraph({{"v", 0}}, {{"e", 0, 0, Rational(1)}});
}

// Path on two vertices (a tree).
inline MetricGraph make_path2() {
    return MetricGraph({{"v1", 0}, {"v2", 0}}, {{"e", 0, 1, Rational(1)}});
}

}  // namespace testfix
