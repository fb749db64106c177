#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tropjac/stability.hpp"

using namespace tropjac;
using namespace testfix;

namespace {

std::set<SheafType> as_set(const std::vector<SheafType>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("slope") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    CHECK(slope(l2, h, {0, Divisor({0, 2})}) == 0);
    CHECK(slope(l2, h, {0b11, Divisor({0, 0})}) == 0);
    // Degree g-1 always has slope 0.
    CHECK(slope(l2, h, {0b01, Divisor({1, 0})}) == 0);
    CHECK(slope(l2, h, {0, Divisor({2, 2})}) == Rational(1, 4));
}

TEST_CASE("subsheaf degree") {
    MetricGraph l2 = make_l2();
    CHECK(subsheaf_degree(l2, {0, Divisor({0, 2})}, 0b10) == 0);
    CHECK(subsheaf_degree(l2, {0b11, Divisor({0, 0})}, 0b10) == 0);

    // Isolated part: plain restriction of d.
    MetricGraph two({{"v1", 0}, {"v2", 0}, {"v3", 0}}, {{"e1", 0, 1, Rational(1)}});
    CHECK(subsheaf_degree(two, {0, Divisor({1, 2, 5})}, 0b100) == 5);
}

TEST_CASE("basic inequality right-hand side") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    SheafType t{0, Divisor({0, 2})};
    CHECK(basic_rhs(l2, h, t, 0b10) == 2);  // equality: LHS = 2
    CHECK(basic_rhs(l2, h, t, 0b01) == 2);  // strict: LHS = 0
    CHECK(subsheaf_degree(l2, t, 0b10) + boundary_counts(l2, 0b10, t.s).not_in_s -
              boundary_counts(l2, 0b10, t.s).s_internal ==
          t.d.sum_over(0b10));

    // In degree g-1 the rhs is H-independent.
    for (auto hv : {Divisor({2, 2}), Divisor({1, 3}), Divisor({7, 1})}) {
        Polarization hp(hv);
        SheafType u{0b01, Divisor({1, 0})};  // degree 2 = g - 1
        CHECK(basic_rhs(l2, hp, u, 0b10) ==
              normalized_genus(l2, 0b10, u.s) - 1 + boundary_counts(l2, 0b10, u.s).not_in_s);
    }
}

TEST_CASE("semistable and stable flags") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();

    auto eq = equality_subcurves(l2, h, {0, Divisor({0, 2})});
    REQUIRE(eq.has_value());
    CHECK(*eq == std::vector<VertexSet>{0b10});
    CHECK(is_semistable(l2, h, {0, Divisor({0, 2})}));
    CHECK(!is_stable(l2, h, {0, Divisor({0, 2})}));

    CHECK(is_stable(l2, h, {0, Divisor({1, 1})}));
    CHECK(!is_semistable(l2, h, {0, Divisor({3, -1})}));
}

TEST_CASE("polystable flag") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    CHECK(is_polystable(l2, h, {0b11, Divisor({0, 0})}));
    CHECK(!is_polystable(l2, h, {0b01, Divisor({0, 1})}));
    CHECK(!is_polystable(l2, h, {0, Divisor({0, 2})}));
    // Stable implies polystable.
    CHECK(is_polystable(l2, h, {0, Divisor({1, 1})}));
}

TEST_CASE("quasistable flag") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    SheafType t{0, Divisor({0, 2})};
    CHECK(is_quasistable(l2, h, t, 0));
    CHECK(!is_quasistable(l2, h, t, 1));
    CHECK(is_quasistable(l2, h, {0, Divisor({1, 1})}, 0));
    CHECK(is_quasistable(l2, h, {0, Divisor({1, 1})}, 1));
    CHECK_THROWS_AS(is_quasistable(l2, h, t, 7), Error);
}

TEST_CASE("classify report invariants") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    auto r = classify(l2, h, {0, Divisor({0, 2})});
    CHECK(r.semistable);
    CHECK(!r.stable);
    CHECK(!r.polystable);
    CHECK(r.quasistable_for == std::vector<int>{0});
    CHECK(r.equality_subcurves == std::vector<VertexSet>{0b10});
}

TEST_CASE("grade: paper example and degenerate cases") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    SheafType expected{0b11, Divisor({0, 0})};
    CHECK(grade(l2, h, {0, Divisor({0, 2})}) == expected);
    CHECK(grade(l2, h, {0, Divisor({2, 0})}) == expected);
    CHECK(grade(l2, h, expected) == expected);
    CHECK_THROWS_AS(grade(l2, h, {0, Divisor({3, -1})}), Error);
}

TEST_CASE("grade: idempotent, degree-preserving, choice-independent") {
    MetricGraph graphs[] = {make_l2(), make_triangle(), make_dumbbell()};
    Polarization pols[] = {l2_polarization(), unit_polarization(graphs[1]),
                           unit_polarization(graphs[2])};
    for (int i = 0; i < 3; ++i) {
        const MetricGraph& g = graphs[i];
        const Polarization& h = pols[i];
        Int gg = g.genus();
        for (Int deg : {gg - 1, gg}) {
            for (const auto& t : enumerate_types(g, h, deg, TypeMode::Semistable)) {
                SheafType base = grade(g, h, t);
                CHECK(base.degree() == t.degree());
                CHECK(is_polystable(g, h, base));
                CHECK(grade(g, h, base) == base);
                for (std::uint64_t seed = 1; seed <= 10; ++seed)
                    CHECK(grade(g, h, t, seed) == base);
            }
        }
    }
}

TEST_CASE("enumerate: paper sets on the two-vertex loop") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();

    auto ps2 = enumerate_types(l2, h, 2, TypeMode::Polystable);
    CHECK(as_set(ps2) == std::set<SheafType>{{0b11, Divisor({0, 0})}, {0, Divisor({1, 1})}});

    auto ps3 = enumerate_types(l2, h, 3, TypeMode::Polystable);
    CHECK(as_set(ps3) == std::set<SheafType>{{0, Divisor({2, 1})},
                                             {0, Divisor({1, 2})},
                                             {0b01, Divisor({1, 1})},
                                             {0b10, Divisor({1, 1})}});

    // Degree g: semistable = stable = polystable = quasistable(v).
    auto ss = enumerate_types(l2, h, 3, TypeMode::Semistable);
    auto st = enumerate_types(l2, h, 3, TypeMode::Stable);
    CHECK(ss == st);
    CHECK(ss == ps3);
    for (int v = 0; v < 2; ++v)
        CHECK(ss == enumerate_types(l2, h, 3, TypeMode::Quasistable, v));
}

TEST_CASE("enumerate results are sorted and duplicate-free") {
    MetricGraph g = make_triangle();
    Polarization h = unit_polarization(g);
    auto list = enumerate_types(g, h, g.genus(), TypeMode::Semistable);
    CHECK(std::is_sorted(list.begin(), list.end()));
    CHECK(std::adjacent_find(list.begin(), list.end()) == list.end());
    CHECK(!list.empty());
}

TEST_CASE("implication chain on every boxed type") {
    MetricGraph graphs[] = {make_l2(), make_triangle(), make_dumbbell()};
    Polarization pols[] = {l2_polarization(), unit_polarization(graphs[1]),
                           unit_polarization(graphs[2])};
    for (int i = 0; i < 3; ++i) {
        const MetricGraph& g = graphs[i];
        const Polarization& h = pols[i];
        Int gg = g.genus();
        for (Int deg : {gg - 1, gg}) {
            for (const auto& t : enumerate_types(g, h, deg, TypeMode::BoxAll)) {
                bool ss = is_semistable(g, h, t);
                bool st = is_stable(g, h, t);
                bool ps = is_polystable(g, h, t);
                if (st) CHECK(ps);
                if (ps) CHECK(ss);
                for (int v = 0; v < g.vertex_count(); ++v) {
                    bool qs = is_quasistable(g, h, t, v);
                    if (st) CHECK(qs);
                    if (qs) CHECK(ss);
                }
            }
        }
    }
}

TEST_CASE("subcurves with boundary inside S give slope equalities on both sides") {
    MetricGraph graphs[] = {make_l2(), make_dumbbell()};
    Polarization pols[] = {l2_polarization(), unit_polarization(graphs[1])};
    for (int i = 0; i < 2; ++i) {
        const MetricGraph& g = graphs[i];
        const Polarization& h = pols[i];
        Int gg = g.genus();
        VertexSet full = full_set(g.vertex_count());
        for (Int deg : {gg - 1, gg}) {
            for (const auto& t : enumerate_types(g, h, deg, TypeMode::Semistable)) {
                auto eq = equality_subcurves(g, h, t);
                REQUIRE(eq.has_value());
                for (VertexSet w = 1; w < full; ++w) {
                    if (boundary_counts(g, w, t.s).not_in_s != 0) continue;
                    CHECK(std::count(eq->begin(), eq->end(), w) == 1);
                    CHECK(std::count(eq->begin(), eq->end(), full & ~w) == 1);
                }
            }
        }
    }
}

TEST_CASE("stable and quasistable types keep G - S connected") {
    MetricGraph g = make_dumbbell();
    Polarization h = unit_polarization(g);
    Int gg = g.genus();
    for (Int deg : {gg - 1, gg, gg + 1}) {
        for (const auto& t : enumerate_types(g, h, deg, TypeMode::Stable))
            CHECK(components_minus(g, t.s).size() == 1);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (const auto& t : enumerate_types(g, h, deg, TypeMode::Quasistable, v))
                CHECK(components_minus(g, t.s).size() == 1);
    }
}

TEST_CASE("degree g-1 stability is polarization independent") {
    MetricGraph l2 = make_l2();
    std::vector<Divisor> pols = {Divisor({2, 2}), Divisor({1, 3}), Divisor({3, 1}),
                                 Divisor({1, 1}), Divisor({5, 2})};
    auto ss0 = enumerate_types(l2, Polarization(pols[0]), 2, TypeMode::Semistable);
    auto st0 = enumerate_types(l2, Polarization(pols[0]), 2, TypeMode::Stable);
    for (std::size_t i = 1; i < pols.size(); ++i) {
        Polarization h(pols[i]);
        CHECK(enumerate_types(l2, h, 2, TypeMode::Semistable) == ss0);
        CHECK(enumerate_types(l2, h, 2, TypeMode::Stable) == st0);
    }
}

TEST_CASE("Oda-Seshadri parameter") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    SheafType t{0, Divisor({0, 2})};
    OSParameter q = os_parameter(l2, h, 2, 0, t);
    CHECK(q.q == VecQ{Rational(-1), Rational(1)});
    CHECK(q.q[0] + q.q[1] == 0);

    // All edges in S: the half-integral boundary term vanishes.
    SheafType full_s{0b11, Divisor({0, 0})};
    OSParameter qs = os_parameter(l2, h, 2, 0, full_s);
    CHECK(qs.q == VecQ{Rational(-2), Rational(0)});
}

TEST_CASE("Oda-Seshadri stability") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    OSParameter q = os_parameter(l2, h, 2, 0, {0, Divisor({0, 2})});
    SheafType twisted{0, Divisor({-2, 2})};
    CHECK(os_is_semistable(l2, q, twisted));
    CHECK(!os_is_stable(l2, q, twisted));

    MetricGraph tri = make_triangle();
    OSParameter zero{VecQ(3, Rational(0)), std::nullopt};
    CHECK(os_is_semistable(tri, zero, {0, Divisor({0, 0, 0})}));

    CHECK_THROWS_AS(os_is_semistable(l2, q, {0, Divisor({0, 2})}), Error);
}

TEST_CASE("slope stability translates to Oda-Seshadri stability") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    int basepoint = 0;
    for (Int deg : {2, 3}) {
        for (const auto& t : enumerate_types(l2, h, deg, TypeMode::BoxAll)) {
            OSParameter q = os_parameter(l2, h, deg, basepoint, t);
            SheafType tw = twist(t, basepoint, -deg);
            CHECK(is_semistable(l2, h, t) == os_is_semistable(l2, q, tw));
            CHECK(is_stable(l2, h, t) == os_is_stable(l2, q, tw));
        }
    }
}

TEST_CASE("quasistability translates to q_H^v stability") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    int basepoint = 0;
    for (Int deg : {2, 3}) {
        for (int v = 0; v < 2; ++v) {
            for (const auto& t : enumerate_types(l2, h, deg, TypeMode::BoxAll)) {
                OSParameter qv = os_parameter_v(l2, h, deg, basepoint, v, t);
                SheafType tw = twist(t, basepoint, -deg);
                CHECK(is_quasistable(l2, h, t, v) == os_is_stable(l2, qv, tw));
            }
        }
    }
}

TEST_CASE("epsilon choice") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    Rational eps = epsilon_for_quasistability(l2, h, 2, 0);
    CHECK(eps > 0);
    CHECK(eps < 1);
    CHECK(eps == Rational(1, 2));

    // Any valid epsilon yields the same stable set; compare eps with eps/2.
    for (int v = 0; v < 2; ++v) {
        for (const auto& t : enumerate_types(l2, h, 2, TypeMode::BoxAll)) {
            OSParameter qv = os_parameter_v(l2, h, 2, 0, v, t);
            if (!qv.epsilon) continue;
            OSParameter qv_half = os_parameter(l2, h, 2, 0, t);
            Rational e2 = *qv.epsilon / 2;
            for (int u = 0; u < 2; ++u) {
                if (u == v)
                    qv_half.q[u] -= e2;
                else
                    qv_half.q[u] += e2 / (l2.vertex_count() - 1);
            }
            SheafType tw = twist(t, 0, -2);
            CHECK(os_is_stable(l2, qv, tw) == os_is_stable(l2, qv_half, tw));
        }
    }

    // Degree g: every quasistable type is stable, so q_H^v = q_H.
    SheafType t3{0, Divisor({2, 1})};
    OSParameter q3 = os_parameter(l2, h, 3, 0, t3);
    OSParameter q3v = os_parameter_v(l2, h, 3, 0, 0, t3);
    CHECK(q3.q == q3v.q);
    CHECK(!q3v.epsilon);
}

TEST_CASE("twist") {
    MetricGraph l2 = make_l2();
    Polarization h = l2_polarization();
    SheafType t{0b01, Divisor({1, 1})};
    CHECK(twist(t, 0, 0) == t);
    CHECK(twist(twist(t, 1, 3), 1, -3) == t);

    // Twisting degree-g types down by one at v gives the v-quasistable
    // degree-(g-1) types.
    for (int v = 0; v < 2; ++v) {
        std::set<SheafType> twisted;
        for (const auto& u : enumerate_types(l2, h, 3, TypeMode::Polystable))
            twisted.insert(twist(u, v, -1));
        CHECK(twisted == as_set(enumerate_types(l2, h, 2, TypeMode::Quasistable, v)));
    }
}

TEST_CASE("vertex cap") {
    std::vector<VertexData> vs;
    std::vector<EdgeData> es;
    for (int i = 0; i < 18; ++i) vs.push_back({"v" + std::to_string(i), 0});
    for (int i = 0; i + 1 < 18; ++i)
        es.push_back({"e" + std::to_string(i), i, i + 1, Rational(1)});
    MetricGraph big(vs, es);
    Polarization h(Divisor(std::vector<Int>(18, 1)));
    SheafType t{0, Divisor(18)};
    CHECK_THROWS_AS(is_semistable(big, h, t), Error);
    Limits force;
    force.force = true;
    CHECK(is_semistable(big, h, t, force));
}
