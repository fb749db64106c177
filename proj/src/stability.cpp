#include "tropjac/stability.hpp"

#include <algorithm>
#include <random>

namespace tropjac {

Polarization::Polarization(Divisor multidegree) : d_(std::move(multidegree)) {
    for (int v = 0; v < d_.size(); ++v)
        if (d_[v] < 1)
            throw Error(ErrorCode::E_POLARIZATION,
                        "polarization must be strictly positive at every vertex");
    total_ = d_.degree();
}

void check_vertex_cap(const MetricGraph& g, const Limits& limits) {
    if (!limits.force && g.vertex_count() > limits.max_vertices)
        throw Error(ErrorCode::E_CAP, "vertex count " + std::to_string(g.vertex_count()) +
                                          " exceeds cap " + std::to_string(limits.max_vertices));
}

namespace {

void check_type(const MetricGraph& g, const SheafType& t) {
    if (t.d.size() != g.vertex_count())
        throw Error(ErrorCode::E_DOMAIN, "type multidegree size does not match graph");
    if (g.edge_count() < 64 && (t.s >> g.edge_count()) != 0)
        throw Error(ErrorCode::E_ID, "type S references unknown edges");
}

// Cross-multiplied slack of the basic inequality for subcurve w:
//   slack * deg(H) = degH * (g(W^nu_S) - 1 + bd_notS(W) - sum_W d)
//                    + degH|_W * (deg F + 1 - g).
// Positive slack = strict inequality, zero = equality, negative = violation.
Int basic_slack_scaled(const MetricGraph& g, const Polarization& h, const SheafType& t,
                       VertexSet w, Int excess) {
    BoundaryCounts bc = boundary_counts(g, w, t.s);
    Int gnu = normalized_genus(g, w, t.s);
    return h.total() * (gnu - 1 + bc.not_in_s - t.d.sum_over(w)) + h.sum_over(w) * excess;
}

Int degree_excess(const MetricGraph& g, const SheafType& t) {
    return t.degree() + 1 - g.genus();
}

}  // namespace

Rational slope(const MetricGraph& g, const Polarization& h, const SheafType& t) {
    check_type(g, t);
    return Rational(static_cast<long>(degree_excess(g, t))) / Rational(static_cast<long>(h.total()));
}

Int subsheaf_degree(const MetricGraph& g, const SheafType& t, VertexSet w) {
    check_type(g, t);
    BoundaryCounts bc = boundary_counts(g, w, t.s);
    return t.d.sum_over(w) + bc.s_internal - bc.not_in_s;
}

Rational basic_rhs(const MetricGraph& g, const Polarization& h, const SheafType& t, VertexSet w) {
    check_type(g, t);
    BoundaryCounts bc = boundary_counts(g, w, t.s);
    Rational frac = Rational(static_cast<long>(h.sum_over(w))) * degree_excess(g, t) /
                    Rational(static_cast<long>(h.total()));
    return Rational(static_cast<long>(normalized_genus(g, w, t.s) - 1 + bc.not_in_s)) + frac;
}

std::optional<std::vector<VertexSet>> equality_subcurves(const MetricGraph& g,
                                                         const Polarization& h,
                                                         const SheafType& t,
                                                         const Limits& limits) {
    check_type(g, t);
    check_vertex_cap(g, limits);
    Int excess = degree_excess(g, t);
    std::vector<VertexSet> eq;
    VertexSet full = full_set(g.vertex_count());
    for (VertexSet w = 1; w < full; ++w) {
        Int slack = basic_slack_scaled(g, h, t, w, excess);
        if (slack < 0) return std::nullopt;
        if (slack == 0) eq.push_back(w);
    }
    return eq;
}

bool is_semistable(const MetricGraph& g, const Polarization& h, const SheafType& t,
                   const Limits& limits) {
    return equality_subcurves(g, h, t, limits).has_value();
}

bool is_stable(const MetricGraph& g, const Polarization& h, const SheafType& t,
               const Limits& limits) {
    auto eq = equality_subcurves(g, h, t, limits);
    return eq.has_value() && eq->empty();
}

bool is_polystable(const MetricGraph& g, const Polarization& h, const SheafType& t,
                   const Limits& limits) {
    if (!is_semistable(g, h, t, limits)) return false;
    for (VertexSet comp : components_minus(g, t.s)) {
        std::vector<int> vmap;
        MetricGraph c = induced_subgraph(g, comp, t.s, vmap);
        int nc = c.vertex_count();
        Divisor dc(nc), hc(nc);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (vmap[v] < 0) continue;
            dc[vmap[v]] = t.d[v];
            hc[vmap[v]] = h[v];
        }
        if (!is_stable(c, Polarization(std::move(hc)), SheafType{0, std::move(dc)}, limits))
            return false;
    }
    return true;
}

bool is_quasistable(const MetricGraph& g, const Polarization& h, const SheafType& t, int v,
                    const Limits& limits) {
    if (v < 0 || v >= g.vertex_count())
        throw Error(ErrorCode::E_ID, "quasistability: unknown vertex");
    auto eq = equality_subcurves(g, h, t, limits);
    if (!eq) return false;
    for (VertexSet w : *eq)
        if (set_contains(w, v)) return false;
    return true;
}

StabilityReport classify(const MetricGraph& g, const Polarization& h, const SheafType& t,
                         const Limits& limits) {
    StabilityReport r;
    auto eq = equality_subcurves(g, h, t, limits);
    r.semistable = eq.has_value();
    if (!r.semistable) return r;
    r.equality_subcurves = *eq;
    r.stable = eq->empty();
    r.polystable = is_polystable(g, h, t, limits);
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool qs = true;
        for (VertexSet w : *eq)
            if (set_contains(w, v)) {
                qs = false;
                break;
            }
        if (qs) r.quasistable_for.push_back(v);
    }
    return r;
}

namespace {

// Lexicographic order on subcurves viewed as sorted vertex lists.
bool lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int va = __builtin_ctzll(a), vb = __builtin_ctzll(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

}  // namespace

SheafType grade(const MetricGraph& g, const Polarization& h, const SheafType& t,
                std::optional<std::uint64_t> seed, const Limits& limits) {
    auto eq = equality_subcurves(g, h, t, limits);
    if (!eq) throw Error(ErrorCode::E_DOMAIN, "grade: type is not semistable");
    std::mt19937_64 rng(seed.value_or(0));
    SheafType cur = t;
    for (int round = 0; round <= g.edge_count(); ++round) {
        if (is_polystable(g, h, cur, limits)) return cur;
        eq = equality_subcurves(g, h, cur, limits);
        if (!eq)
            throw Error(ErrorCode::E_VALIDATION, "grade: peeling left a non-semistable type");
        std::vector<VertexSet> candidates;
        for (VertexSet w : *eq)
            if (boundary_counts(g, w, cur.s).not_in_s > 0) candidates.push_back(w);
        if (candidates.empty())
            throw Error(ErrorCode::E_VALIDATION,
                        "grade: no admissible equality subcurve on a non-polystable type");
        std::vector<VertexSet> minimal;
        for (VertexSet w : candidates) {
            bool min = true;
            for (VertexSet w2 : candidates)
                if (w2 != w && (w2 & w) == w2) {
                    min = false;
                    break;
                }
            if (min) minimal.push_back(w);
        }
        VertexSet pick;
        if (seed) {
            pick = minimal[rng() % minimal.size()];
        } else {
            pick = minimal[0];
            for (VertexSet w : minimal)
                if (lex_less(w, pick)) pick = w;
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            if ((cur.s >> e) & 1u) continue;
            const auto& ed = g.edge(e);
            bool tin = set_contains(pick, ed.tail), hin = set_contains(pick, ed.head);
            if (tin == hin) continue;
            cur.d[tin ? ed.tail : ed.head] -= 1;
            cur.s |= EdgeSet(1) << e;
        }
    }
    throw Error(ErrorCode::E_VALIDATION, "grade: peeling failed to reach a polystable type");
}

SheafType twist(const SheafType& t, int v, Int k) {
    SheafType r = t;
    r.d[v] += k;
    return r;
}

namespace {

struct DegreeBounds {
    std::vector<Int> lo, hi;
    bool empty = false;
};

// Per-vertex bounds from the singleton and co-singleton basic inequalities.
DegreeBounds degree_bounds(const MetricGraph& g, const Polarization& h, EdgeSet s, Int degree,
                           Int pad) {
    int n = g.vertex_count();
    Int rem = degree - __builtin_popcountll(s);
    DegreeBounds b;
    b.lo.assign(n, 0);
    b.hi.assign(n, 0);
    if (n == 1) {
        b.lo[0] = b.hi[0] = rem;
        return b;
    }
    SheafType probe{s, Divisor(n)};
    probe.d[0] = rem;  // rhs does not depend on d; only the total degree matters
    VertexSet full = full_set(n);
    for (int v = 0; v < n; ++v) {
        VertexSet sing = VertexSet(1) << v;
        b.hi[v] = rat_floor(basic_rhs(g, h, probe, sing)) + pad;
        b.lo[v] = rem - rat_floor(basic_rhs(g, h, probe, full & ~sing)) - pad;
        if (b.lo[v] > b.hi[v]) b.empty = true;
    }
    return b;
}

template <typename Fn>
void enumerate_multidegrees(const DegreeBounds& b, Int target, Fn&& fn) {
    int n = static_cast<int>(b.lo.size());
    std::vector<Int> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
    for (int v = n - 1; v >= 0; --v) {
        suffix_lo[v] = suffix_lo[v + 1] + b.lo[v];
        suffix_hi[v] = suffix_hi[v + 1] + b.hi[v];
    }
    std::vector<Int> d(n, 0);
    auto rec = [&](auto&& self, int v, Int remaining) -> void {
        if (v == n) {
            if (remaining == 0) fn(d);
            return;
        }
        Int lo = std::max(b.lo[v], remaining - suffix_hi[v + 1]);
        Int hi = std::min(b.hi[v], remaining - suffix_lo[v + 1]);
        for (Int x = lo; x <= hi; ++x) {
            d[v] = x;
            self(self, v + 1, remaining - x);
        }
    };
    rec(rec, 0, target);
}

}  // namespace

std::vector<SheafType> enumerate_types(const MetricGraph& g, const Polarization& h, Int degree,
                                       TypeMode mode, int section, const Limits& limits) {
    check_vertex_cap(g, limits);
    if (mode == TypeMode::Quasistable && (section < 0 || section >= g.vertex_count()))
        throw Error(ErrorCode::E_ID, "enumerate_types: quasistable mode needs a section vertex");
    Int pad = (mode == TypeMode::BoxAll) ? 1 : 0;
    std::vector<SheafType> out;
    Int visited = 0;
    int m = g.edge_count();
    for (EdgeSet s = 0; s < (EdgeSet(1) << m); ++s) {
        DegreeBounds b = degree_bounds(g, h, s, degree, pad);
        if (b.empty) continue;
        enumerate_multidegrees(b, degree - __builtin_popcountll(s), [&](const std::vector<Int>& d) {
            if (++visited > limits.max_types && !limits.force)
                throw Error(ErrorCode::E_CAP, "type enumeration exceeds cap");
            SheafType t{s, Divisor(d)};
            bool keep = false;
            switch (mode) {
                case TypeMode::Semistable: keep = is_semistable(g, h, t, limits); break;
                case TypeMode::Stable: keep = is_stable(g, h, t, limits); break;
                case TypeMode::Polystable: keep = is_polystable(g, h, t, limits); break;
                case TypeMode::Quasistable: keep = is_quasistable(g, h, t, section, limits); break;
                case TypeMode::BoxAll: keep = true; break;
            }
            if (keep) out.push_back(std::move(t));
        });
    }
    return out;  // already sorted by (S, d) construction order
}

OSParameter os_parameter(const MetricGraph& g, const Polarization& h, Int degree, int basepoint,
                         const SheafType& t) {
    check_type(g, t);
    if (basepoint < 0 || basepoint >= g.vertex_count())
        throw Error(ErrorCode::E_ID, "os_parameter: unknown basepoint");
    Int k = degree + 1 - g.genus();
    OSParameter p;
    p.q.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        BoundaryCounts bc = boundary_counts(g, VertexSet(1) << v, t.s);
        Rational q = Rational(static_cast<long>(g.vertex(v).weight - 1));
        q += Rational(static_cast<long>(h[v] * k)) / Rational(static_cast<long>(h.total()));
        q += Rational(static_cast<long>(bc.not_in_s)) / 2;
        if (v == basepoint) q -= static_cast<long>(degree);
        p.q.push_back(std::move(q));
    }
    return p;
}

namespace {

// Slack of the Oda-Seshadri inequality at subcurve w for a degree-0 type.
Rational os_slack(const MetricGraph& g, const OSParameter& q, const SheafType& t, VertexSet w) {
    Rational rhs(0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (set_contains(w, v)) rhs += q.q[v];
    rhs += Rational(static_cast<long>(boundary_counts(g, w, t.s).not_in_s)) / 2;
    return rhs - static_cast<long>(t.d.sum_over(w));
}

bool os_check(const MetricGraph& g, const OSParameter& q, const SheafType& t, bool strict,
              const Limits& limits) {
    check_type(g, t);
    check_vertex_cap(g, limits);
    if (t.degree() != 0)
        throw Error(ErrorCode::E_DEGREE, "Oda-Seshadri stability applies to degree-0 types");
    VertexSet full = full_set(g.vertex_count());
    for (VertexSet w = 1; w < full; ++w) {
        Rational slack = os_slack(g, q, t, w);
        if (slack < 0 || (strict && slack == 0)) return false;
    }
    return true;
}

}  // namespace

bool os_is_semistable(const MetricGraph& g, const OSParameter& q, const SheafType& t,
                      const Limits& limits) {
    return os_check(g, q, t, false, limits);
}

bool os_is_stable(const MetricGraph& g, const OSParameter& q, const SheafType& t,
                  const Limits& limits) {
    return os_check(g, q, t, true, limits);
}

Rational epsilon_for_quasistability(const MetricGraph& g, const Polarization& h, Int degree,
                                    int section, const Limits& limits) {
    if (section < 0 || section >= g.vertex_count())
        throw Error(ErrorCode::E_ID, "epsilon: unknown section vertex");
    // The Oda-Seshadri slack of the twisted degree-0 type equals the basic
    // inequality slack of the untwisted one, so the scan runs on the latter.
    std::optional<Rational> gap_min;
    auto semistable = enumerate_types(g, h, degree, TypeMode::Semistable, -1, limits);
    VertexSet full = full_set(g.vertex_count());
    for (const auto& t : semistable) {
        for (VertexSet w = 1; w < full; ++w) {
            Rational slack = basic_rhs(g, h, t, w) - static_cast<long>(t.d.sum_over(w));
            if (slack > 0 && (!gap_min || slack < *gap_min)) gap_min = slack;
        }
    }
    Rational eps = gap_min ? *gap_min / 2 : Rational(1, 2);
    if (eps > Rational(1, 2)) eps = Rational(1, 2);
    return eps;
}

OSParameter os_parameter_v(const MetricGraph& g, const Polarization& h, Int degree,
                           int basepoint, int section, const SheafType& t,
                           const Limits& limits) {
    if (section < 0 || section >= g.vertex_count())
        throw Error(ErrorCode::E_ID, "os_parameter_v: unknown section vertex");
    OSParameter base = os_parameter(g, h, degree, basepoint, t);
    bool all_stable = true;
    for (const auto& qs : enumerate_types(g, h, degree, TypeMode::Quasistable, section, limits)) {
        if (!is_stable(g, h, qs, limits)) {
            all_stable = false;
            break;
        }
    }
    if (all_stable) return base;
    Rational eps = epsilon_for_quasistability(g, h, degree, section, limits);
    Rational spread = eps / static_cast<long>(g.vertex_count() - 1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == section)
            base.q[v] -= eps;
        else
            base.q[v] += spread;
    }
    base.epsilon = eps;
    return base;
}

}  // namespace tropjac
