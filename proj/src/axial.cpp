#include "regulus/axial.hpp"

#include <cmath>
#include <utility>

namespace regulus::axial {

namespace {

using Node = RegularFn::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

template <class T>
struct PairVal {
    T f0, f1;
};

template <class T>
T rho_sq(const std::array<T, 4>& q) {
    return q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
}

// Reciprocal rule: 1/f has pair (-f0/N, f1/N) with N = f1^2 + f0^2 rho,
// which is |f(q)|^2. Guarded by the absolute floor.
template <class T>
PairVal<T> recip_rule(const PairVal<T>& p, const T& rho) {
    T n = p.f1 * p.f1 + p.f0 * p.f0 * rho;
    if (!(scalar_value(n) > kRecipFloor))
        throw DomainError("reciprocal at a point where |f|^2 = " +
                          format_double(scalar_value(n)) + " <= " + format_double(kRecipFloor));
    return {T(0.0) - p.f0 / n, p.f1 / n};
}

// Structural evaluation of the pair on either carrier. The rules per node:
//   Const(c):      (0, c)
//   Identity:      (1, q1)
//   Power(n):      recursion (f1, f0) <- (f1 q1 - f0 rho, f1 + f0 q1) from (0, 1);
//                  negative n via the reciprocal rule on Power(-n)
//   Exp:           (e^{q1} sinc(sqrt(rho)), e^{q1} cos(sqrt(rho)))
//   Sum:           componentwise
//   Scale(c):      both components scaled
//   Product:       (f1 g0 + f0 g1, f1 g1 - f0 g0 rho)
//   Reciprocal:    reciprocal rule
//   Compose(g, f): p = (f1, q2 f0, q3 f0, q4 f0); (g0(p) f0, g1(p))
template <class T>
PairVal<T> eval_pair(const Node& n, const std::array<T, 4>& q) {
    switch (n.kind) {
        case NodeKind::Const:
            return {T(0.0), T(n.value)};
        case NodeKind::Identity:
            return {T(1.0), q[0]};
        case NodeKind::Power: {
            const int m = n.exponent < 0 ? -n.exponent : n.exponent;
            const T rho = rho_sq(q);
            PairVal<T> p{T(0.0), T(1.0)};
            for (int k = 0; k < m; ++k) {
                T next_f1 = p.f1 * q[0] - p.f0 * rho;
                T next_f0 = p.f1 + p.f0 * q[0];
                p.f1 = std::move(next_f1);
                p.f0 = std::move(next_f0);
            }
            if (n.exponent < 0) return recip_rule(p, rho);
            return p;
        }
        case NodeKind::Exp: {
            using std::exp;
            using std::sqrt;
            using std::cos;
            const T w = sqrt(rho_sq(q));
            const T e = exp(q[0]);
            return {e * sinc_like(w), e * cos(w)};
        }
        case NodeKind::Sum: {
            const PairVal<T> pa = eval_pair<T>(*n.a, q);
            const PairVal<T> pb = eval_pair<T>(*n.b, q);
            return {pa.f0 + pb.f0, pa.f1 + pb.f1};
        }
        case NodeKind::Scale: {
            const PairVal<T> p = eval_pair<T>(*n.a, q);
            return {p.f0 * n.value, p.f1 * n.value};
        }
        case NodeKind::Product: {
            const PairVal<T> pf = eval_pair<T>(*n.a, q);
            const PairVal<T> pg = eval_pair<T>(*n.b, q);
            const T rho = rho_sq(q);
            return {pf.f1 * pg.f0 + pf.f0 * pg.f1, pf.f1 * pg.f1 - pf.f0 * pg.f0 * rho};
        }
        case NodeKind::Reciprocal: {
            const PairVal<T> p = eval_pair<T>(*n.a, q);
            return recip_rule(p, rho_sq(q));
        }
        case NodeKind::Compose: {
            const PairVal<T> pf = eval_pair<T>(*n.b, q);
            const std::array<T, 4> p{pf.f1, q[1] * pf.f0, q[2] * pf.f0, q[3] * pf.f0};
            const PairVal<T> pg = eval_pair<T>(*n.a, p);
            return {pg.f0 * pf.f0, pg.f1};
        }
    }
    throw UsageError("corrupt expression node");
}

// Regularity-domain test per node; evaluation-backed guards are wrapped so
// the predicate itself never throws.
bool in_domain_node(const Node& n, const Vec4& q) {
    switch (n.kind) {
        case NodeKind::Const:
        case NodeKind::Identity:
            return true;
        case NodeKind::Power: {
            if (n.exponent >= 0) return true;
            Node pos = n;
            pos.exponent = -n.exponent;
            const PairVal<double> p = eval_pair<double>(pos, q);
            const double big_n = p.f1 * p.f1 + p.f0 * p.f0 * rho_of(q);
            return std::isfinite(big_n) && big_n > kRecipFloor;
        }
        case NodeKind::Exp:
            // The value extends onto the real axis through the sinc series,
            // but the regularity domain excludes it.
            return rho_of(q) > 0.0;
        case NodeKind::Sum:
        case NodeKind::Product:
            return in_domain_node(*n.a, q) && in_domain_node(*n.b, q);
        case NodeKind::Scale:
            return in_domain_node(*n.a, q);
        case NodeKind::Reciprocal: {
            if (!in_domain_node(*n.a, q)) return false;
            const PairVal<double> p = eval_pair<double>(*n.a, q);
            const double big_n = p.f1 * p.f1 + p.f0 * p.f0 * rho_of(q);
            return std::isfinite(big_n) && big_n > kRecipFloor;
        }
        case NodeKind::Compose: {
            if (!in_domain_node(*n.b, q)) return false;
            const PairVal<double> pf = eval_pair<double>(*n.b, q);
            const Vec4 p{pf.f1, q[1] * pf.f0, q[2] * pf.f0, q[3] * pf.f0};
            if (!std::isfinite(p[0]) || !std::isfinite(pf.f0)) return false;
            return in_domain_node(*n.a, p);
        }
    }
    return false;
}

}  // namespace

RegularFn constant(double c) { return RegularFn(make_node({NodeKind::Const, c, 0, {}, {}})); }

RegularFn identity() { return RegularFn(make_node({NodeKind::Identity, 0.0, 0, {}, {}})); }

RegularFn power(int n) { return RegularFn(make_node({NodeKind::Power, 0.0, n, {}, {}})); }

RegularFn exp_fn() { return RegularFn(make_node({NodeKind::Exp, 0.0, 0, {}, {}})); }

RegularFn sum(const RegularFn& f, const RegularFn& g) {
    return RegularFn(make_node({NodeKind::Sum, 0.0, 0, f.ptr(), g.ptr()}));
}

RegularFn scale_fn(double c, const RegularFn& f) {
    return RegularFn(make_node({NodeKind::Scale, c, 0, f.ptr(), {}}));
}

RegularFn product(const RegularFn& f, const RegularFn& g) {
    return RegularFn(make_node({NodeKind::Product, 0.0, 0, f.ptr(), g.ptr()}));
}

RegularFn reciprocal(const RegularFn& f) {
    return RegularFn(make_node({NodeKind::Reciprocal, 0.0, 0, f.ptr(), {}}));
}

RegularFn compose(const RegularFn& g, const RegularFn& f) {
    return RegularFn(make_node({NodeKind::Compose, 0.0, 0, g.ptr(), f.ptr()}));
}

Quaternion eval(const RegularFn& f, const Quaternion& q) {
    const PairVal<double> p = eval_pair<double>(f.node(), q.c);
    const Quaternion value = Quaternion::real(p.f1) + p.f0 * imag(q);
    if (!is_finite(value))
        throw DomainError("evaluation produced a non-finite value at " + to_string(q));
    return value;
}

bool in_domain(const RegularFn& f, const Vec4& q) noexcept {
    try {
        for (double x : q)
            if (!std::isfinite(x)) return false;
        return in_domain_node(f.node(), q);
    } catch (...) {
        return false;
    }
}

AxialPair pair_of(const RegularFn& f) {
    const NodePtr node = f.ptr();
    AxialPair p;
    p.f0 = [node](const Vec4& q) { return eval_pair<double>(*node, q).f0; };
    p.f1 = [node](const Vec4& q) { return eval_pair<double>(*node, q).f1; };
    p.f0_jet = [node](const JetVec4& q) { return eval_pair<Jet4>(*node, q).f0; };
    p.f1_jet = [node](const JetVec4& q) { return eval_pair<Jet4>(*node, q).f1; };
    p.domain = [node](const Vec4& q) { return in_domain(RegularFn(node), q); };
    return p;
}

bool structurally_equal(const RegularFn& f, const RegularFn& g) {
    const Node& a = f.node();
    const Node& b = g.node();
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NodeKind::Const:
            return a.value == b.value;
        case NodeKind::Identity:
        case NodeKind::Exp:
            return true;
        case NodeKind::Power:
            return a.exponent == b.exponent;
        case NodeKind::Scale:
            return a.value == b.value && structurally_equal(f.child_a(), g.child_a());
        case NodeKind::Reciprocal:
            return structurally_equal(f.child_a(), g.child_a());
        case NodeKind::Sum:
        case NodeKind::Product:
        case NodeKind::Compose:
            return structurally_equal(f.child_a(), g.child_a()) &&
                   structurally_equal(f.child_b(), g.child_b());
    }
    return false;
}

}  // namespace regulus::axial
