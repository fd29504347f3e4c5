#pragma once

#include <functional>
#include <memory>
#include <string>

#include "regulus/jet.hpp"
#include "regulus/quat.hpp"

namespace regulus::axial {

// Convention used throughout: a function in axial form is the pair
// (f0, f1) of real-valued functions on R^4 with
//
//     f(q) = f1(q) e1 + f0(q) * (q2 e2 + q3 e3 + q4 e4),
//
// i.e. f0 multiplies the imaginary components only. Including the q1 e1
// term in the f0 sum would make even the identity function fail the
// regularity system, so it is deliberately left out; reports carry this
// statement verbatim.
inline constexpr const char* kAxialConvention =
    "f(q) = f1(q) e1 + f0(q) (q2 e2 + q3 e3 + q4 e4); "
    "f0 multiplies the imaginary components only (i = 2..4), never q1 e1";

// Reciprocals are restricted to the region where |f(q)|^2 = f1^2 + f0^2 rho
// stays above this absolute floor.
inline constexpr double kRecipFloor = 1e-12;

// A component pair (f0, f1), evaluable both on plain reals and on jets.
// `domain` is the open set on which the pair is certified C^1 regular; it
// never throws, and is what samplers and checkers consult. Evaluation may
// extend beyond it (e.g. the exponential on the real axis) but makes no
// regularity claim there.
struct AxialPair {
    std::function<double(const Vec4&)> f0;
    std::function<double(const Vec4&)> f1;
    std::function<Jet4(const JetVec4&)> f0_jet;
    std::function<Jet4(const JetVec4&)> f1_jet;
    std::function<bool(const Vec4&)> domain;
};

// Build a pair from generic callables usable on both carriers.
template <class F0, class F1>
AxialPair make_axial_pair(F0 f0, F1 f1, std::function<bool(const Vec4&)> domain = {}) {
    AxialPair p;
    p.f0 = [f0](const Vec4& q) -> double { return f0(q); };
    p.f1 = [f1](const Vec4& q) -> double { return f1(q); };
    p.f0_jet = [f0](const JetVec4& q) -> Jet4 { return f0(q); };
    p.f1_jet = [f1](const JetVec4& q) -> Jet4 { return f1(q); };
    p.domain = domain ? std::move(domain) : [](const Vec4&) { return true; };
    return p;
}

enum class NodeKind { Const, Identity, Power, Exp, Sum, Scale, Product, Reciprocal, Compose };

// Immutable expression tree over the closed class: leaves and combinators
// all denote functions in axial form. Trees are shared freely; evaluation
// is pure, so concurrent evaluation at many points is fine.
class RegularFn {
public:
    struct Node {
        NodeKind kind;
        double value = 0.0;   // Const, Scale
        int exponent = 0;     // Power
        std::shared_ptr<const Node> a, b;
    };

    explicit RegularFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    const Node& node() const { return *node_; }
    const std::shared_ptr<const Node>& ptr() const { return node_; }

    NodeKind kind() const { return node_->kind; }
    double const_value() const { return node_->value; }
    int exponent() const { return node_->exponent; }
    RegularFn child_a() const { return RegularFn(node_->a); }
    RegularFn child_b() const { return RegularFn(node_->b); }

private:
    std::shared_ptr<const Node> node_;
};

// Constructors. `power` accepts any integer: negative exponents evaluate as
// the reciprocal of the corresponding positive power.
RegularFn constant(double c);
RegularFn identity();
RegularFn power(int n);
RegularFn exp_fn();
RegularFn sum(const RegularFn& f, const RegularFn& g);
RegularFn scale_fn(double c, const RegularFn& f);
RegularFn product(const RegularFn& f, const RegularFn& g);
RegularFn reciprocal(const RegularFn& f);
// compose(g, f) is g after f.
RegularFn compose(const RegularFn& g, const RegularFn& f);

// Evaluate as a quaternion-valued map. Throws DomainError where the value
// genuinely cannot be computed (reciprocal at a zero, composition leaving
// the outer domain, non-finite result).
Quaternion eval(const RegularFn& f, const Quaternion& q);

// Regularity domain test; never throws.
bool in_domain(const RegularFn& f, const Vec4& q) noexcept;

// The (f0, f1) pair of the tree, with `domain` = in_domain.
AxialPair pair_of(const RegularFn& f);

bool structurally_equal(const RegularFn& f, const RegularFn& g);

}  // namespace regulus::axial
