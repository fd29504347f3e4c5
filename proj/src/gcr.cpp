#include "regulus/gcr.hpp"

#include <cmath>

#include "regulus/errors.hpp"

namespace regulus::gcr {

namespace {

// Relative disagreement ratio above which the h vs h/2 central-difference
// estimates are considered evidence of non-smoothness.
constexpr double kFdSmoothnessTol = 1e-2;

double jac_max_abs(const Jacobian4& j) {
    double m = 0.0;
    for (const auto& q : j.col) m = std::max(m, max_abs(q));
    return m;
}

Jacobian4 central_jacobian(const RealMap& F, const Vec4& point, double h) {
    Jacobian4 jac;
    for (std::size_t i = 0; i < 4; ++i) {
        Vec4 plus = point, minus = point;
        plus[i] += h;
        minus[i] -= h;
        const Quaternion fp = F(Quaternion::from_vec(plus));
        const Quaternion fm = F(Quaternion::from_vec(minus));
        jac.col[i] = (1.0 / (2.0 * h)) * (fp - fm);
    }
    return jac;
}

struct PairJets {
    Jet4 f0, f1;
};

PairJets pair_jets(const axial::AxialPair& pair, const Vec4& point) {
    const JetVec4 jq = jet_point(point);
    return {pair.f0_jet(jq), pair.f1_jet(jq)};
}

GcrResiduals residuals_from_jets(const Jet4& f0, const Jet4& f1, const Vec4& p) {
    GcrResiduals out;
    out.r[0] = f1.d[0] - (f0.val + p[1] * f0.d[1] + p[2] * f0.d[2] + p[3] * f0.d[3]);
    out.r[1] = f1.d[1] + p[1] * f0.d[0];
    out.r[2] = f1.d[2] + p[2] * f0.d[0];
    out.r[3] = f1.d[3] + p[3] * f0.d[0];
    out.r[4] = p[1] * f0.d[2] - p[2] * f0.d[1];
    out.r[5] = p[1] * f0.d[3] - p[3] * f0.d[1];
    out.r[6] = p[2] * f0.d[3] - p[3] * f0.d[2];
    return out;
}

// Jacobian of F = f1 e1 + f0 (q2 e2 + q3 e3 + q4 e4) from the pair's jets:
// dF1/dqj = d_j f1 and dFi/dqj = delta_ij f0 + q_i d_j f0 for i = 2..4.
Jacobian4 jacobian_from_pair(const Jet4& f0, const Jet4& f1, const Vec4& p) {
    Jacobian4 jac;
    for (std::size_t j = 0; j < 4; ++j) {
        Quaternion col;
        col.c[0] = f1.d[j];
        for (std::size_t i = 1; i < 4; ++i)
            col.c[i] = (i == j ? f0.val : 0.0) + p[i] * f0.d[j];
        jac.col[j] = col;
    }
    return jac;
}

RegularityVerdict finish_verdict(RegularityVerdict v) {
    // A non-finite evaluation is a refusal to classify, not a rejection:
    // the point escaped the float range, so neither characterization ran.
    if (!std::isfinite(v.scale) || !std::isfinite(v.residuals.max_abs()) ||
        !std::isfinite(v.structural_residual) || !is_finite(v.fueter_left) ||
        !is_finite(v.fueter_right) || !is_finite(v.expected_fueter)) {
        v.verdict = Verdict::Indeterminate;
        return v;
    }
    const double limit = v.tol * v.scale;
    v.residuals_ok = v.residuals.max_abs() <= limit;
    v.structure_ok = v.structural_residual <= limit;
    const double fueter_gap =
        std::max({max_abs_diff(v.fueter_left, v.expected_fueter),
                  max_abs_diff(v.fueter_right, v.expected_fueter),
                  max_abs_diff(v.fueter_left, v.fueter_right)});
    v.fueter_ok = fueter_gap <= limit;
    v.verdict = (v.residuals_ok && v.structure_ok && v.fueter_ok) ? Verdict::Regular
                                                                  : Verdict::NotRegular;
    return v;
}

RegularityVerdict indeterminate_at(const Vec4& point, double tol, Method method) {
    RegularityVerdict v;
    v.point = point;
    v.tol = tol;
    v.method = method;
    v.verdict = Verdict::Indeterminate;
    return v;
}

}  // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Regular: return "regular";
        case Verdict::NotRegular: return "not_regular";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

const char* to_string(Method m) {
    return m == Method::Jet ? "jet" : "finite_difference";
}

double fd_step(const Vec4& point) {
    const double r = std::sqrt(point[0] * point[0] + rho_of(point));
    return kFdStepScale * std::max(1.0, r);
}

Jacobian4 jacobian(const JetMap& F, const Vec4& point) {
    const JetVec4 out = F(jet_point(point));
    Jacobian4 jac;
    for (std::size_t j = 0; j < 4; ++j) {
        Quaternion col;
        for (std::size_t i = 0; i < 4; ++i) col.c[i] = out[i].d[j];
        jac.col[j] = col;
    }
    return jac;
}

Jacobian4 jacobian_fd(const RealMap& F, const Vec4& point, double h) {
    if (h <= 0.0) h = fd_step(point);
    const Jacobian4 coarse = central_jacobian(F, point, h);
    const Jacobian4 fine = central_jacobian(F, point, h / 2.0);
    Jacobian4 extrapolated;
    double gap = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        extrapolated.col[i] = (1.0 / 3.0) * (4.0 * fine.col[i] - coarse.col[i]);
        gap = std::max(gap, max_abs_diff(fine.col[i], coarse.col[i]));
    }
    const double scale = 1.0 + jac_max_abs(extrapolated);
    if (gap / scale > kFdSmoothnessTol)
        throw NumericalError("finite differences did not converge at step " + format_double(h) +
                             " (h vs h/2 gap " + format_double(gap) + "); map looks non-smooth");
    return extrapolated;
}

Quaternion fueter_left(const Jacobian4& jac) {
    Quaternion out;
    for (int i = 1; i <= 4; ++i)
        out = out + Quaternion::basis(i) * jac.col[static_cast<std::size_t>(i - 1)];
    return out;
}

Quaternion fueter_right(const Jacobian4& jac) {
    Quaternion out;
    for (int i = 1; i <= 4; ++i)
        out = out + jac.col[static_cast<std::size_t>(i - 1)] * Quaternion::basis(i);
    return out;
}

Quaternion fueter_left(const JetMap& F, const Vec4& point) {
    return fueter_left(jacobian(F, point));
}

Quaternion fueter_right(const JetMap& F, const Vec4& point) {
    return fueter_right(jacobian(F, point));
}

Quaternion fueter_left_fd(const RealMap& F, const Vec4& point, double h) {
    return fueter_left(jacobian_fd(F, point, h));
}

Quaternion fueter_right_fd(const RealMap& F, const Vec4& point, double h) {
    return fueter_right(jacobian_fd(F, point, h));
}

JetMap assemble(const axial::AxialPair& pair) {
    return [pair](const JetVec4& q) -> JetVec4 {
        const Jet4 f0 = pair.f0_jet(q);
        const Jet4 f1 = pair.f1_jet(q);
        return {f1, q[1] * f0, q[2] * f0, q[3] * f0};
    };
}

RealMap as_real_map(const axial::RegularFn& f) {
    return [f](const Quaternion& q) { return axial::eval(f, q); };
}

GcrResiduals residuals_at(const axial::AxialPair& pair, const Vec4& point) {
    const PairJets pj = pair_jets(pair, point);
    return residuals_from_jets(pj.f0, pj.f1, point);
}

RegularityVerdict check_pair(const axial::AxialPair& pair, const Vec4& point, double tol) {
    if (rho_of(point) < kEpsRho) return indeterminate_at(point, tol, Method::Jet);
    const PairJets pj = pair_jets(pair, point);
    RegularityVerdict v;
    v.point = point;
    v.tol = tol;
    v.method = Method::Jet;
    v.f0 = pj.f0.val;
    v.f1 = pj.f1.val;
    v.scale = 1.0 + std::abs(v.f0) + std::abs(v.f1);
    v.residuals = residuals_from_jets(pj.f0, pj.f1, point);
    const Jacobian4 jac = jacobian_from_pair(pj.f0, pj.f1, point);
    v.fueter_left = fueter_left(jac);
    v.fueter_right = fueter_right(jac);
    v.expected_fueter = Quaternion::real(-2.0 * v.f0);
    v.structural_residual = 0.0;  // pairs are axial by construction
    return finish_verdict(v);
}

RegularityVerdict check_pair(const axial::RegularFn& f, const Vec4& point, double tol) {
    return check_pair(axial::pair_of(f), point, tol);
}

AxialSample extract_axial(const RealMap& F, const Vec4& point, double eps_rho) {
    const double rho = rho_of(point);
    if (rho < eps_rho)
        throw TooCloseToRealAxis("axial extraction ill-posed: rho = " + format_double(rho) +
                                 " < " + format_double(eps_rho));
    const Quaternion f = F(Quaternion::from_vec(point));
    AxialSample s;
    s.f1 = f.c[0];
    s.f0 = (point[1] * f.c[1] + point[2] * f.c[2] + point[3] * f.c[3]) / rho;
    for (std::size_t i = 1; i < 4; ++i)
        s.structural_residual = std::max(s.structural_residual,
                                         std::abs(f.c[i] - point[i] * s.f0));
    return s;
}

RegularityVerdict check_black_box(const RealMap& F, const Vec4& point, double h, double tol) {
    const double rho = rho_of(point);
    if (rho < kEpsRho)
        throw TooCloseToRealAxis("no verdict inside the real-axis tube: rho = " +
                                 format_double(rho));
    if (h <= 0.0) h = fd_step(point);

    AxialSample center;
    std::array<AxialSample, 4> plus, minus;
    double worst_structure = 0.0;
    try {
        center = extract_axial(F, point);
        worst_structure = center.structural_residual;
        for (std::size_t i = 0; i < 4; ++i) {
            Vec4 pp = point, pm = point;
            pp[i] += h;
            pm[i] -= h;
            plus[i] = extract_axial(F, pp);
            minus[i] = extract_axial(F, pm);
            worst_structure = std::max({worst_structure, plus[i].structural_residual,
                                        minus[i].structural_residual});
        }
    } catch (const TooCloseToRealAxis&) {
        throw;
    } catch (const DomainError& e) {
        throw NumericalError(std::string("stencil left the domain of the map: ") + e.what());
    }

    Jet4 f0(center.f0), f1(center.f1);
    for (std::size_t i = 0; i < 4; ++i) {
        f0.d[i] = (plus[i].f0 - minus[i].f0) / (2.0 * h);
        f1.d[i] = (plus[i].f1 - minus[i].f1) / (2.0 * h);
    }

    RegularityVerdict v;
    v.point = point;
    v.tol = tol;
    v.method = Method::FiniteDifference;
    v.f0 = center.f0;
    v.f1 = center.f1;
    v.scale = 1.0 + std::abs(v.f0) + std::abs(v.f1);
    v.residuals = residuals_from_jets(f0, f1, point);
    v.structural_residual = worst_structure;
    Jacobian4 jac;
    try {
        jac = jacobian_fd(F, point, h);
    } catch (const DomainError& e) {
        throw NumericalError(std::string("stencil left the domain of the map: ") + e.what());
    }
    v.fueter_left = fueter_left(jac);
    v.fueter_right = fueter_right(jac);
    v.expected_fueter = Quaternion::real(-2.0 * v.f0);
    return finish_verdict(v);
}

}  // namespace regulus::gcr
