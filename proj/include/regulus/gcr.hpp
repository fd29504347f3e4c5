#pragma once

#include <array>
#include <functional>
#include <string>

#include "regulus/axial.hpp"
#include "regulus/jet.hpp"
#include "regulus/quat.hpp"

namespace regulus::gcr {

// Default tolerances. Residual and operator comparisons are made relative
// to the scale 1 + |f0| + |f1| at the point, the standard float64 budget
// for exact (jet) and first-order finite-difference derivatives.
inline constexpr double kTolJet = 1e-9;
inline constexpr double kTolFd = 1e-5;
// Points with rho = q2^2+q3^2+q4^2 below this are refused a verdict: the
// symmetry conditions degenerate and axial extraction is ill-posed there.
inline constexpr double kEpsRho = 1e-8;
// Central-difference step scale; the step is kFdStepScale * max(1, |point|).
inline constexpr double kFdStepScale = 1e-4;

double fd_step(const Vec4& point);

// The seven scalar residuals of the generalized Cauchy-Riemann system for
// a pair (f0, f1), all zero iff the system holds at the point:
//   r1       = d1 f1 - (f0 + q2 d2 f0 + q3 d3 f0 + q4 d4 f0)
//   r2,r3,r4 = di f1 + qi d1 f0                   (i = 2, 3, 4)
//   r5,r6,r7 = qi dj f0 - qj di f0                ((i,j) = (2,3), (2,4), (3,4))
struct GcrResiduals {
    std::array<double, 7> r{};

    double max_abs() const {
        double m = 0.0;
        for (double x : r) {
            const double a = x < 0 ? -x : x;
            if (a > m) m = a;
        }
        return m;
    }
};

enum class Verdict { Regular, NotRegular, Indeterminate };
enum class Method { Jet, FiniteDifference };

const char* to_string(Verdict v);
const char* to_string(Method m);

// Full record of one regularity check at one point. `verdict` is Regular
// iff all three component checks hold:
//   residuals_ok: max |r| <= tol * scale
//   structure_ok: the map deviates from axial form by <= tol * scale
//                 (identically zero for pairs, which are axial by
//                 construction)
//   fueter_ok:    the left and right Fueter operator values and -2 f0 e1
//                 agree pairwise within tol * scale
// with scale = 1 + |f0| + |f1|.
struct RegularityVerdict {
    Vec4 point{};
    GcrResiduals residuals{};
    Quaternion fueter_left{}, fueter_right{}, expected_fueter{};
    double f0 = 0.0, f1 = 0.0;
    double structural_residual = 0.0;
    double scale = 1.0;
    double tol = kTolJet;
    bool residuals_ok = false;
    bool structure_ok = false;
    bool fueter_ok = false;
    Verdict verdict = Verdict::Indeterminate;
    Method method = Method::Jet;
};

using RealMap = std::function<Quaternion(const Quaternion&)>;
using JetMap = std::function<JetVec4(const JetVec4&)>;

// The four columns d F / d q_i of a map H -> H, each a quaternion.
struct Jacobian4 {
    std::array<Quaternion, 4> col{};
};

Jacobian4 jacobian(const JetMap& F, const Vec4& point);
// Richardson-guarded central differences; raises NumericalError when the
// h vs h/2 estimates disagree enough to indicate non-smoothness.
Jacobian4 jacobian_fd(const RealMap& F, const Vec4& point, double h = 0.0);

// Left and right Fueter operators: sum over i of e_i * (dF/dq_i) and
// (dF/dq_i) * e_i respectively.
Quaternion fueter_left(const Jacobian4& jac);
Quaternion fueter_right(const Jacobian4& jac);
Quaternion fueter_left(const JetMap& F, const Vec4& point);
Quaternion fueter_right(const JetMap& F, const Vec4& point);
Quaternion fueter_left_fd(const RealMap& F, const Vec4& point, double h = 0.0);
Quaternion fueter_right_fd(const RealMap& F, const Vec4& point, double h = 0.0);

// The quaternion map assembled from a pair on the jet carrier, and the
// plain evaluation map of a tree.
JetMap assemble(const axial::AxialPair& pair);
RealMap as_real_map(const axial::RegularFn& f);

// Residuals from exact jet evaluation of the pair at the point.
GcrResiduals residuals_at(const axial::AxialPair& pair, const Vec4& point);

// Equivalence check at a point: residuals plus both Fueter operator values
// against -2 f0 e1, all computed from exact jets. Points inside the
// real-axis tube come back Indeterminate.
RegularityVerdict check_pair(const axial::AxialPair& pair, const Vec4& point,
                               double tol = kTolJet);
RegularityVerdict check_pair(const axial::RegularFn& f, const Vec4& point,
                               double tol = kTolJet);

// Axial components read off a black-box map at one point:
//   f1 = F1,  f0 = (q2 F2 + q3 F3 + q4 F4) / rho,
//   structural_residual = max_i |F_i - q_i f0|  (zero iff F is axial here).
struct AxialSample {
    double f0 = 0.0;
    double f1 = 0.0;
    double structural_residual = 0.0;
};

AxialSample extract_axial(const RealMap& F, const Vec4& point, double eps_rho = kEpsRho);

// Black-box regularity check: extracts (f0, f1) on a central-difference
// stencil of radius h, forms the residuals from the difference quotients,
// takes Fueter values from the finite-difference Jacobian, and reports the
// worst structural residual seen across the stencil. Thresholds default to
// the finite-difference tolerance.
RegularityVerdict check_black_box(const RealMap& F, const Vec4& point, double h = 0.0,
                                  double tol = kTolFd);

}  // namespace regulus::gcr
