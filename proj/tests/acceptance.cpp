// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The regulus binary path for the determinism criterion comes from
// argv[1] or the REGULUS_BIN environment variable.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "regulus/axial.hpp"
#include "regulus/errors.hpp"
#include "regulus/expr.hpp"
#include "regulus/gcr.hpp"
#include "regulus/manifold.hpp"
#include "regulus/sampler.hpp"

using namespace regulus;
using axial::AxialPair;
using axial::RegularFn;

namespace {

int g_failures = 0;
std::string g_bin;

void report_line(int criterion, const std::string& label, bool pass,
                 const std::string& detail = {}) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++g_failures;
}

std::vector<Vec4> criterion_points(const RegularFn& f, std::size_t n, std::uint64_t seed,
                                   double min_rho, double min_norm_sq) {
    const auto accept = [&](const Vec4& p) {
        if (min_norm_sq > 0.0 && p[0] * p[0] + rho_of(p) < min_norm_sq) return false;
        return axial::in_domain(f, p);
    };
    return sample_box(Box4{}, n, seed, accept, min_rho);
}

struct Corpus {
    std::string name;
    RegularFn fn;
    double min_norm_sq;  // annulus guard for functions with a pole at 0
};

std::vector<Corpus> builtin_corpus() {
    std::vector<Corpus> out;
    for (int n = 0; n <= 8; ++n)
        out.push_back({"q^" + std::to_string(n), axial::power(n), 0.0});
    for (int n : {-1, -2, -3})
        out.push_back({"q^" + std::to_string(n), axial::power(n), 0.04});
    out.push_back({"exp(q)", axial::exp_fn(), 0.0});
    return out;
}

// ---------------------------------------------------------------- 1 & 2

void criteria_1_and_2() {
    bool residuals_pass = true;
    bool fueter_pass = true;
    std::string detail;
    for (const Corpus& c : builtin_corpus()) {
        const AxialPair pair = axial::pair_of(c.fn);
        const gcr::RealMap map = gcr::as_real_map(c.fn);
        const std::vector<Vec4> pts = criterion_points(c.fn, 200, 2026, 1e-4, c.min_norm_sq);
        if (pts.size() != 200) {
            residuals_pass = false;
            detail = c.name + ": sampler found only " + std::to_string(pts.size()) + " points";
            break;
        }
        for (const Vec4& p : pts) {
            const gcr::RegularityVerdict jet = gcr::check_pair(pair, p, 1e-9);
            const gcr::RegularityVerdict fd = gcr::check_black_box(map, p, 0.0, 1e-5);
            if (jet.residuals.max_abs() > 1e-9 * jet.scale ||
                fd.residuals.max_abs() > 1e-5 * fd.scale) {
                residuals_pass = false;
                detail = c.name + " residuals at (" + format_double(p[0]) + "," +
                         format_double(p[1]) + "," + format_double(p[2]) + "," +
                         format_double(p[3]) + ")";
            }
            if (!jet.fueter_ok || !fd.fueter_ok) {
                fueter_pass = false;
                if (detail.empty()) detail = c.name + ": fueter disagreement";
            }
            if (jet.verdict != gcr::Verdict::Regular || fd.verdict != gcr::Verdict::Regular) {
                residuals_pass = false;
                if (detail.empty()) detail = c.name + ": verdict not regular";
            }
        }
    }
    report_line(1, "built-in regularity (13 functions, 200 pts, jet<=1e-9, fd<=1e-5)",
                residuals_pass, detail);

    // negative corpus: residual-based and operator-based checks must both
    // reject at every sampled point with rho >= 1e-2
    const AxialPair broken = axial::make_axial_pair(
        [](const auto& q) { return q[0]; }, [](const auto& q) { return q[0] * 0.0; });
    const gcr::RealMap conj_map = [](const Quaternion& q) { return conj(q); };
    const gcr::RealMap left_e2 = [](const Quaternion& q) { return Quaternion::basis(2) * q; };

    bool neg_pass = true;
    std::string neg_detail;
    oracles::Rng rng(404);
    for (int k = 0; k < 100; ++k) {
        const Vec4 p = rng.vec4_off_axis(1e-2);
        const gcr::RegularityVerdict vb = gcr::check_pair(broken, p, 1e-9);
        const gcr::RegularityVerdict vc = gcr::check_black_box(conj_map, p, 0.0, 1e-5);
        const gcr::RegularityVerdict vl = gcr::check_black_box(left_e2, p, 0.0, 1e-5);
        for (const gcr::RegularityVerdict* v : {&vb, &vc, &vl}) {
            const bool gcr_rejects = !(v->residuals_ok && v->structure_ok);
            const bool fueter_rejects = !v->fueter_ok;
            if (!gcr_rejects || !fueter_rejects || v->verdict != gcr::Verdict::NotRegular) {
                neg_pass = false;
                neg_detail = "a negative-corpus map slipped through at point index " +
                             std::to_string(k);
            }
        }
    }
    report_line(2, "equivalence: fueter agreement on criterion-1 points; negative corpus "
                   "rejected by both characterizations",
                fueter_pass && neg_pass, neg_detail);
}

// -------------------------------------------------------------------- 3

bool verdict_usable(const gcr::RegularityVerdict& v) {
    if (!std::isfinite(v.scale) || !std::isfinite(v.residuals.max_abs())) return false;
    if (!is_finite(v.fueter_left) || !is_finite(v.fueter_right)) return false;
    return true;
}

// Check one composite at `need` usable in-domain points; returns false on
// any genuine regularity failure. Points where evaluation overflows or
// leaves the domain are resampled (they carry no evidence either way);
// failing to find enough points sets *starved.
bool check_composite(const RegularFn& f, oracles::Rng& rng, int need, bool* starved,
                     const std::function<bool(const Vec4&)>& extra = {}) {
    int found = 0;
    for (int attempt = 0; attempt < 6000 && found < need; ++attempt) {
        const Vec4 p = rng.vec4_off_axis(1e-4);
        if (!axial::in_domain(f, p)) continue;
        if (extra && !extra(p)) continue;
        gcr::RegularityVerdict v;
        try {
            v = gcr::check_pair(f, p, 1e-9);
        } catch (const DomainError&) {
            continue;
        }
        if (v.verdict == gcr::Verdict::Indeterminate) continue;
        if (!verdict_usable(v)) continue;
        ++found;
        if (v.verdict != gcr::Verdict::Regular) return false;
    }
    if (found < need) *starved = true;
    return true;
}

void criterion_3() {
    oracles::Rng rng(777);
    const double scalars[] = {2.0, -1.5, 0.5, 3.0, -0.25};
    bool pass = true;
    std::string detail;
    int pairs_done = 0;
    int redraws = 0;
    while (pairs_done < 50 && redraws < 500) {
        const RegularFn f = oracles::random_tree(rng, 4);
        const RegularFn g = oracles::random_tree(rng, 4);
        const AxialPair pf = axial::pair_of(f);
        const double c = scalars[rng.pick(5)];

        const RegularFn composites[] = {
            axial::sum(f, g),
            axial::scale_fn(c, f),
            axial::product(f, g),
            axial::reciprocal(f),
            axial::compose(g, f),
        };
        // the reciprocal only samples where |f|^2 clears 1e-6
        const auto recip_guard = [&pf](const Vec4& p) {
            const double f0 = pf.f0(p);
            const double f1 = pf.f1(p);
            const double n = f1 * f1 + f0 * f0 * rho_of(p);
            return std::isfinite(n) && n > 1e-6;
        };

        bool starved = false;
        bool ok = true;
        for (std::size_t i = 0; i < 5 && ok && !starved; ++i) {
            const bool is_recip = i == 3;
            ok = check_composite(composites[i], rng, 50, &starved,
                                 is_recip ? std::function<bool(const Vec4&)>(recip_guard)
                                          : std::function<bool(const Vec4&)>{});
        }
        if (starved) {
            ++redraws;  // effectively empty domain for this draw; try another
            continue;
        }
        if (!ok) {
            pass = false;
            detail = "closure violation for pair " + std::to_string(pairs_done) + " (f = " +
                     expr::print(f) + ", g = " + expr::print(g) + ")";
            break;
        }
        ++pairs_done;
    }
    if (pairs_done < 50 && pass) {
        pass = false;
        detail = "generator starved: only " + std::to_string(pairs_done) + " pairs checked";
    }
    report_line(3, "closure: f+g, cf, f*g, 1/f, g.f all jet-regular (50 pairs x 50 pts)",
                pass, detail);
}

// -------------------------------------------------------------------- 4

void criterion_4() {
    oracles::Rng rng(889);
    bool pass = true;
    std::string detail;

    for (int n = 0; n <= 12 && pass; ++n) {
        for (int k = 0; k < 100; ++k) {
            const Quaternion q = rng.quat();
            const Quaternion want = oracles::pow_oracle(q, n);
            if (max_abs_diff(axial::eval(axial::power(n), q), want) >
                1e-9 * (1.0 + max_abs(want))) {
                pass = false;
                detail = "power " + std::to_string(n);
                break;
            }
        }
    }

    const RegularFn cases_f[] = {axial::power(2), axial::sum(axial::power(2), axial::constant(1)),
                                 axial::exp_fn()};
    const RegularFn cases_g[] = {axial::exp_fn(), axial::power(3),
                                 axial::reciprocal(axial::identity())};
    for (int c = 0; c < 3 && pass; ++c) {
        int k = 0;
        while (k < 100) {
            const Quaternion q = rng.nonzero_quat(0.04);
            const Vec4 p = q.to_vec();
            if (!axial::in_domain(cases_f[c], p) || !axial::in_domain(cases_g[c], p)) continue;
            ++k;
            const Quaternion want = axial::eval(cases_f[c], q) * axial::eval(cases_g[c], q);
            const Quaternion got = axial::eval(axial::product(cases_f[c], cases_g[c]), q);
            if (max_abs_diff(got, want) > 1e-9 * (1.0 + max_abs(want))) {
                pass = false;
                detail = "product case " + std::to_string(c);
                break;
            }
        }
    }

    for (int c = 0; c < 3 && pass; ++c) {
        int k = 0;
        while (k < 100) {
            const Quaternion q = rng.nonzero_quat(0.04);
            const RegularFn composed = axial::compose(cases_g[c], cases_f[c]);
            if (!axial::in_domain(composed, q.to_vec())) continue;
            ++k;
            Quaternion want;
            try {
                want = axial::eval(cases_g[c], axial::eval(cases_f[c], q));
            } catch (const DomainError&) {
                continue;
            }
            const Quaternion got = axial::eval(composed, q);
            if (max_abs_diff(got, want) > 1e-9 * (1.0 + max_abs(want))) {
                pass = false;
                detail = "composition case " + std::to_string(c);
                break;
            }
        }
    }

    report_line(4, "representation soundness vs direct quaternionic computation (1e-9 rel)",
                pass, detail);
}

// -------------------------------------------------------------------- 5

void criterion_5() {
    bool pass = true;
    std::string detail;

    const manifold::AtlasReport h = manifold::validate_atlas(manifold::atlas_h(), 200, 1e-5, 5);
    if (!h.pass || !h.pairs.empty()) {
        pass = false;
        detail = "identity atlas";
    }

    const manifold::AtlasReport hp =
        manifold::validate_atlas(manifold::atlas_hp1(), 200, 1e-5, 5);
    if (!hp.pass || hp.pairs.size() != 2) {
        pass = false;
        detail = "projective atlas failed validation";
    }
    for (const auto& pair : hp.pairs) {
        if (pair.n_regular != 200 || pair.n_not_regular != 0) {
            pass = false;
            detail = "projective atlas: pair " + pair.to_chart + "." + pair.from_chart +
                     "_inv checked " + std::to_string(pair.n_regular) + " regular";
        }
    }

    // transition map equals the reciprocal of the identity, pointwise
    const manifold::Atlas<manifold::HpPoint> atlas = manifold::atlas_hp1();
    const manifold::TransitionMap t = manifold::transition(atlas, 0, 1);
    const RegularFn recip_id = axial::reciprocal(axial::identity());
    oracles::Rng rng(271);
    for (int k = 0; k < 100; ++k) {
        const Quaternion q = rng.nonzero_quat(0.04);
        if (max_abs_diff(t.map(q), axial::eval(recip_id, q)) > 1e-12) {
            pass = false;
            detail = "transition disagrees with the reciprocal";
        }
    }

    const manifold::AtlasReport broken =
        manifold::validate_atlas(manifold::atlas_broken_conj(), 50, 1e-5, 5);
    if (broken.pass) {
        pass = false;
        detail = "broken atlas passed";
    }
    for (const auto& pair : broken.pairs) {
        if (pair.n_not_regular != pair.points.size() || pair.points.empty()) {
            pass = false;
            detail = "broken atlas: some sampled point did not fail";
        }
    }

    report_line(5, "atlas validation: H trivial, HP1 (200 pts, 1e-5), transition = 1/q "
                   "(1e-12), conj atlas fails everywhere",
                pass, detail);
}

// -------------------------------------------------------------------- 6

void criterion_6() {
    oracles::Rng rng(919);
    bool pass = true;
    std::string detail;
    for (int k = 0; k < 100; ++k) {
        const Quaternion x1 = rng.nonzero_quat();
        const Quaternion x2 = rng.nonzero_quat();
        const Quaternion q = rng.nonzero_quat();
        const manifold::HpPoint a = manifold::hp_new(x1, x2);
        const manifold::HpPoint b = manifold::hp_new(x1 * q, x2 * q);
        if (max_abs_diff(manifold::phi1(a), manifold::phi1(b)) > 1e-12 ||
            max_abs_diff(manifold::phi2(a), manifold::phi2(b)) > 1e-12) {
            pass = false;
            detail = "chart value moved under right rescaling";
        }
    }
    for (int k = 0; k < 1000; ++k) {
        const manifold::HpPoint p = manifold::hp_new(rng.quat(), rng.quat());
        if (!(p == manifold::hp_new(p.x1(), p.x2()))) {
            pass = false;
            detail = "canonicalization not idempotent";
        }
    }
    report_line(6, "projective charts: rescaling invariance <=1e-12 (100 pts), "
                   "idempotent canonical form (1000 pts)",
                pass, detail);
}

// -------------------------------------------------------------------- 7

void criterion_7() {
    bool pass = true;
    std::string detail;

    using axial::structurally_equal;
    if (!structurally_equal(expr::parse("q^2 + 1"),
                            axial::sum(axial::power(2), axial::constant(1))) ||
        !structurally_equal(expr::parse("exp(q^3)"),
                            axial::compose(axial::exp_fn(), axial::power(3))) ||
        !structurally_equal(expr::parse("recip(q)*q"),
                            axial::product(axial::reciprocal(axial::identity()),
                                           axial::identity()))) {
        pass = false;
        detail = "a grammar example parsed to the wrong tree";
    }
    if (expr::print(expr::parse("q^2+1")) != "q^2 + 1" ||
        expr::print(axial::power(-3)) != "q^-3" ||
        expr::print(axial::compose(axial::exp_fn(), axial::identity())) != "exp(q)") {
        pass = false;
        detail = "a printer example did not reproduce exactly";
    }

    oracles::Rng rng(937);
    for (int k = 0; k < 500; ++k) {
        const RegularFn t = oracles::random_tree(rng, 6);
        const std::string text = expr::print(t);
        try {
            const RegularFn back = expr::parse(text);
            if (!structurally_equal(t, back) || expr::print(back) != text) {
                pass = false;
                detail = "round trip failed for: " + text;
                break;
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = "printed form did not parse: " + text;
            break;
        }
    }
    report_line(7, "parser: 500-tree round trip fixed point, grammar examples exact", pass,
                detail);
}

// -------------------------------------------------------------------- 8

void criterion_8() {
    if (g_bin.empty()) {
        report_line(8, "determinism (byte-identical reports)", false,
                    "regulus binary path not provided (argv[1] or REGULUS_BIN)");
        return;
    }
    const std::string cmd1 =
        g_bin + " check --expr \"q^3\" --seed 42 --json acc_out_1.json > /dev/null";
    const std::string cmd2 =
        g_bin + " check --expr \"q^3\" --seed 42 --json acc_out_2.json > /dev/null";
    const int s1 = std::system(cmd1.c_str());
    const int s2 = std::system(cmd2.c_str());
    auto slurp = [](const char* path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream out;
        out << in.rdbuf();
        return out.str();
    };
    const std::string a = slurp("acc_out_1.json");
    const std::string b = slurp("acc_out_2.json");
    const bool pass = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    report_line(8, "determinism: identical seed gives byte-identical JSON", pass,
                pass ? "" : "runs differed or failed");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_bin = argv[1];
    if (g_bin.empty()) {
        if (const char* env = std::getenv("REGULUS_BIN")) g_bin = env;
    }

    criteria_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion/criteria FAILED\n", g_failures);
    return 1;
}
