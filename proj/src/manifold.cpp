#include "regulus/manifold.hpp"

#include <cmath>

namespace regulus::manifold {

namespace {

// Overlap samples for the built-in atlases: quasi-random points in the
// annulus 0.2 <= |q| <= 5, excluding the real-axis tube. The annulus stays
// clear of the transition map's pole at 0 and of float overflow; the tube
// is excluded because verdicts there are indeterminate by design.
std::vector<Quaternion> annulus_samples(std::size_t n, std::uint64_t seed,
                                        SampleStats& stats) {
    constexpr double kInner = 0.2;
    constexpr double kOuter = 5.0;
    const Box4 box = Box4::symmetric(kOuter);
    const auto in_annulus = [&](const Vec4& p) {
        const double r2 = p[0] * p[0] + rho_of(p);
        return r2 >= kInner * kInner && r2 <= kOuter * kOuter;
    };
    const std::vector<Vec4> pts = sample_box(box, n, seed, in_annulus, gcr::kEpsRho, &stats);
    std::vector<Quaternion> out;
    out.reserve(pts.size());
    for (const Vec4& p : pts) out.push_back(Quaternion::from_vec(p));
    return out;
}

}  // namespace

HpPoint::HpPoint(const Quaternion& x1, const Quaternion& x2) {
    const double n1 = norm_sq(x1);
    const double n2 = norm_sq(x2);
    if (n1 == 0.0 && n2 == 0.0)
        throw DomainError("(0, 0) does not represent a point of the projective space");
    // Pivot on the larger-norm slot (x1 on ties) and scale it to exactly e1;
    // the canonical form is then idempotent under re-normalization.
    if (n1 >= n2) {
        const Quaternion r = inv(x1);
        x1_ = kOne;
        x2_ = x2 * r;
    } else {
        const Quaternion r = inv(x2);
        x1_ = x1 * r;
        x2_ = kOne;
    }
}

bool HpPoint::same_class(const HpPoint& other, double tol) const {
    return max_abs_diff(x1_, other.x1_) <= tol && max_abs_diff(x2_, other.x2_) <= tol;
}

HpPoint hp_new(const Quaternion& x1, const Quaternion& x2) { return HpPoint(x1, x2); }

Quaternion phi1(const HpPoint& p) {
    if (norm_sq(p.x1()) == 0.0)
        throw ChartDomainError("phi1 needs x1 != 0 (point lies outside U1)");
    return p.x2() * inv(p.x1());
}

Quaternion phi2(const HpPoint& p) {
    if (norm_sq(p.x2()) == 0.0)
        throw ChartDomainError("phi2 needs x2 != 0 (point lies outside U2)");
    return p.x1() * inv(p.x2());
}

Atlas<Quaternion> atlas_h() {
    Atlas<Quaternion> atlas;
    atlas.name = "H";
    Chart<Quaternion> id;
    id.label = "id_H";
    id.domain_test = [](const Quaternion&) { return true; };
    id.to_h = [](const Quaternion& q) { return q; };
    id.from_h = [](const Quaternion& q) { return q; };
    id.image_test = [](const Quaternion&) { return true; };
    atlas.charts.push_back(std::move(id));
    atlas.overlap_sampler = [](std::size_t, std::size_t, std::size_t n, std::uint64_t seed,
                               SampleStats& stats) { return annulus_samples(n, seed, stats); };
    return atlas;
}

Atlas<HpPoint> atlas_hp1() {
    Atlas<HpPoint> atlas;
    atlas.name = "HP1";

    Chart<HpPoint> c1;
    c1.label = "phi1";
    c1.domain_test = [](const HpPoint& p) { return norm_sq(p.x1()) > 0.0; };
    c1.to_h = [](const HpPoint& p) { return phi1(p); };
    c1.from_h = [](const Quaternion& q) { return hp_new(kOne, q); };
    c1.image_test = [](const Quaternion&) { return true; };

    Chart<HpPoint> c2;
    c2.label = "phi2";
    c2.domain_test = [](const HpPoint& p) { return norm_sq(p.x2()) > 0.0; };
    c2.to_h = [](const HpPoint& p) { return phi2(p); };
    c2.from_h = [](const Quaternion& q) { return hp_new(q, kOne); };
    c2.image_test = [](const Quaternion&) { return true; };

    atlas.charts.push_back(std::move(c1));
    atlas.charts.push_back(std::move(c2));
    atlas.overlap_sampler = [](std::size_t, std::size_t, std::size_t n, std::uint64_t seed,
                               SampleStats& stats) { return annulus_samples(n, seed, stats); };
    return atlas;
}

Atlas<Quaternion> atlas_broken_conj() {
    Atlas<Quaternion> atlas;
    atlas.name = "broken_conj";

    Chart<Quaternion> id;
    id.label = "id_H";
    id.domain_test = [](const Quaternion&) { return true; };
    id.to_h = [](const Quaternion& q) { return q; };
    id.from_h = [](const Quaternion& q) { return q; };
    id.image_test = [](const Quaternion&) { return true; };

    // conj is its own inverse, so both transition maps are q -> conj(q),
    // which fails the residual system everywhere off the real axis.
    Chart<Quaternion> cj;
    cj.label = "conj";
    cj.domain_test = [](const Quaternion&) { return true; };
    cj.to_h = [](const Quaternion& q) { return conj(q); };
    cj.from_h = [](const Quaternion& q) { return conj(q); };
    cj.image_test = [](const Quaternion&) { return true; };

    atlas.charts.push_back(std::move(id));
    atlas.charts.push_back(std::move(cj));
    atlas.overlap_sampler = [](std::size_t, std::size_t, std::size_t n, std::uint64_t seed,
                               SampleStats& stats) { return annulus_samples(n, seed, stats); };
    return atlas;
}

}  // namespace regulus::manifold
