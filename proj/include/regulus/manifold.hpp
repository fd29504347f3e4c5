#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "regulus/errors.hpp"
#include "regulus/gcr.hpp"
#include "regulus/quat.hpp"
#include "regulus/sampler.hpp"

namespace regulus::manifold {

// One chart of a four-manifold presented concretely: a labelled partial
// bijection between manifold points of type P and an open subset of H.
// Continuity/homeomorphism claims are trusted inputs; only regularity of
// transitions is checked numerically.
template <class P>
struct Chart {
    std::string label;
    std::function<bool(const P&)> domain_test;
    std::function<Quaternion(const P&)> to_h;
    std::function<P(const Quaternion&)> from_h;
    std::function<bool(const Quaternion&)> image_test;
};

// An atlas is its charts plus a per-ordered-pair overlap sampler producing
// points of phi_b(U_a intersect U_b). The sampler also reports proposal
// statistics so excluded regions (the real-axis tube) are visible in
// reports rather than silently dropped.
template <class P>
struct Atlas {
    std::string name;
    std::vector<Chart<P>> charts;
    std::function<std::vector<Quaternion>(std::size_t a, std::size_t b, std::size_t n,
                                          std::uint64_t seed, SampleStats& stats)>
        overlap_sampler;
    // Defaults to "all distinct pairs overlap" when unset.
    std::function<bool(std::size_t a, std::size_t b)> overlap_nonempty;
};

// The composite phi_a after phi_b^{-1}, restricted to the overlap image.
struct TransitionMap {
    std::string label;
    std::function<Quaternion(const Quaternion&)> map;
    std::function<bool(const Quaternion&)> domain;
};

template <class P>
TransitionMap transition(const Atlas<P>& atlas, std::size_t a, std::size_t b) {
    const Chart<P>& ca = atlas.charts.at(a);
    const Chart<P>& cb = atlas.charts.at(b);
    if (atlas.overlap_nonempty && !atlas.overlap_nonempty(a, b))
        throw EmptyOverlap("charts " + ca.label + " and " + cb.label + " do not overlap");
    TransitionMap t;
    t.label = ca.label + "." + cb.label + "_inv";
    t.map = [to = ca.to_h, from = cb.from_h](const Quaternion& q) { return to(from(q)); };
    t.domain = [dom = ca.domain_test, img = cb.image_test,
                from = cb.from_h](const Quaternion& q) {
        try {
            return img(q) && dom(from(q));
        } catch (...) {
            return false;
        }
    };
    return t;
}

// Verdicts for one ordered chart pair.
struct PairReport {
    std::string from_chart;  // beta: the chart whose image we sample
    std::string to_chart;    // alpha
    std::vector<gcr::RegularityVerdict> points;
    std::size_t n_regular = 0;
    std::size_t n_not_regular = 0;
    std::size_t n_indeterminate = 0;
    // Fraction of sampler proposals excluded by the real-axis tube.
    double excluded_fraction = 0.0;

    bool pass() const { return n_not_regular == 0; }
};

struct AtlasReport {
    std::string atlas;
    std::size_t n_charts = 0;
    std::size_t samples_per_pair = 0;
    double tol = gcr::kTolFd;
    std::uint64_t seed = 0;
    std::vector<PairReport> pairs;
    std::vector<std::string> warnings;
    bool pass = true;
};

// Check every ordered chart pair with nonempty overlap: sample the overlap
// image, run the black-box regularity check on the transition map at each
// sample, and aggregate. Per-point checks run in parallel and are merged
// by sample index, so a fixed seed gives a bit-reproducible report.
// Indeterminate points (inside the tube, or numerically unverifiable) are
// recorded separately and never count toward a pass.
template <class P>
AtlasReport validate_atlas(const Atlas<P>& atlas, std::size_t samples_per_pair,
                           double tol = gcr::kTolFd, std::uint64_t seed = 0) {
    AtlasReport report;
    report.atlas = atlas.name;
    report.n_charts = atlas.charts.size();
    report.samples_per_pair = samples_per_pair;
    report.tol = tol;
    report.seed = seed;

    for (std::size_t a = 0; a < atlas.charts.size(); ++a) {
        for (std::size_t b = 0; b < atlas.charts.size(); ++b) {
            if (a == b) continue;
            if (atlas.overlap_nonempty && !atlas.overlap_nonempty(a, b)) continue;
            const TransitionMap tmap = transition(atlas, a, b);

            PairReport pr;
            pr.from_chart = atlas.charts[b].label;
            pr.to_chart = atlas.charts[a].label;

            SampleStats stats;
            const std::vector<Quaternion> samples =
                atlas.overlap_sampler(a, b, samples_per_pair, seed, stats);
            if (stats.proposed > 0)
                pr.excluded_fraction = static_cast<double>(stats.rejected_axis_tube) /
                                       static_cast<double>(stats.proposed);

            pr.points.resize(samples.size());
            parallel_for_indexed(samples.size(), [&](std::size_t i) {
                const Vec4 p = samples[i].to_vec();
                try {
                    if (!tmap.domain(samples[i])) {
                        gcr::RegularityVerdict v;
                        v.point = p;
                        v.tol = tol;
                        v.method = gcr::Method::FiniteDifference;
                        v.verdict = gcr::Verdict::Indeterminate;
                        pr.points[i] = v;
                        return;
                    }
                    pr.points[i] = gcr::check_black_box(tmap.map, p, 0.0, tol);
                } catch (const TooCloseToRealAxis&) {
                    gcr::RegularityVerdict v;
                    v.point = p;
                    v.tol = tol;
                    v.method = gcr::Method::FiniteDifference;
                    v.verdict = gcr::Verdict::Indeterminate;
                    pr.points[i] = v;
                } catch (const NumericalError&) {
                    gcr::RegularityVerdict v;
                    v.point = p;
                    v.tol = tol;
                    v.method = gcr::Method::FiniteDifference;
                    v.verdict = gcr::Verdict::Indeterminate;
                    pr.points[i] = v;
                }
            });

            for (const auto& v : pr.points) {
                switch (v.verdict) {
                    case gcr::Verdict::Regular: ++pr.n_regular; break;
                    case gcr::Verdict::NotRegular: ++pr.n_not_regular; break;
                    case gcr::Verdict::Indeterminate: ++pr.n_indeterminate; break;
                }
            }
            if (pr.points.empty())
                report.warnings.push_back("pair " + tmap.label +
                                          ": no samples drawn; pass is vacuous");
            if (pr.n_indeterminate > 0)
                report.warnings.push_back("pair " + tmap.label + ": " +
                                          std::to_string(pr.n_indeterminate) +
                                          " point(s) excluded as indeterminate");
            report.pass = report.pass && pr.pass();
            report.pairs.push_back(std::move(pr));
        }
    }
    if (report.pairs.empty())
        report.warnings.push_back("atlas has no overlapping chart pairs; nothing to check");
    return report;
}

// A point of the right projective space: the class of (x1, x2) != (0, 0)
// under right multiplication by nonzero quaternions, stored canonically:
// the larger-norm slot (x1 on ties) is scaled to exactly e1.
class HpPoint {
public:
    HpPoint(const Quaternion& x1, const Quaternion& x2);

    const Quaternion& x1() const { return x1_; }
    const Quaternion& x2() const { return x2_; }

    bool same_class(const HpPoint& other, double tol = 1e-12) const;

    friend bool operator==(const HpPoint& a, const HpPoint& b) {
        return a.x1_ == b.x1_ && a.x2_ == b.x2_;
    }

private:
    Quaternion x1_, x2_;
};

HpPoint hp_new(const Quaternion& x1, const Quaternion& x2);

// Chart maps x2 x1^{-1} and x1 x2^{-1}; both are invariant under the right
// scaling that defines the class.
Quaternion phi1(const HpPoint& p);
Quaternion phi2(const HpPoint& p);

// The quaternions with the single identity chart.
Atlas<Quaternion> atlas_h();
// The right projective space with charts phi1, phi2; its transition map is
// q -> q^{-1} on H minus 0.
Atlas<HpPoint> atlas_hp1();
// Deliberately broken test atlas whose transition map is conjugation;
// every sampled point must fail the check.
Atlas<Quaternion> atlas_broken_conj();

}  // namespace regulus::manifold
