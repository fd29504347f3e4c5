#include "regulus/sampler.hpp"

namespace regulus {

namespace {

double radical_inverse(std::uint64_t index, std::uint64_t base) {
    double result = 0.0;
    double digit = 1.0 / static_cast<double>(base);
    while (index > 0) {
        result += static_cast<double>(index % base) * digit;
        index /= base;
        digit /= static_cast<double>(base);
    }
    return result;
}

constexpr std::uint64_t kBases[4] = {2, 3, 5, 7};

}  // namespace

Vec4 Halton4::next() {
    Vec4 u;
    for (std::size_t k = 0; k < 4; ++k) u[k] = radical_inverse(index_, kBases[k]);
    ++index_;
    return u;
}

std::vector<Vec4> sample_box(const Box4& box, std::size_t n, std::uint64_t seed,
                             const std::function<bool(const Vec4&)>& accept, double min_rho,
                             SampleStats* stats, std::size_t max_proposals) {
    if (max_proposals == 0) max_proposals = 1000 * n + 1000;
    Halton4 seq(seed);
    std::vector<Vec4> out;
    out.reserve(n);
    SampleStats local;
    while (out.size() < n && local.proposed < max_proposals) {
        const Vec4 u = seq.next();
        ++local.proposed;
        Vec4 p;
        for (std::size_t k = 0; k < 4; ++k) p[k] = box.lo[k] + u[k] * (box.hi[k] - box.lo[k]);
        if (rho_of(p) < min_rho) {
            ++local.rejected_axis_tube;
            continue;
        }
        if (accept && !accept(p)) {
            ++local.rejected_domain;
            continue;
        }
        out.push_back(p);
    }
    if (stats) *stats = local;
    return out;
}

}  // namespace regulus
