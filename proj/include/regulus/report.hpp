#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regulus/gcr.hpp"
#include "regulus/manifold.hpp"
#include "regulus/quat.hpp"
#include "regulus/sampler.hpp"

#include <json.hpp>

namespace regulus::report {

// One checked point, flattened for serialization. `transition` is set in
// atlas mode only.
struct PointRecord {
    Vec4 point{};
    std::string transition;
    double f0 = 0.0, f1 = 0.0;
    std::array<double, 7> residuals{};
    double max_residual = 0.0;
    double structural_residual = 0.0;
    double scale = 1.0;
    Vec4 fueter_left{}, fueter_right{}, expected_fueter{};
    bool residuals_ok = false, structure_ok = false, fueter_ok = false;
    std::string verdict;
    std::string method;

    friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

struct Summary {
    std::size_t n_checked = 0;
    std::size_t n_regular = 0;
    std::size_t n_not_regular = 0;
    std::size_t n_indeterminate = 0;
    bool pass = false;

    friend bool operator==(const Summary&, const Summary&) = default;
};

// Per chart-pair tallies (atlas mode), including the fraction of sampler
// proposals excluded by the real-axis tube so a pass can never be
// manufactured by silent exclusions.
struct PairSummary {
    std::string transition;
    std::size_t n_regular = 0;
    std::size_t n_not_regular = 0;
    std::size_t n_indeterminate = 0;
    double excluded_fraction = 0.0;

    friend bool operator==(const PairSummary&, const PairSummary&) = default;
};

// The full report emitted by the command-line front end. Serializes to a
// versioned snake_case JSON document; `from_json(to_json(r)) == r` holds
// field for field. The axial convention banner appears in every report.
struct CheckReport {
    int schema = 1;
    std::string mode;     // "check" | "atlas"
    std::string subject;  // expression text or atlas id
    std::string axial_convention;
    std::string method;  // "jet" | "finite_difference"
    std::uint64_t seed = 0;
    double tol = 0.0;
    double eps_rho = gcr::kEpsRho;
    std::size_t n_requested = 0;
    std::optional<Box4> box;  // check mode only
    SampleStats sampling{};
    std::vector<std::string> warnings;
    std::vector<PointRecord> points;
    std::vector<PairSummary> pairs;  // atlas mode only
    Summary summary;

    // Recompute summary tallies from the records.
    void finalize();

    nlohmann::json to_json() const;
    static CheckReport from_json(const nlohmann::json& j);

    friend bool operator==(const CheckReport& a, const CheckReport& b);
};

PointRecord to_record(const gcr::RegularityVerdict& v, std::string transition = {});

CheckReport from_atlas(const manifold::AtlasReport& ar);

// Human-readable rendering for the terminal.
std::string render_text(const CheckReport& r);

}  // namespace regulus::report
