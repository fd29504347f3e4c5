#include "regulus/report.hpp"

#include <sstream>

#include "regulus/axial.hpp"

namespace regulus::report {

using nlohmann::json;

namespace {

json vec_json(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

Vec4 vec_from(const json& j) { return {j.at(0), j.at(1), j.at(2), j.at(3)}; }

}  // namespace

PointRecord to_record(const gcr::RegularityVerdict& v, std::string transition) {
    PointRecord r;
    r.point = v.point;
    r.transition = std::move(transition);
    r.f0 = v.f0;
    r.f1 = v.f1;
    r.residuals = v.residuals.r;
    r.max_residual = v.residuals.max_abs();
    r.structural_residual = v.structural_residual;
    r.scale = v.scale;
    r.fueter_left = v.fueter_left.to_vec();
    r.fueter_right = v.fueter_right.to_vec();
    r.expected_fueter = v.expected_fueter.to_vec();
    r.residuals_ok = v.residuals_ok;
    r.structure_ok = v.structure_ok;
    r.fueter_ok = v.fueter_ok;
    r.verdict = gcr::to_string(v.verdict);
    r.method = gcr::to_string(v.method);
    return r;
}

void CheckReport::finalize() {
    summary = Summary{};
    summary.n_checked = points.size();
    for (const auto& p : points) {
        if (p.verdict == "regular") ++summary.n_regular;
        else if (p.verdict == "not_regular") ++summary.n_not_regular;
        else ++summary.n_indeterminate;
    }
    summary.pass = summary.n_not_regular == 0;
}

json CheckReport::to_json() const {
    json j;
    j["schema"] = schema;
    j["mode"] = mode;
    j["subject"] = subject;
    j["axial_convention"] = axial_convention;
    j["method"] = method;
    j["seed"] = seed;
    j["tolerances"] = {{"tol", tol}, {"eps_rho", eps_rho}};
    j["n_requested"] = n_requested;
    if (box) {
        j["box"] = {{"lo", vec_json(box->lo)}, {"hi", vec_json(box->hi)}};
    }
    j["sampling"] = {{"proposed", sampling.proposed},
                     {"rejected_domain", sampling.rejected_domain},
                     {"rejected_axis_tube", sampling.rejected_axis_tube}};
    j["warnings"] = warnings;
    json pts = json::array();
    for (const auto& p : points) {
        json e;
        e["point"] = vec_json(p.point);
        if (!p.transition.empty()) e["transition"] = p.transition;
        e["f0"] = p.f0;
        e["f1"] = p.f1;
        e["residuals"] = p.residuals;
        e["max_residual"] = p.max_residual;
        e["structural_residual"] = p.structural_residual;
        e["scale"] = p.scale;
        e["fueter_left"] = vec_json(p.fueter_left);
        e["fueter_right"] = vec_json(p.fueter_right);
        e["expected_fueter"] = vec_json(p.expected_fueter);
        e["residuals_ok"] = p.residuals_ok;
        e["structure_ok"] = p.structure_ok;
        e["fueter_ok"] = p.fueter_ok;
        e["verdict"] = p.verdict;
        e["method"] = p.method;
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    if (!pairs.empty()) {
        json ps = json::array();
        for (const auto& p : pairs) {
            ps.push_back({{"transition", p.transition},
                          {"n_regular", p.n_regular},
                          {"n_not_regular", p.n_not_regular},
                          {"n_indeterminate", p.n_indeterminate},
                          {"excluded_fraction", p.excluded_fraction}});
        }
        j["pairs"] = std::move(ps);
    }
    j["summary"] = {{"n_checked", summary.n_checked},
                    {"n_regular", summary.n_regular},
                    {"n_not_regular", summary.n_not_regular},
                    {"n_indeterminate", summary.n_indeterminate},
                    {"pass", summary.pass}};
    return j;
}

CheckReport CheckReport::from_json(const json& j) {
    CheckReport r;
    r.schema = j.at("schema");
    r.mode = j.at("mode");
    r.subject = j.at("subject");
    r.axial_convention = j.at("axial_convention");
    r.method = j.at("method");
    r.seed = j.at("seed");
    r.tol = j.at("tolerances").at("tol");
    r.eps_rho = j.at("tolerances").at("eps_rho");
    r.n_requested = j.at("n_requested");
    if (j.contains("box")) {
        Box4 b;
        b.lo = vec_from(j.at("box").at("lo"));
        b.hi = vec_from(j.at("box").at("hi"));
        r.box = b;
    }
    r.sampling.proposed = j.at("sampling").at("proposed");
    r.sampling.rejected_domain = j.at("sampling").at("rejected_domain");
    r.sampling.rejected_axis_tube = j.at("sampling").at("rejected_axis_tube");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    for (const auto& e : j.at("points")) {
        PointRecord p;
        p.point = vec_from(e.at("point"));
        if (e.contains("transition")) p.transition = e.at("transition");
        p.f0 = e.at("f0");
        p.f1 = e.at("f1");
        p.residuals = e.at("residuals");
        p.max_residual = e.at("max_residual");
        p.structural_residual = e.at("structural_residual");
        p.scale = e.at("scale");
        p.fueter_left = vec_from(e.at("fueter_left"));
        p.fueter_right = vec_from(e.at("fueter_right"));
        p.expected_fueter = vec_from(e.at("expected_fueter"));
        p.residuals_ok = e.at("residuals_ok");
        p.structure_ok = e.at("structure_ok");
        p.fueter_ok = e.at("fueter_ok");
        p.verdict = e.at("verdict");
        p.method = e.at("method");
        r.points.push_back(std::move(p));
    }
    if (j.contains("pairs")) {
        for (const auto& e : j.at("pairs")) {
            PairSummary p;
            p.transition = e.at("transition");
            p.n_regular = e.at("n_regular");
            p.n_not_regular = e.at("n_not_regular");
            p.n_indeterminate = e.at("n_indeterminate");
            p.excluded_fraction = e.at("excluded_fraction");
            r.pairs.push_back(std::move(p));
        }
    }
    r.summary.n_checked = j.at("summary").at("n_checked");
    r.summary.n_regular = j.at("summary").at("n_regular");
    r.summary.n_not_regular = j.at("summary").at("n_not_regular");
    r.summary.n_indeterminate = j.at("summary").at("n_indeterminate");
    r.summary.pass = j.at("summary").at("pass");
    return r;
}

bool operator==(const CheckReport& a, const CheckReport& b) {
    const bool box_equal =
        (a.box.has_value() == b.box.has_value()) &&
        (!a.box || (a.box->lo == b.box->lo && a.box->hi == b.box->hi));
    return a.schema == b.schema && a.mode == b.mode && a.subject == b.subject &&
           a.axial_convention == b.axial_convention && a.method == b.method &&
           a.seed == b.seed && a.tol == b.tol && a.eps_rho == b.eps_rho &&
           a.n_requested == b.n_requested && box_equal &&
           a.sampling.proposed == b.sampling.proposed &&
           a.sampling.rejected_domain == b.sampling.rejected_domain &&
           a.sampling.rejected_axis_tube == b.sampling.rejected_axis_tube &&
           a.warnings == b.warnings && a.points == b.points && a.pairs == b.pairs &&
           a.summary == b.summary;
}

CheckReport from_atlas(const manifold::AtlasReport& ar) {
    CheckReport r;
    r.mode = "atlas";
    r.subject = ar.atlas;
    r.axial_convention = axial::kAxialConvention;
    r.method = "finite_difference";
    r.seed = ar.seed;
    r.tol = ar.tol;
    r.n_requested = ar.samples_per_pair;
    r.warnings = ar.warnings;
    for (const auto& pair : ar.pairs) {
        const std::string label = pair.to_chart + "." + pair.from_chart + "_inv";
        for (const auto& v : pair.points) r.points.push_back(to_record(v, label));
        PairSummary ps;
        ps.transition = label;
        ps.n_regular = pair.n_regular;
        ps.n_not_regular = pair.n_not_regular;
        ps.n_indeterminate = pair.n_indeterminate;
        ps.excluded_fraction = pair.excluded_fraction;
        r.pairs.push_back(std::move(ps));
    }
    r.finalize();
    r.summary.pass = ar.pass;
    return r;
}

std::string render_text(const CheckReport& r) {
    std::ostringstream out;
    out << "regulus " << r.mode << ": " << r.subject << "\n";
    out << "convention: " << r.axial_convention << "\n";
    out << "method " << r.method << ", seed " << r.seed << ", tol " << format_double(r.tol)
        << "\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    for (const auto& p : r.pairs)
        out << "transition " << p.transition << ": " << p.n_regular << " regular, "
            << p.n_not_regular << " not regular, " << p.n_indeterminate
            << " indeterminate, excluded fraction " << format_double(p.excluded_fraction)
            << "\n";
    out << "checked " << r.summary.n_checked << " point(s): " << r.summary.n_regular
        << " regular, " << r.summary.n_not_regular << " not regular, "
        << r.summary.n_indeterminate << " indeterminate\n";
    std::size_t shown = 0;
    for (const auto& p : r.points) {
        if (p.verdict != "not_regular") continue;
        if (++shown > 5) {
            out << "  ... further failures omitted (see JSON report)\n";
            break;
        }
        out << "  not regular at (" << format_double(p.point[0]) << ", "
            << format_double(p.point[1]) << ", " << format_double(p.point[2]) << ", "
            << format_double(p.point[3]) << ")";
        if (!p.transition.empty()) out << " [" << p.transition << "]";
        out << ": max residual " << format_double(p.max_residual) << ", structural "
            << format_double(p.structural_residual) << "\n";
        out << "    fueter left " << to_string(Quaternion::from_vec(p.fueter_left))
            << ", right " << to_string(Quaternion::from_vec(p.fueter_right)) << ", expected "
            << to_string(Quaternion::from_vec(p.expected_fueter)) << "\n";
    }
    out << (r.summary.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace regulus::report
