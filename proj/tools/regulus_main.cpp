// regulus: numerical regularity checks for axially-represented
// quaternion-valued functions, and atlas validation for the built-in
// four-manifolds.
//
// Exit status: 0 all checked points regular (or atlas pass), 1 check
// failed, 2 syntax error / unknown atlas id, 3 empty effective region.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "regulus/axial.hpp"
#include "regulus/errors.hpp"
#include "regulus/expr.hpp"
#include "regulus/gcr.hpp"
#include "regulus/manifold.hpp"
#include "regulus/report.hpp"
#include "regulus/sampler.hpp"

namespace {

using namespace regulus;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitEmptyRegion = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("REGULUS_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            std::cerr << "warning: ignoring unparsable REGULUS_SEED='" << env << "'\n";
        }
    }
    return 0;
}

// --box q1=-2:2,q2=-2:2,q3=-2:2,q4=-2:2 (unlisted axes keep the default).
std::optional<Box4> parse_box(const std::string& text, std::string& error) {
    Box4 box;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string part = text.substr(pos, comma - pos);
        pos = comma + 1;
        const std::size_t eq = part.find('=');
        const std::size_t colon = part.find(':', eq == std::string::npos ? 0 : eq);
        if (part.size() < 6 || part[0] != 'q' || eq == std::string::npos ||
            colon == std::string::npos) {
            error = "bad box component '" + part + "' (expected qN=lo:hi)";
            return std::nullopt;
        }
        const int axis = part[1] - '0';
        if (axis < 1 || axis > 4 || eq != 2) {
            error = "bad box axis in '" + part + "' (expected q1..q4)";
            return std::nullopt;
        }
        try {
            const double lo = std::stod(part.substr(eq + 1, colon - eq - 1));
            const double hi = std::stod(part.substr(colon + 1));
            if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
                error = "empty or non-finite interval in '" + part + "'";
                return std::nullopt;
            }
            box.lo[static_cast<std::size_t>(axis - 1)] = lo;
            box.hi[static_cast<std::size_t>(axis - 1)] = hi;
        } catch (...) {
            error = "unparsable bounds in '" + part + "'";
            return std::nullopt;
        }
    }
    return box;
}

void write_json(const report::CheckReport& rep, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << path << "' for writing\n";
        std::exit(kExitCheckFailed);
    }
    out << rep.to_json().dump(2) << "\n";
}

int run_check(const std::string& expr_text, const std::string& box_arg, std::size_t n,
              std::uint64_t seed, double tol_opt, bool force_fd,
              const std::string& json_path) {
    axial::RegularFn fn = axial::identity();
    try {
        fn = expr::parse(expr_text);
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const ArityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    }

    std::string box_error;
    const std::optional<Box4> box = parse_box(box_arg, box_error);
    if (!box) {
        std::cerr << "error: " << box_error << "\n";
        return kExitSyntax;
    }

    const double tol = tol_opt > 0.0 ? tol_opt : (force_fd ? gcr::kTolFd : gcr::kTolJet);

    report::CheckReport rep;
    rep.mode = "check";
    rep.subject = expr_text;
    rep.axial_convention = axial::kAxialConvention;
    rep.method = force_fd ? "finite_difference" : "jet";
    rep.seed = seed;
    rep.tol = tol;
    rep.n_requested = n;
    rep.box = box;

    const auto domain = [&fn](const Vec4& p) { return axial::in_domain(fn, p); };
    const std::vector<Vec4> points =
        sample_box(*box, n, seed, domain, gcr::kEpsRho, &rep.sampling);
    if (points.size() < n) {
        std::cerr << "error: effective region is empty (found " << points.size() << " of " << n
                  << " requested points after " << rep.sampling.proposed << " proposals)\n";
        return kExitEmptyRegion;
    }

    const axial::AxialPair pair = axial::pair_of(fn);
    const gcr::RealMap map = gcr::as_real_map(fn);
    std::vector<gcr::RegularityVerdict> verdicts(points.size());
    parallel_for_indexed(points.size(), [&](std::size_t i) {
        if (force_fd) {
            try {
                verdicts[i] = gcr::check_black_box(map, points[i], 0.0, tol);
            } catch (const TooCloseToRealAxis&) {
                gcr::RegularityVerdict v;
                v.point = points[i];
                v.tol = tol;
                v.method = gcr::Method::FiniteDifference;
                verdicts[i] = v;  // indeterminate
            } catch (const NumericalError&) {
                gcr::RegularityVerdict v;
                v.point = points[i];
                v.tol = tol;
                v.method = gcr::Method::FiniteDifference;
                verdicts[i] = v;
            }
        } else {
            verdicts[i] = gcr::check_pair(pair, points[i], tol);
        }
    });
    for (const auto& v : verdicts) rep.points.push_back(report::to_record(v));
    rep.finalize();

    if (n == 0) rep.warnings.push_back("no samples requested; pass is vacuous");

    std::cout << report::render_text(rep);
    if (!json_path.empty()) write_json(rep, json_path);
    return rep.summary.pass ? kExitOk : kExitCheckFailed;
}

int run_atlas(const std::string& atlas_id, std::size_t n, std::uint64_t seed, double tol_opt,
              const std::string& json_path) {
    const double tol = tol_opt > 0.0 ? tol_opt : gcr::kTolFd;
    manifold::AtlasReport ar;
    if (atlas_id == "H") {
        ar = manifold::validate_atlas(manifold::atlas_h(), n, tol, seed);
    } else if (atlas_id == "HP1") {
        ar = manifold::validate_atlas(manifold::atlas_hp1(), n, tol, seed);
    } else {
        std::cerr << "error: unknown atlas '" << atlas_id << "' (known: H, HP1)\n";
        return kExitSyntax;
    }
    report::CheckReport rep = report::from_atlas(ar);
    std::cout << report::render_text(rep);
    if (!json_path.empty()) write_json(rep, json_path);
    return rep.summary.pass ? kExitOk : kExitCheckFailed;
}

int run_parse(const std::string& expr_text, const std::string& file_path) {
    try {
        if (!file_path.empty()) {
            std::ifstream in(file_path, std::ios::binary);
            if (!in) {
                std::cerr << "error: cannot read '" << file_path << "'\n";
                return kExitSyntax;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            for (const auto& entry : expr::parse_corpus(buf.str(), file_path))
                std::cout << expr::print(entry.fn) << "\n";
            return kExitOk;
        }
        const axial::RegularFn fn = expr::parse(expr_text);
        std::cout << expr::print(fn) << "\n";
        return kExitOk;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const ArityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical regularity checks over the quaternions"};
    app.require_subcommand(1);

    std::string expr_text;
    std::string box_arg = "q1=-2:2,q2=-2:2,q3=-2:2,q4=-2:2";
    std::string json_path;
    std::size_t n = 200;
    std::uint64_t seed = default_seed();
    double tol = 0.0;  // 0 = method default
    bool force_fd = false;

    CLI::App* check = app.add_subcommand("check", "check an expression on a sampled box");
    check->add_option("--expr", expr_text, "expression in the q-DSL")->required();
    check->add_option("--box", box_arg, "sample box, e.g. q1=-2:2,q2=-2:2");
    check->add_option("--n", n, "number of sample points");
    check->add_option("--seed", seed, "sampler seed (default: env REGULUS_SEED or 0)");
    check->add_option("--tol", tol, "verdict tolerance (default 1e-9 jet, 1e-5 fd)");
    check->add_option("--json", json_path, "write the full JSON report here");
    check->add_flag("--fd", force_fd, "force the finite-difference path");

    std::string atlas_id;
    CLI::App* atlas = app.add_subcommand("atlas", "validate a built-in atlas");
    atlas->add_option("id", atlas_id, "atlas id: H or HP1")->required();
    atlas->add_option("--n", n, "samples per chart pair");
    atlas->add_option("--seed", seed, "sampler seed (default: env REGULUS_SEED or 0)");
    atlas->add_option("--tol", tol, "verdict tolerance (default 1e-5)");
    atlas->add_option("--json", json_path, "write the full JSON report here");

    std::string corpus_path;
    CLI::App* parse_cmd = app.add_subcommand("parse", "syntax-check an expression or corpus");
    CLI::Option* expr_opt =
        parse_cmd->add_option("--expr", expr_text, "expression in the q-DSL");
    parse_cmd->add_option("--file", corpus_path, "corpus file, one expression per line")
        ->excludes(expr_opt);

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) return run_check(expr_text, box_arg, n, seed, tol, force_fd, json_path);
    if (atlas->parsed()) return run_atlas(atlas_id, n, seed, tol, json_path);
    if (expr_text.empty() && corpus_path.empty()) {
        std::cerr << "error: parse needs --expr or --file\n";
        return kExitSyntax;
    }
    return run_parse(expr_text, corpus_path);
}
