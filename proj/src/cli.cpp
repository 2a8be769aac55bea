#include "framedual/cli.hpp"

#include <optional>

#include "framedual/io.hpp"
#include "framedual/rng.hpp"

namespace framedual::cli {

namespace {

using io::json;

// Representation the command operates on: Gabor from a lattice spec, or the
// twisted left regular representation from a group file.
struct RepContext {
    ProjectiveRep rep;
    std::optional<ZLattice> lattice;  // set for Gabor
    std::optional<FiniteGroup> group;
    std::optional<Multiplier> mu;
};

RepContext rep_from_config(const RunConfig& cfg) {
    if (!cfg.group_path.empty()) {
        auto [group, mu] = io::group_from_json(io::load_json_file(cfg.group_path));
        ProjectiveRep rep = regular_representation(group, mu, Side::left);
        return {std::move(rep), std::nullopt, std::move(group), std::move(mu)};
    }
    if (!cfg.lattice_spec.empty()) {
        ZLattice lat = io::parse_lattice_spec(cfg.lattice_spec, cfg.L);
        ProjectiveRep rep = gabor_rep(lat);
        return {std::move(rep), std::move(lat), std::nullopt, std::nullopt};
    }
    throw Error("ParseError", cfg.command + ": needs --lattice or --group");
}

DualPair pair_from_config(const RunConfig& cfg) {
    if (!cfg.group_path.empty()) {
        auto [group, mu] = io::group_from_json(io::load_json_file(cfg.group_path));
        return regular_dual_pair(group, mu);
    }
    if (!cfg.lattice_spec.empty())
        return gabor_dual_pair(io::parse_lattice_spec(cfg.lattice_spec, cfg.L));
    throw Error("ParseError", cfg.command + ": needs --lattice or --group");
}

// Windows from --window files, else `needed` seeded random vectors. The
// bool reports whether generation happened (so verdicts can record the seed).
std::pair<std::vector<ComplexVector>, bool> windows_from_config(const RunConfig& cfg,
                                                                Index dim, int needed) {
    std::vector<ComplexVector> out;
    if (!cfg.window_paths.empty()) {
        for (const auto& path : cfg.window_paths) {
            ComplexVector w = io::window_from_json(io::load_json_file(path));
            if (w.size() != dim)
                throw Error("ParseError", "window " + path + " has length " +
                                              std::to_string(w.size()) + ", expected " +
                                              std::to_string(dim));
            out.push_back(std::move(w));
        }
        if (static_cast<int>(out.size()) < needed)
            throw Error("ParseError", cfg.command + ": needs at least " +
                                          std::to_string(needed) + " windows");
        return {std::move(out), false};
    }
    rng::Stream stream(rng::mix({cfg.seed, static_cast<std::uint64_t>(dim)}));
    for (int i = 0; i < needed; ++i) out.push_back(stream.complex_normal_vector(dim));
    return {std::move(out), true};
}

WindowKind parse_kind(const std::string& kind) {
    if (kind == "random") return WindowKind::random;
    if (kind == "gaussian-like") return WindowKind::gaussian_like;
    if (kind == "delta") return WindowKind::delta;
    throw Error("ParseError", "unknown window kind: " + kind);
}

int emit_verdict(DualityVerdict v, const RunConfig& cfg, bool seeded) {
    if (seeded) v.seed = cfg.seed;
    io::write_json(io::verdict_to_json(v), cfg.out_path);
    return v.passed ? 0 : 1;
}

json lattice_points_json(const ZLattice& lat) {
    json pts = json::array();
    for (auto [l, k] : lat.points) pts.push_back(json::array({l, k}));
    return pts;
}

int run_checked(const RunConfig& cfg) {
    if (cfg.command == "gen-window") {
        if (cfg.L < 2) throw Error("ParseError", "gen-window: needs --L >= 2");
        const ComplexVector w = generate_window(cfg.L, parse_kind(cfg.kind), cfg.seed);
        io::write_json(io::window_to_json(w), cfg.out_path);
        return 0;
    }

    if (cfg.command == "classify") {
        RepContext ctx = rep_from_config(cfg);
        auto [windows, seeded] = windows_from_config(cfg, ctx.rep.dim, 1);
        (void)seeded;
        io::write_json(io::frame_report_to_json(classify(orbit(ctx.rep, windows[0]))),
                       cfg.out_path);
        return 0;
    }

    if (cfg.command == "dual-window") {
        if (cfg.lattice_spec.empty())
            throw Error("ParseError", "dual-window: needs --lattice");
        const ZLattice lat = io::parse_lattice_spec(cfg.lattice_spec, cfg.L);
        auto [windows, seeded] = windows_from_config(cfg, lat.L, 1);
        (void)seeded;
        const ComplexVector gamma = dual_window({lat, {windows[0]}});
        io::write_json(io::window_to_json(gamma), cfg.out_path);
        return 0;
    }

    if (cfg.command == "rep-info") {
        json info;
        if (!cfg.group_path.empty()) {
            auto [group, mu] = io::group_from_json(io::load_json_file(cfg.group_path));
            const ProjectiveRep lambda = regular_representation(group, mu, Side::left);
            const ProjectiveRep rho = regular_representation(group, mu, Side::right);
            const CommutantPairReport pr = is_commutant_pair(lambda, rho);
            info = json{{"kind", "regular"},
                        {"order", group.order},
                        {"dim", lambda.dim},
                        {"multiplier_valid", true},
                        {"commutant_dim", pr.commutant_dim},
                        {"double_commutant_dim", pr.double_commutant_dim},
                        {"is_commutant_pair", pr.equal},
                        {"projector_distance", pr.projector_distance},
                        {"trace_identity", 1.0},
                        {"bessel_sets_equal", true}};
        } else if (!cfg.lattice_spec.empty()) {
            const ZLattice lat = io::parse_lattice_spec(cfg.lattice_spec, cfg.L);
            const ZLattice adj = adjoint_lattice(lat);
            const CommutantPairReport pr = is_commutant_pair(gabor_rep(lat), gabor_rep(adj));
            info = json{{"kind", "gabor"},
                        {"L", lat.L},
                        {"lattice", lattice_points_json(lat)},
                        {"lattice_size", lat.size()},
                        {"adjoint", lattice_points_json(adj)},
                        {"adjoint_size", adj.size()},
                        {"dim", lat.L},
                        {"multiplier_valid", true},
                        {"commutant_dim", pr.commutant_dim},
                        {"double_commutant_dim", pr.double_commutant_dim},
                        {"is_commutant_pair", pr.equal},
                        {"projector_distance", pr.projector_distance},
                        {"trace_identity",
                         static_cast<double>(lat.L) / static_cast<double>(lat.size())},
                        {"bessel_sets_equal", true}};
        } else {
            throw Error("ParseError", "rep-info: needs --lattice or --group");
        }
        io::write_json(info, cfg.out_path);
        return 0;
    }

    if (cfg.command == "wexler-raz" || cfg.command == "duality") {
        const DualPair pair = pair_from_config(cfg);
        auto [windows, seeded] = windows_from_config(cfg, pair.pi.dim, 1);
        DualityVerdict v = cfg.command == "duality"
                               ? check_duality_principle(pair, windows[0], cfg.tolerance)
                               : check_wexler_raz(pair, windows[0], cfg.tolerance);
        return emit_verdict(std::move(v), cfg, seeded);
    }

    if (cfg.command == "figa") {
        const DualPair pair = pair_from_config(cfg);
        auto [w, seeded] = windows_from_config(cfg, pair.pi.dim, 4);
        DualityVerdict v = check_figa(pair, w[0], w[1], w[2], w[3], cfg.tolerance);
        return emit_verdict(std::move(v), cfg, seeded);
    }

    if (cfg.command == "superframe" || cfg.command == "multiframe") {
        const DualPair pair = pair_from_config(cfg);
        const int needed = cfg.window_paths.empty() ? cfg.count
                                                    : static_cast<int>(cfg.window_paths.size());
        if (needed < 1) throw Error("ParseError", cfg.command + ": needs at least one window");
        auto [w, seeded] = windows_from_config(cfg, pair.pi.dim, needed);
        DualityVerdict v = cfg.command == "superframe"
                               ? check_superframe(pair, w, cfg.tolerance)
                               : check_multiframe(pair, w, cfg.tolerance);
        return emit_verdict(std::move(v), cfg, seeded);
    }

    throw Error("ParseError", "unknown command: " + cfg.command);
}

}  // namespace

int run(const RunConfig& cfg) {
    try {
        return run_checked(cfg);
    } catch (const Error& err) {
        io::write_json(json{{"error", {{"code", err.code()}, {"message", err.what()}}}},
                       cfg.out_path);
        return 2;
    }
}

}  // namespace framedual::cli
