// Acceptance gate: nine numbered criteria, one PASS/FAIL line each, nonzero
// exit when any criterion fails. Each criterion recomputes what it claims
// with independent oracles where the library result could be circular.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "framedual/duality.hpp"
#include "framedual/frames.hpp"
#include "framedual/gabor.hpp"
#include "framedual/group.hpp"
#include "framedual/multiplier.hpp"
#include "framedual/numeric.hpp"
#include "framedual/projrep.hpp"
#include "framedual/rng.hpp"

using namespace framedual;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct CriterionResult {
    bool passed = false;
    std::string detail;
};

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(3) << x;
    return out.str();
}

// --- shared fixtures ------------------------------------------------------

const std::vector<int> kDualityLs = {4, 6, 8, 9, 12};
constexpr int kWindowSeeds = 20;

std::map<int, std::vector<ZLattice>> g_sublattice_cache;

const std::vector<ZLattice>& sublattices(int L) {
    auto it = g_sublattice_cache.find(L);
    if (it == g_sublattice_cache.end()) it = g_sublattice_cache.emplace(L, all_sublattices(L)).first;
    return it->second;
}

struct GaborConfig {
    ZLattice lattice;
    DualPair pair;
};

struct FrameInstance {
    size_t config;
    std::uint64_t seed;
};

std::vector<GaborConfig> g_configs;   // every |Lambda| >= L lattice, built once
std::vector<FrameInstance> g_frames;  // (config, window seed) frame instances

// --- criterion 1: duality principle ---------------------------------------

CriterionResult criterion_duality() {
    const auto t0 = Clock::now();
    int violations = 0, checks = 0;
    for (int L : kDualityLs) {
        for (const ZLattice& lat : sublattices(L)) {
            if (lat.size() < L) continue;
            GaborConfig cfg{lat, gabor_dual_pair(lat)};
            for (std::uint64_t seed = 1; seed <= kWindowSeeds; ++seed) {
                const ComplexVector w = generate_window(L, WindowKind::random, seed);
                const DualityVerdict v = check_duality_principle(cfg.pair, w);
                ++checks;
                if (!v.passed) ++violations;
                if (v.flags.at("pi_frame")) g_frames.push_back({g_configs.size(), seed});
            }
            g_configs.push_back(std::move(cfg));
        }
    }
    const double dt = seconds_since(t0);
    std::ostringstream out;
    out << g_configs.size() << " lattice configurations, " << checks << " orbit checks, "
        << violations << " counterexamples, " << fmt(dt) << " s";
    return {violations == 0 && dt <= 60.0 && !g_configs.empty(), out.str()};
}

// --- criterion 2: Wexler-Raz ----------------------------------------------

CriterionResult criterion_wexler_raz() {
    if (g_frames.empty()) return {false, "no frame instances available"};
    double worst_bio = 0.0, worst_witness = 0.0, worst_covolume = 0.0;
    int failures = 0;
    for (const FrameInstance& inst : g_frames) {
        const GaborConfig& cfg = g_configs[inst.config];
        const ComplexVector w = generate_window(cfg.lattice.L, WindowKind::random, inst.seed);
        const DualityVerdict v = check_wexler_raz(cfg.pair, w);
        if (!v.passed) ++failures;
        worst_bio = std::max(worst_bio, v.residuals.at("biorthogonality"));
        worst_witness = std::max(worst_witness, v.residuals.at("trace_identity_vs_witness"));
        const double covolume =
            static_cast<double>(cfg.lattice.L) / static_cast<double>(cfg.lattice.size());
        worst_covolume = std::max(worst_covolume, std::abs(cfg.pair.trace_identity - covolume));
    }
    const bool ok = failures == 0 && worst_bio <= 1e-8 && worst_witness <= 1e-8 &&
                    worst_covolume <= 1e-10;
    std::ostringstream out;
    out << g_frames.size() << " frame instances, max biorthogonality residual " << fmt(worst_bio)
        << ", max trace-vs-witness " << fmt(worst_witness) << ", max trace-vs-covolume "
        << fmt(worst_covolume);
    return {ok, out.str()};
}

// --- criterion 3: fundamental identity -------------------------------------

CriterionResult criterion_figa() {
    if (g_configs.empty()) return {false, "no configurations available"};
    int violations = 0, checks = 0;
    double worst = 0.0;
    for (const GaborConfig& cfg : g_configs) {
        const int L = cfg.lattice.L;
        for (int t = 0; t < 50; ++t) {
            const std::uint64_t base = 1000 + 4 * static_cast<std::uint64_t>(t);
            const DualityVerdict v = check_figa(
                cfg.pair, generate_window(L, WindowKind::random, base),
                generate_window(L, WindowKind::random, base + 1),
                generate_window(L, WindowKind::random, base + 2),
                generate_window(L, WindowKind::random, base + 3));
            ++checks;
            if (!v.passed) ++violations;
            const double rel =
                v.residuals.at("identity") / (1.0 + v.residuals.at("lhs_abs"));
            worst = std::max(worst, rel);
        }
    }
    std::ostringstream out;
    out << checks << " four-tuples, " << violations << " violations, max relative defect "
        << fmt(worst);
    return {violations == 0, out.str()};
}

// --- criterion 4: super-frame and multi-frame duality -----------------------

CriterionResult criterion_multi_super() {
    if (g_configs.empty()) return {false, "no configurations available"};
    int violations = 0, checks = 0, super_nontrivial = 0, multi_nontrivial = 0;

    auto run_tuple = [&](const DualPair& pair, const std::vector<ComplexVector>& xs) {
        const DualityVerdict sup = check_superframe(pair, xs);
        const DualityVerdict mul = check_multiframe(pair, xs);
        checks += 2;
        if (!sup.passed) ++violations;
        if (!mul.passed) ++violations;
        if (sup.flags.at("pi_direct_sum_frame")) ++super_nontrivial;
        if (mul.flags.at("pi_union_frame")) ++multi_nontrivial;
    };

    for (const GaborConfig& cfg : g_configs) {
        const int L = cfg.lattice.L;
        for (int k = 2; k <= 3; ++k) {
            for (int t = 0; t < 20; ++t) {
                std::vector<ComplexVector> xs;
                for (int i = 0; i < k; ++i) {
                    const std::uint64_t seed = 3000 + 1000 * static_cast<std::uint64_t>(k) +
                                               10 * static_cast<std::uint64_t>(t) +
                                               static_cast<std::uint64_t>(i);
                    xs.push_back(generate_window(L, WindowKind::random, seed));
                }
                run_tuple(cfg.pair, xs);
            }
        }
    }

    // Abelian regular pairs: cyclic groups with trivial and power cocycles,
    // plus the Klein group with a symplectic-type multiplier.
    std::vector<DualPair> regular_pairs;
    for (int n : {4, 6, 8, 12}) {
        const FiniteGroup zn = cyclic_group(n);
        regular_pairs.push_back(regular_dual_pair(zn, trivial_multiplier(zn)));
        regular_pairs.push_back(regular_dual_pair(zn, power_multiplier(zn, 1)));
    }
    {
        const FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
        ComplexMatrix table(4, 4);
        for (int g = 0; g < 4; ++g)
            for (int h = 0; h < 4; ++h) table(g, h) = ((g % 2) * (h / 2)) % 2 == 0 ? 1.0 : -1.0;
        regular_pairs.push_back(regular_dual_pair(klein, validate_multiplier(klein, table)));
    }
    for (size_t p = 0; p < regular_pairs.size(); ++p) {
        const DualPair& pair = regular_pairs[p];
        const Index n = pair.pi.dim;
        for (int k = 2; k <= 3; ++k) {
            for (int t = 0; t < 20; ++t) {
                rng::Stream stream(rng::mix({0x726567756cULL, static_cast<std::uint64_t>(p),
                                             static_cast<std::uint64_t>(k),
                                             static_cast<std::uint64_t>(t)}));
                std::vector<ComplexVector> xs;
                for (int i = 0; i < k; ++i) xs.push_back(stream.complex_normal_vector(n));
                run_tuple(pair, xs);
            }
        }
    }

    std::ostringstream out;
    out << checks << " biconditional checks (" << regular_pairs.size()
        << " regular pairs), " << violations << " counterexamples, " << super_nontrivial
        << " super / " << multi_nontrivial << " multi frame-positive instances";
    return {violations == 0 && super_nontrivial > 0 && multi_nontrivial > 0, out.str()};
}

// --- criterion 5: lattice arithmetic ----------------------------------------

bool commutes_with_all(const ZLattice& lat, int lp, int kp) {
    const ComplexMatrix u = tf_shift(lat.L, lp, kp);
    for (auto [l, k] : lat.points) {
        const ComplexMatrix v = tf_shift(lat.L, l, k);
        if (numeric::max_abs(u * v - v * u) > 1e-12) return false;
    }
    return true;
}

CriterionResult criterion_lattice_arithmetic() {
    int lattices = 0, defects = 0;
    for (int L = 2; L <= 12; ++L) {
        for (const ZLattice& lat : sublattices(L)) {
            ++lattices;
            const ZLattice adj = adjoint_lattice(lat);
            if (lat.size() * adj.size() != L * L) ++defects;
            if (adjoint_lattice(adj).points != lat.points) ++defects;
            for (int lp = 0; lp < L && defects == 0; ++lp)
                for (int kp = 0; kp < L && defects == 0; ++kp)
                    if (adj.contains(lp, kp) != commutes_with_all(lat, lp, kp)) ++defects;
        }
    }
    std::ostringstream out;
    out << lattices << " sublattices over L = 2..12, " << defects << " defects";
    return {defects == 0, out.str()};
}

// --- criterion 6: cocycle suite ---------------------------------------------

// Independent law check, brute force over all pairs/triples.
double multiplier_law_defect(const FiniteGroup& group, const Multiplier& mu) {
    double worst = 0.0;
    const int n = group.order;
    for (int g = 0; g < n; ++g) {
        worst = std::max(worst, std::abs(mu.at(g, group.identity) - cd(1.0)));
        worst = std::max(worst, std::abs(mu.at(group.identity, g) - cd(1.0)));
        worst = std::max(worst, std::abs(mu.at(g, group.inverse(g)) - mu.at(group.inverse(g), g)));
        for (int h = 0; h < n; ++h) {
            worst = std::max(worst, std::abs(std::abs(mu.at(g, h)) - 1.0));
            for (int k = 0; k < n; ++k) {
                const cd lhs = mu.at(g, group.op(h, k)) * mu.at(h, k);
                const cd rhs = mu.at(group.op(g, h), k) * mu.at(g, h);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    return worst;
}

double regular_commutation_defect(const FiniteGroup& group, const Multiplier& mu) {
    const ProjectiveRep lambda = regular_representation(group, mu, Side::left);
    const ProjectiveRep rho = regular_representation(group, mu, Side::right);
    double worst = 0.0;
    for (const auto& a : lambda.matrices)
        for (const auto& b : rho.matrices)
            worst = std::max(worst, numeric::max_abs(a * b - b * a));
    return worst;
}

CriterionResult criterion_cocycles() {
    std::vector<std::pair<FiniteGroup, Multiplier>> suite;

    // Ten hand-constructed multipliers on Z_n, Z_2 x Z_2, S_3 and D_4.
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {4, 2}, {6, 5}}) {
        const FiniteGroup zn = cyclic_group(n);
        suite.emplace_back(zn, power_multiplier(zn, k));
    }
    {
        const FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
        ComplexMatrix table(4, 4);
        for (int g = 0; g < 4; ++g)
            for (int h = 0; h < 4; ++h) table(g, h) = ((g % 2) * (h / 2)) % 2 == 0 ? 1.0 : -1.0;
        suite.emplace_back(klein, validate_multiplier(klein, table));

        ComplexVector beta(4);
        beta << 1.0, cd(0.0, 1.0), std::polar(1.0, 1.1), cd(0.0, -1.0);
        suite.emplace_back(klein, coboundary_multiplier(klein, beta));
    }
    {
        const FiniteGroup s3 = dihedral_group(3);
        ComplexVector beta(6);
        beta << 1.0, std::polar(1.0, 0.3), std::polar(1.0, 2.2), -1.0, cd(0.0, 1.0),
            std::polar(1.0, -0.8);
        suite.emplace_back(s3, coboundary_multiplier(s3, beta));
    }
    {
        const FiniteGroup d4 = dihedral_group(4);
        ComplexVector beta(8);
        for (int g = 0; g < 8; ++g) beta(g) = std::polar(1.0, 0.7 * g);
        beta(d4.identity) = 1.0;
        suite.emplace_back(d4, coboundary_multiplier(d4, beta));
        suite.emplace_back(d4, trivial_multiplier(d4));
    }
    const size_t hand_count = suite.size();

    // Computed Gabor multipliers on their lattice point groups.
    const std::vector<ZLattice> gabor_lattices = {
        full_lattice(2), full_lattice(3), lattice_from_generators(6, {{2, 0}, {0, 3}}),
        lattice_from_generators(4, {{1, 0}, {0, 2}})};
    for (const ZLattice& lat : gabor_lattices) {
        const ProjectiveRep rep = gabor_rep(lat);
        suite.emplace_back(rep.group, rep.multiplier);
    }

    double worst_law = 0.0, worst_comm = 0.0;
    for (const auto& [group, mu] : suite) {
        worst_law = std::max(worst_law, multiplier_law_defect(group, mu));
        worst_comm = std::max(worst_comm, regular_commutation_defect(group, mu));
    }
    std::ostringstream out;
    out << hand_count << " hand multipliers + " << gabor_lattices.size()
        << " Gabor multipliers, max law defect " << fmt(worst_law)
        << ", max left/right commutation defect " << fmt(worst_comm);
    return {worst_law <= 1e-12 && worst_comm <= 1e-10, out.str()};
}

// --- criterion 7: commutant pairs -------------------------------------------

CriterionResult criterion_commutant_pairs() {
    if (g_configs.empty()) return {false, "no configurations available"};
    int failures = 0;
    double worst = 0.0;
    for (const GaborConfig& cfg : g_configs) {
        const CommutantPairReport& r = cfg.pair.pair_report;
        if (!r.equal || r.projector_distance > 1e-8) ++failures;
        worst = std::max(worst, r.projector_distance);
    }
    std::ostringstream out;
    out << g_configs.size() << " lattice pairs, max projector distance " << fmt(worst) << ", "
        << failures << " failures";
    return {failures == 0, out.str()};
}

// --- criterion 8: frames kernel ---------------------------------------------

CriterionResult criterion_frames_kernel() {
    rng::Stream stream(rng::mix({0x6672616d65ULL, 8}));
    int frames_seen = 0;
    double worst_spec = 0.0, worst_rec = 0.0, worst_idem = 0.0;
    bool rank_mismatch = false;

    for (int trial = 0; trial < 1000; ++trial) {
        const Index d = 2 + static_cast<Index>(stream.uniform() * 31.0);
        const Index n = 1 + static_cast<Index>(stream.uniform() * 96.0);
        std::vector<ComplexVector> vs;
        vs.reserve(n);
        for (Index i = 0; i < n; ++i) vs.push_back(stream.complex_normal_vector(d));
        const VectorSystem sys = VectorSystem::make(d, std::move(vs));

        // Nonzero spectra of S = Theta* Theta and Gram = Theta Theta* agree.
        const numeric::EigResult es = numeric::hermitian_eig(frame_operator(sys));
        const numeric::EigResult eg = numeric::hermitian_eig(gram_matrix(sys));
        const double lmax = std::max({es.eigenvalues.maxCoeff(), eg.eigenvalues.maxCoeff(), 0.0});
        const double tau = numeric::kRankRelTol * lmax;
        std::vector<double> spec_s, spec_g;
        for (Index i = 0; i < es.eigenvalues.size(); ++i)
            if (es.eigenvalues(i) > tau) spec_s.push_back(es.eigenvalues(i));
        for (Index i = 0; i < eg.eigenvalues.size(); ++i)
            if (eg.eigenvalues(i) > tau) spec_g.push_back(eg.eigenvalues(i));
        if (spec_s.size() != spec_g.size()) {
            rank_mismatch = true;
        } else {
            for (size_t i = 0; i < spec_s.size(); ++i)
                worst_spec =
                    std::max(worst_spec, std::abs(spec_s[i] - spec_g[i]) / (1.0 + lmax));
        }

        // Canonical-dual reconstruction on frame instances.
        if (classify(sys).is_frame) {
            ++frames_seen;
            const ComplexVector x = stream.complex_normal_vector(d);
            const ComplexVector w = canonical_dual(sys, x);
            ComplexVector y = ComplexVector::Zero(d);
            for (const auto& v : sys.vectors) y += inner(w, v) * v;
            worst_rec = std::max(worst_rec, (y - x).norm() / (1.0 + x.norm()));
        }

        // canonical_parseval is idempotent.
        const VectorSystem p1 = canonical_parseval(sys);
        const VectorSystem p2 = canonical_parseval(p1);
        for (Index i = 0; i < p1.size(); ++i)
            worst_idem = std::max(worst_idem, (p2.vectors[i] - p1.vectors[i]).norm() /
                                                  (1.0 + p1.vectors[i].norm()));
    }

    const bool ok = !rank_mismatch && worst_spec <= 1e-8 && worst_rec <= 1e-8 &&
                    worst_idem <= 1e-8 && frames_seen >= 300;
    std::ostringstream out;
    out << "1000 random systems (" << frames_seen << " frames), max spectral gap "
        << fmt(worst_spec) << ", max reconstruction " << fmt(worst_rec) << ", max idempotence "
        << fmt(worst_idem) << (rank_mismatch ? ", RANK MISMATCH" : "");
    return {ok, out.str()};
}

// --- criterion 9: density ----------------------------------------------------

CriterionResult criterion_density() {
    int thin_lattices = 0, thin_violations = 0;
    int dense_lattices = 0, dense_shortfalls = 0;
    for (int L : kDualityLs) {
        for (const ZLattice& lat : sublattices(L)) {
            const ProjectiveRep rep = gabor_rep(lat);
            int frames = 0;
            for (std::uint64_t seed = 1; seed <= kWindowSeeds; ++seed) {
                const FrameReport r =
                    classify(orbit(rep, generate_window(L, WindowKind::random, seed)));
                if (lat.size() < L && r.is_complete) ++thin_violations;
                if (r.is_frame) ++frames;
            }
            if (lat.size() < L) {
                ++thin_lattices;
            } else {
                ++dense_lattices;
                if (frames < kWindowSeeds - 1) ++dense_shortfalls;
            }
        }
    }
    std::ostringstream out;
    out << thin_lattices << " sub-density lattices (0 completions required, "
        << thin_violations << " seen), " << dense_lattices
        << " admissible lattices, " << dense_shortfalls << " below the 19/20 frame rate";
    return {thin_violations == 0 && dense_shortfalls == 0, out.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, CriterionResult (*)()>> criteria = {
        {"duality principle", criterion_duality},
        {"Wexler-Raz biorthogonality", criterion_wexler_raz},
        {"fundamental identity", criterion_figa},
        {"multi/super-frame duality", criterion_multi_super},
        {"lattice arithmetic", criterion_lattice_arithmetic},
        {"cocycle suite", criterion_cocycles},
        {"commutant pairs", criterion_commutant_pairs},
        {"frames kernel", criterion_frames_kernel},
        {"density threshold", criterion_density},
    };

    bool all_passed = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        CriterionResult result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& err) {
            result = {false, std::string("exception: ") + err.what()};
        }
        all_passed = all_passed && result.passed;
        std::cout << "criterion " << (i + 1) << " (" << criteria[i].first << "): "
                  << (result.passed ? "PASS" : "FAIL") << " — " << result.detail << "\n";
    }
    return all_passed ? 0 : 1;
}
