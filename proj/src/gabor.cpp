#include "framedual/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "framedual/rng.hpp"

namespace framedual {

namespace {

// exp(2 pi i k / L) for k reduced mod L; one table per call site keeps all
// multiplier/matrix entries bit-identical across modules.
std::vector<cd> unit_roots(int L) {
    std::vector<cd> roots(L);
    for (int k = 0; k < L; ++k)
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / static_cast<double>(L));
    return roots;
}

int mod(int a, int L) { return (a % L + L) % L; }

}  // namespace

bool ZLattice::contains(int l, int k) const {
    return std::binary_search(points.begin(), points.end(), std::make_pair(l, k));
}

ZLattice ZLattice::from_points(int L, std::vector<std::pair<int, int>> pts) {
    if (L < 2) throw Error("InvalidLattice", "ZLattice: need L >= 2");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty() || !std::binary_search(pts.begin(), pts.end(), std::make_pair(0, 0)))
        throw Error("InvalidLattice", "ZLattice: missing (0,0)");
    for (auto [l, k] : pts)
        if (l < 0 || l >= L || k < 0 || k >= L)
            throw Error("InvalidLattice", "ZLattice: point out of Z_L^2 range");
    for (auto [l1, k1] : pts)
        for (auto [l2, k2] : pts)
            if (!std::binary_search(pts.begin(), pts.end(),
                                    std::make_pair(mod(l1 + l2, L), mod(k1 + k2, L))))
                throw Error("InvalidLattice", "ZLattice: not closed under addition");
    if ((L * L) % static_cast<int>(pts.size()) != 0)
        throw Error("InvalidLattice", "ZLattice: size does not divide L^2");
    return {L, std::move(pts)};
}

ZLattice lattice_from_generators(int L, const std::vector<std::pair<int, int>>& gens) {
    if (L < 2) throw Error("InvalidLattice", "lattice_from_generators: need L >= 2");
    std::set<std::pair<int, int>> closure{{0, 0}};
    std::vector<std::pair<int, int>> frontier{{0, 0}};
    for (auto [l, k] : gens) frontier.emplace_back(mod(l, L), mod(k, L));
    closure.insert(frontier.begin(), frontier.end());
    // Orbit closure: keep adding generator translates until stable.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<int, int>> next;
        for (auto [l1, k1] : closure)
            for (auto [l2, k2] : gens) {
                const std::pair<int, int> p{mod(l1 + l2, L), mod(k1 + k2, L)};
                if (!closure.count(p)) next.push_back(p);
            }
        if (!next.empty()) {
            grew = true;
            closure.insert(next.begin(), next.end());
        }
    }
    return ZLattice::from_points(L, {closure.begin(), closure.end()});
}

ZLattice full_lattice(int L) {
    return lattice_from_generators(L, {{1, 0}, {0, 1}});
}

std::vector<ZLattice> all_sublattices(int L) {
    // Every subgroup of Z_L^2 is generated by at most two elements, so the
    // closures of all ordered pairs enumerate the full subgroup lattice.
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<ZLattice> out;
    for (int l1 = 0; l1 < L; ++l1)
        for (int k1 = 0; k1 < L; ++k1)
            for (int l2 = 0; l2 < L; ++l2)
                for (int k2 = 0; k2 < L; ++k2) {
                    ZLattice lat = lattice_from_generators(L, {{l1, k1}, {l2, k2}});
                    if (seen.insert(lat.points).second) out.push_back(std::move(lat));
                }
    std::sort(out.begin(), out.end(), [](const ZLattice& a, const ZLattice& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.points < b.points;
    });
    return out;
}

ComplexMatrix tf_shift(int L, int l, int k) {
    if (L < 2) throw Error("InvalidLattice", "tf_shift: need L >= 2");
    const std::vector<cd> roots = unit_roots(L);
    ComplexMatrix m = ComplexMatrix::Zero(L, L);
    for (int x = 0; x < L; ++x) m(x, mod(x - k, L)) = roots[mod(l * x, L)];
    return m;
}

ProjectiveRep gabor_rep(const ZLattice& lattice) {
    const int L = lattice.L;
    const int n = lattice.size();
    const std::vector<cd> roots = unit_roots(L);

    // Point group under addition mod L; (0,0) sorts first, so it is the
    // identity index.
    std::vector<int> lookup(L * L, -1);
    for (int i = 0; i < n; ++i)
        lookup[lattice.points[i].first * L + lattice.points[i].second] = i;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int l = mod(lattice.points[i].first + lattice.points[j].first, L);
            const int k = mod(lattice.points[i].second + lattice.points[j].second, L);
            mul[i][j] = lookup[l * L + k];
        }
    FiniteGroup group = FiniteGroup::from_table(std::move(mul));

    // E_{l1}T_{k1} E_{l2}T_{k2} = exp(-2 pi i l2 k1 / L) E_{l1+l2}T_{k1+k2}
    ComplexMatrix mu(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mu(i, j) = roots[mod(-lattice.points[j].first * lattice.points[i].second, L)];
    Multiplier multiplier = validate_multiplier(group, mu);

    std::vector<ComplexMatrix> mats;
    mats.reserve(n);
    for (int i = 0; i < n; ++i)
        mats.push_back(tf_shift(L, lattice.points[i].first, lattice.points[i].second));
    return ProjectiveRep::make(std::move(group), std::move(multiplier), std::move(mats));
}

ZLattice adjoint_lattice(const ZLattice& lattice) {
    const int L = lattice.L;
    std::vector<std::pair<int, int>> pts;
    for (int lp = 0; lp < L; ++lp)
        for (int kp = 0; kp < L; ++kp) {
            bool ok = true;
            for (auto [l, k] : lattice.points)
                if (mod(l * kp - lp * k, L) != 0) {
                    ok = false;
                    break;
                }
            if (ok) pts.emplace_back(lp, kp);
        }
    return ZLattice::from_points(L, std::move(pts));
}

ComplexVector dual_window(const GaborSystem& system) {
    if (system.windows.empty())
        throw Error("DimensionMismatch", "dual_window: system has no window");
    const ComplexVector& g = system.windows.front();
    if (g.size() != system.lattice.L)
        throw Error("DimensionMismatch", "dual_window: window length != L");
    const ProjectiveRep rep = gabor_rep(system.lattice);
    const VectorSystem sys = orbit(rep, g);
    const FrameReport report = classify(sys);
    if (!report.is_frame)
        throw Error("NotAFrame", "dual_window: Gabor system is not a frame for C^L (bounds " +
                                     std::to_string(report.lower_bound) + ", " +
                                     std::to_string(report.upper_bound) + ")");
    return numeric::solve_psd(frame_operator(sys), g);
}

ComplexVector generate_window(int L, WindowKind kind, std::uint64_t seed) {
    if (L < 2) throw Error("InvalidLattice", "generate_window: need L >= 2");
    switch (kind) {
        case WindowKind::random: {
            rng::Stream stream(rng::mix({0x77696e646f77ULL, static_cast<std::uint64_t>(L), seed}));
            return stream.complex_normal_vector(L);
        }
        case WindowKind::gaussian_like: {
            ComplexVector w(L);
            double norm_sq = 0.0;
            for (int x = 0; x < L; ++x) {
                double value = 0.0;
                // Periodize; terms outside |j| <= 8 are below double precision.
                for (int j = -8; j <= 8; ++j) {
                    const double t = x - L / 2.0 + j * L;
                    value += std::exp(-std::numbers::pi * t * t / L);
                }
                w(x) = value;
                norm_sq += value * value;
            }
            return w / std::sqrt(norm_sq);
        }
        case WindowKind::delta: {
            ComplexVector w = ComplexVector::Zero(L);
            w(0) = 1.0;
            return w;
        }
    }
    throw Error("ParseError", "generate_window: unknown window kind");
}

}  // namespace framedual
