#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "framedual/projrep.hpp"

namespace framedual {

// Subgroup of Z_L x Z_L; points sorted lexicographically, closed under
// addition mod L, containing (0,0).
struct ZLattice {
    int L = 0;
    std::vector<std::pair<int, int>> points;

    int size() const { return static_cast<int>(points.size()); }
    bool contains(int l, int k) const;

    // Validates L >= 2, closure, membership range, Lagrange divisibility.
    // Errors: InvalidLattice.
    static ZLattice from_points(int L, std::vector<std::pair<int, int>> points);
};

// Subgroup generated by the given points (closure under addition mod L).
ZLattice lattice_from_generators(int L, const std::vector<std::pair<int, int>>& gens);
ZLattice full_lattice(int L);

// Every subgroup of Z_L^2, deduplicated, in a deterministic order.
std::vector<ZLattice> all_sublattices(int L);

// Matrix of E_l T_k on C^L: modulation then translation,
// (E_l T_k f)(x) = exp(2 pi i l x / L) f(x - k mod L). Entries are exact
// roots of unity (table lookup on integer exponents mod L).
ComplexMatrix tf_shift(int L, int l, int k);

// Projective representation of the lattice point group by time-frequency
// shifts. The operator ordering above yields
// mu((l1,k1),(l2,k2)) = exp(-2 pi i l2 k1 / L).
ProjectiveRep gabor_rep(const ZLattice& lattice);

// Adjoint lattice { (l',k') : l k' - l' k = 0 mod L for all (l,k) }, the
// arithmetic form of "commutes with every lattice shift".
ZLattice adjoint_lattice(const ZLattice& lattice);

struct GaborSystem {
    ZLattice lattice;
    std::vector<ComplexVector> windows;  // each of length L
};

// Canonical dual window S^{-1} g for the first window. Errors: NotAFrame.
ComplexVector dual_window(const GaborSystem& system);

enum class WindowKind { random, gaussian_like, delta };

// Deterministic for fixed (L, kind, seed):
//   random        complex standard normal entries
//   gaussian_like periodization of exp(-pi (x - L/2)^2 / L), unit norm,
//                 real positive, symmetric about L/2
//   delta         indicator of 0
ComplexVector generate_window(int L, WindowKind kind, std::uint64_t seed);

}  // namespace framedual
