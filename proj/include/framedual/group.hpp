#pragma once

#include <vector>

#include "framedual/error.hpp"

namespace framedual {

// Finite group as a multiplication table over element indices 0..order-1.
struct FiniteGroup {
    int order = 0;
    std::vector<std::vector<int>> mul;  // mul[g][h] = g*h
    std::vector<int> inv;
    int identity = 0;

    int op(int g, int h) const { return mul[g][h]; }
    int inverse(int g) const { return inv[g]; }

    // Builds from a multiplication table: locates the identity, computes
    // inverses, verifies associativity over all triples.
    // Errors: InvalidGroup.
    static FiniteGroup from_table(std::vector<std::vector<int>> mul);
};

FiniteGroup cyclic_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);  // index = ia*|B| + ib
FiniteGroup dihedral_group(int n);  // order 2n; r^i s^j at index i + n*j

}  // namespace framedual
