#pragma once

#include "framedual/group.hpp"
#include "framedual/numeric.hpp"

namespace framedual {

// 2-cocycle with values in the unit circle, stored as a full order x order
// table: values(g,h) = mu(g,h). Instances only come out of
// validate_multiplier, so holding one certifies the cocycle laws.
struct Multiplier {
    ComplexMatrix values;

    cd at(int g, int h) const { return values(g, h); }
    Multiplier conjugated() const { return Multiplier{values.conjugate()}; }

    friend Multiplier validate_multiplier(const FiniteGroup&, const ComplexMatrix&);

private:
    explicit Multiplier(ComplexMatrix v) : values(std::move(v)) {}
};

// Checks, each to 1e-12:
//   unit modulus               |mu(g,h)| = 1
//   cocycle law                mu(g1,g2*g3) mu(g2,g3) = mu(g1*g2,g3) mu(g1,g2)
//   normalization              mu(g,e) = mu(e,g) = 1
//   derived symmetry           mu(g,g^{-1}) = mu(g^{-1},g)
// Errors: NotUnitModulus, CocycleViolation, NotNormalized, DimensionMismatch.
Multiplier validate_multiplier(const FiniteGroup& group, const ComplexMatrix& values);

Multiplier trivial_multiplier(const FiniteGroup& group);

// On Z_n: mu(a,b) = zeta^{k a b} with zeta = exp(2 pi i / n). Valid for any
// integer k because zeta^n = 1 absorbs the wraparound of a+b mod n.
Multiplier power_multiplier(const FiniteGroup& cyclic, int k);

// Coboundary of a unit-modulus function beta with beta(e) = 1:
// mu(g,h) = beta(g) beta(h) conj(beta(gh)). Always a valid cocycle.
Multiplier coboundary_multiplier(const FiniteGroup& group, const ComplexVector& beta);

}  // namespace framedual
