#include "framedual/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace framedual {

namespace {
constexpr double kCocycleTol = 1e-12;
}

Multiplier validate_multiplier(const FiniteGroup& group, const ComplexMatrix& values) {
    const int n = group.order;
    if (values.rows() != n || values.cols() != n)
        throw Error("DimensionMismatch", "validate_multiplier: table must be " +
                                             std::to_string(n) + "x" + std::to_string(n));

    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (std::abs(std::abs(values(g, h)) - 1.0) > kCocycleTol)
                throw Error("NotUnitModulus", "mu(" + std::to_string(g) + "," +
                                                  std::to_string(h) + ") has modulus " +
                                                  std::to_string(std::abs(values(g, h))));

    const int e = group.identity;
    for (int g = 0; g < n; ++g)
        if (std::abs(values(g, e) - cd(1.0)) > kCocycleTol ||
            std::abs(values(e, g) - cd(1.0)) > kCocycleTol)
            throw Error("NotNormalized", "mu is not 1 against the identity at g=" +
                                             std::to_string(g));

    for (int g1 = 0; g1 < n; ++g1)
        for (int g2 = 0; g2 < n; ++g2)
            for (int g3 = 0; g3 < n; ++g3) {
                const cd lhs = values(g1, group.op(g2, g3)) * values(g2, g3);
                const cd rhs = values(group.op(g1, g2), g3) * values(g1, g2);
                if (std::abs(lhs - rhs) > kCocycleTol)
                    throw Error("CocycleViolation",
                                "cocycle law fails at (" + std::to_string(g1) + "," +
                                    std::to_string(g2) + "," + std::to_string(g3) + ")");
            }

    // mu(g, g^{-1}) = mu(g^{-1}, g) follows from the laws above; asserted as
    // a guard against table corruption.
    for (int g = 0; g < n; ++g) {
        const int gi = group.inverse(g);
        if (std::abs(values(g, gi) - values(gi, g)) > kCocycleTol)
            throw Error("CocycleViolation",
                        "mu(g,g^{-1}) != mu(g^{-1},g) at g=" + std::to_string(g));
    }

    return Multiplier(values);
}

Multiplier trivial_multiplier(const FiniteGroup& group) {
    return validate_multiplier(group, ComplexMatrix::Ones(group.order, group.order));
}

Multiplier power_multiplier(const FiniteGroup& cyclic, int k) {
    const int n = cyclic.order;
    // Identity must sit at index 0 and op must be addition mod n.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (cyclic.op(a, b) != (a + b) % n)
                throw Error("InvalidGroup", "power_multiplier: group is not Z_n in standard form");
    ComplexMatrix values(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const long long exponent = (static_cast<long long>(k) * a * b) % n;
            const long long r = (exponent % n + n) % n;
            values(a, b) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) /
                                               static_cast<double>(n));
        }
    return validate_multiplier(cyclic, values);
}

Multiplier coboundary_multiplier(const FiniteGroup& group, const ComplexVector& beta) {
    const int n = group.order;
    if (beta.size() != n)
        throw Error("DimensionMismatch", "coboundary_multiplier: beta length != group order");
    for (int g = 0; g < n; ++g)
        if (std::abs(std::abs(beta(g)) - 1.0) > kCocycleTol)
            throw Error("NotUnitModulus", "coboundary_multiplier: |beta(g)| != 1");
    if (std::abs(beta(group.identity) - cd(1.0)) > kCocycleTol)
        throw Error("NotNormalized", "coboundary_multiplier: beta(e) != 1");
    ComplexMatrix values(n, n);
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            values(g, h) = beta(g) * beta(h) * std::conj(beta(group.op(g, h)));
    return validate_multiplier(group, values);
}

}  // namespace framedual
