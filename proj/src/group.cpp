#include "framedual/group.hpp"

#include <string>

namespace framedual {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw Error("InvalidGroup", "empty multiplication table");
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw Error("InvalidGroup", "multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw Error("InvalidGroup", "table entry out of range");
    }

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g) ok = mul[e][g] == g && mul[g][e] == g;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw Error("InvalidGroup", "no identity element");

    std::vector<int> inv(n, -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h) {
            if (mul[g][h] == identity && mul[h][g] == identity) {
                inv[g] = h;
                break;
            }
        }
        if (inv[g] < 0)
            throw Error("InvalidGroup", "element " + std::to_string(g) + " has no inverse");
    }

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw Error("InvalidGroup", "associativity fails at (" + std::to_string(a) +
                                                    "," + std::to_string(b) + "," +
                                                    std::to_string(c) + ")");

    FiniteGroup g;
    g.order = n;
    g.mul = std::move(mul);
    g.inv = std::move(inv);
    g.identity = identity;
    return g;
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw Error("InvalidGroup", "cyclic_group: order must be >= 1");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
    return FiniteGroup::from_table(std::move(mul));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.order * b.order;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    auto idx = [&](int ia, int ib) { return ia * b.order + ib; };
    for (int ia = 0; ia < a.order; ++ia)
        for (int ib = 0; ib < b.order; ++ib)
            for (int ja = 0; ja < a.order; ++ja)
                for (int jb = 0; jb < b.order; ++jb)
                    mul[idx(ia, ib)][idx(ja, jb)] = idx(a.op(ia, ja), b.op(ib, jb));
    return FiniteGroup::from_table(std::move(mul));
}

FiniteGroup dihedral_group(int n) {
    if (n < 1) throw Error("InvalidGroup", "dihedral_group: need n >= 1");
    const int order = 2 * n;
    std::vector<std::vector<int>> mul(order, std::vector<int>(order));
    auto idx = [&](int i, int j) { return i + n * j; };
    // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j xor l}
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < 2; ++l) {
                    const int rot = ((j == 0 ? i + k : i - k) % n + n) % n;
                    mul[idx(i, j)][idx(k, l)] = idx(rot, j ^ l);
                }
    return FiniteGroup::from_table(std::move(mul));
}

}  // namespace framedual
