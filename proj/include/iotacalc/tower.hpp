#pragma once

// U-localized homology of a free F2[U]-complex, computed grading by grading.
// Slices of a free complex are complete at every grading, so no truncation is
// involved: a class is "torsion" exactly when a large U-power of it bounds,
// and U^(G*E+1) is enough because torsion orders are bounded by the degree of
// a maximal minor of the differential.

#include <optional>
#include <vector>

#include "complexes.hpp"
#include "gf2.hpp"

namespace iotacalc {

struct Slice {
    int grading = 0;
    std::vector<std::pair<int, int>> basis;  // (generator, U-exponent)

    int index_of(int gen, int exp) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), std::make_pair(gen, exp));
        if (it == basis.end() || *it != std::make_pair(gen, exp)) return -1;
        return static_cast<int>(it - basis.begin());
    }
};

inline Slice make_slice(const FreeUComplex& c, int g) {
    Slice s;
    s.grading = g;
    for (size_t i = 0; i < c.gens.size(); ++i) {
        int d = c.gens[i].gr - g;
        if (d >= 0 && d % 2 == 0) s.basis.emplace_back(static_cast<int>(i), d / 2);
    }
    return s;
}

inline BitVec chain_to_bits(const Slice& s, const UChain& v) {
    BitVec b(static_cast<int>(s.basis.size()));
    for (auto& [g, k] : v) {
        int i = s.index_of(g, k);
        if (i < 0) throw std::logic_error("chain does not live in the requested grading");
        b.flip(i);
    }
    return b;
}

inline UChain bits_to_chain(const Slice& s, const BitVec& b) {
    UChain v;
    for (int i = 0; i < static_cast<int>(s.basis.size()); ++i)
        if (b.get(i)) v.push_back(s.basis[i]);
    return v;
}

// Rows of d restricted to a slice; row i is d(basis_i) in the target slice.
inline std::vector<BitVec> slice_diff_rows(const FreeUComplex& c, const Slice& from,
                                           const Slice& to) {
    std::vector<BitVec> rows;
    rows.reserve(from.basis.size());
    for (auto& [g, k] : from.basis) {
        BitVec r(static_cast<int>(to.basis.size()));
        for (auto& [y, p] : c.diff[g])
            for (int e : p.exponents()) {
                int i = to.index_of(y, k + e);
                if (i >= 0) r.flip(i);
            }
        rows.push_back(std::move(r));
    }
    return rows;
}

struct TowerClass {
    int rank = 0;
    int top_grading = 0;
};

struct TowerInfo {
    TowerClass cls;
    UChain rep;  // cycle representing a tower generator at top_grading
};

namespace detail {

struct GradingTower {
    int dim = 0;                     // dim Z_g / T_g
    std::vector<BitVec> z_basis;     // kernel basis in slice coordinates
    std::vector<uint8_t> is_torsion; // per kernel basis vector after reduction
    Slice slice;
};

// Subquotient Z_g / T_g of permanent (non-torsion) cycle classes at grading g.
inline GradingTower grading_tower(const FreeUComplex& c, int g) {
    GradingTower out;
    out.slice = make_slice(c, g);
    Slice below = make_slice(c, g - 1);
    auto rows = slice_diff_rows(c, out.slice, below);
    out.z_basis = kernel_basis(rows, static_cast<int>(below.basis.size()));

    if (out.z_basis.empty()) return out;

    long long depth = static_cast<long long>(c.rank()) * c.max_diff_exponent() + 1;
    int gdeep = g - 2 * static_cast<int>(depth);
    Slice deep = make_slice(c, gdeep);
    Slice deep_above = make_slice(c, gdeep + 1);
    RowSpaceF2 boundaries(static_cast<int>(deep.basis.size()));
    for (auto& r : slice_diff_rows(c, deep_above, deep)) boundaries.insert(r);

    // Multiplication by U^depth, then reduction against the deep boundaries:
    // survivors generate the tower part.
    RowSpaceF2 seen(static_cast<int>(deep.basis.size()));
    out.is_torsion.assign(out.z_basis.size(), 0);
    for (size_t i = 0; i < out.z_basis.size(); ++i) {
        BitVec img(static_cast<int>(deep.basis.size()));
        for (int j = 0; j < static_cast<int>(out.slice.basis.size()); ++j)
            if (out.z_basis[i].get(j)) {
                auto [gen, k] = out.slice.basis[j];
                int idx = deep.index_of(gen, k + static_cast<int>(depth));
                img.flip(idx);
            }
        BitVec res = boundaries.reduce_copy(img);
        if (!res.any()) {
            out.is_torsion[i] = 1;
            continue;
        }
        if (seen.insert(res)) ++out.dim;  // independent modulo torsion + earlier picks
        else out.is_torsion[i] = 2;       // non-torsion but dependent on earlier reps
    }
    return out;
}

}  // namespace detail

inline TowerInfo localized_tower(const FreeUComplex& c) {
    TowerInfo info;
    if (c.gens.empty()) return info;
    int gmax = c.gens[0].gr, gmin = c.gens[0].gr;
    for (auto& g : c.gens) {
        gmax = std::max(gmax, g.gr);
        gmin = std::min(gmin, g.gr);
    }
    // Below every generator the tower dimensions have stabilized; the rank is
    // the sum over the two parities there.
    info.cls.rank = detail::grading_tower(c, gmin - 1).dim + detail::grading_tower(c, gmin - 2).dim;
    for (int g = gmax; g >= gmin - 2; --g) {
        auto t = detail::grading_tower(c, g);
        if (t.dim > 0) {
            info.cls.top_grading = g;
            for (size_t i = 0; i < t.z_basis.size(); ++i)
                if (!t.is_torsion[i]) {
                    info.rep = bits_to_chain(t.slice, t.z_basis[i]);
                    break;
                }
            break;
        }
    }
    return info;
}

// Functional on the grading-g chain group that kills boundaries, torsion
// cycles and a complement of the cycle space, and pairs to 1 with the chosen
// tower class.  Only defined when the tower part at g is one-dimensional.
struct TowerFunctional {
    int grading = 0;
    Slice slice;
    BitVec phi;
    int tower_dim = 0;
};

inline std::optional<TowerFunctional> make_tower_functional(const FreeUComplex& c, int g) {
    auto t = detail::grading_tower(c, g);
    if (t.dim == 0) return std::nullopt;
    TowerFunctional f;
    f.grading = g;
    f.slice = t.slice;
    f.tower_dim = t.dim;

    const int n = static_cast<int>(t.slice.basis.size());
    RowSpaceF2 zspace(n);
    for (auto& z : t.z_basis) zspace.insert(z);

    // The kernel basis plus the standard vectors at non-pivot coordinates form
    // a basis of the whole slice, so assigning values on them is consistent:
    // 1 on permanent cycles, 0 on torsion cycles and off the cycle space.
    LinearSystemF2 sys(n);
    for (size_t i = 0; i < t.z_basis.size(); ++i) {
        std::vector<int> vars;
        for (int j = 0; j < n; ++j)
            if (t.z_basis[i].get(j)) vars.push_back(j);
        sys.add_equation(vars, t.is_torsion[i] != 1);
    }
    std::vector<uint8_t> is_pivot(n, 0);
    for (int lead : zspace.leads()) is_pivot[lead] = 1;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) sys.add_equation({j}, false);
    auto sol = sys.solve();
    if (!sol) throw std::logic_error("tower functional system must be consistent");
    f.phi = BitVec(n);
    for (int j = 0; j < n; ++j)
        if ((*sol)[j]) f.phi.set(j, true);
    return f;
}

}  // namespace iotacalc
