#pragma once

// Cancellation of differential entries equal to the constant monomial.  In a
// graded complex every entry is a single grading-determined monomial, so
// "contains the constant" means the entry is exactly 1 and the cancelled pair
// splits off.  Carried maps are transported through the zig-zag
//   f' = pi o f o incl,   incl(b) = b + (db)_y x,   pi(y) = dx|rest.

#include <utility>
#include <vector>

#include "complexes.hpp"

namespace iotacalc {

struct CarriedUVMat {
    UVMat mat;
    bool skew = false;
};

namespace detail {

template <class Mat, class Poly, class CoeffAdj>
Mat transport(const Mat& f, const Mat& d, int x, int y, CoeffAdj adj) {
    // f'_{b->c} = f_{b->c} + f_{b->y} d_{x->c} + adj(d_{b->y}) f_{x->c}
    //           + adj(d_{b->y}) f_{x->y} d_{x->c}
    Mat r = f;
    const size_t n = f.size();
    for (size_t b = 0; b < n; ++b) {
        Poly fby = entry(f, static_cast<int>(b), y);
        Poly dby = entry(d, static_cast<int>(b), y);
        if (!fby.is_zero())
            for (auto& [c, dxc] : d[x]) add_to(r, static_cast<int>(b), c, fby * dxc);
        if (!dby.is_zero()) {
            Poly a = adj(dby);
            for (auto& [c, fxc] : f[x]) add_to(r, static_cast<int>(b), c, a * fxc);
            Poly fxy = entry(f, x, y);
            if (!fxy.is_zero())
                for (auto& [c, dxc] : d[x]) add_to(r, static_cast<int>(b), c, (a * fxy) * dxc);
        }
    }
    return r;
}

template <class Mat>
Mat drop_pair(const Mat& m, int x, int y, const std::vector<int>& newindex) {
    Mat r(m.size() - 2);
    for (size_t i = 0; i < m.size(); ++i) {
        if (static_cast<int>(i) == x || static_cast<int>(i) == y) continue;
        for (auto& [j, p] : m[i]) {
            if (j == x || j == y) continue;
            r[newindex[i]][newindex[j]] = p;
        }
    }
    return r;
}

inline std::vector<int> index_after_drop(size_t n, int x, int y) {
    std::vector<int> idx(n, -1);
    int k = 0;
    for (size_t i = 0; i < n; ++i)
        if (static_cast<int>(i) != x && static_cast<int>(i) != y) idx[i] = k++;
    return idx;
}

}  // namespace detail

struct ReducedUV {
    FreeUVComplex cx;
    std::vector<CarriedUVMat> carried;
};

struct ReducedU {
    FreeUComplex cx;
    std::vector<UMat> carried;
};

inline ReducedUV cancel_reduce(const FreeUVComplex& input, std::vector<CarriedUVMat> carried = {}) {
    std::vector<UVGenerator> gens = input.gens;
    UVMat diff = input.diff;
    while (true) {
        int cx = -1, cy = -1;
        for (size_t i = 0; i < diff.size() && cx < 0; ++i)
            for (auto& [j, p] : diff[i])
                if (p.has_constant()) {
                    cx = static_cast<int>(i);
                    cy = j;
                    break;
                }
        if (cx < 0) break;
        auto idx = detail::index_after_drop(gens.size(), cx, cy);
        UVMat ndiff = detail::transport<UVMat, UVPoly>(
            diff, diff, cx, cy, [](const UVPoly& p) { return p; });
        ndiff = detail::drop_pair(ndiff, cx, cy, idx);
        for (auto& cm : carried) {
            cm.mat = detail::transport<UVMat, UVPoly>(
                cm.mat, diff, cx, cy,
                [skew = cm.skew](const UVPoly& p) { return skew ? p.swapped() : p; });
            cm.mat = detail::drop_pair(cm.mat, cx, cy, idx);
        }
        std::vector<UVGenerator> ngens;
        ngens.reserve(gens.size() - 2);
        for (size_t i = 0; i < gens.size(); ++i)
            if (idx[i] >= 0) ngens.push_back(gens[i]);
        gens = std::move(ngens);
        diff = std::move(ndiff);
    }
    return ReducedUV{FreeUVComplex(std::move(gens), std::move(diff)), std::move(carried)};
}

inline ReducedU cancel_reduce(const FreeUComplex& input, std::vector<UMat> carried = {}) {
    std::vector<UGenerator> gens = input.gens;
    UMat diff = input.diff;
    while (true) {
        int cx = -1, cy = -1;
        for (size_t i = 0; i < diff.size() && cx < 0; ++i)
            for (auto& [j, p] : diff[i])
                if (p.has_constant()) {
                    cx = static_cast<int>(i);
                    cy = j;
                    break;
                }
        if (cx < 0) break;
        auto idx = detail::index_after_drop(gens.size(), cx, cy);
        UMat ndiff =
            detail::transport<UMat, UPoly>(diff, diff, cx, cy, [](const UPoly& p) { return p; });
        ndiff = detail::drop_pair(ndiff, cx, cy, idx);
        for (auto& cm : carried) {
            cm = detail::transport<UMat, UPoly>(cm, diff, cx, cy,
                                                [](const UPoly& p) { return p; });
            cm = detail::drop_pair(cm, cx, cy, idx);
        }
        std::vector<UGenerator> ngens;
        ngens.reserve(gens.size() - 2);
        for (size_t i = 0; i < gens.size(); ++i)
            if (idx[i] >= 0) ngens.push_back(gens[i]);
        gens = std::move(ngens);
        diff = std::move(ndiff);
    }
    return ReducedU{FreeUComplex(std::move(gens), std::move(diff)), std::move(carried)};
}

}  // namespace iotacalc
