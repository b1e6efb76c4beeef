#pragma once

// Free graded chain complexes in the two flavors used throughout: bigraded
// over F2[U,V] and singly graded over F2[U].  Matrices act on the left of
// generator columns: row x of `diff` lists the targets of d(x).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monomials.hpp"

namespace iotacalc {

struct UVGenerator {
    std::string name;
    int gr_w = 0;
    int gr_z = 0;
    int alexander() const { return (gr_w - gr_z) / 2; }
};

struct UGenerator {
    std::string name;
    int gr = 0;
};

using UVRow = std::map<int, UVPoly>;  // target index -> entry
using UVMat = std::vector<UVRow>;     // indexed by source
using URow = std::map<int, UPoly>;
using UMat = std::vector<URow>;

inline void put(UVMat& m, int from, int to, const UVPoly& p) {
    if (p.is_zero())
        m[from].erase(to);
    else
        m[from][to] = p;
}
inline void add_to(UVMat& m, int from, int to, const UVPoly& p) {
    auto q = m[from][to] + p;
    put(m, from, to, q);
}
inline void put(UMat& m, int from, int to, const UPoly& p) {
    if (p.is_zero())
        m[from].erase(to);
    else
        m[from][to] = p;
}
inline void add_to(UMat& m, int from, int to, const UPoly& p) {
    auto q = m[from][to] + p;
    put(m, from, to, q);
}

inline UVPoly entry(const UVMat& m, int from, int to) {
    auto it = m[from].find(to);
    return it == m[from].end() ? UVPoly() : it->second;
}
inline UPoly entry(const UMat& m, int from, int to) {
    auto it = m[from].find(to);
    return it == m[from].end() ? UPoly() : it->second;
}

inline bool is_zero(const UVMat& m) {
    for (auto& row : m)
        if (!row.empty()) return false;
    return true;
}
inline bool is_zero(const UMat& m) {
    for (auto& row : m)
        if (!row.empty()) return false;
    return true;
}

inline UVMat mat_add(const UVMat& a, const UVMat& b) {
    UVMat r = a;
    for (size_t i = 0; i < b.size(); ++i)
        for (auto& [j, p] : b[i]) add_to(r, static_cast<int>(i), j, p);
    return r;
}
inline UMat mat_add(const UMat& a, const UMat& b) {
    UMat r = a;
    for (size_t i = 0; i < b.size(); ++i)
        for (auto& [j, p] : b[i]) add_to(r, static_cast<int>(i), j, p);
    return r;
}

inline UVMat identity_uv(size_t n) {
    UVMat m(n);
    for (size_t i = 0; i < n; ++i) m[i][static_cast<int>(i)] = UVPoly::one();
    return m;
}
inline UMat identity_u(size_t n) {
    UMat m(n);
    for (size_t i = 0; i < n; ++i) m[i][static_cast<int>(i)] = UPoly::one();
    return m;
}

// (second o first)(x) = second(first(x)).  A skew `second` conjugates the
// coefficients of `first` by U <-> V on the way through.
inline UVMat compose(const UVMat& second, const UVMat& first, bool second_skew) {
    UVMat r(first.size());
    for (size_t x = 0; x < first.size(); ++x)
        for (auto& [y, p] : first[x]) {
            UVPoly adj = second_skew ? p.swapped() : p;
            for (auto& [z, q] : second[y]) add_to(r, static_cast<int>(x), z, adj * q);
        }
    return r;
}
inline UMat compose(const UMat& second, const UMat& first) {
    UMat r(first.size());
    for (size_t x = 0; x < first.size(); ++x)
        for (auto& [y, p] : first[x])
            for (auto& [z, q] : second[y]) add_to(r, static_cast<int>(x), z, p * q);
    return r;
}

class FreeUVComplex {
public:
    std::vector<UVGenerator> gens;
    UVMat diff;

    FreeUVComplex() = default;
    FreeUVComplex(std::vector<UVGenerator> g, UVMat d) : gens(std::move(g)), diff(std::move(d)) {
        if (diff.empty()) diff.resize(gens.size());
        rebuild_index();
        validate();
    }

    size_t rank() const { return gens.size(); }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("no generator named " + name);
        return it->second;
    }
    bool has_generator(const std::string& name) const { return index_.count(name) > 0; }

    // Structural invariants: ZHS3-type Alexander gradings, nonnegative
    // exponents, and d of bidegree (-1,-1).
    void validate() const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (((gens[i].gr_w - gens[i].gr_z) % 2 + 2) % 2 != 0)
                throw std::invalid_argument("generator " + gens[i].name +
                                            " has non-integer Alexander grading");
        if (diff.size() != gens.size())
            throw std::invalid_argument("differential has wrong number of rows");
        for (size_t x = 0; x < diff.size(); ++x)
            for (auto& [y, p] : diff[x]) {
                if (y < 0 || y >= static_cast<int>(gens.size()))
                    throw std::invalid_argument("differential entry out of range");
                for (auto& t : p.terms()) {
                    if (t.u < 0 || t.v < 0)
                        throw std::invalid_argument("negative exponent in differential");
                    if (gens[y].gr_w - 2 * t.u != gens[x].gr_w - 1 ||
                        gens[y].gr_z - 2 * t.v != gens[x].gr_z - 1)
                        throw std::invalid_argument("differential entry " + gens[x].name + " -> " +
                                                    gens[y].name + " violates the bigrading");
                }
            }
    }

private:
    void rebuild_index() {
        index_.clear();
        for (size_t i = 0; i < gens.size(); ++i)
            if (!index_.emplace(gens[i].name, static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate generator name " + gens[i].name);
    }

    std::unordered_map<std::string, int> index_;
};

class FreeUComplex {
public:
    std::vector<UGenerator> gens;
    UMat diff;

    FreeUComplex() = default;
    FreeUComplex(std::vector<UGenerator> g, UMat d) : gens(std::move(g)), diff(std::move(d)) {
        if (diff.empty()) diff.resize(gens.size());
        rebuild_index();
        validate();
    }

    size_t rank() const { return gens.size(); }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("no generator named " + name);
        return it->second;
    }
    bool has_generator(const std::string& name) const { return index_.count(name) > 0; }

    void validate() const {
        if (diff.size() != gens.size())
            throw std::invalid_argument("differential has wrong number of rows");
        for (size_t x = 0; x < diff.size(); ++x)
            for (auto& [y, p] : diff[x]) {
                if (y < 0 || y >= static_cast<int>(gens.size()))
                    throw std::invalid_argument("differential entry out of range");
                for (int e : p.exponents()) {
                    if (e < 0) throw std::invalid_argument("negative exponent in differential");
                    if (gens[y].gr - 2 * e != gens[x].gr - 1)
                        throw std::invalid_argument("differential entry " + gens[x].name + " -> " +
                                                    gens[y].name + " violates the grading");
                }
            }
    }

    int max_diff_exponent() const {
        int e = 0;
        for (auto& row : diff)
            for (auto& [y, p] : row)
                for (int k : p.exponents()) e = std::max(e, k);
        return e;
    }

private:
    void rebuild_index() {
        index_.clear();
        for (size_t i = 0; i < gens.size(); ++i)
            if (!index_.emplace(gens[i].name, static_cast<int>(i)).second)
                throw std::invalid_argument("duplicate generator name " + gens[i].name);
    }

    std::unordered_map<std::string, int> index_;
};

inline int max_diff_exponent(const FreeUVComplex& c) {
    int e = 0;
    for (auto& row : c.diff)
        for (auto& [y, p] : row)
            for (auto& t : p.terms()) e = std::max({e, t.u, t.v});
    return e;
}

inline bool d_squared_is_zero(const FreeUVComplex& c) {
    return is_zero(compose(c.diff, c.diff, false));
}
inline bool d_squared_is_zero(const FreeUComplex& c) {
    return is_zero(compose(c.diff, c.diff));
}

// Formal derivatives of the differential matrix with respect to U and V.
struct DerivativeMaps {
    UVMat phi;  // d/dU
    UVMat psi;  // d/dV
};

inline DerivativeMaps derivative_maps(const FreeUVComplex& c) {
    DerivativeMaps m;
    m.phi.resize(c.rank());
    m.psi.resize(c.rank());
    for (size_t x = 0; x < c.diff.size(); ++x)
        for (auto& [y, p] : c.diff[x]) {
            UVPoly dphi, dpsi;
            for (auto& t : p.terms()) {
                if (t.u % 2 == 1) dphi.toggle(UVTerm{t.u - 1, t.v});
                if (t.v % 2 == 1) dpsi.toggle(UVTerm{t.u, t.v - 1});
            }
            if (!dphi.is_zero()) m.phi[x][y] = dphi;
            if (!dpsi.is_zero()) m.psi[x][y] = dpsi;
        }
    return m;
}

// Monomial-times-generator element of a FreeUVComplex.
struct UVElement {
    int gen = 0;
    UVTerm mono;
};

// k >= 0 with  x + (UV)^k y  bigrading-homogeneous, when it exists.
inline int homogenize_pair(const FreeUVComplex& c, UVElement x, UVElement y) {
    int wx = c.gens[x.gen].gr_w - 2 * x.mono.u;
    int zx = c.gens[x.gen].gr_z - 2 * x.mono.v;
    int wy = c.gens[y.gen].gr_w - 2 * y.mono.u;
    int zy = c.gens[y.gen].gr_z - 2 * y.mono.v;
    int dw = wy - wx, dz = zy - zx;
    if (dw != dz || dw % 2 != 0 || dw < 0)
        throw std::domain_error("pair is not homogenizable by a nonnegative UV power");
    return dw / 2;
}

// Deterministic reordering; used to check basis independence of derived maps.
inline FreeUVComplex permute_generators(const FreeUVComplex& c, const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    std::vector<UVGenerator> g(perm.size());
    UVMat d(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) g[i] = c.gens[perm[i]];
    for (size_t i = 0; i < perm.size(); ++i)
        for (auto& [j, p] : c.diff[perm[i]]) d[i][inv[j]] = p;
    return FreeUVComplex(std::move(g), std::move(d));
}

// Chains (F2-combinations of monomial-times-generator elements).
using UVChain = std::vector<std::pair<int, UVTerm>>;  // sorted, xor semantics
using UChain = std::vector<std::pair<int, int>>;      // (gen, U-exponent)

template <class Vec, class Elt>
inline void chain_toggle(Vec& v, const Elt& e) {
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it != v.end() && *it == e)
        v.erase(it);
    else
        v.insert(it, e);
}

inline UVChain apply_map(const UVMat& m, bool skew, const UVChain& v) {
    UVChain r;
    for (auto& [g, mono] : v) {
        UVTerm coeff = skew ? swap_uv(mono) : mono;
        for (auto& [to, p] : m[g])
            for (auto& t : p.terms()) chain_toggle(r, std::make_pair(to, mul(coeff, t)));
    }
    return r;
}

inline UChain apply_map(const UMat& m, const UChain& v) {
    UChain r;
    for (auto& [g, k] : v)
        for (auto& [to, p] : m[g])
            for (int e : p.exponents()) chain_toggle(r, std::make_pair(to, k + e));
    return r;
}

}  // namespace iotacalc
