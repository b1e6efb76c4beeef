#pragma once

// Local-map searches as F2 feasibility problems.  In a graded complex every
// matrix slot carries a grading-determined monomial, so a candidate map is a
// 0/1 vector indexed by compatible generator pairs and each relation entry is
// one XOR equation.
//
// Shift handling: the complexes here are only relatively graded, so the two
// sides are aligned by a global shift before solving.  The alignment is
// forced: a tower cycle must land on a nonzero tower class, and composing
// with U^k trades any map for one of lower shift, so two-sided equivalences
// exist only at the shift matching the tower top gradings.  Searching other
// shifts is either vacuous or degenerate (U^k times a projection to the
// tower is a "map" at any sufficiently negative shift), hence the single
// canonical solve per direction.

#include <future>
#include <mutex>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "involutive.hpp"
#include "standard.hpp"
#include "tower.hpp"

namespace iotacalc {

enum class ChainRule {
    strict_chain,    // dF = Fd on the nose even in almost mode
    homotopy_mod_u,  // dF + Fd absorbed by a homotopy mod U
};

// The strict chain rule is the default: with the relaxed rule the uniqueness
// of standard representatives fails already on C(+,-1) versus C(-,1), so the
// relaxed notion is strictly coarser than the classification it is meant to
// compute.  It stays available behind this toggle.
struct SearchOptions {
    ChainRule almost_chain_rule = ChainRule::strict_chain;
    int workers = 1;
};

struct LocalMapCertificate {
    int shift = 0;
    UMat map;            // F, grading-preserving after the shift
    UMat homotopy_d;     // absorbs the chain defect (mod-U almost mode only)
    UMat homotopy_iota;  // absorbs F iota + iota' F
    UChain tower_cycle;  // chosen tower cycle of the source
    UChain functional;   // support of the tower functional on the target
    int pairing_grading = 0;
    bool tower_image_nonzero = false;
};

namespace detail {

// Equation accumulator keyed by (tag, a, b).
class KeyedEqs {
public:
    void add_var(int tag, int a, int b, int var) { row(tag, a, b).push_back(var); }
    void add_rhs(int tag, int a, int b) { rhs_[id(tag, a, b)] ^= 1; }

    bool solve(int nvars, std::vector<uint8_t>& out) const {
        LinearSystemF2 sys(nvars);
        for (size_t i = 0; i < vars_.size(); ++i)
            if (!sys.add_equation(vars_[i], rhs_[i])) return false;
        auto sol = sys.solve();
        if (!sol) return false;
        out = std::move(*sol);
        return true;
    }

private:
    int id(int tag, int a, int b) {
        int64_t key = (static_cast<int64_t>(tag) << 48) ^ (static_cast<int64_t>(a) << 24) ^ b;
        auto [it, fresh] = ids_.emplace(key, static_cast<int>(vars_.size()));
        if (fresh) {
            vars_.emplace_back();
            rhs_.push_back(0);
        }
        return it->second;
    }
    std::vector<int>& row(int tag, int a, int b) { return vars_[id(tag, a, b)]; }

    std::unordered_map<int64_t, int> ids_;
    std::vector<std::vector<int>> vars_;
    std::vector<uint8_t> rhs_;
};

struct UPairTable {
    // variable ids for pairs (x in C, y in D) whose monomial exponent
    // (gr_D(y) - gr_C(x) - degree)/2 is a nonnegative integer
    std::vector<std::vector<std::pair<int, int>>> by_source;  // x -> [(y, var)]
    int count = 0;

    UPairTable() = default;
    UPairTable(const FreeUComplex& c, const FreeUComplex& d, int degree, int first_var) {
        by_source.resize(c.rank());
        for (size_t x = 0; x < c.rank(); ++x)
            for (size_t y = 0; y < d.rank(); ++y) {
                int num = d.gens[y].gr - c.gens[x].gr - degree;
                if (num >= 0 && num % 2 == 0)
                    by_source[x].emplace_back(static_cast<int>(y), first_var + count++);
            }
    }

    int exponent(const FreeUComplex& c, const FreeUComplex& d, int degree, int x, int y) const {
        return (d.gens[y].gr - c.gens[x].gr - degree) / 2;
    }
};

struct USearchContext {
    const IotaComplex* c;
    TowerInfo tower;
    int max_exp;
    mutable std::map<int, std::optional<TowerFunctional>> phi_cache;
    mutable std::mutex phi_mx;

    explicit USearchContext(const IotaComplex& cc) : c(&cc) {
        tower = localized_tower(cc.cx);
        max_exp = cc.cx.max_diff_exponent();
    }

    std::optional<TowerFunctional> phi(int grading) const {
        std::lock_guard<std::mutex> lock(phi_mx);
        auto it = phi_cache.find(grading);
        if (it == phi_cache.end())
            it = phi_cache.emplace(grading, make_tower_functional(c->cx, grading)).first;
        return it->second;
    }
};

enum { kChainEq = 0, kIotaEq = 1, kCycleEq = 2, kPairEq = 3 };

inline std::optional<LocalMapCertificate> try_u_shift(const USearchContext& C,
                                                      const USearchContext& D, int sigma,
                                                      Mode mode, ChainRule rule) {
    auto phi = D.phi(C.tower.cls.top_grading + sigma);
    if (!phi || phi->tower_dim != 1) return std::nullopt;
    const FreeUComplex& cx = C.c->cx;
    const FreeUComplex& dx = D.c->cx;
    const bool mod_u = mode == Mode::almost;
    const bool chain_mod_u = mod_u && rule == ChainRule::homotopy_mod_u;

    UPairTable F(cx, dx, sigma, 0);
    UPairTable Hi(cx, dx, sigma + 1, F.count);
    UPairTable Hd;
    int nvars = F.count + Hi.count;
    if (chain_mod_u) {
        Hd = UPairTable(cx, dx, sigma + 1, nvars);
        nvars += Hd.count;
    }
    if (F.count == 0) return std::nullopt;

    KeyedEqs eqs;
    auto keep = [&](int x, int z, int degree, bool relax) {
        int num = dx.gens[z].gr - cx.gens[x].gr - degree;
        if (num < 0 || num % 2 != 0) return false;
        return !relax || num == 0;
    };
    // dF + Fd (+ dHd + Hd d) = 0, of degree sigma - 1
    for (size_t x = 0; x < cx.rank(); ++x)
        for (auto& [y, var] : F.by_source[x])
            for (auto& [z, p] : dx.diff[y])
                if (keep(static_cast<int>(x), z, sigma - 1, chain_mod_u))
                    eqs.add_var(kChainEq, static_cast<int>(x), z, var);
    for (size_t x = 0; x < cx.rank(); ++x)
        for (auto& [y, p] : cx.diff[x])
            for (auto& [z, var] : F.by_source[y])
                if (keep(static_cast<int>(x), z, sigma - 1, chain_mod_u))
                    eqs.add_var(kChainEq, static_cast<int>(x), z, var);
    if (chain_mod_u) {
        for (size_t x = 0; x < cx.rank(); ++x)
            for (auto& [y, var] : Hd.by_source[x])
                for (auto& [z, p] : dx.diff[y])
                    if (keep(static_cast<int>(x), z, sigma - 1, true))
                        eqs.add_var(kChainEq, static_cast<int>(x), z, var);
        for (size_t x = 0; x < cx.rank(); ++x)
            for (auto& [y, p] : cx.diff[x])
                for (auto& [z, var] : Hd.by_source[y])
                    if (keep(static_cast<int>(x), z, sigma - 1, true))
                        eqs.add_var(kChainEq, static_cast<int>(x), z, var);
    }
    // F iota_C + iota_D F + d Hi + Hi d = 0, of degree sigma
    for (size_t x = 0; x < cx.rank(); ++x) {
        for (auto& [y, var] : F.by_source[x])
            for (auto& [z, p] : D.c->iota[y])
                if (keep(static_cast<int>(x), z, sigma, mod_u))
                    eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
        for (auto& [y, p] : C.c->iota[x])
            for (auto& [z, var] : F.by_source[y])
                if (keep(static_cast<int>(x), z, sigma, mod_u))
                    eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
        for (auto& [y, var] : Hi.by_source[x])
            for (auto& [z, p] : dx.diff[y])
                if (keep(static_cast<int>(x), z, sigma, mod_u))
                    eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
        for (auto& [y, p] : cx.diff[x])
            for (auto& [z, var] : Hi.by_source[y])
                if (keep(static_cast<int>(x), z, sigma, mod_u))
                    eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
    }
    // F applied to the tower cycle must be a cycle pairing to 1.
    const UChain& zc = C.tower.rep;
    bool pairing_nonempty = false;
    for (auto& [g, k] : zc)
        for (auto& [y, var] : F.by_source[g]) {
            int ef = F.exponent(cx, dx, sigma, g, y);
            int idx = phi->slice.index_of(y, k + ef);
            if (idx >= 0 && phi->phi.get(idx)) {
                eqs.add_var(kPairEq, 0, 0, var);
                pairing_nonempty = true;
            }
            if (chain_mod_u)
                for (auto& [w, p] : dx.diff[y])
                    for (int e : p.exponents())
                        eqs.add_var(kCycleEq, w, k + ef + e, var);
        }
    if (!pairing_nonempty) return std::nullopt;
    eqs.add_rhs(kPairEq, 0, 0);

    std::vector<uint8_t> sol;
    if (!eqs.solve(nvars, sol)) return std::nullopt;

    LocalMapCertificate cert;
    cert.shift = sigma;
    cert.map.resize(cx.rank());
    cert.homotopy_iota.resize(cx.rank());
    cert.homotopy_d.resize(cx.rank());
    for (size_t x = 0; x < cx.rank(); ++x) {
        for (auto& [y, var] : F.by_source[x])
            if (sol[var]) cert.map[x][y] = UPoly(F.exponent(cx, dx, sigma, static_cast<int>(x), y));
        for (auto& [y, var] : Hi.by_source[x])
            if (sol[var])
                cert.homotopy_iota[x][y] =
                    UPoly(Hi.exponent(cx, dx, sigma + 1, static_cast<int>(x), y));
        if (chain_mod_u)
            for (auto& [y, var] : Hd.by_source[x])
                if (sol[var])
                    cert.homotopy_d[x][y] =
                        UPoly(Hd.exponent(cx, dx, sigma + 1, static_cast<int>(x), y));
    }
    cert.tower_cycle = zc;
    cert.pairing_grading = phi->grading;
    cert.functional = bits_to_chain(phi->slice, phi->phi);
    cert.tower_image_nonzero = true;
    return cert;
}

inline std::optional<LocalMapCertificate> local_map_search_ctx(const USearchContext& C,
                                                               const USearchContext& D, Mode mode,
                                                               ChainRule rule) {
    if (C.tower.cls.rank == 0 || D.tower.cls.rank == 0) return std::nullopt;
    int offset = D.tower.cls.top_grading - C.tower.cls.top_grading;
    if (((offset % 2) + 2) % 2 != 0) return std::nullopt;  // incompatible tower parities
    return try_u_shift(C, D, offset, mode, rule);
}

}  // namespace detail

inline std::optional<LocalMapCertificate> local_map_search(const IotaComplex& c,
                                                           const IotaComplex& d, Mode mode,
                                                           const SearchOptions& opts = {}) {
    detail::USearchContext C(c), D(d);
    return detail::local_map_search_ctx(C, D, mode, opts.almost_chain_rule);
}

// Direct re-verification of a stored certificate by matrix arithmetic.
inline bool verify_local_certificate(const IotaComplex& c, const IotaComplex& d,
                                     const LocalMapCertificate& cert, Mode mode,
                                     ChainRule rule = ChainRule::strict_chain) {
    const bool mod_u = mode == Mode::almost;
    const bool chain_mod_u = mod_u && rule == ChainRule::homotopy_mod_u;
    UMat chain = mat_add(compose(d.cx.diff, cert.map), compose(cert.map, c.cx.diff));
    if (chain_mod_u) {
        chain = mat_add(chain, compose(d.cx.diff, cert.homotopy_d));
        chain = mat_add(chain, compose(cert.homotopy_d, c.cx.diff));
    }
    for (auto& row : chain)
        for (auto& [y, p] : row)
            if (!(chain_mod_u ? p.divisible_by_u() : p.is_zero())) return false;
    UMat icom = mat_add(compose(d.iota, cert.map), compose(cert.map, c.iota));
    icom = mat_add(icom, compose(d.cx.diff, cert.homotopy_iota));
    icom = mat_add(icom, compose(cert.homotopy_iota, c.cx.diff));
    for (auto& row : icom)
        for (auto& [y, p] : row)
            if (!(mod_u ? p.divisible_by_u() : p.is_zero())) return false;
    UChain img = apply_map(cert.map, cert.tower_cycle);
    if (!apply_map(d.cx.diff, img).empty()) return false;
    int hits = 0;
    for (auto& t : img)
        for (auto& s : cert.functional)
            if (t == s) ++hits;
    return hits % 2 == 1 && cert.tower_image_nonzero;
}

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<LocalMapCertificate> forward;
    std::optional<LocalMapCertificate> backward;
};

inline EquivalenceResult is_equivalent(const IotaComplex& c, const IotaComplex& d, Mode mode,
                                       const SearchOptions& opts = {}) {
    EquivalenceResult r;
    detail::USearchContext C(c), D(d);
    r.forward = detail::local_map_search_ctx(C, D, mode, opts.almost_chain_rule);
    if (!r.forward) return r;
    r.backward = detail::local_map_search_ctx(D, C, mode, opts.almost_chain_rule);
    r.equivalent = r.backward.has_value();
    return r;
}

// ---------------------------------------------------------------------------
// iota_K-local maps over F2[U,V]

struct IotaKLocalCertificate {
    int shift = 0;          // applied to both Maslov gradings
    UVMat map;              // equivariant chain map
    UVMat homotopy_iota;    // skew homotopy absorbing F iota_K + iota_K' F
    UChain tower_cycle;     // tower cycle of A0(source)
    UChain functional;      // tower functional support on A0(target)
    int pairing_grading = 0;
    bool tower_image_nonzero = false;
};

namespace detail {

struct UVPairTable {
    std::vector<std::vector<std::pair<int, int>>> by_source;
    int count = 0;

    // swapped = true places entries in bidegree (gr_z(x)+dw, gr_w(x)+dz)
    // (slots of a skew map); otherwise (gr_w(x)+dw, gr_z(x)+dz).
    UVPairTable(const FreeUVComplex& c, const FreeUVComplex& d, int dw, int dz, bool swapped,
                int first_var) {
        by_source.resize(c.rank());
        for (size_t x = 0; x < c.rank(); ++x) {
            int tw = (swapped ? c.gens[x].gr_z : c.gens[x].gr_w) + dw;
            int tz = (swapped ? c.gens[x].gr_w : c.gens[x].gr_z) + dz;
            for (size_t y = 0; y < d.rank(); ++y) {
                int nu = d.gens[y].gr_w - tw, nv = d.gens[y].gr_z - tz;
                if (nu >= 0 && nv >= 0 && nu % 2 == 0 && nv % 2 == 0)
                    by_source[x].emplace_back(static_cast<int>(y), first_var + count++);
            }
        }
    }

    static UVTerm exponent(const FreeUVComplex& c, const FreeUVComplex& d, int dw, int dz,
                           bool swapped, int x, int y) {
        int tw = (swapped ? c.gens[x].gr_z : c.gens[x].gr_w) + dw;
        int tz = (swapped ? c.gens[x].gr_w : c.gens[x].gr_z) + dz;
        return UVTerm{(d.gens[y].gr_w - tw) / 2, (d.gens[y].gr_z - tz) / 2};
    }
};

struct UVSearchContext {
    const IotaKComplex* k;
    IotaComplex a0;
    TowerInfo tower;
    int max_exp;

    explicit UVSearchContext(const IotaKComplex& kk) : k(&kk), a0(a0_subcomplex(kk)) {
        tower = localized_tower(a0.cx);
        max_exp = max_diff_exponent(kk.cx);
    }
};

inline std::optional<IotaKLocalCertificate> try_uv_shift(const UVSearchContext& A,
                                                         const UVSearchContext& B, int sigma) {
    auto phi = make_tower_functional(B.a0.cx, A.tower.cls.top_grading + sigma);
    if (!phi || phi->tower_dim != 1) return std::nullopt;
    const FreeUVComplex& ax = A.k->cx;
    const FreeUVComplex& bx = B.k->cx;

    UVPairTable F(ax, bx, sigma, sigma, false, 0);
    UVPairTable H(ax, bx, sigma + 1, sigma + 1, true, F.count);
    const int nvars = F.count + H.count;
    if (F.count == 0) return std::nullopt;

    KeyedEqs eqs;
    // dF + Fd = 0 (exact)
    for (size_t x = 0; x < ax.rank(); ++x) {
        for (auto& [y, var] : F.by_source[x])
            for (auto& [z, p] : bx.diff[y]) eqs.add_var(kChainEq, static_cast<int>(x), z, var);
        for (auto& [y, p] : ax.diff[x])
            for (auto& [z, var] : F.by_source[y]) eqs.add_var(kChainEq, static_cast<int>(x), z, var);
        // iota_B F + F iota_A + dH + Hd = 0 (exact)
        for (auto& [y, var] : F.by_source[x])
            for (auto& [z, p] : B.k->iota[y]) eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
        for (auto& [y, p] : A.k->iota[x])
            for (auto& [z, var] : F.by_source[y]) eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
        for (auto& [y, var] : H.by_source[x])
            for (auto& [z, p] : bx.diff[y]) eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
        for (auto& [y, p] : ax.diff[x])
            for (auto& [z, var] : H.by_source[y]) eqs.add_var(kIotaEq, static_cast<int>(x), z, var);
    }
    // Tower pairing through the A0 shadow.
    auto a_of = [](const FreeUVComplex& c, int g) { return c.gens[g].alexander(); };
    bool pairing_nonempty = false;
    for (auto& [g, kexp] : A.tower.rep)
        for (auto& [y, var] : F.by_source[g]) {
            UVTerm m = UVPairTable::exponent(ax, bx, sigma, sigma, false, g, y);
            int pux = std::max(a_of(ax, g), 0);
            int puy = std::max(a_of(bx, y), 0);
            int shadow = pux + m.u - puy;
            int idx = phi->slice.index_of(y, kexp + shadow);
            if (idx >= 0 && phi->phi.get(idx)) {
                eqs.add_var(kPairEq, 0, 0, var);
                pairing_nonempty = true;
            }
        }
    if (!pairing_nonempty) return std::nullopt;
    eqs.add_rhs(kPairEq, 0, 0);

    std::vector<uint8_t> sol;
    if (!eqs.solve(nvars, sol)) return std::nullopt;

    IotaKLocalCertificate cert;
    cert.shift = sigma;
    cert.map.resize(ax.rank());
    cert.homotopy_iota.resize(ax.rank());
    for (size_t x = 0; x < ax.rank(); ++x) {
        for (auto& [y, var] : F.by_source[x])
            if (sol[var])
                cert.map[x][y] = UVPoly(
                    UVPairTable::exponent(ax, bx, sigma, sigma, false, static_cast<int>(x), y));
        for (auto& [y, var] : H.by_source[x])
            if (sol[var])
                cert.homotopy_iota[x][y] = UVPoly(UVPairTable::exponent(
                    ax, bx, sigma + 1, sigma + 1, true, static_cast<int>(x), y));
    }
    cert.tower_cycle = A.tower.rep;
    cert.pairing_grading = phi->grading;
    cert.functional = bits_to_chain(phi->slice, phi->phi);
    cert.tower_image_nonzero = true;
    return cert;
}

}  // namespace detail

inline std::optional<IotaKLocalCertificate> iota_k_local_map_search(const IotaKComplex& a,
                                                                    const IotaKComplex& b) {
    detail::UVSearchContext A(a), B(b);
    if (A.tower.cls.rank == 0 || B.tower.cls.rank == 0) return std::nullopt;
    int offset = B.tower.cls.top_grading - A.tower.cls.top_grading;
    return detail::try_uv_shift(A, B, offset);
}

// A0 shadow of an equivariant UV-map applied to an A0 chain.
inline UChain a0_shadow_apply(const IotaKComplex& a, const IotaKComplex& b, const UVMat& f,
                              const UChain& v) {
    UChain out;
    for (auto& [g, k] : v) {
        int pux = std::max(a.cx.gens[g].alexander(), 0);
        for (auto& [y, p] : f[g])
            for (auto& t : p.terms()) {
                int puy = std::max(b.cx.gens[y].alexander(), 0);
                int shadow = pux + t.u - puy;
                chain_toggle(out, std::make_pair(y, k + shadow));
            }
    }
    return out;
}

inline bool verify_iota_k_certificate(const IotaKComplex& a, const IotaKComplex& b,
                                      const IotaKLocalCertificate& cert) {
    UVMat chain = mat_add(compose(b.cx.diff, cert.map, false), compose(cert.map, a.cx.diff, false));
    if (!is_zero(chain)) return false;
    UVMat icom = mat_add(compose(b.iota, cert.map, true), compose(cert.map, a.iota, false));
    icom = mat_add(icom, compose(b.cx.diff, cert.homotopy_iota, false));
    icom = mat_add(icom, compose(cert.homotopy_iota, a.cx.diff, true));
    if (!is_zero(icom)) return false;
    UChain img = a0_shadow_apply(a, b, cert.map, cert.tower_cycle);
    int hits = 0;
    for (auto& t : img)
        for (auto& s : cert.functional)
            if (t == s) ++hits;
    return hits % 2 == 1 && cert.tower_image_nonzero;
}

struct IotaKEquivalenceResult {
    bool equivalent = false;
    std::optional<IotaKLocalCertificate> forward;
    std::optional<IotaKLocalCertificate> backward;
};

inline IotaKEquivalenceResult is_iota_k_equivalent(const IotaKComplex& a, const IotaKComplex& b) {
    IotaKEquivalenceResult r;
    r.forward = iota_k_local_map_search(a, b);
    if (!r.forward) return r;
    r.backward = iota_k_local_map_search(b, a);
    r.equivalent = r.backward.has_value();
    return r;
}

// ---------------------------------------------------------------------------
// Bounded search for the standard representative.

// Enumerates parameters by increasing m, then lexicographically, and returns
// the first (by uniqueness: the only) almost-locally equivalent one.  A hint
// is checked first; a match short-circuits the scan with the same answer.
inline std::optional<StandardParams> standard_rep_search(
    const IotaComplex& c, const SearchBounds& bounds, const SearchOptions& opts = {},
    const std::optional<StandardParams>& hint = std::nullopt) {
    bounds.validate();
    detail::USearchContext C(c);
    auto matches = [&](const StandardParams& p) {
        IotaComplex cand = standard_complex(p);
        detail::USearchContext D(cand);
        if (!detail::local_map_search_ctx(C, D, Mode::almost, opts.almost_chain_rule)) return false;
        return detail::local_map_search_ctx(D, C, Mode::almost, opts.almost_chain_rule).has_value();
    };
    if (hint) {
        bool inside = hint->m() <= bounds.max_steps;
        for (auto& s : hint->steps) inside = inside && std::abs(s.b) <= bounds.max_weight;
        if (inside && matches(*hint)) return *hint;
    }

    std::optional<StandardParams> found;
    if (opts.workers <= 1) {
        enumerate_params(bounds, [&](const StandardParams& p) {
            if (matches(p)) {
                found = p;
                return true;
            }
            return false;
        });
        return found;
    }

    // Parallel fan-out in enumeration-order blocks; the first match in
    // enumeration order wins regardless of completion order.
    std::vector<StandardParams> all;
    enumerate_params(bounds, [&](const StandardParams& p) {
        all.push_back(p);
        return false;
    });
    const size_t block = static_cast<size_t>(opts.workers) * 4;
    for (size_t start = 0; start < all.size() && !found; start += block) {
        size_t end = std::min(all.size(), start + block);
        std::vector<std::future<bool>> futs;
        for (size_t i = start; i < end; ++i)
            futs.push_back(std::async(std::launch::async, [&, i] { return matches(all[i]); }));
        for (size_t i = start; i < end; ++i)
            if (futs[i - start].get() && !found) found = all[i];
    }
    return found;
}

}  // namespace iotacalc
