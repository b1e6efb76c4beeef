#pragma once

// Complexes with involutions.  Verification solves the defining relation for
// an explicit homotopy over F2; failure returns the residual that no homotopy
// can absorb.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "complexes.hpp"
#include "gf2.hpp"

namespace iotacalc {

enum class Mode { strict, almost };

struct IotaKComplex {
    FreeUVComplex cx;
    UVMat iota;  // skew-equivariant, stored on generators
    std::vector<std::string> notes;

    void validate() const {
        if (iota.size() != cx.rank()) throw std::invalid_argument("involution has wrong size");
        for (size_t x = 0; x < iota.size(); ++x)
            for (auto& [y, p] : iota[x])
                for (auto& t : p.terms()) {
                    if (t.u < 0 || t.v < 0)
                        throw std::invalid_argument("negative exponent in involution");
                    // Terms of iota(x) sit in bidegree (gr_z(x), gr_w(x)).
                    if (cx.gens[y].gr_w - 2 * t.u != cx.gens[x].gr_z ||
                        cx.gens[y].gr_z - 2 * t.v != cx.gens[x].gr_w)
                        throw std::invalid_argument("involution entry " + cx.gens[x].name +
                                                    " -> " + cx.gens[y].name +
                                                    " does not switch the bigradings");
                }
    }
};

struct IotaComplex {
    FreeUComplex cx;
    UMat iota;  // grading preserving

    void validate() const {
        if (iota.size() != cx.rank()) throw std::invalid_argument("involution has wrong size");
        for (size_t x = 0; x < iota.size(); ++x)
            for (auto& [y, p] : iota[x])
                for (int e : p.exponents()) {
                    if (e < 0) throw std::invalid_argument("negative exponent in involution");
                    if (cx.gens[y].gr - 2 * e != cx.gens[x].gr)
                        throw std::invalid_argument("involution entry " + cx.gens[x].name +
                                                    " -> " + cx.gens[y].name +
                                                    " does not preserve the grading");
                }
    }
};

namespace detail {

class EqAccum {
public:
    void add_var(int x, int z, int var) { eq(x, z).first.push_back(var); }
    void add_rhs(int x, int z) { eq(x, z).second ^= 1; }

    std::optional<std::vector<uint8_t>> solve(int nvars) const {
        LinearSystemF2 sys(nvars);
        for (auto& [key, e] : eqs_)
            if (!sys.add_equation(e.first, e.second)) return std::nullopt;
        return sys.solve();
    }

private:
    std::pair<std::vector<int>, int>& eq(int x, int z) { return eqs_[{x, z}]; }
    std::map<std::pair<int, int>, std::pair<std::vector<int>, int>> eqs_;
};

// H with dH + Hd = R on an F2[U] complex; H raises grading by one.  In
// mod-U flavor only the constant coefficients of the relation are enforced.
inline std::optional<UMat> solve_homotopy_u(const FreeUComplex& c, const UMat& r, bool mod_u) {
    const int n = static_cast<int>(c.rank());
    std::vector<std::map<int, int>> hvar(n);
    int nvars = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int num = c.gens[y].gr - c.gens[x].gr - 1;  // U-exponent * 2
            if (num >= 0 && num % 2 == 0) hvar[x][y] = nvars++;
        }
    auto keep = [&](int x, int z) {
        int num = c.gens[z].gr - c.gens[x].gr;
        if (num < 0 || num % 2 != 0) return false;
        return !mod_u || num == 0;
    };
    EqAccum eqs;
    for (int x = 0; x < n; ++x)
        for (auto& [y, var] : hvar[x])
            for (auto& [z, p] : c.diff[y])
                if (keep(x, z)) eqs.add_var(x, z, var);  // (d o H) at (x,z)
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : c.diff[x])
            for (auto& [z, var] : hvar[y])
                if (keep(x, z)) eqs.add_var(x, z, var);  // (H o d) at (x,z)
    for (size_t x = 0; x < r.size(); ++x)
        for (auto& [z, p] : r[x])
            for (int e : p.exponents())
                if (!mod_u || e == 0) eqs.add_rhs(static_cast<int>(x), z);
    auto sol = eqs.solve(nvars);
    if (!sol) return std::nullopt;
    UMat h(n);
    for (int x = 0; x < n; ++x)
        for (auto& [y, var] : hvar[x])
            if ((*sol)[var]) h[x][y] = UPoly((c.gens[y].gr - c.gens[x].gr - 1) / 2);
    return h;
}

// Equivariant H of bidegree (+1,+1) with dH + Hd = R over F2[U,V].
inline std::optional<UVMat> solve_homotopy_uv(const FreeUVComplex& c, const UVMat& r) {
    const int n = static_cast<int>(c.rank());
    std::vector<std::map<int, int>> hvar(n);
    int nvars = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int nu = c.gens[y].gr_w - c.gens[x].gr_w - 1;
            int nv = c.gens[y].gr_z - c.gens[x].gr_z - 1;
            if (nu >= 0 && nv >= 0 && nu % 2 == 0 && nv % 2 == 0) hvar[x][y] = nvars++;
        }
    auto valid_key = [&](int x, int z) {
        int nu = c.gens[z].gr_w - c.gens[x].gr_w;
        int nv = c.gens[z].gr_z - c.gens[x].gr_z;
        return nu >= 0 && nv >= 0 && nu % 2 == 0 && nv % 2 == 0;
    };
    EqAccum eqs;
    for (int x = 0; x < n; ++x)
        for (auto& [y, var] : hvar[x])
            for (auto& [z, p] : c.diff[y])
                if (valid_key(x, z)) eqs.add_var(x, z, var);
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : c.diff[x])
            for (auto& [z, var] : hvar[y])
                if (valid_key(x, z)) eqs.add_var(x, z, var);
    for (size_t x = 0; x < r.size(); ++x)
        for (auto& [z, p] : r[x])
            if (!p.is_zero()) eqs.add_rhs(static_cast<int>(x), z);
    auto sol = eqs.solve(nvars);
    if (!sol) return std::nullopt;
    UVMat h(n);
    for (int x = 0; x < n; ++x)
        for (auto& [y, var] : hvar[x])
            if ((*sol)[var])
                h[x][y] = UVPoly(UVTerm{(c.gens[y].gr_w - c.gens[x].gr_w - 1) / 2,
                                        (c.gens[y].gr_z - c.gens[x].gr_z - 1) / 2});
    return h;
}

}  // namespace detail

struct VerifyResultU {
    bool passed = false;
    std::string reason;
    UMat homotopy;
    UMat residual;
};

struct VerifyResultUV {
    bool passed = false;
    std::string reason;
    UVMat homotopy;
    UVMat residual;
};

// iota_K is required to be an honest skew chain map; the squared relation
// iota_K^2 = id + Phi Psi is solved up to equivariant homotopy.
inline VerifyResultUV verify_involution(const IotaKComplex& k) {
    k.cx.validate();
    k.validate();
    VerifyResultUV out;
    UVMat chain = mat_add(compose(k.cx.diff, k.iota, false), compose(k.iota, k.cx.diff, true));
    if (!is_zero(chain)) {
        out.reason = "iota_K does not commute with the differential";
        out.residual = chain;
        return out;
    }
    auto deriv = derivative_maps(k.cx);
    UVMat r = mat_add(compose(k.iota, k.iota, true), identity_uv(k.cx.rank()));
    r = mat_add(r, compose(deriv.phi, deriv.psi, false));
    auto h = detail::solve_homotopy_uv(k.cx, r);
    if (!h) {
        out.reason = "iota_K^2 + id + PhiPsi is not null-homotopic";
        out.residual = r;
        return out;
    }
    out.passed = true;
    out.homotopy = std::move(*h);
    return out;
}

inline VerifyResultU verify_involution(const IotaComplex& c, Mode mode) {
    c.cx.validate();
    c.validate();
    VerifyResultU out;
    UMat chain = mat_add(compose(c.cx.diff, c.iota), compose(c.iota, c.cx.diff));
    if (mode == Mode::strict) {
        if (!is_zero(chain)) {
            out.reason = "iota does not commute with the differential";
            out.residual = chain;
            return out;
        }
    } else {
        for (auto& row : chain)
            for (auto& [y, p] : row)
                if (!p.divisible_by_u()) {
                    out.reason = "iota d + d iota is not in the image of U";
                    out.residual = chain;
                    return out;
                }
    }
    UMat r = mat_add(compose(c.iota, c.iota), identity_u(c.cx.rank()));
    auto h = detail::solve_homotopy_u(c.cx, r, mode == Mode::almost);
    if (!h) {
        out.reason = mode == Mode::strict ? "iota^2 + id is not null-homotopic"
                                          : "iota^2 + id is not null-homotopic mod U";
        out.residual = r;
        return out;
    }
    out.passed = true;
    out.homotopy = std::move(*h);
    return out;
}

inline std::string tensor_name(const std::string& a, const std::string& b) { return a + "|" + b; }

// Tensor over F2[U,V] with involution iota|iota' o (id|id + Psi|Phi).
inline IotaKComplex tensor_iota_k(const IotaKComplex& a, const IotaKComplex& b) {
    const int na = static_cast<int>(a.cx.rank()), nb = static_cast<int>(b.cx.rank());
    auto pid = [nb](int i, int j) { return i * nb + j; };
    std::vector<UVGenerator> gens(static_cast<size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            gens[pid(i, j)] = UVGenerator{tensor_name(a.cx.gens[i].name, b.cx.gens[j].name),
                                          a.cx.gens[i].gr_w + b.cx.gens[j].gr_w,
                                          a.cx.gens[i].gr_z + b.cx.gens[j].gr_z};
    UVMat diff(gens.size());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            for (auto& [y, p] : a.cx.diff[i]) add_to(diff, pid(i, j), pid(y, j), p);
            for (auto& [y, p] : b.cx.diff[j]) add_to(diff, pid(i, j), pid(i, y), p);
        }
    auto tensor_map = [&](const UVMat& m, const UVMat& n) {
        UVMat t(gens.size());
        for (int i = 0; i < na; ++i)
            for (auto& [y, p] : m[i])
                for (int j = 0; j < nb; ++j)
                    for (auto& [w, q] : n[j]) add_to(t, pid(i, j), pid(y, w), p * q);
        return t;
    };
    auto da = derivative_maps(a.cx);
    auto db = derivative_maps(b.cx);
    UVMat iota = mat_add(tensor_map(a.iota, b.iota),
                         tensor_map(compose(a.iota, da.psi, true), compose(b.iota, db.phi, true)));
    IotaKComplex out{FreeUVComplex(std::move(gens), std::move(diff)), std::move(iota), {}};
    out.validate();
    return out;
}

// Tensor over F2[U] with involution iota_1 (x) iota_2.
inline IotaComplex tensor_iota(const IotaComplex& a, const IotaComplex& b) {
    const int na = static_cast<int>(a.cx.rank()), nb = static_cast<int>(b.cx.rank());
    auto pid = [nb](int i, int j) { return i * nb + j; };
    std::vector<UGenerator> gens(static_cast<size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
            gens[pid(i, j)] = UGenerator{tensor_name(a.cx.gens[i].name, b.cx.gens[j].name),
                                         a.cx.gens[i].gr + b.cx.gens[j].gr};
    UMat diff(gens.size());
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            for (auto& [y, p] : a.cx.diff[i]) add_to(diff, pid(i, j), pid(y, j), p);
            for (auto& [y, p] : b.cx.diff[j]) add_to(diff, pid(i, j), pid(i, y), p);
        }
    UMat iota(gens.size());
    for (int i = 0; i < na; ++i)
        for (auto& [y, p] : a.iota[i])
            for (int j = 0; j < nb; ++j)
                for (auto& [w, q] : b.iota[j]) add_to(iota, pid(i, j), pid(y, w), p * q);
    IotaComplex out{FreeUComplex(std::move(gens), std::move(diff)), std::move(iota)};
    out.validate();
    return out;
}

inline IotaKComplex dual(const IotaKComplex& a) {
    const int n = static_cast<int>(a.cx.rank());
    std::vector<UVGenerator> gens(n);
    for (int i = 0; i < n; ++i)
        gens[i] = UVGenerator{a.cx.gens[i].name + "^", -a.cx.gens[i].gr_w, -a.cx.gens[i].gr_z};
    UVMat diff(n), iota(n);
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : a.cx.diff[x]) diff[y][x] = p;
    // Dualizing a skew map transposes the matrix and swaps U and V in each
    // entry; that is what keeps the bigrading-switch rule intact.
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : a.iota[x]) iota[y][x] = p.swapped();
    IotaKComplex out{FreeUVComplex(std::move(gens), std::move(diff)), std::move(iota), {}};
    out.validate();
    return out;
}

inline IotaComplex dual(const IotaComplex& a) {
    const int n = static_cast<int>(a.cx.rank());
    std::vector<UGenerator> gens(n);
    for (int i = 0; i < n; ++i) gens[i] = UGenerator{a.cx.gens[i].name + "^", -a.cx.gens[i].gr};
    UMat diff(n), iota(n);
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : a.cx.diff[x]) diff[y][x] = p;
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : a.iota[x]) iota[y][x] = p;
    IotaComplex out{FreeUComplex(std::move(gens), std::move(diff)), std::move(iota)};
    out.validate();
    return out;
}

// Alexander-grading-zero subcomplex of the UV-localization: one F[U]-basis
// element U^{A(x)} x (or V^{-A(x)} x) per generator, with U acting as UV and
// homological grading gr_w of the representing monomial.
inline IotaComplex a0_subcomplex(const IotaKComplex& k) {
    const int n = static_cast<int>(k.cx.rank());
    std::vector<int> pu(n), qv(n);
    std::vector<UGenerator> gens(n);
    for (int i = 0; i < n; ++i) {
        int a = k.cx.gens[i].alexander();
        pu[i] = a >= 0 ? a : 0;
        qv[i] = a >= 0 ? 0 : -a;
        gens[i] = UGenerator{k.cx.gens[i].name, k.cx.gens[i].gr_w - 2 * pu[i]};
    }
    auto restrict_entry = [&](int x, int y, UVTerm t, bool skew) {
        int uu = (skew ? qv[x] : pu[x]) + t.u;
        int vv = (skew ? pu[x] : qv[x]) + t.v;
        int kexp = uu - pu[y];
        if (kexp != vv - qv[y] || kexp < 0)
            throw std::logic_error("A0 restriction produced an invalid U-power");
        return kexp;
    };
    UMat diff(n), iota(n);
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : k.cx.diff[x])
            for (auto& t : p.terms()) {
                UPoly& e = diff[x][y];
                e.toggle(restrict_entry(x, y, t, false));
                if (e.is_zero()) diff[x].erase(y);
            }
    for (int x = 0; x < n; ++x)
        for (auto& [y, p] : k.iota[x])
            for (auto& t : p.terms()) {
                UPoly& e = iota[x][y];
                e.toggle(restrict_entry(x, y, t, true));
                if (e.is_zero()) iota[x].erase(y);
            }
    IotaComplex out{FreeUComplex(std::move(gens), std::move(diff)), std::move(iota)};
    out.validate();
    return out;
}

inline IotaKComplex trivial_iota_k(const std::string& name = "1") {
    IotaKComplex out{FreeUVComplex({UVGenerator{name, 0, 0}}, UVMat(1)), identity_uv(1), {}};
    return out;
}

inline IotaComplex trivial_iota(const std::string& name = "1") {
    return IotaComplex{FreeUComplex({UGenerator{name, 0}}, UMat(1)), identity_u(1)};
}

inline IotaComplex direct_sum(const IotaComplex& a, const IotaComplex& b) {
    std::vector<UGenerator> gens = a.cx.gens;
    for (auto& g : b.cx.gens) gens.push_back(g);
    const int na = static_cast<int>(a.cx.rank());
    UMat diff(gens.size()), iota(gens.size());
    for (int x = 0; x < na; ++x) {
        diff[x] = a.cx.diff[x];
        iota[x] = a.iota[x];
    }
    for (size_t x = 0; x < b.cx.rank(); ++x) {
        for (auto& [y, p] : b.cx.diff[x]) diff[na + x][na + y] = p;
        for (auto& [y, p] : b.iota[x]) iota[na + x][na + y] = p;
    }
    IotaComplex out{FreeUComplex(std::move(gens), std::move(diff)), std::move(iota)};
    out.validate();
    return out;
}

inline UMat omega_endomorphism(const IotaComplex& c) {
    return mat_add(c.iota, identity_u(c.cx.rank()));
}

}  // namespace iotacalc
