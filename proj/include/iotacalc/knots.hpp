#pragma once

// Torus-knot Alexander polynomials, staircase complexes of L-space-knot form,
// the five-generator box complex, and the specific complexes the computations
// are run on.

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "involutive.hpp"
#include "laurent.hpp"

namespace iotacalc {

// (1, 2n-1, 2, 2n-2, ..., 2n-1, 1): step sequence whose alternating
// polynomial is the Alexander polynomial of the (2n, 2n+1) torus knot.
inline std::vector<int> torus_2n_2np1_steps(int n) {
    std::vector<int> c;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        c.push_back(i);
        c.push_back(2 * n - i);
    }
    return c;
}

// (1, 2n-1, 1, 2n-1, 2, 2n-2, 2, 2n-2, ...): likewise for (2n, 4n+1).
inline std::vector<int> torus_2n_4np1_steps(int n) {
    std::vector<int> c;
    for (int i = 1; i <= 2 * n - 1; ++i) {
        c.push_back(i);
        c.push_back(2 * n - i);
        c.push_back(i);
        c.push_back(2 * n - i);
    }
    return c;
}

// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), constant term 1.
inline LaurentPolynomial torus_alexander(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus knot parameters must be >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
    auto cyc = [](int k) {
        return LaurentPolynomial::monomial(k, 1) + LaurentPolynomial::monomial(0, -1);
    };
    return laurent_div_exact(cyc(p * q) * cyc(1), cyc(p) * cyc(q));
}

// Staircase positions run from -K to K for a step sequence of length 2K.
// Positions of the same parity as K carry the cycles y_j, the others the
// sources x_j with  d(x_j) = V^{c_{K+j}} y_{j-1} + U^{c_{K+j+1}} y_{j+1}.
// Bigradings: the rightmost generator has gr_w = 0 and gr_z mirrors gr_w.
inline IotaKComplex staircase(const std::vector<int>& steps) {
    if (steps.empty() || steps.size() % 2 != 0)
        throw std::invalid_argument("staircase needs a nonempty even-length step sequence");
    const int K = static_cast<int>(steps.size()) / 2;
    for (int i = 0; i < 2 * K; ++i) {
        if (steps[i] < 1) throw std::invalid_argument("staircase steps must be positive");
        if (steps[i] != steps[2 * K - 1 - i])
            throw std::invalid_argument("staircase step sequence must be symmetric");
    }
    auto c = [&](int i) { return steps[i - 1]; };  // 1-based
    auto is_cycle = [&](int j) { return ((j - K) % 2 + 2) % 2 == 0; };
    auto pos = [&](int j) { return j + K; };

    std::vector<int> gr_w(2 * K + 1);
    gr_w[pos(K)] = 0;
    for (int j = K - 1; j >= -K; --j) {
        if (is_cycle(j))
            gr_w[pos(j)] = gr_w[pos(j + 1)] - 1;  // left neighbor of a source
        else
            gr_w[pos(j)] = gr_w[pos(j + 1)] + 1 - 2 * c(K + j + 1);
    }
    std::vector<UVGenerator> gens(2 * K + 1);
    for (int j = -K; j <= K; ++j) {
        std::string name = (is_cycle(j) ? "y" : "x") + std::to_string(j);
        gens[pos(j)] = UVGenerator{name, gr_w[pos(j)], gr_w[pos(-j)]};
    }
    UVMat diff(gens.size());
    for (int j = -K; j <= K; ++j)
        if (!is_cycle(j)) {
            diff[pos(j)][pos(j - 1)] = UVPoly(UVTerm{0, c(K + j)});
            diff[pos(j)][pos(j + 1)] = UVPoly(UVTerm{c(K + j + 1), 0});
        }
    UVMat iota(gens.size());
    for (int j = -K; j <= K; ++j) iota[pos(j)][pos(-j)] = UVPoly::one();

    IotaKComplex out{FreeUVComplex(std::move(gens), std::move(diff)), std::move(iota), {}};
    out.validate();
    return out;
}

// Step sequence of an alternating +1/-1 polynomial with constant term 1.
inline std::vector<int> staircase_steps_from_poly(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("not an L-space knot polynomial: zero");
    std::vector<int> steps;
    long long expected = 1;
    std::optional<int> prev;
    for (auto& [e, coeff] : p.terms()) {
        if (coeff != expected)
            throw std::domain_error("not an L-space knot polynomial: coefficients of " +
                                    p.to_string() + " do not alternate from +1");
        if (prev)
            steps.push_back(e - *prev);
        else if (e != 0)
            throw std::domain_error("not an L-space knot polynomial: constant term missing");
        prev = e;
        expected = -expected;
    }
    if (expected != -1)  // last sign must have been +1
        throw std::domain_error("not an L-space knot polynomial: top coefficient is not +1");
    return steps;
}

inline IotaKComplex staircase(const LaurentPolynomial& alexander) {
    return staircase(staircase_steps_from_poly(alexander));
}

inline IotaKComplex trefoil_complex() { return staircase(std::vector<int>{1, 1}); }

// The staircase of the (2n, 2n+1) torus knot, n odd in the applications.
inline IotaKComplex cn_complex(int n) { return staircase(torus_2n_2np1_steps(n)); }

// The staircase of the (2n, 4n+1) torus knot.
inline IotaKComplex dn_complex(int n) { return staircase(torus_2n_4np1_steps(n)); }

// Five-generator box complex.  The squared-involution relation only closes
// for odd n; even n is constructible but flagged.
inline IotaKComplex box_complex(int n) {
    if (n < 1) throw std::invalid_argument("box complex needs n >= 1");
    std::vector<UVGenerator> gens = {
        UVGenerator{"v", 0, 0},
        UVGenerator{"w", 2 * n - 2, 2 * n - 2},
        UVGenerator{"z0", 0, 0},
        UVGenerator{"z-1", -1, 2 * n - 1},
        UVGenerator{"z1", 2 * n - 1, -1},
    };
    FreeUVComplex cx(std::move(gens), UVMat(5));
    UVMat diff(5);
    int v = cx.index_of("v"), w = cx.index_of("w"), z0 = cx.index_of("z0"),
        zm = cx.index_of("z-1"), zp = cx.index_of("z1");
    diff[z0][zm] = UVPoly(UVTerm{0, n});
    diff[z0][zp] = UVPoly(UVTerm{n, 0});
    diff[zm][w] = UVPoly(UVTerm{n, 0});
    diff[zp][w] = UVPoly(UVTerm{0, n});
    UVMat iota(5);
    iota[v][v] = UVPoly::one();
    iota[v][w] = UVPoly(UVTerm{n - 1, n - 1});
    iota[z0][z0] = UVPoly::one();
    iota[z0][v] = UVPoly::one();
    iota[zm][zp] = UVPoly::one();
    iota[zp][zm] = UVPoly::one();
    iota[w][w] = UVPoly::one();
    IotaKComplex out{FreeUVComplex(cx.gens, std::move(diff)), std::move(iota), {}};
    if (n % 2 == 0)
        out.notes.push_back("box complex with even n: iota_K^2 = id + PhiPsi is not guaranteed");
    out.validate();
    return out;
}

// A0 of (box complex) x (trefoil): fifteen F[U]-generators.
inline IotaComplex en_complex(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("en_complex needs odd n >= 3");
    IotaComplex e = a0_subcomplex(tensor_iota_k(box_complex(n), trefoil_complex()));
    if (e.cx.rank() != 15) throw std::logic_error("en_complex must have fifteen generators");
    return e;
}

namespace detail {

// Express a homogeneous vector of X over a list of homogeneous basis vectors
// with monomial coefficients determined by the bigradings.  Coefficients of
// the plain-sum basis elements are 0/1 per element, so this is an F2 solve
// keyed by (generator, monomial) coordinates.
struct SubBasis {
    const FreeUVComplex* x;
    std::vector<UVChain> elements;
    std::vector<std::pair<int, int>> bidegree;  // (gr_w, gr_z) per element

    static std::pair<int, int> chain_bidegree(const FreeUVComplex& x, const UVChain& v) {
        std::optional<std::pair<int, int>> bd;
        for (auto& [g, t] : v) {
            std::pair<int, int> d{x.gens[g].gr_w - 2 * t.u, x.gens[g].gr_z - 2 * t.v};
            if (bd && *bd != d) throw std::invalid_argument("inhomogeneous sub-basis vector");
            bd = d;
        }
        if (!bd) throw std::invalid_argument("empty sub-basis vector");
        return *bd;
    }

    // Coefficients (element index, monomial) with sum equal to v; nullopt when
    // v is outside the span.
    std::optional<std::vector<std::pair<int, UVTerm>>> express(const UVChain& v) const {
        if (v.empty()) return std::vector<std::pair<int, UVTerm>>{};
        auto [tw, tz] = chain_bidegree(*x, v);
        std::vector<int> usable;
        std::vector<UVTerm> mono;
        for (size_t i = 0; i < elements.size(); ++i) {
            int du = bidegree[i].first - tw, dv = bidegree[i].second - tz;
            if (du < 0 || dv < 0 || du % 2 || dv % 2) continue;
            usable.push_back(static_cast<int>(i));
            mono.push_back(UVTerm{du / 2, dv / 2});
        }
        std::map<std::pair<int, UVTerm>, int> coordid;
        auto coord = [&](int g, UVTerm t) {
            auto [it, fresh] = coordid.emplace(std::make_pair(g, t), coordid.size());
            (void)fresh;
            return it->second;
        };
        std::vector<std::vector<int>> cols(usable.size());
        for (size_t c = 0; c < usable.size(); ++c)
            for (auto& [g, t] : elements[usable[c]])
                cols[c].push_back(coord(g, mul(t, mono[c])));
        std::vector<int> rhs;
        for (auto& [g, t] : v) rhs.push_back(coord(g, t));
        const int neq = static_cast<int>(coordid.size());
        // Transposed assembly: one equation per coordinate.
        std::vector<std::vector<int>> eqvars(neq);
        for (size_t c = 0; c < cols.size(); ++c)
            for (int e : cols[c]) eqvars[e].push_back(static_cast<int>(c));
        std::vector<uint8_t> eqrhs(neq, 0);
        for (int e : rhs) eqrhs[e] ^= 1;
        LinearSystemF2 sys(static_cast<int>(usable.size()));
        for (int e = 0; e < neq; ++e)
            if (!sys.add_equation(eqvars[e], eqrhs[e])) return std::nullopt;
        auto sol = sys.solve();
        if (!sol) return std::nullopt;
        std::vector<std::pair<int, UVTerm>> out;
        for (size_t c = 0; c < usable.size(); ++c)
            if ((*sol)[c]) out.emplace_back(usable[c], mono[c]);
        return out;
    }
};

}  // namespace detail

namespace detail {

// Induced iota_K-complex on a list of spanning vectors of an ambient complex.
// Fails loudly if the vectors are dependent or the span is not closed under
// the differential and the involution.
inline IotaKComplex induced_summand(const IotaKComplex& x, const std::vector<UVChain>& elts,
                                    const std::vector<std::string>& names, const char* what) {
    RowSpaceF2 span(static_cast<int>(x.cx.rank()));
    for (auto& v : elts) {
        // Plain 0/1 sums: independence over the ring reduces to F2 (rank over
        // an extension field of the entries' field does not change).
        BitVec b(static_cast<int>(x.cx.rank()));
        for (auto& [g, t] : v) {
            if (!(t == UVTerm{0, 0})) throw std::logic_error(std::string(what) + ": basis vectors must be monomial-free here");
            b.flip(g);
        }
        if (!span.insert(b)) throw std::logic_error(std::string(what) + ": vectors are dependent");
    }
    detail::SubBasis basis{&x.cx, elts, {}};
    basis.bidegree.reserve(elts.size());
    std::vector<UVGenerator> gens;
    for (size_t i = 0; i < elts.size(); ++i) {
        auto bd = SubBasis::chain_bidegree(x.cx, elts[i]);
        basis.bidegree.push_back(bd);
        gens.push_back(UVGenerator{names[i], bd.first, bd.second});
    }
    UVMat diff(elts.size()), iota(elts.size());
    for (size_t i = 0; i < elts.size(); ++i) {
        auto dimg = basis.express(apply_map(x.cx.diff, false, elts[i]));
        if (!dimg) throw std::logic_error(std::string(what) + ": differential leaves the span");
        for (auto& [j, t] : *dimg) add_to(diff, static_cast<int>(i), j, UVPoly(t));
        auto iimg = basis.express(apply_map(x.iota, true, elts[i]));
        if (!iimg) throw std::logic_error(std::string(what) + ": involution leaves the span");
        for (auto& [j, t] : *iimg) add_to(iota, static_cast<int>(i), j, UVPoly(t));
    }
    IotaKComplex out{FreeUVComplex(std::move(gens), std::move(diff)), std::move(iota), {}};
    out.validate();
    return out;
}

}  // namespace detail

// The (8n+1)-generator summand of C_n (x) C_n: a staircase with the steps of
// the (2n,4n+1) torus knot plus a box-shaped square, presented on explicit
// tensor-product vectors.  Differential and involution are induced from the
// ambient tensor complex.  Note that the square here is coupled to the
// staircase through (UV)^{n-1} by the induced involution; compare
// staircase_box_summand below, whose square couples with exponent zero.  The
// two presentations are NOT locally equivalent for n > 1.
inline IotaKComplex yn_complex(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("yn_complex needs odd n >= 1");
    IotaKComplex cn = cn_complex(n);
    IotaKComplex x = tensor_iota_k(cn, cn);

    auto y = [](int j) { return "y" + std::to_string(j); };
    auto xx = [](int j) { return "x" + std::to_string(j); };

    std::vector<UVChain> elts;
    std::vector<std::string> names;
    auto single = [&](const std::string& a, const std::string& b) {
        elts.push_back(UVChain{{x.cx.index_of(tensor_name(a, b)), UVTerm{0, 0}}});
        names.push_back(tensor_name(a, b));
    };
    auto pair_sum = [&](const std::string& a1, const std::string& b1, const std::string& a2,
                        const std::string& b2) {
        UVChain v;
        chain_toggle(v, std::make_pair(x.cx.index_of(tensor_name(a1, b1)), UVTerm{0, 0}));
        chain_toggle(v, std::make_pair(x.cx.index_of(tensor_name(a2, b2)), UVTerm{0, 0}));
        elts.push_back(v);
        names.push_back(tensor_name(a1, b1) + "+" + tensor_name(a2, b2));
    };

    // Staircase row: (y_i y_i), (y_i x_{i+1}), (y_i y_{i+2}), (x_{i+1} y_{i+2})
    // ascending to the middle, then the mirrored pattern with factors swapped.
    for (int i = 1 - 2 * n; i <= -3; i += 2) {
        single(y(i), y(i));
        single(y(i), xx(i + 1));
        single(y(i), y(i + 2));
        single(xx(i + 1), y(i + 2));
    }
    single(y(-1), y(-1));
    single(xx(0), y(-1));
    single(y(1), y(-1));
    single(y(1), xx(0));
    for (int i = 1; i <= 2 * n - 3; i += 2) {
        single(y(i), y(i));
        single(xx(i + 1), y(i));
        single(y(i + 2), y(i));
        single(y(i + 2), xx(i + 1));
    }
    single(y(2 * n - 1), y(2 * n - 1));
    // Box-shaped square on symmetrized vectors.
    pair_sum(y(1), y(-1), y(-1), y(1));
    pair_sum(y(-1), xx(0), xx(0), y(-1));
    pair_sum(y(1), xx(0), xx(0), y(1));
    single(xx(0), xx(0));

    if (elts.size() != static_cast<size_t>(8 * n + 1))
        throw std::logic_error("yn_complex generator count must be 8n+1");
    return detail::induced_summand(x, elts, names, "yn_complex");
}

// The (8n+1)-generator summand of D_n (x) B_n: the same staircase, with the
// box square attached at the central cycle.  "v+w" combinations carry the
// grading-forced monomial (UV)^{n-1} on the w term.
inline IotaKComplex staircase_box_summand(int n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("staircase_box_summand needs odd n >= 1");
    const int K = 4 * n - 2;
    IotaKComplex x = tensor_iota_k(dn_complex(n), box_complex(n));

    auto y = [](int j) { return "y" + std::to_string(j); };
    auto xx = [](int j) { return "x" + std::to_string(j); };
    const UVTerm uv{n - 1, n - 1};

    std::vector<UVChain> elts;
    std::vector<std::string> names;
    auto put_elt = [&](UVChain v, std::string name) {
        std::sort(v.begin(), v.end());
        elts.push_back(std::move(v));
        names.push_back(std::move(name));
    };
    auto single = [&](const std::string& a, const std::string& b) {
        put_elt({{x.cx.index_of(tensor_name(a, b)), UVTerm{0, 0}}}, tensor_name(a, b));
    };
    auto with_vw = [&](const std::string& a, bool add_center) {
        UVChain v = {{x.cx.index_of(tensor_name(a, "v")), UVTerm{0, 0}},
                     {x.cx.index_of(tensor_name(a, "w")), uv}};
        std::string name = tensor_name(a, "v+w");
        if (add_center) {
            v.push_back({x.cx.index_of(tensor_name("y0", "z1")), uv});
            name += "+" + tensor_name("y0", "z1");
        }
        put_elt(std::move(v), std::move(name));
    };

    for (int j = -K; j <= 0; j += 2) single(y(j), "v");
    for (int j = 2; j <= K; j += 2) with_vw(y(j), false);
    for (int j = -K + 1; j < 0; j += 2) single(xx(j), "v");
    with_vw(xx(1), true);
    for (int j = 3; j <= K - 1; j += 2) with_vw(xx(j), false);
    single(y(0), "z-1");
    single(y(0), "w");
    single(y(0), "z0");
    single(y(0), "z1");

    if (elts.size() != static_cast<size_t>(8 * n + 1))
        throw std::logic_error("staircase_box_summand generator count must be 8n+1");

    // Vectors here carry monomials, so check independence on the leading
    // monomial-free parts (each element has a distinct plain term).
    detail::SubBasis basis{&x.cx, elts, {}};
    basis.bidegree.reserve(elts.size());
    std::vector<UVGenerator> gens;
    for (size_t i = 0; i < elts.size(); ++i) {
        auto bd = detail::SubBasis::chain_bidegree(x.cx, elts[i]);
        basis.bidegree.push_back(bd);
        gens.push_back(UVGenerator{names[i], bd.first, bd.second});
    }
    UVMat diff(elts.size()), iota(elts.size());
    for (size_t i = 0; i < elts.size(); ++i) {
        auto dimg = basis.express(apply_map(x.cx.diff, false, elts[i]));
        if (!dimg) throw std::logic_error("staircase_box_summand: differential leaves the span");
        for (auto& [j, t] : *dimg) add_to(diff, static_cast<int>(i), j, UVPoly(t));
        auto iimg = basis.express(apply_map(x.iota, true, elts[i]));
        if (!iimg) throw std::logic_error("staircase_box_summand: involution leaves the span");
        for (auto& [j, t] : *iimg) add_to(iota, static_cast<int>(i), j, UVPoly(t));
    }
    IotaKComplex out{FreeUVComplex(std::move(gens), std::move(diff)), std::move(iota), {}};
    out.validate();
    return out;
}

}  // namespace iotacalc
