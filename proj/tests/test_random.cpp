#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "iotacalc/local_maps.hpp"
#include "iotacalc/reduce.hpp"
#include "iotacalc/tower.hpp"

using namespace iotacalc;

namespace {

// Random grading-preserving change of basis over F2, applied as d -> P d P^-1
// (rows are sources).  Built from transvections e_i += e_j between
// same-grading generators, so P is its own inverse factor by factor.
struct Transvection {
    int i, j;
};

std::vector<Transvection> random_transvections(const FreeUComplex& cx, std::mt19937& rng,
                                               int count) {
    std::vector<Transvection> candidates;
    for (size_t i = 0; i < cx.rank(); ++i)
        for (size_t j = 0; j < cx.rank(); ++j)
            if (i != j && cx.gens[i].gr == cx.gens[j].gr)
                candidates.push_back({static_cast<int>(i), static_cast<int>(j)});
    std::vector<Transvection> ops;
    if (candidates.empty()) return ops;
    std::uniform_int_distribution<size_t> pick(0, candidates.size() - 1);
    for (int k = 0; k < count; ++k) ops.push_back(candidates[pick(rng)]);
    return ops;
}

UMat apply_left(const UMat& m, const std::vector<Transvection>& ops) {
    UMat r = m;  // row op: row_i += row_j
    for (auto& op : ops) {
        URow add = r[op.j];
        for (auto& [to, p] : add) add_to(r, op.i, to, p);
    }
    return r;
}

UMat apply_right(const UMat& m, const std::vector<Transvection>& ops) {
    UMat r = m;  // column op (inverse side): col_j += col_i
    for (auto& op : ops) {
        for (size_t x = 0; x < r.size(); ++x) {
            UPoly ci = entry(r, static_cast<int>(x), op.i);
            if (!ci.is_zero()) add_to(r, static_cast<int>(x), op.j, ci);
        }
    }
    return r;
}

IotaComplex change_basis(const IotaComplex& c, const std::vector<Transvection>& ops) {
    // Conjugation by P = T_k ... T_1 over F2: row ops in list order build P on
    // the left, and since each transvection is its own inverse, column ops in
    // the same list order build P^-1 on the right.
    UMat d = apply_right(apply_left(c.cx.diff, ops), ops);
    UMat io = apply_right(apply_left(c.iota, ops), ops);
    IotaComplex out{FreeUComplex(c.cx.gens, std::move(d)), std::move(io)};
    out.validate();
    return out;
}

IotaComplex acyclic_pair(const std::string& tag, int gr, int uexp) {
    UMat d(2);
    d[0][1] = UPoly(uexp);
    return IotaComplex{
        FreeUComplex({{tag + "a", gr}, {tag + "b", gr - 1 + 2 * uexp}}, std::move(d)),
        identity_u(2)};
}

}  // namespace

TEST_CASE("disguised standard complexes are recognized") {
    std::mt19937 rng(909090);
    std::uniform_int_distribution<int> grd(-2, 2), expd(1, 2);
    int checked = 0;
    enumerate_params(SearchBounds{2, 2}, [&](const StandardParams& p) {
        auto c = standard_complex(p);
        auto padded = direct_sum(direct_sum(c, acyclic_pair("p", 2 * grd(rng), expd(rng))),
                                 acyclic_pair("q", 2 * grd(rng) + 1, expd(rng)));
        auto disguised = change_basis(padded, random_transvections(padded.cx, rng, 12));
        REQUIRE(d_squared_is_zero(disguised.cx));
        CHECK(verify_involution(disguised, Mode::almost).passed);
        CHECK(localized_tower(disguised.cx).cls.rank == 1);

        auto red = cancel_reduce(disguised.cx, {disguised.iota});
        IotaComplex reduced{red.cx, red.carried[0]};
        CHECK(localized_tower(reduced.cx).cls.rank == 1);

        auto rep = standard_rep_search(disguised, SearchBounds{2, 2});
        REQUIRE(rep);
        CHECK(*rep == p);
        ++checked;
        return checked >= 12;  // a dozen random disguises is plenty per run
    });
}

TEST_CASE("tensors of random standard complexes stay almost complexes") {
    std::mt19937 rng(171717);
    std::uniform_int_distribution<int> opt(0, step_option_count(2) - 1);
    for (int trial = 0; trial < 10; ++trial) {
        StandardParams a, b;
        a.steps = {step_option(2, opt(rng))};
        b.steps = {step_option(2, opt(rng)), step_option(2, opt(rng))};
        auto t = tensor_iota(standard_complex(a), standard_complex(b));
        CHECK(d_squared_is_zero(t.cx));
        CHECK(verify_involution(t, Mode::almost).passed);
        CHECK(localized_tower(t.cx).cls.rank == 1);
    }
}
