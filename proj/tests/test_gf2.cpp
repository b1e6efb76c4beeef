#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "iotacalc/gf2.hpp"

using namespace iotacalc;

namespace {

// Brute-force satisfiability oracle for small systems.
bool brute_feasible(const std::vector<std::vector<int>>& eqs, const std::vector<int>& rhs,
                    int nvars) {
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        bool ok = true;
        for (size_t e = 0; e < eqs.size() && ok; ++e) {
            int acc = 0;
            for (int v : eqs[e]) acc ^= (mask >> v) & 1;
            ok = acc == rhs[e];
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("linear solver agrees with exhaustive search") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> nv(1, 10), ne(0, 14), coin(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        int nvars = nv(rng);
        int neqs = ne(rng);
        std::vector<std::vector<int>> eqs(neqs);
        std::vector<int> rhs(neqs);
        LinearSystemF2 sys(nvars);
        for (int e = 0; e < neqs; ++e) {
            for (int v = 0; v < nvars; ++v)
                if (coin(rng)) eqs[e].push_back(v);
            rhs[e] = coin(rng);
            sys.add_equation(eqs[e], rhs[e]);
        }
        auto sol = sys.solve();
        bool expected = brute_feasible(eqs, rhs, nvars);
        REQUIRE(sol.has_value() == expected);
        if (sol) {
            for (int e = 0; e < neqs; ++e) {
                int acc = 0;
                for (int v : eqs[e]) acc ^= (*sol)[v];
                CHECK(acc == rhs[e]);
            }
        }
    }
}

TEST_CASE("kernel basis spans exactly the kernel") {
    std::mt19937 rng(515151);
    std::uniform_int_distribution<int> nr(1, 9), nc(1, 9), coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = nr(rng), cols = nc(rng);
        std::vector<BitVec> m;
        for (int r = 0; r < rows; ++r) {
            BitVec v(cols);
            for (int c = 0; c < cols; ++c)
                if (coin(rng)) v.set(c, true);
            m.push_back(v);
        }
        auto kernel = kernel_basis(m, cols);
        RowSpaceF2 rank_of_m(cols);
        int rank = 0;
        for (auto& r : m)
            if (rank_of_m.insert(r)) ++rank;
        CHECK(static_cast<int>(kernel.size()) == rows - rank);
        RowSpaceF2 indep(rows);
        for (auto& k : kernel) {
            // combination maps to zero
            BitVec img(cols);
            for (int r = 0; r < rows; ++r)
                if (k.get(r)) img.xor_with(m[r]);
            CHECK_FALSE(img.any());
            CHECK(indep.insert(k));  // and the kernel vectors are independent
        }
    }
}

TEST_CASE("row space expression reproduces members") {
    std::mt19937 rng(616161);
    std::uniform_int_distribution<int> nc(2, 12), nv(1, 10), coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        int cols = nc(rng), n = nv(rng);
        RowSpaceF2 space(cols, true);
        std::vector<BitVec> inserted;
        for (int i = 0; i < n; ++i) {
            BitVec v(cols);
            for (int c = 0; c < cols; ++c)
                if (coin(rng)) v.set(c, true);
            space.insert(v);
            inserted.push_back(v);
        }
        // random combination of inserted vectors is expressible
        BitVec combo(cols);
        std::vector<int> picked;
        for (int i = 0; i < n; ++i)
            if (coin(rng)) {
                combo.xor_with(inserted[i]);
                picked.push_back(i);
            }
        auto expr = space.express(combo);
        REQUIRE(expr.has_value());
        BitVec rebuilt(cols);
        for (int i : *expr) rebuilt.xor_with(inserted[i]);
        CHECK(rebuilt == combo);
    }
}
