#include <catch2/catch_amalgamated.hpp>

#include "iotacalc/knots.hpp"
#include "iotacalc/local_maps.hpp"
#include "iotacalc/tower.hpp"

using namespace iotacalc;

TEST_CASE("verify staircase involutions exactly") {
    auto trefoil = trefoil_complex();
    auto r = verify_involution(trefoil);
    REQUIRE(r.passed);
    CHECK(is_zero(r.homotopy));  // iota^2 = id and PhiPsi = 0 on the nose

    for (int n : {1, 3, 5}) {
        auto rb = verify_involution(box_complex(n));
        REQUIRE(rb.passed);
        CHECK(is_zero(rb.homotopy));
    }
}

TEST_CASE("verify rejects a broken box involution") {
    auto box = box_complex(3);
    box.iota[box.cx.index_of("v")].erase(box.cx.index_of("w"));
    auto r = verify_involution(box);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(is_zero(r.residual));
}

TEST_CASE("the box involution needs odd n") {
    auto box = box_complex(2);
    REQUIRE(box.notes.size() == 1);
    CHECK_FALSE(verify_involution(box).passed);
    CHECK(box_complex(3).notes.empty());
}

TEST_CASE("tensor of iota_K complexes") {
    auto c3 = cn_complex(3);
    auto x = tensor_iota_k(c3, c3);
    CHECK(x.cx.rank() == 121);  // 16 n^2 - 8 n + 1 at n = 3
    CHECK(d_squared_is_zero(x.cx));
    CHECK(verify_involution(x).passed);

    auto trefoil = trefoil_complex();
    auto tt = tensor_iota_k(trefoil, trefoil);
    CHECK(verify_involution(tt).passed);

    auto unit = tensor_iota_k(trefoil, trivial_iota_k());
    REQUIRE(unit.cx.rank() == trefoil.cx.rank());
    for (size_t i = 0; i < unit.cx.rank(); ++i) {
        CHECK(unit.cx.gens[i].gr_w == trefoil.cx.gens[i].gr_w);
        CHECK(unit.cx.gens[i].gr_z == trefoil.cx.gens[i].gr_z);
        CHECK(unit.cx.diff[i] == trefoil.cx.diff[i]);
        CHECK(unit.iota[i] == trefoil.iota[i]);
    }
}

TEST_CASE("every tensor pair from the basic stock verifies") {
    std::vector<IotaKComplex> stock;
    stock.push_back(trefoil_complex());
    stock.push_back(cn_complex(3));
    stock.push_back(box_complex(3));
    stock.push_back(dual(trefoil_complex()));
    stock.push_back(dual(cn_complex(3)));
    stock.push_back(dual(box_complex(3)));
    for (auto& a : stock)
        for (auto& b : stock) CHECK(verify_involution(tensor_iota_k(a, b)).passed);
}

TEST_CASE("tensor of iota complexes") {
    auto a = standard_complex(parse_params("+,-1,+,-3"));
    auto b = standard_complex(parse_params("-,1,-,2"));
    auto t = tensor_iota(a, b);
    CHECK(t.cx.rank() == 25);
    CHECK(d_squared_is_zero(t.cx));
    CHECK(verify_involution(t, Mode::almost).passed);
    CHECK(tensor_iota(a, trivial_iota()).cx.rank() == a.cx.rank());
}

TEST_CASE("duals") {
    auto trefoil = trefoil_complex();
    auto dt = dual(trefoil);
    CHECK(verify_involution(dt).passed);
    int s1 = dt.cx.index_of("y1^"), sm1 = dt.cx.index_of("y-1^"), r0 = dt.cx.index_of("x0^");
    CHECK(entry(dt.cx.diff, s1, r0) == UVPoly(UVTerm{1, 0}));
    CHECK(entry(dt.cx.diff, sm1, r0) == UVPoly(UVTerm{0, 1}));

    auto ddt = dual(dt);
    REQUIRE(ddt.cx.rank() == trefoil.cx.rank());
    for (size_t i = 0; i < ddt.cx.rank(); ++i) {
        CHECK(ddt.cx.gens[i].gr_w == trefoil.cx.gens[i].gr_w);
        CHECK(ddt.cx.gens[i].gr_z == trefoil.cx.gens[i].gr_z);
        CHECK(ddt.cx.diff[i] == trefoil.cx.diff[i]);
        CHECK(ddt.iota[i] == trefoil.iota[i]);
    }

    auto e3 = en_complex(3);
    CHECK(verify_involution(dual(e3), Mode::strict).passed);
}

TEST_CASE("a0 subcomplex of the trefoil") {
    auto a0 = a0_subcomplex(trefoil_complex());
    REQUIRE(a0.cx.rank() == 3);
    int r0 = a0.cx.index_of("x0");
    int s1 = a0.cx.index_of("y1");
    int sm1 = a0.cx.index_of("y-1");
    CHECK(entry(a0.cx.diff, r0, s1) == UPoly(0));
    CHECK(entry(a0.cx.diff, r0, sm1) == UPoly(0));
    CHECK(a0.cx.diff[s1].empty());
    CHECK(verify_involution(a0, Mode::strict).passed);
    CHECK(localized_tower(a0.cx).cls.rank == 1);
}

TEST_CASE("a0 keeps one generator per UV generator and a rank-one tower") {
    for (auto k : {cn_complex(3), dn_complex(3), box_complex(3)}) {
        auto a0 = a0_subcomplex(k);
        CHECK(a0.cx.rank() == k.cx.rank());
        CHECK(verify_involution(a0, Mode::strict).passed);
        CHECK(localized_tower(a0.cx).cls.rank == 1);
    }
    auto prod = tensor_iota_k(box_complex(3), trefoil_complex());
    auto a0 = a0_subcomplex(prod);
    CHECK(a0.cx.rank() == prod.cx.rank());
    CHECK(localized_tower(a0.cx).cls.rank == 1);

    auto single = a0_subcomplex(trivial_iota_k());
    CHECK(single.cx.rank() == 1);
    CHECK(verify_involution(single, Mode::strict).passed);
}

TEST_CASE("omega squares to iota^2 + id") {
    SearchBounds bounds{2, 2};
    enumerate_params(bounds, [&](const StandardParams& p) {
        auto c = standard_complex(p);
        auto om = omega_endomorphism(c);
        UMat lhs = compose(om, om);
        UMat rhs = mat_add(compose(c.iota, c.iota), identity_u(c.cx.rank()));
        CHECK(lhs == rhs);
        CHECK(verify_involution(c, Mode::almost).passed);
        return false;
    });
}
