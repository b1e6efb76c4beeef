#pragma once

// End-to-end computation for the surgered manifolds: build the fifteen
// generator complex, find its standard representative, test SF membership.
// The full check additionally certifies the box-complex reduction at the
// UV level by a two-sided local-map search against the explicit summand.

#include <optional>

#include "group.hpp"
#include "knots.hpp"
#include "local_maps.hpp"

namespace iotacalc {

struct YnFullCheck {
    bool forward = false;   // D_n (x) B_n  ->  Y_n summand
    bool backward = false;
    bool certificates_ok = false;
};

struct YnResult {
    int n = 0;
    bool found = false;
    StandardParams params;
    bool sf = false;
    std::optional<YnFullCheck> full_check;
};

inline YnResult run_yn_pipeline(int n, SearchBounds bounds, bool full_check = false,
                                const SearchOptions& opts = {}) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("the pipeline is defined for odd n >= 3 (+1-surgery only)");
    bounds.validate();
    YnResult out;
    out.n = n;
    IotaComplex en = en_complex(n);
    auto rep = standard_rep_search(en, bounds, opts);
    if (!rep) return out;
    out.found = true;
    out.params = *rep;
    out.sf = sf_member(out.params);
    if (full_check) {
        YnFullCheck fc;
        IotaKComplex prod = tensor_iota_k(dn_complex(n), box_complex(n));
        IotaKComplex yn = yn_complex(n);
        auto fwd = iota_k_local_map_search(prod, yn);
        auto bwd = iota_k_local_map_search(yn, prod);
        fc.forward = fwd.has_value();
        fc.backward = bwd.has_value();
        fc.certificates_ok = fwd && bwd && verify_iota_k_certificate(prod, yn, *fwd) &&
                             verify_iota_k_certificate(yn, prod, *bwd);
        out.full_check = fc;
    }
    return out;
}

}  // namespace iotacalc
