#pragma once

// Standard complexes C(a1, b2, ..., a_{2m-1}, b_{2m}): the canonical zig-zags
// of omega-arrows and U-power differentials that classify almost-iota
// complexes up to almost local equivalence.

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "involutive.hpp"

namespace iotacalc {

struct StandardStep {
    int sign = +1;  // a_i, +1 or -1
    int b = 0;      // b_i, nonzero
    auto operator<=>(const StandardStep&) const = default;
};

struct StandardParams {
    std::vector<StandardStep> steps;

    int m() const { return static_cast<int>(steps.size()); }
    bool operator==(const StandardParams&) const = default;

    void validate() const {
        for (auto& s : steps) {
            if (s.sign != 1 && s.sign != -1)
                throw std::invalid_argument("standard parameter signs must be + or -");
            if (s.b == 0) throw std::invalid_argument("standard parameter weights must be nonzero");
        }
    }
};

// Comma-separated tokens: "+,-1,+,-2".  Empty string (or "()") is the
// identity class.
inline StandardParams parse_params(const std::string& text) {
    StandardParams p;
    if (text.empty() || text == "()") return p;
    std::vector<std::string> tok;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            tok.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch)))
            cur.push_back(ch);
    }
    tok.push_back(cur);
    if (tok.size() % 2 != 0)
        throw std::invalid_argument("standard parameters must alternate sign, weight");
    for (size_t i = 0; i < tok.size(); i += 2) {
        StandardStep s;
        if (tok[i] == "+")
            s.sign = +1;
        else if (tok[i] == "-")
            s.sign = -1;
        else
            throw std::invalid_argument("expected + or -, got '" + tok[i] + "'");
        size_t used = 0;
        s.b = std::stoi(tok[i + 1], &used);
        if (used != tok[i + 1].size() || s.b == 0)
            throw std::invalid_argument("expected a nonzero weight, got '" + tok[i + 1] + "'");
        p.steps.push_back(s);
    }
    return p;
}

inline std::string to_string(const StandardParams& p) {
    if (p.steps.empty()) return "()";
    std::ostringstream os;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        if (i) os << ",";
        os << (p.steps[i].sign > 0 ? "+" : "-") << "," << p.steps[i].b;
    }
    return os.str();
}

inline StandardParams param_negate(const StandardParams& p) {
    StandardParams q = p;
    for (auto& s : q.steps) {
        s.sign = -s.sign;
        s.b = -s.b;
    }
    return q;
}

// Generators t_0, ..., t_{2m}, graded with t_0 = 0.  a_i places an
// omega-arrow between t_{i-1} and t_i (omega = 1 + iota), b_i a differential
// arrow between them weighted by U^{|b_i|}.
inline IotaComplex standard_complex(const StandardParams& p) {
    p.validate();
    const int m = p.m();
    std::vector<int> gr(2 * m + 1, 0);
    for (int j = 1; j <= m; ++j) {
        gr[2 * j - 1] = gr[2 * j - 2];  // omega preserves the grading
        int b = p.steps[j - 1].b;
        if (b > 0)
            gr[2 * j] = gr[2 * j - 1] + 1 - 2 * b;  // d t_{2j} = U^b t_{2j-1}
        else
            gr[2 * j] = gr[2 * j - 1] - 1 - 2 * b;  // d t_{2j-1} = U^{-b} t_{2j}
    }
    std::vector<UGenerator> gens(2 * m + 1);
    for (int i = 0; i <= 2 * m; ++i) gens[i] = UGenerator{"t" + std::to_string(i), gr[i]};
    UMat diff(gens.size());
    UMat iota = identity_u(gens.size());
    for (int j = 1; j <= m; ++j) {
        int a = p.steps[j - 1].sign, b = p.steps[j - 1].b;
        if (a > 0)
            add_to(iota, 2 * j - 1, 2 * j - 2, UPoly(0));  // omega t_{2j-1} = t_{2j-2}
        else
            add_to(iota, 2 * j - 2, 2 * j - 1, UPoly(0));  // omega t_{2j-2} = t_{2j-1}
        if (b > 0)
            diff[2 * j][2 * j - 1] = UPoly(b);
        else
            diff[2 * j - 1][2 * j] = UPoly(-b);
    }
    IotaComplex out{FreeUComplex(std::move(gens), std::move(diff)), std::move(iota)};
    out.validate();
    return out;
}

struct SearchBounds {
    int max_steps = 0;
    int max_weight = 0;

    void validate() const {
        if (max_steps < 0 || max_weight < 1)
            throw std::invalid_argument("search bounds must be positive");
    }
};

// Deterministic enumeration of parameters: increasing m, then lexicographic
// with + before - and weights ordered -1, 1, -2, 2, ...
inline int step_option_count(int max_weight) { return 4 * max_weight; }

inline StandardStep step_option(int max_weight, int idx) {
    int sign = idx < 2 * max_weight ? +1 : -1;
    int b = idx % (2 * max_weight);
    int mag = b / 2 + 1;
    return StandardStep{sign, b % 2 == 0 ? -mag : mag};
}

template <class Fn>  // Fn(const StandardParams&) -> bool: true stops
inline void enumerate_params(const SearchBounds& bounds, Fn&& fn) {
    bounds.validate();
    const int opts = step_option_count(bounds.max_weight);
    for (int m = 0; m <= bounds.max_steps; ++m) {
        std::vector<int> odo(m, 0);
        while (true) {
            StandardParams p;
            p.steps.reserve(m);
            for (int i = 0; i < m; ++i) p.steps.push_back(step_option(bounds.max_weight, odo[i]));
            if (fn(static_cast<const StandardParams&>(p))) return;
            int i = m - 1;
            while (i >= 0 && odo[i] == opts - 1) odo[i--] = 0;
            if (i < 0) break;
            ++odo[i];
        }
    }
}

}  // namespace iotacalc
