#pragma once

// F2-coefficient monomials and polynomials in the variables U and (U, V) used
// as matrix entries everywhere.  Addition is XOR; sums keep set semantics.

#include <algorithm>
#include <compare>
#include <sstream>
#include <string>
#include <vector>

namespace iotacalc {

struct UVTerm {
    int u = 0;
    int v = 0;
    auto operator<=>(const UVTerm&) const = default;
};

inline UVTerm mul(UVTerm a, UVTerm b) { return {a.u + b.u, a.v + b.v}; }
inline UVTerm swap_uv(UVTerm a) { return {a.v, a.u}; }

class UVPoly {
public:
    UVPoly() = default;
    explicit UVPoly(UVTerm t) : t_{t} {}
    static UVPoly one() { return UVPoly(UVTerm{0, 0}); }

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::vector<UVTerm>& terms() const { return t_; }

    bool is_single() const { return t_.size() == 1; }
    UVTerm single() const { return t_.front(); }

    bool contains(UVTerm t) const { return std::binary_search(t_.begin(), t_.end(), t); }
    bool has_constant() const { return contains(UVTerm{0, 0}); }

    // True when every term is divisible by UV (the maximal-ideal test used by
    // the A0 construction is on U = UV).
    bool divisible_by_uv() const {
        for (auto& t : t_)
            if (t.u == 0 || t.v == 0) return false;
        return true;
    }

    void toggle(UVTerm t) {
        auto it = std::lower_bound(t_.begin(), t_.end(), t);
        if (it != t_.end() && *it == t)
            t_.erase(it);
        else
            t_.insert(it, t);
    }

    UVPoly operator+(const UVPoly& o) const {
        UVPoly r = *this;
        for (auto& t : o.t_) r.toggle(t);
        return r;
    }

    UVPoly times(UVTerm m) const {
        UVPoly r;
        r.t_.reserve(t_.size());
        for (auto& t : t_) r.t_.push_back(mul(t, m));
        return r;  // order preserved: adding a constant keeps sortedness
    }

    UVPoly operator*(const UVPoly& o) const {
        UVPoly r;
        for (auto& a : t_)
            for (auto& b : o.t_) r.toggle(mul(a, b));
        return r;
    }

    UVPoly swapped() const {  // U^i V^j -> U^j V^i on every term
        UVPoly r;
        for (auto& t : t_) r.toggle(swap_uv(t));
        return r;
    }

    bool operator==(const UVPoly& o) const { return t_ == o.t_; }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& t : t_) {
            if (!first) os << "+";
            if (t.u == 0 && t.v == 0)
                os << "1";
            else {
                if (t.u > 0) { os << "U"; if (t.u != 1) os << "^" << t.u; }
                if (t.v > 0) { os << "V"; if (t.v != 1) os << "^" << t.v; }
            }
            first = false;
        }
        return os.str();
    }

private:
    std::vector<UVTerm> t_;  // sorted, no duplicates
};

// F2[U] polynomial stored as the set of exponents with nonzero coefficient.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(int exp) : e_{exp} {}
    static UPoly one() { return UPoly(0); }

    bool is_zero() const { return e_.empty(); }
    size_t term_count() const { return e_.size(); }
    const std::vector<int>& exponents() const { return e_; }

    bool is_single() const { return e_.size() == 1; }
    int single() const { return e_.front(); }

    bool contains(int e) const { return std::binary_search(e_.begin(), e_.end(), e); }
    bool has_constant() const { return !e_.empty() && e_.front() == 0; }
    bool divisible_by_u() const { return e_.empty() || e_.front() >= 1; }

    void toggle(int e) {
        auto it = std::lower_bound(e_.begin(), e_.end(), e);
        if (it != e_.end() && *it == e)
            e_.erase(it);
        else
            e_.insert(it, e);
    }

    UPoly operator+(const UPoly& o) const {
        UPoly r = *this;
        for (int e : o.e_) r.toggle(e);
        return r;
    }

    UPoly times(int k) const {
        UPoly r;
        r.e_.reserve(e_.size());
        for (int e : e_) r.e_.push_back(e + k);
        return r;
    }

    UPoly operator*(const UPoly& o) const {
        UPoly r;
        for (int a : e_)
            for (int b : o.e_) r.toggle(a + b);
        return r;
    }

    bool operator==(const UPoly& o) const { return e_ == o.e_; }

    std::string to_string() const {
        if (e_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int e : e_) {
            if (!first) os << "+";
            if (e == 0)
                os << "1";
            else {
                os << "U";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::vector<int> e_;  // sorted, no duplicates
};

}  // namespace iotacalc
