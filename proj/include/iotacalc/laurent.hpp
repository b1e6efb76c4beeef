#pragma once

// Integer Laurent polynomials in one variable t.  Signed arithmetic is needed
// for the Alexander-polynomial division identities; reduction mod 2 happens
// downstream when staircases are built.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace iotacalc {

class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return {}; }

    static LaurentPolynomial monomial(int exp, long long coeff) {
        LaurentPolynomial p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }

    static LaurentPolynomial one() { return monomial(0, 1); }

    const std::map<int, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    int min_exp() const { require_nonzero(); return terms_.begin()->first; }
    int max_exp() const { require_nonzero(); return terms_.rbegin()->first; }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this;
        for (auto& [e, c] : o.terms_) r.bump(e, c);
        return r;
    }

    LaurentPolynomial operator-(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this;
        for (auto& [e, c] : o.terms_) r.bump(e, checked_neg(c));
        return r;
    }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        LaurentPolynomial r;
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) r.bump(e1 + e2, checked_mul(c1, c2));
        return r;
    }

    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, c] : terms_) {
            long long a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (e == 0 || a != 1) os << a;
            if (e != 0) {
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no extreme exponent");
    }

    // Desk-scale coefficients fit in 64 bits; anything larger is a usage error
    // and is reported rather than wrapped.
    static long long checked_mul(long long a, long long b) {
        long long r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
        return r;
    }
    static long long checked_add(long long a, long long b) {
        long long r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
        return r;
    }
    static long long checked_neg(long long a) {
        if (a == INT64_MIN) throw std::overflow_error("Laurent coefficient overflow");
        return -a;
    }

    void bump(int exp, long long coeff) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (coeff != 0) terms_[exp] = coeff;
            return;
        }
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }

    std::map<int, long long> terms_;
};

// Alternating-sign polynomial with exponents at the partial sums of the step
// sequence: 1 - t^{c1} + t^{c1+c2} - ...  The empty sequence gives 1.
inline LaurentPolynomial symmetric_alternating_poly(const std::vector<int>& steps) {
    if (steps.size() % 2 != 0)
        throw std::invalid_argument("alternating polynomial needs an even number of steps");
    for (int c : steps)
        if (c < 1) throw std::invalid_argument("alternating polynomial steps must be positive");
    LaurentPolynomial p = LaurentPolynomial::one();
    long long sum = 0;
    long long sign = 1;
    for (int c : steps) {
        sum += c;
        sign = -sign;
        p = p + LaurentPolynomial::monomial(static_cast<int>(sum), sign);
    }
    return p;
}

// Exact division; a nonzero remainder means the requested identity is false
// and is reported as an error.
inline LaurentPolynomial laurent_div_exact(const LaurentPolynomial& num,
                                           const LaurentPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (num.is_zero()) return LaurentPolynomial::zero();
    LaurentPolynomial rem = num;
    LaurentPolynomial quot;
    const int dlead = den.max_exp();
    const long long dcoeff = den.coeff(dlead);
    // An exact quotient has no exponent below num.min - den.min; passing that
    // floor proves a nonzero remainder.
    const int qfloor = num.min_exp() - den.min_exp();
    while (!rem.is_zero()) {
        int rlead = rem.max_exp();
        long long rcoeff = rem.coeff(rlead);
        if (rlead - dlead < qfloor || rcoeff % dcoeff != 0)
            throw std::domain_error("inexact division: " + num.to_string() + " by " + den.to_string());
        LaurentPolynomial qterm = LaurentPolynomial::monomial(rlead - dlead, rcoeff / dcoeff);
        quot = quot + qterm;
        rem = rem - qterm * den;
    }
    return quot;
}

}  // namespace iotacalc
