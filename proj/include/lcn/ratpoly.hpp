#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcn/arith.hpp"

namespace lcn {

/// Univariate polynomial with exact rational coefficients, little-endian
/// (coeff(i) multiplies m^i). Degrees stay tiny here, so dense storage.
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RatPoly constant(const Rational& v) { return RatPoly({v}); }

    /// a*m + b
    static RatPoly linear(const Rational& a, const Rational& b) { return RatPoly({b, a}); }

    bool is_zero() const { return c_.empty(); }

    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const {
        Rational v = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            v = v * x + *it;
        return v;
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) + b.coeff(i);
        return RatPoly(std::move(c));
    }

    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = a.coeff(i) - b.coeff(i);
        return RatPoly(std::move(c));
    }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(c));
    }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    RatPoly pow(unsigned e) const {
        RatPoly r = constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    std::string str(const std::string& var = "m") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
            else if (c_[i] < 0) out += "-";
            Rational a = abs(c_[i]);
            std::string t = a.str();
            if (i == 0) out += t;
            else {
                if (a != 1) out += t + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Exact divisibility of num by a degree-1 polynomial: over Q a linear
/// factor divides num iff num vanishes at its root.
inline bool poly_divisible(const RatPoly& num, const RatPoly& lin) {
    if (lin.degree() != 1) throw std::invalid_argument("poly_divisible: divisor must have degree 1");
    Rational root = -lin.coeff(0) / lin.coeff(1);
    return num.eval(root) == 0;
}

} // namespace lcn
