#pragma once

#include <string>

#include "cartan/polynomial.hpp"

namespace cartan {

/// Element of Q(i)(x, y, u1, u2, u3) kept in canonical form: numerator and
/// denominator coprime, denominator monic (leading coefficient 1), zero is 0/1.
/// Equality of values is equality of representations.
class RatFun {
public:
    RatFun() : num_(), den_(Gaussian(1)) {}
    RatFun(long c) : num_(Gaussian(c)), den_(Gaussian(1)) {}
    explicit RatFun(Gaussian c) : num_(Polynomial(std::move(c))), den_(Gaussian(1)) {}
    explicit RatFun(Polynomial p) : num_(std::move(p)), den_(Gaussian(1)) {}
    RatFun(Polynomial num, Polynomial den);

    static RatFun variable(Coord c) { return RatFun(Polynomial::variable(c)); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Polynomial(Gaussian(1)) && den_ == Polynomial(Gaussian(1)); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Gaussian constant_value() const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun inverse() const;
    RatFun derivative(Coord c) const;
    RatFun conj() const;

    /// Exact value at p; throws std::domain_error on a pole.
    Gaussian evaluate(const Point& p) const;

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    std::string str() const;

private:
    void reduce();
    Polynomial num_, den_;
};

}  // namespace cartan
