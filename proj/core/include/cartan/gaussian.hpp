#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cartan {

/// Exact element of Q(i): re + im * i with arbitrary-precision rational parts.
class Gaussian {
public:
    Gaussian() : re_(0), im_(0) {}
    Gaussian(long v) : re_(v), im_(0) {}
    Gaussian(mpq_class re) : re_(std::move(re)), im_(0) {}
    Gaussian(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Gaussian i() { return Gaussian(mpq_class(0), mpq_class(1)); }
    static Gaussian from_fraction(long num, long den) {
        if (den == 0) throw std::domain_error("zero denominator literal");
        mpq_class q(num, den);
        q.canonicalize();
        return Gaussian(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Gaussian conj() const { return Gaussian(re_, -im_); }

    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    Gaussian operator-() const { return Gaussian(-re_, -im_); }

    Gaussian& operator+=(const Gaussian& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    /// Exact square root in Q(i), if one exists. Both roots differ by sign;
    /// the returned branch has re > 0, or re == 0 and im >= 0.
    std::optional<Gaussian> sqrt() const;

    /// Rendered in the expression grammar: "3", "-1/2*i", "(2+1/3*i)" callers
    /// add their own parentheses; this emits a sum of at most two terms.
    std::string str() const;

private:
    mpq_class re_, im_;
};

/// Exact rational square root, if the argument is a perfect square.
std::optional<mpq_class> rational_sqrt(const mpq_class& q);

}  // namespace cartan
