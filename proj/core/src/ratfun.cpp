#include "cartan/ratfun.hpp"

#include <stdexcept>

namespace cartan {

RatFun::RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(Gaussian(1));
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Gaussian lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        Gaussian inv = Gaussian(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Gaussian RatFun::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant");
    return num_.constant_value() / den_.constant_value();
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
    return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return RatFun(den_, num_);
}

RatFun RatFun::derivative(Coord c) const {
    // (n/d)' = (n' d - n d') / d^2
    return RatFun(num_.derivative(c) * den_ - num_ * den_.derivative(c), den_ * den_);
}

RatFun RatFun::conj() const { return RatFun(num_.conj(), den_.conj()); }

Gaussian RatFun::evaluate(const Point& p) const {
    Gaussian d = den_.evaluate(p);
    if (d.is_zero()) throw std::domain_error("pole at evaluation point");
    return num_.evaluate(p) / d;
}

std::string RatFun::str() const {
    if (den_ == Polynomial(Gaussian(1))) return num_.str();
    auto wrap = [](const std::string& s) {
        bool atomic = s.find('+') == std::string::npos && s.find('-') == std::string::npos &&
                      s.find('*') == std::string::npos && s.find('/') == std::string::npos;
        return atomic ? s : "(" + s + ")";
    };
    return wrap(num_.str()) + "/" + wrap(den_.str());
}

}  // namespace cartan
