#include "cartan/expression.hpp"

#include <mutex>

namespace cartan {

namespace {

struct RegistryState {
    std::mutex mu;
    bool set = false;
    RatFun base;
    std::optional<Gaussian> collapsed;
};

RegistryState& state() {
    static RegistryState s;
    return s;
}

}  // namespace

void RadicalRegistry::register_radical(const Expression& b_expr) {
    if (b_expr.has_radical())
        throw RadicalError("radical base must be radical-free", b_expr.str());
    const RatFun& b = b_expr.base();
    RatFun residual = b * b.conj() - RatFun(1);
    if (!residual.is_zero())
        throw RadicalError("radical base violates B*conj(B) = 1", residual.str());
    std::optional<Gaussian> collapsed;
    if (b.is_constant()) collapsed = b.constant_value().sqrt();
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    s.set = true;
    s.base = b;
    s.collapsed = collapsed;
}

void RadicalRegistry::clear() {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    s.set = false;
    s.base = RatFun();
    s.collapsed.reset();
}

bool RadicalRegistry::registered() {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.set;
}

const RatFun& RadicalRegistry::base() {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    if (!s.set) throw std::logic_error("no radical registered");
    return s.base;
}

const std::optional<Gaussian>& RadicalRegistry::collapsed() {
    auto& s = state();
    std::lock_guard<std::mutex> lock(s.mu);
    if (!s.set) throw std::logic_error("no radical registered");
    return s.collapsed;
}

Expression::Expression(RatFun base, RatFun rad) : base_(std::move(base)), rad_(std::move(rad)) {
    if (!rad_.is_zero() && !RadicalRegistry::registered())
        throw std::logic_error("radical term used before register_radical");
}

Expression Expression::sqrt_radical() {
    const auto& c = RadicalRegistry::collapsed();
    if (c) return Expression(RatFun(*c));
    return Expression(RatFun(), RatFun(1));
}

Expression Expression::operator-() const {
    Expression r;
    r.base_ = -base_;
    r.rad_ = -rad_;
    return r;
}

Expression operator+(const Expression& a, const Expression& b) {
    Expression r;
    r.base_ = a.base_ + b.base_;
    r.rad_ = a.rad_ + b.rad_;
    return r;
}

Expression operator-(const Expression& a, const Expression& b) {
    Expression r;
    r.base_ = a.base_ - b.base_;
    r.rad_ = a.rad_ - b.rad_;
    return r;
}

Expression operator*(const Expression& a, const Expression& b) {
    Expression r;
    if (a.rad_.is_zero() && b.rad_.is_zero()) {
        r.base_ = a.base_ * b.base_;
        return r;
    }
    const RatFun& B = RadicalRegistry::base();
    r.base_ = a.base_ * b.base_ + a.rad_ * b.rad_ * B;
    r.rad_ = a.base_ * b.rad_ + a.rad_ * b.base_;
    return r;
}

Expression Expression::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero expression");
    if (rad_.is_zero()) return Expression(base_.inverse());
    const RatFun& B = RadicalRegistry::base();
    RatFun n = base_ * base_ - rad_ * rad_ * B;
    if (n.is_zero())
        throw std::domain_error("zero divisor in the radical ring (B is a square)");
    Expression r;
    r.base_ = base_ / n;
    r.rad_ = -(rad_ / n);
    return r;
}

Expression operator/(const Expression& a, const Expression& b) {
    if (b.rad_.is_zero()) {
        if (b.base_.is_zero()) throw std::domain_error("division by zero expression");
        Expression r;
        r.base_ = a.base_ / b.base_;
        r.rad_ = a.rad_ / b.base_;
        return r;
    }
    return a * b.inverse();
}

Expression Expression::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Expression r(1);
    Expression b = *this;
    unsigned e = static_cast<unsigned>(n);
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

Expression Expression::derivative(Coord c) const {
    Expression r;
    r.base_ = base_.derivative(c);
    if (!rad_.is_zero()) {
        // (f * beta)' = (f' + f B'/(2B)) * beta
        const RatFun& B = RadicalRegistry::base();
        r.rad_ = rad_.derivative(c) + rad_ * B.derivative(c) / (RatFun(2) * B);
    }
    return r;
}

Expression Expression::conj() const {
    Expression r;
    r.base_ = base_.conj();
    if (!rad_.is_zero()) {
        // conj(beta) = 1/beta = conj(B) * beta  (unit modulus of B)
        const RatFun& B = RadicalRegistry::base();
        r.rad_ = rad_.conj() * B.conj();
    }
    return r;
}

Gaussian Expression::evaluate(const Point& p, SqrtBranch branch) const {
    Gaussian v = base_.evaluate(p);
    if (rad_.is_zero()) return v;
    const RatFun& B = RadicalRegistry::base();
    Gaussian bval = B.evaluate(p);
    auto root = bval.sqrt();
    if (!root)
        throw std::domain_error("radical value is not an exact square at evaluation point");
    if (root->is_zero()) throw std::domain_error("radical vanishes at evaluation point");
    Gaussian s = (branch == SqrtBranch::principal) ? *root : -*root;
    return v + rad_.evaluate(p) * s;
}

std::string Expression::str() const {
    if (rad_.is_zero()) return base_.str();
    std::string radpart = "(" + rad_.str() + ")*sqrtB";
    if (base_.is_zero()) return radpart;
    return "(" + base_.str() + ")+" + radpart;
}

}  // namespace cartan
