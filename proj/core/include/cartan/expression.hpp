#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cartan/ratfun.hpp"

namespace cartan {

class Expression;

/// Thrown when register_radical is handed a B with B * conj(B) != 1.
class RadicalError : public std::runtime_error {
public:
    RadicalError(std::string what, std::string residual)
        : std::runtime_error(std::move(what)), residual_(std::move(residual)) {}
    const std::string& residual() const { return residual_; }

private:
    std::string residual_;
};

/// Process-wide registration of the single adjoined radical beta = B^(1/2).
/// Registration requires the unit-modulus certificate B * conj(B) == 1, which
/// makes conj(beta) = 1/beta well defined. When B is a constant with an exact
/// square root in Q(i), beta collapses to that constant and expressions stay
/// in the plain rational-function field.
class RadicalRegistry {
public:
    static void register_radical(const Expression& b_expr);
    static void clear();
    static bool registered();
    /// The registered B; throws if none.
    static const RatFun& base();
    /// Collapsed constant value of beta, when B is a constant square.
    static const std::optional<Gaussian>& collapsed();
};

enum class SqrtBranch { principal, negated };

/// Exact scalar: element of Q(i)(x,y,u1,u2,u3)[beta]/(beta^2 - B), stored as
/// base + rad * beta with beta-exponent already reduced to {0, 1}. The stored
/// form is canonical, so equality of values is structural equality.
class Expression {
public:
    Expression() = default;
    Expression(long c) : base_(c) {}
    explicit Expression(Gaussian c) : base_(std::move(c)) {}
    explicit Expression(RatFun base) : base_(std::move(base)) {}
    Expression(RatFun base, RatFun rad);

    static Expression variable(Coord c) { return Expression(RatFun::variable(c)); }
    static Expression i() { return Expression(Gaussian::i()); }
    /// The adjoined radical beta = B^(1/2); requires a registered radical.
    static Expression sqrt_radical();

    const RatFun& base() const { return base_; }
    const RatFun& rad() const { return rad_; }
    bool has_radical() const { return !rad_.is_zero(); }

    bool is_zero() const { return base_.is_zero() && rad_.is_zero(); }
    bool is_constant() const { return rad_.is_zero() && base_.is_constant(); }
    Gaussian constant_value() const { return base_.constant_value(); }

    Expression operator-() const;
    friend Expression operator+(const Expression& a, const Expression& b);
    friend Expression operator-(const Expression& a, const Expression& b);
    friend Expression operator*(const Expression& a, const Expression& b);
    friend Expression operator/(const Expression& a, const Expression& b);
    Expression& operator+=(const Expression& o) { return *this = *this + o; }
    Expression& operator-=(const Expression& o) { return *this = *this - o; }
    Expression& operator*=(const Expression& o) { return *this = *this * o; }
    Expression& operator/=(const Expression& o) { return *this = *this / o; }

    Expression inverse() const;
    Expression pow(int n) const;

    Expression derivative(Coord c) const;
    Expression conj() const;

    Gaussian evaluate(const Point& p, SqrtBranch branch = SqrtBranch::principal) const;

    friend bool operator==(const Expression& a, const Expression& b) {
        return a.base_ == b.base_ && a.rad_ == b.rad_;
    }
    friend bool operator!=(const Expression& a, const Expression& b) { return !(a == b); }

    /// Canonical printing; radical-free expressions round-trip through the parser.
    std::string str() const;

private:
    RatFun base_;
    RatFun rad_;
};

/// Idempotent by construction: expressions are always canonical.
inline Expression normalize(const Expression& e) { return e; }
inline bool is_zero(const Expression& e) { return e.is_zero(); }
inline Expression differentiate(const Expression& e, Coord c) { return e.derivative(c); }
inline Expression conjugate(const Expression& e) { return e.conj(); }

}  // namespace cartan
