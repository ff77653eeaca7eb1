#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "cartan/gaussian.hpp"

namespace cartan {

/// The five real chart coordinates.
enum class Coord : int { x = 0, y = 1, u1 = 2, u2 = 3, u3 = 4 };

inline constexpr std::size_t kNumCoords = 5;
inline constexpr std::array<const char*, kNumCoords> kCoordNames = {"x", "y", "u1", "u2", "u3"};

/// A point of the chart: five exact rational coordinate values.
using Point = std::array<mpq_class, kNumCoords>;

/// Exponent vector; std::array comparison gives lex order with x dominant,
/// which is the monomial order used everywhere (leading term = largest key).
using Monomial = std::array<unsigned, kNumCoords>;

/// Multivariate polynomial over Q(i) in the five chart coordinates.
/// The term map holds nonzero coefficients only, so representation is canonical.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Gaussian>;

    Polynomial() = default;
    explicit Polynomial(Gaussian c);
    Polynomial(long c) : Polynomial(Gaussian(c)) {}

    static Polynomial variable(Coord c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (the whole value when is_constant()).
    Gaussian constant_value() const;

    /// Largest monomial in lex order and its coefficient.
    const Monomial& leading_monomial() const;
    const Gaussian& leading_coefficient() const;

    unsigned degree(Coord c) const;
    bool depends_on(Coord c) const { return degree(c) > 0; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Polynomial& a, const Gaussian& c);

    Polynomial pow(unsigned n) const;

    /// Exact quotient; throws std::domain_error if the division leaves a remainder.
    Polynomial divide_exact(const Polynomial& divisor) const;

    Polynomial derivative(Coord c) const;
    /// Coefficientwise conjugation (the coordinates are real).
    Polynomial conj() const;
    Gaussian evaluate(const Point& p) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
    friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

    /// Rendered in the expression grammar, terms in descending monomial order.
    std::string str() const;

private:
    void insert_term(const Monomial& m, const Gaussian& c);
    TermMap terms_;
};

/// Monic gcd (leading coefficient 1); gcd(0, 0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace cartan
