#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cartan/expression.hpp"

namespace cartan::ext {

using cartan::Coord;
using cartan::Expression;
using cartan::Gaussian;
using cartan::Point;

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vector field with Expression coefficients on (d/dx, d/dy, d/du1, d/du2, d/du3).
struct VectorField {
    std::array<Expression, 5> c{};

    static VectorField basis(Coord k) {
        VectorField v;
        v.c[static_cast<int>(k)] = Expression(1);
        return v;
    }

    bool is_zero() const;
    VectorField conj() const;
    VectorField operator-() const;
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator-(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Expression& f, const VectorField& v);
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.c == b.c; }
};

/// One-form with coefficients on (dx, dy, du1, du2, du3).
struct OneForm {
    std::array<Expression, 5> c{};

    static OneForm basis(Coord k) {
        OneForm w;
        w.c[static_cast<int>(k)] = Expression(1);
        return w;
    }

    bool is_zero() const;
    OneForm conj() const;
    OneForm operator-() const;
    friend OneForm operator+(const OneForm& a, const OneForm& b);
    friend OneForm operator-(const OneForm& a, const OneForm& b);
    friend OneForm operator*(const Expression& f, const OneForm& w);
    friend bool operator==(const OneForm& a, const OneForm& b) { return a.c == b.c; }

    /// Pairing omega(X).
    Expression operator()(const VectorField& x) const;
};

/// Index of the ordered wedge basis dc_a ^ dc_b with a < b; 10 slots.
int pair_index(int a, int b);
std::pair<int, int> pair_coords(int idx);

/// Two-form on the ten ordered coordinate wedge pairs.
struct TwoForm {
    std::array<Expression, 10> c{};

    bool is_zero() const;
    TwoForm conj() const;
    friend TwoForm operator+(const TwoForm& a, const TwoForm& b);
    friend TwoForm operator-(const TwoForm& a, const TwoForm& b);
    friend TwoForm operator*(const Expression& f, const TwoForm& w);
    friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.c == b.c; }

    /// Evaluation Omega(X, Y).
    Expression operator()(const VectorField& x, const VectorField& y) const;
};

/// X(f) = sum_c X_c df/dc.
Expression apply(const VectorField& x, const Expression& f);

/// [X, Y]_j = X(Y_j) - Y(X_j).
VectorField lie_bracket(const VectorField& x, const VectorField& y);

TwoForm wedge(const OneForm& a, const OneForm& b);
TwoForm exterior_derivative(const OneForm& w);
OneForm contract(const VectorField& x, const TwoForm& w);

/// Ordered frame of five vector fields with slot names.
struct Frame {
    std::array<VectorField, 5> fields;
    std::array<std::string, 5> names;
};

/// Ordered coframe of five one-forms with slot names.
struct Coframe {
    std::array<OneForm, 5> forms;
    std::array<std::string, 5> names;
};

/// Exact inverse of a square Expression matrix (Gauss-Jordan over the field);
/// throws SingularMatrixError when the determinant vanishes identically.
std::vector<std::vector<Expression>> invert_matrix(std::vector<std::vector<Expression>> m);

/// Fraction-free (Bareiss) determinant; entries must be radical-free.
Expression determinant(const std::vector<std::vector<Expression>>& m);

/// Coframe dual to F: omega^k(X_j) = delta_kj; slot names carried over.
Coframe dual_coframe(const Frame& f, const std::array<std::string, 5>& form_names);

/// Coefficients T^k_{jl} of d omega^k = sum_{j<l} T^k_{jl} omega^j ^ omega^l
/// in the coframe's own wedge basis, for the dual frame X of the coframe.
struct StructureTable {
    std::array<std::string, 5> names;
    // coeff[k][pair_index(j,l)] over the coframe basis, j < l
    std::array<std::array<Expression, 10>, 5> coeff{};

    const Expression& at(int k, int j, int l) const { return coeff[k][pair_index(j, l)]; }
};

StructureTable structure_coefficients(const Coframe& cf);

/// Verdict of the generic-rank computation over the symbolic field.
struct RankReport {
    int generic_rank = 0;
    /// true when the vanishing of all (r+1)-minors was certified symbolically
    bool certified = false;
    std::optional<int> rank_at_point;
};

RankReport generic_rank(const std::vector<VectorField>& fields,
                        const std::optional<Point>& at = std::nullopt);

}  // namespace cartan::ext
