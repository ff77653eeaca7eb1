#include "cartan/forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartan::ext {

bool VectorField::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Expression& e) { return e.is_zero(); });
}

VectorField VectorField::conj() const {
    VectorField r;
    for (int k = 0; k < 5; ++k) r.c[k] = c[k].conj();
    return r;
}

VectorField VectorField::operator-() const {
    VectorField r;
    for (int k = 0; k < 5; ++k) r.c[k] = -c[k];
    return r;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

VectorField operator*(const Expression& f, const VectorField& v) {
    VectorField r;
    for (int k = 0; k < 5; ++k) r.c[k] = f * v.c[k];
    return r;
}

bool OneForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Expression& e) { return e.is_zero(); });
}

OneForm OneForm::conj() const {
    OneForm r;
    for (int k = 0; k < 5; ++k) r.c[k] = c[k].conj();
    return r;
}

OneForm OneForm::operator-() const {
    OneForm r;
    for (int k = 0; k < 5; ++k) r.c[k] = -c[k];
    return r;
}

OneForm operator+(const OneForm& a, const OneForm& b) {
    OneForm r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

OneForm operator-(const OneForm& a, const OneForm& b) {
    OneForm r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

OneForm operator*(const Expression& f, const OneForm& w) {
    OneForm r;
    for (int k = 0; k < 5; ++k) r.c[k] = f * w.c[k];
    return r;
}

Expression OneForm::operator()(const VectorField& x) const {
    Expression s;
    for (int k = 0; k < 5; ++k) s += c[k] * x.c[k];
    return s;
}

int pair_index(int a, int b) {
    if (a >= b) throw std::logic_error("pair_index requires a < b");
    // (0,1)..(0,4),(1,2)..(1,4),(2,3),(2,4),(3,4)
    static constexpr int base[5] = {0, 4, 7, 9, 10};
    return base[a] + (b - a - 1);
}

std::pair<int, int> pair_coords(int idx) {
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (pair_index(a, b) == idx) return {a, b};
    throw std::logic_error("bad pair index");
}

bool TwoForm::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Expression& e) { return e.is_zero(); });
}

TwoForm TwoForm::conj() const {
    TwoForm r;
    for (int k = 0; k < 10; ++k) r.c[k] = c[k].conj();
    return r;
}

TwoForm operator+(const TwoForm& a, const TwoForm& b) {
    TwoForm r;
    for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

TwoForm operator-(const TwoForm& a, const TwoForm& b) {
    TwoForm r;
    for (int k = 0; k < 10; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

TwoForm operator*(const Expression& f, const TwoForm& w) {
    TwoForm r;
    for (int k = 0; k < 10; ++k) r.c[k] = f * w.c[k];
    return r;
}

Expression TwoForm::operator()(const VectorField& x, const VectorField& y) const {
    Expression s;
    for (int idx = 0; idx < 10; ++idx) {
        if (c[idx].is_zero()) continue;
        auto [a, b] = pair_coords(idx);
        s += c[idx] * (x.c[a] * y.c[b] - x.c[b] * y.c[a]);
    }
    return s;
}

Expression apply(const VectorField& x, const Expression& f) {
    Expression s;
    for (int k = 0; k < 5; ++k) {
        if (x.c[k].is_zero()) continue;
        s += x.c[k] * f.derivative(static_cast<Coord>(k));
    }
    return s;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
    VectorField r;
    for (int j = 0; j < 5; ++j) r.c[j] = apply(x, y.c[j]) - apply(y, x.c[j]);
    return r;
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
    TwoForm r;
    for (int p = 0; p < 5; ++p)
        for (int q = p + 1; q < 5; ++q)
            r.c[pair_index(p, q)] = a.c[p] * b.c[q] - a.c[q] * b.c[p];
    return r;
}

TwoForm exterior_derivative(const OneForm& w) {
    TwoForm r;
    // d(f dc_b) = sum_a df/dc_a dc_a ^ dc_b
    for (int b = 0; b < 5; ++b) {
        if (w.c[b].is_zero()) continue;
        for (int a = 0; a < 5; ++a) {
            if (a == b) continue;
            Expression d = w.c[b].derivative(static_cast<Coord>(a));
            if (d.is_zero()) continue;
            if (a < b)
                r.c[pair_index(a, b)] += d;
            else
                r.c[pair_index(b, a)] -= d;
        }
    }
    return r;
}

OneForm contract(const VectorField& x, const TwoForm& w) {
    OneForm r;
    for (int idx = 0; idx < 10; ++idx) {
        if (w.c[idx].is_zero()) continue;
        auto [a, b] = pair_coords(idx);
        r.c[b] += x.c[a] * w.c[idx];
        r.c[a] -= x.c[b] * w.c[idx];
    }
    return r;
}

std::vector<std::vector<Expression>> invert_matrix(std::vector<std::vector<Expression>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Expression>> inv(n, std::vector<Expression>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Expression(1);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw SingularMatrixError("singular matrix: column " + std::to_string(col));
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Expression p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Expression f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] = m[r][j] - f * m[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

/// Fraction-free Bareiss determinant of a polynomial matrix.
Polynomial bareiss_det(std::vector<std::vector<Polynomial>> a) {
    const std::size_t n = a.size();
    if (n == 0) return Polynomial(Gaussian(1));
    Polynomial prev(Gaussian(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return Polynomial();  // singular
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = t.divide_exact(prev);
            }
            a[i][k] = Polynomial();
        }
        prev = a[k][k];
    }
    Polynomial d = a[n - 1][n - 1];
    return sign == 1 ? d : -d;
}

}  // namespace

Expression determinant(const std::vector<std::vector<Expression>>& m) {
    const std::size_t n = m.size();
    // clear denominators row by row; entries must be radical-free
    std::vector<std::vector<Polynomial>> p(n, std::vector<Polynomial>(n));
    RatFun scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial d(Gaussian(1));
        for (std::size_t j = 0; j < n; ++j) {
            if (m[i][j].has_radical())
                throw std::domain_error("fraction-free determinant requires radical-free entries");
            d = d * m[i][j].base().den();
        }
        for (std::size_t j = 0; j < n; ++j) {
            const RatFun& e = m[i][j].base();
            p[i][j] = e.num() * d.divide_exact(e.den());
        }
        scale = scale * RatFun(d);
    }
    return Expression(RatFun(bareiss_det(std::move(p))) / scale);
}

Coframe dual_coframe(const Frame& f, const std::array<std::string, 5>& form_names) {
    std::vector<std::vector<Expression>> m(5, std::vector<Expression>(5));
    for (int j = 0; j < 5; ++j)
        for (int c = 0; c < 5; ++c) m[j][c] = f.fields[j].c[c];
    std::vector<std::vector<Expression>> inv;
    try {
        inv = invert_matrix(std::move(m));
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("singular frame: coefficient matrix has vanishing determinant");
    }
    Coframe cf;
    cf.names = form_names;
    for (int k = 0; k < 5; ++k)
        for (int c = 0; c < 5; ++c) cf.forms[k].c[c] = inv[c][k];
    return cf;
}

StructureTable structure_coefficients(const Coframe& cf) {
    std::vector<std::vector<Expression>> m(5, std::vector<Expression>(5));
    for (int k = 0; k < 5; ++k)
        for (int c = 0; c < 5; ++c) m[k][c] = cf.forms[k].c[c];
    std::vector<std::vector<Expression>> inv;
    try {
        inv = invert_matrix(std::move(m));
    } catch (const SingularMatrixError&) {
        throw SingularMatrixError("singular coframe: no dual frame exists");
    }
    std::array<VectorField, 5> dual;
    for (int j = 0; j < 5; ++j)
        for (int c = 0; c < 5; ++c) dual[j].c[c] = inv[c][j];

    StructureTable st;
    st.names = cf.names;
    for (int k = 0; k < 5; ++k) {
        TwoForm d = exterior_derivative(cf.forms[k]);
        for (int j = 0; j < 5; ++j)
            for (int l = j + 1; l < 5; ++l) st.coeff[k][pair_index(j, l)] = d(dual[j], dual[l]);
    }
    return st;
}

namespace {

int numeric_rank(std::vector<std::vector<Gaussian>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Gaussian f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

RankReport generic_rank(const std::vector<VectorField>& fields, const std::optional<Point>& at) {
    const int nf = static_cast<int>(fields.size());
    if (nf < 1 || nf > 5) throw std::invalid_argument("generic_rank takes 1..5 fields");
    const int maxr = std::min(nf, 5);

    RankReport rep;

    // deterministic probe points prune the symbolic work
    static const std::array<Point, 3> probes = {
        Point{mpq_class(1), mpq_class(2), mpq_class(1, 3), mpq_class(-1), mpq_class(2, 5)},
        Point{mpq_class(-2), mpq_class(1, 2), mpq_class(3), mpq_class(1, 7), mpq_class(-1, 2)},
        Point{mpq_class(3, 2), mpq_class(-1, 3), mpq_class(2), mpq_class(5), mpq_class(1)}};

    auto eval_matrix = [&](const Point& p) -> std::optional<std::vector<std::vector<Gaussian>>> {
        std::vector<std::vector<Gaussian>> m(nf, std::vector<Gaussian>(5));
        try {
            for (int i = 0; i < nf; ++i)
                for (int j = 0; j < 5; ++j) m[i][j] = fields[i].c[j].evaluate(p);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
        return m;
    };

    int lower = 0;
    for (const Point& p : probes) {
        if (auto m = eval_matrix(p)) lower = std::max(lower, numeric_rank(std::move(*m)));
    }

    auto minor_nonzero_exists = [&](int r) {
        std::vector<std::vector<int>> rsel, csel;
        combinations(nf, r, rsel);
        combinations(5, r, csel);
        for (const auto& rs : rsel) {
            for (const auto& cs : csel) {
                std::vector<std::vector<Expression>> sub(r, std::vector<Expression>(r));
                for (int i = 0; i < r; ++i)
                    for (int j = 0; j < r; ++j) sub[i][j] = fields[rs[i]].c[cs[j]];
                if (!determinant(sub).is_zero()) return true;
            }
        }
        return false;
    };

    int r = std::max(lower, 1);
    // climb while a nonzero (r+1)-minor exists; vanishing of all of them
    // certifies the generic rank exactly
    while (r < maxr && minor_nonzero_exists(r + 1)) ++r;
    if (r == 1 && !minor_nonzero_exists(1)) r = 0;
    rep.generic_rank = r;
    rep.certified = true;

    if (at) {
        if (auto m = eval_matrix(*at)) rep.rank_at_point = numeric_rank(std::move(*m));
    }
    return rep;
}

}  // namespace cartan::ext
