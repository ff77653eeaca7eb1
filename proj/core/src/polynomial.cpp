#include "cartan/polynomial.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace cartan {

Polynomial::Polynomial(Gaussian c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

Polynomial Polynomial::variable(Coord c) {
    Polynomial p;
    Monomial m{};
    m[static_cast<int>(c)] = 1;
    p.terms_.emplace(m, Gaussian(1));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Gaussian Polynomial::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Gaussian() : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Gaussian& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

unsigned Polynomial::degree(Coord c) const {
    unsigned d = 0;
    for (const auto& [m, _] : terms_) d = std::max(d, m[static_cast<int>(c)]);
    return d;
}

void Polynomial::insert_term(const Monomial& m, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) insert_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (std::size_t k = 0; k < kNumCoords; ++k) m[k] = ma[k] + mb[k];
            r.insert_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial operator*(const Polynomial& a, const Gaussian& c) {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [m, co] : a.terms_) r.terms_.emplace(m, co * c);
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r(Gaussian(1));
    Polynomial base = *this;
    while (n) {
        if (n & 1u) r *= base;
        base = (n >>= 1) ? base * base : base;
    }
    return r;
}

namespace {

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < kNumCoords; ++k)
        if (a[k] > b[k]) return false;
    return true;
}

Monomial monomial_quot(const Monomial& b, const Monomial& a) {
    Monomial q;
    for (std::size_t k = 0; k < kNumCoords; ++k) q[k] = b[k] - a[k];
    return q;
}

Polynomial monomial_poly(const Monomial& m, const Gaussian& c) {
    Polynomial p(c);
    if (c.is_zero()) return p;
    Polynomial mono(Gaussian(1));
    for (std::size_t k = 0; k < kNumCoords; ++k)
        for (unsigned e = 0; e < m[k]; ++e) mono *= Polynomial::variable(static_cast<Coord>(k));
    return p * mono;
}

}  // namespace

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial r = *this;
    Polynomial q;
    const Monomial& dlm = divisor.leading_monomial();
    const Gaussian& dlc = divisor.leading_coefficient();
    while (!r.is_zero()) {
        const Monomial& rlm = r.leading_monomial();
        if (!monomial_divides(dlm, rlm))
            throw std::domain_error("polynomial division is not exact");
        Monomial qm = monomial_quot(rlm, dlm);
        Gaussian qc = r.leading_coefficient() / dlc;
        Polynomial t = monomial_poly(qm, qc);
        q += t;
        r -= t * divisor;
    }
    return q;
}

Polynomial Polynomial::derivative(Coord c) const {
    int k = static_cast<int>(c);
    Polynomial r;
    for (const auto& [m, co] : terms_) {
        if (m[k] == 0) continue;
        Monomial dm = m;
        dm[k] -= 1;
        r.insert_term(dm, co * Gaussian(static_cast<long>(m[k])));
    }
    return r;
}

Polynomial Polynomial::conj() const {
    Polynomial r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co.conj());
    return r;
}

Gaussian Polynomial::evaluate(const Point& p) const {
    Gaussian acc;
    for (const auto& [m, co] : terms_) {
        Gaussian t = co;
        for (std::size_t k = 0; k < kNumCoords; ++k) {
            mpq_class pw(1);
            for (unsigned e = 0; e < m[k]; ++e) pw *= p[k];
            t *= Gaussian(pw);
        }
        acc += t;
    }
    return acc;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // descending monomial order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        const Gaussian& c = it->second;
        bool constant_term = (m == Monomial{});

        std::string cs = c.str();
        bool negative_lead = !cs.empty() && cs[0] == '-';
        std::string body;

        std::string vars;
        for (std::size_t k = 0; k < kNumCoords; ++k) {
            if (m[k] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += kCoordNames[k];
            if (m[k] > 1) vars += "^" + std::to_string(m[k]);
        }

        if (constant_term) {
            body = cs;
            negative_lead = !body.empty() && body[0] == '-';
            if (negative_lead) body = body.substr(1);
            if (body.find('+') != std::string::npos || body.find('-') != std::string::npos)
                body = "(" + (negative_lead ? "-" + body : body) + ")", negative_lead = false;
        } else if (c.is_one()) {
            body = vars;
            negative_lead = false;
        } else if (c == Gaussian(-1)) {
            body = vars;
            negative_lead = true;
        } else {
            // complex coefficients with two parts need parentheses to re-parse
            if (!c.is_real() && c.re() != 0)
                body = "(" + cs + ")*" + vars, negative_lead = false;
            else {
                if (negative_lead) cs = cs.substr(1);
                body = cs + "*" + vars;
            }
        }

        if (out.empty())
            out = (negative_lead ? "-" : "") + body;
        else
            out += (negative_lead ? "-" : "+") + body;
    }
    return out;
}

// --- gcd via primitive polynomial remainder sequences ---

namespace {

/// First coordinate that a polynomial pair actually uses, if any.
int pick_main_var(const Polynomial& a, const Polynomial& b) {
    for (std::size_t k = 0; k < kNumCoords; ++k) {
        Coord c = static_cast<Coord>(k);
        if (a.depends_on(c) || b.depends_on(c)) return static_cast<int>(k);
    }
    return -1;
}

/// Coefficients of p viewed as a univariate polynomial in var.
std::vector<Polynomial> coeffs_in(const Polynomial& p, int var) {
    std::vector<Polynomial> cs(p.is_zero() ? 0 : p.degree(static_cast<Coord>(var)) + 1);
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        unsigned e = rest[var];
        rest[var] = 0;
        cs[e] += monomial_poly(rest, c);
    }
    return cs;
}

Polynomial recompose(const std::vector<Polynomial>& cs, int var) {
    Polynomial x = Polynomial::variable(static_cast<Coord>(var));
    Polynomial r;
    Polynomial xp(Gaussian(1));
    for (std::size_t e = 0; e < cs.size(); ++e) {
        r += cs[e] * xp;
        xp *= x;
    }
    return r;
}

void trim(std::vector<Polynomial>& cs) {
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

Polynomial content_in(const Polynomial& p, int var) {
    auto cs = coeffs_in(p, var);
    Polynomial g;
    for (const auto& c : cs) g = poly_gcd(g, c);
    return g;
}

/// Standard pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b
/// in var (both nonzero, deg a >= deg b >= 0); the full power keeps the
/// subresultant divisions exact.
Polynomial pseudo_rem(std::vector<Polynomial> a, const std::vector<Polynomial>& b, int var) {
    trim(a);
    const Polynomial& blc = b.back();
    const std::size_t db = b.size() - 1;
    std::size_t lam = a.size() - db;  // deg a - deg b + 1
    while (!a.empty() && a.size() - 1 >= db) {
        std::size_t da = a.size() - 1;
        Polynomial alc = a.back();
        // a := blc * a - alc * x^(da-db) * b
        for (auto& c : a) c = c * blc;
        for (std::size_t j = 0; j < b.size(); ++j) a[da - db + j] -= alc * b[j];
        trim(a);
        --lam;
    }
    Polynomial r = recompose(a, var);
    for (std::size_t t = 0; t < lam; ++t) r = r * blc;
    return r;
}

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Gaussian(1) / p.leading_coefficient());
}

/// Univariate remainder over the field Q(i); inputs are dense coefficient
/// vectors, highest degree last.
std::vector<Gaussian> uni_rem(std::vector<Gaussian> a, const std::vector<Gaussian>& b) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    while (a.size() >= b.size()) {
        Gaussian q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= q * b[j];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

/// Degree of gcd of the univariate images; 0 certifies the images coprime.
std::size_t uni_gcd_degree(std::vector<Gaussian> a, std::vector<Gaussian> b) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

/// Image of p as a univariate polynomial in var, all other coordinates
/// evaluated at pt.
std::vector<Gaussian> uni_image(const Polynomial& p, int var, const Point& pt) {
    std::vector<Gaussian> cs(p.degree(static_cast<Coord>(var)) + 1);
    for (const auto& [m, c] : p.terms()) {
        Gaussian v = c;
        for (std::size_t k = 0; k < kNumCoords; ++k) {
            if (static_cast<int>(k) == var) continue;
            for (unsigned e = 0; e < m[k]; ++e) v *= Gaussian(pt[k]);
        }
        cs[m[var]] += v;
    }
    while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
    return cs;
}

/// Exact certificate that gcd(a, b) is constant. For each variable of both
/// inputs, pick a point where lc_var(a) does not vanish; then
/// lc_var(gcd) | lc_var(a) keeps its degree under evaluation, so a degree-0
/// univariate gcd of the images certifies deg_var(gcd) = 0. Returns false
/// (inconclusive) when a probe shows positive degree or no good point is found.
bool certified_coprime(const Polynomial& a, const Polynomial& b) {
    for (std::size_t k = 0; k < kNumCoords; ++k) {
        Coord vc = static_cast<Coord>(k);
        if (!a.depends_on(vc) || !b.depends_on(vc)) continue;
        int var = static_cast<int>(k);
        Polynomial lc = coeffs_in(a, var).back();
        // A degree-0 probe is a certificate; a positive-degree probe is only
        // inconclusive (the images may share an accidental root), so retry at
        // independent points before giving up on this variable.
        bool certified = false;
        std::minstd_rand probe_rng(0x5eedu + static_cast<unsigned>(k));
        for (int t = 0; t < 12 && !certified; ++t) {
            Point pt;
            for (auto& q : pt)
                q = mpq_class(static_cast<long>(probe_rng() % 2003) + 2);
            if (lc.evaluate(pt).is_zero()) continue;
            if (uni_gcd_degree(uni_image(a, var, pt), uni_image(b, var, pt)) == 0)
                certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

}  // namespace

namespace {

/// Componentwise minimum exponent vector over all terms.
Monomial monomial_content(const Polynomial& p) {
    Monomial m = p.terms().begin()->first;
    for (const auto& [mono, c] : p.terms())
        for (std::size_t k = 0; k < kNumCoords; ++k) m[k] = std::min(m[k], mono[k]);
    return m;
}

Polynomial strip_monomial(const Polynomial& p, const Monomial& m) {
    Monomial one{};
    if (m == one) return p;
    Polynomial div = monomial_poly(m, Gaussian(1));
    return p.divide_exact(div);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);

    // split off the monomial content first: it is both cheap and the common
    // reason a nontrivial gcd exists at all
    Monomial ma = monomial_content(a), mb = monomial_content(b);
    Monomial shared{};
    bool stripped = false;
    for (std::size_t k = 0; k < kNumCoords; ++k) {
        shared[k] = std::min(ma[k], mb[k]);
        if (ma[k] > 0 || mb[k] > 0) stripped = true;
    }
    if (stripped) {
        Polynomial core = poly_gcd(strip_monomial(a, ma), strip_monomial(b, mb));
        return make_monic(core * monomial_poly(shared, Gaussian(1)));
    }

    int var = pick_main_var(a, b);
    if (var < 0) return Polynomial(Gaussian(1));  // two nonzero constants
    if (certified_coprime(a, b)) return Polynomial(Gaussian(1));

    Coord vc = static_cast<Coord>(var);
    if (!a.depends_on(vc) || !b.depends_on(vc)) {
        // var occurs in only one argument: gcd divides the other's content
        const Polynomial& flat = a.depends_on(vc) ? b : a;
        const Polynomial& tall = a.depends_on(vc) ? a : b;
        return poly_gcd(flat, content_in(tall, var));
    }

    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial pa = a.divide_exact(ca);
    Polynomial pb = b.divide_exact(cb);
    Polynomial cont = poly_gcd(ca, cb);

    // subresultant PRS: each pseudo-remainder is divided by the tracked
    // factor g * h^delta, which is exact and avoids recomputing multivariate
    // contents inside the loop
    std::vector<Polynomial> u = coeffs_in(pa, var);
    std::vector<Polynomial> v = coeffs_in(pb, var);
    if (u.size() < v.size()) std::swap(u, v);
    Polynomial U = recompose(u, var), V = recompose(v, var);
    Polynomial g(Gaussian(1)), h(Gaussian(1));
    while (!V.is_zero()) {
        std::vector<Polynomial> uc = coeffs_in(U, var), vcs = coeffs_in(V, var);
        std::size_t delta = uc.size() - vcs.size();  // deg U - deg V
        Polynomial R = pseudo_rem(uc, vcs, var);
        U = V;
        if (R.is_zero()) break;
        V = R.divide_exact(g * h.pow(static_cast<unsigned>(delta)));
        g = coeffs_in(U, var).back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = g.pow(static_cast<unsigned>(delta))
                    .divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
    }
    Polynomial prim = U.divide_exact(content_in(U, var));
    return make_monic(cont * prim);
}

}  // namespace cartan
