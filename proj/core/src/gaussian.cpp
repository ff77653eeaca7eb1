#include "cartan/gaussian.hpp"

#include <sstream>

namespace cartan {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<Gaussian> Gaussian::sqrt() const {
    if (is_zero()) return Gaussian();
    if (im_ == 0) {
        if (re_ > 0) {
            auto r = rational_sqrt(re_);
            if (!r) return std::nullopt;
            return Gaussian(*r);
        }
        auto r = rational_sqrt(mpq_class(-re_));
        if (!r) return std::nullopt;
        return Gaussian(mpq_class(0), *r);
    }
    // (c + d i)^2 = re + im i  =>  c^2 = (re + |z|)/2, d = im/(2c).
    auto modulus = rational_sqrt(norm());
    if (!modulus) return std::nullopt;
    mpq_class c2 = (re_ + *modulus) / 2;
    auto c = rational_sqrt(c2);
    if (!c || *c == 0) return std::nullopt;
    mpq_class d = im_ / (2 * (*c));
    Gaussian root(*c, d);
    if (root * root != *this) return std::nullopt;
    if (root.re_ < 0 || (root.re_ == 0 && root.im_ < 0)) root = -root;
    return root;
}

namespace {
std::string rat_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}
}  // namespace

std::string Gaussian::str() const {
    if (is_zero()) return "0";
    if (im_ == 0) return rat_str(re_);
    std::string ip;
    if (im_ == 1)
        ip = "i";
    else if (im_ == -1)
        ip = "-i";
    else
        ip = rat_str(im_) + "*i";
    if (re_ == 0) return ip;
    std::string s = rat_str(re_);
    if (im_ > 0) s += "+";
    return s + ip;
}

}  // namespace cartan
