#include "thetapairs/polynomial.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace thetapairs {

Poly::Poly(std::vector<GaussRat> ascending) : c_(std::move(ascending)) { trim(); }

Poly Poly::from_descending(const std::vector<GaussRat>& desc) {
    return Poly(std::vector<GaussRat>(desc.rbegin(), desc.rend()));
}

Poly Poly::monomial(const GaussRat& c, std::size_t deg) {
    std::vector<GaussRat> v(deg + 1);
    v[deg] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    GaussRat inv = lead().inverse();
    std::vector<GaussRat> v(c_);
    for (auto& x : v) x *= inv;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussRat> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussRat(static_cast<long>(k));
    return Poly(std::move(v));
}

GaussRat Poly::operator()(const GaussRat& x) const {
    GaussRat r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Matrix Poly::operator()(const Matrix& x) const {
    Matrix r(x.rows(), x.cols());
    Matrix id = Matrix::identity(x.rows());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + id * *it;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussRat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussRat> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussRat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
    std::vector<GaussRat> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<GaussRat> q(a.degree() - db + 1);
    GaussRat inv = b.lead().inverse();
    for (int k = a.degree(); k >= db; --k) {
        GaussRat f = r[k] * inv;
        q[k - db] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    Poly g = Poly::gcd(p, p.derivative());
    return Poly::divmod(p, g).first.monic();
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    mpq_class r(rn, rd);
    r.canonicalize();
    return r;
}

using Cx = std::complex<long double>;

std::vector<Cx> numeric_roots(const Poly& p) {
    int n = p.degree();
    std::vector<Cx> a(n + 1);
    for (int k = 0; k <= n; ++k)
        a[k] = Cx(p.coeff(k).re().get_d(), p.coeff(k).im().get_d());
    for (auto& x : a) x /= a[n];
    long double radius = 1;
    for (int k = 0; k < n; ++k) radius = std::max(radius, 1 + std::abs(a[k]));
    std::vector<Cx> z(n);
    for (int k = 0; k < n; ++k)
        z[k] = std::polar(radius * 0.9L, 2.0L * 3.14159265358979323846L * (k + 0.25L) / n + 0.4L);
    auto eval = [&](Cx x) {
        Cx r = 0;
        for (int k = n; k >= 0; --k) r = r * x + a[k];
        return r;
    };
    for (int it = 0; it < 2000; ++it) {
        long double change = 0;
        for (int k = 0; k < n; ++k) {
            Cx den = 1;
            for (int j = 0; j < n; ++j)
                if (j != k) den *= (z[k] - z[j]);
            if (std::abs(den) == 0) den = 1e-30L;
            Cx step = eval(z[k]) / den;
            z[k] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-30L) break;
    }
    return z;
}

mpz_class round_to_mpz(long double x) {
    long double r = std::floor(x + 0.5L);
    mpz_class out;
    mpz_set_d(out.get_mpz_t(), static_cast<double>(r));
    return out;
}

} // namespace

std::optional<GaussRat> exact_sqrt(const GaussRat& z) {
    if (z.is_real()) {
        if (sgn(z.re()) >= 0) {
            auto r = rational_sqrt(z.re());
            if (r) return GaussRat(*r);
            return std::nullopt;
        }
        auto r = rational_sqrt(-z.re());
        if (r) return GaussRat(0, *r);
        return std::nullopt;
    }
    auto m = rational_sqrt(z.norm());
    if (!m) return std::nullopt;
    auto u = rational_sqrt((z.re() + *m) / 2);
    if (!u || sgn(*u) == 0) return std::nullopt;
    mpq_class v = z.im() / (2 * *u);
    GaussRat s(*u, v);
    if (s * s != z) return std::nullopt;
    return s;
}

GaussianRootSearch gaussian_roots(const Poly& input) {
    GaussianRootSearch out;
    Poly p = squarefree_part(input);
    if (p.degree() <= 0) {
        out.splits = true;
        return out;
    }
    // Roots of the monic p, scaled by the common denominator, are algebraic integers;
    // a Gaussian-rational one is therefore a Gaussian integer over that denominator.
    mpz_class scale = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.re().get_den_mpz_t());
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.im().get_den_mpz_t());
    }
    Poly rest = p;
    while (rest.degree() > 2) {
        bool found = false;
        for (const Cx& z : numeric_roots(rest)) {
            long double sd = scale.get_d();
            mpq_class re(round_to_mpz(z.real() * sd), scale), im(round_to_mpz(z.imag() * sd), scale);
            re.canonicalize();
            im.canonicalize();
            GaussRat cand(re, im);
            if (rest(cand).is_zero()) {
                out.roots.push_back(cand);
                rest = Poly::divmod(rest, Poly({-cand, GaussRat(1)})).first;
                found = true;
                break;
            }
        }
        if (!found) return out;
    }
    if (rest.degree() == 1) {
        out.roots.push_back(-rest.coeff(0) / rest.coeff(1));
    } else if (rest.degree() == 2) {
        GaussRat a = rest.coeff(2), b = rest.coeff(1), c = rest.coeff(0);
        auto s = exact_sqrt(b * b - GaussRat(4) * a * c);
        if (!s) return out;
        out.roots.push_back((-b + *s) / (GaussRat(2) * a));
        out.roots.push_back((-b - *s) / (GaussRat(2) * a));
    }
    out.splits = true;
    return out;
}

} // namespace thetapairs
