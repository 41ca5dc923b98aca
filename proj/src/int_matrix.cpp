#include "thetapairs/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace thetapairs {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && sgn((*this)(i, j)) != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix *: shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a);
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

std::vector<mpz_class> IntMatrix::apply(const std::vector<mpz_class>& v) const {
    std::vector<mpz_class> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

mpz_class determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
    // Bareiss fraction-free elimination.
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a(m);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::vector<mpz_class> SmithForm::invariants() const {
    std::vector<mpz_class> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row_a -= f * row_b
void add_row(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) -= f * m(b, j);
}
void add_col(IntMatrix& m, std::size_t a, std::size_t b, const mpz_class& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) -= f * m(i, b);
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    IntMatrix d(m), u = IntMatrix::identity(r), v = IntMatrix::identity(c);
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pi = r, pj = c;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j)
                    if (sgn(d(i, j)) != 0 && (pi == r || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == r) goto done;
            swap_rows(d, t, pi);
            swap_rows(u, t, pi);
            swap_cols(d, t, pj);
            swap_cols(v, t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                add_row(d, i, t, q);
                add_row(u, i, t, q);
                if (sgn(d(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                add_col(d, j, t, q);
                add_col(v, j, t, q);
                if (sgn(d(t, j)) != 0) clean = false;
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
                        add_row(d, t, i, -1);
                        add_row(u, t, i, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (sgn(d(t, t)) < 0) {
            for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < r; ++j) u(t, j) = -u(t, j);
        }
    }
done:
    return {std::move(d), std::move(u), std::move(v)};
}

} // namespace thetapairs
