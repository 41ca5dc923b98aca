#pragma once

#include "thetapairs/gauss_rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace thetapairs {

using Vec = std::vector<GaussRat>;

// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<GaussRat>> rows);

    static Matrix identity(std::size_t n);
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j); // E_ij
    static Matrix diagonal(const Vec& d);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    GaussRat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussRat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<GaussRat>& entries() const { return data_; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    Vec flatten() const { return data_; }
    static Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

    Matrix transpose() const;
    GaussRat trace() const;
    bool is_zero() const;
    bool is_diagonal() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const GaussRat& s);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const GaussRat& s) { return a *= s; }
    friend Matrix operator*(const GaussRat& s, Matrix a) { return a *= s; }
    Matrix operator-() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussRat> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const GaussRat& s);
bool vec_is_zero(const Vec& a);
GaussRat dot(const Vec& a, const Vec& b);

struct Echelon {
    Matrix reduced;                   // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Gauss-Jordan elimination; the pivot is the first nonzero entry in the lowest column.
Echelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
GaussRat determinant(const Matrix& m);
// Particular solution of a*x = b with free variables set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// Monic, descending degree: x^n + c_1 x^{n-1} + ... + c_n.
std::vector<GaussRat> char_poly(const Matrix& m);
bool is_nilpotent(const Matrix& m);
bool is_semisimple(const Matrix& m);
Matrix jordan_semisimple_part(const Matrix& m);

} // namespace thetapairs
