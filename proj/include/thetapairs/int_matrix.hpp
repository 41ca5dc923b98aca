#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace thetapairs {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    bool is_diagonal() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> data_;
};

mpz_class determinant(const IntMatrix& m);

struct SmithForm {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v; // u * m * v == d
    std::vector<mpz_class> invariants() const; // diagonal entries, length min(rows, cols)
};

SmithForm smith_normal_form(const IntMatrix& m);

struct IntLattice {
    std::size_t rank = 0;
    std::optional<IntMatrix> endomorphism;
};

} // namespace thetapairs
