#pragma once

#include <gmpxx.h>

#include <string>

namespace thetapairs {

// re + im*i with arbitrary-precision rational parts.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v), im_(0) {}
    GaussRat(int v) : re_(v), im_(0) {}
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(0, 1); }
    static GaussRat frac(long num, long den);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // Total order used only for canonical sorting: by re, then im.
    friend bool canonical_less(const GaussRat& a, const GaussRat& b) {
        int c = cmp(a.re_, b.re_);
        return c < 0 || (c == 0 && cmp(a.im_, b.im_) < 0);
    }

    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

} // namespace thetapairs
