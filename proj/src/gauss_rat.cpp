#include "thetapairs/gauss_rat.hpp"

#include <ostream>
#include <stdexcept>

namespace thetapairs {

GaussRat GaussRat::frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRat(q);
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw std::domain_error("GaussRat: division by zero");
    if (is_real()) return GaussRat(1 / re_);
    mpq_class n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussRat::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = im_.get_str() + "i";
    if (sgn(re_) == 0) return imag;
    if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
    return re_.get_str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.to_string(); }

} // namespace thetapairs
