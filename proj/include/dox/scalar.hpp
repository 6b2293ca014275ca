#pragma once

#include <gmpxx.h>

#include <string>

namespace dox {

// Element re + im*i of Q(i); plain Q is the im == 0 slice.
struct Scalar {
    mpq_class re;
    mpq_class im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class r) : re(std::move(r)), im(0) { re.canonicalize(); }  // NOLINT
    Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static Scalar I() { return Scalar(0, 1); }
    static Scalar ratio(long p, long q) { return Scalar(mpq_class(p, q)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Grammar form: "3", "-1/2", "i", "-2*i", "1/2+3*i", "1-i".
    std::string str() const;
    // Rational parts as "p/q" strings (q omitted when 1), used by the JSON layer.
    std::string re_str() const { return re.get_str(); }
    std::string im_str() const { return im.get_str(); }

    // Parses the output of str(); throws dox::Error(Parse) otherwise.
    static Scalar parse(const std::string& s);
    static Scalar from_parts(const std::string& re, const std::string& im);
};

}  // namespace dox
