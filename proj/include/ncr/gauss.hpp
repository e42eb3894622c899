#pragma once

#include <gmpxx.h>

#include <string>

namespace ncr {

// Gaussian rational re + i*im.
struct GQ {
    mpq_class re{0};
    mpq_class im{0};

    GQ() = default;
    GQ(long v) : re(v) {}
    GQ(mpq_class r) : re(std::move(r)) {}
    GQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GQ I() { return GQ(0, 1); }
    static GQ frac(long p, long q) {
        mpq_class r(p, q);
        r.canonicalize();
        return GQ(r);
    }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GQ conj() const { return GQ(re, -im); }
    mpq_class norm() const { return re * re + im * im; }

    GQ operator-() const { return GQ(-re, -im); }
    GQ& operator+=(const GQ& o) { re += o.re; im += o.im; return *this; }
    GQ& operator-=(const GQ& o) { re -= o.re; im -= o.im; return *this; }
    GQ& operator*=(const GQ& o) {
        mpq_class r = re * o.re - im * o.im;
        mpq_class i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GQ& operator/=(const GQ& o) {
        mpq_class n = o.norm();
        mpq_class r = (re * o.re + im * o.im) / n;
        mpq_class i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GQ inv() const { GQ one(1); one /= *this; return one; }

    friend GQ operator+(GQ a, const GQ& b) { return a += b; }
    friend GQ operator-(GQ a, const GQ& b) { return a -= b; }
    friend GQ operator*(GQ a, const GQ& b) { return a *= b; }
    friend GQ operator/(GQ a, const GQ& b) { return a /= b; }
    friend bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

    GQ pow(unsigned e) const {
        GQ r(1), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    // "3/4", "-i", "(1/2-3/4*i)".
    std::string str() const;
};

}  // namespace ncr
