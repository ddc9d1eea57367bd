#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace adshiggs {

/// Exact Gaussian rational re + im*i. The imaginary unit lives in the
/// coefficient ring so that formal conjugation can act on coefficients.
struct GaussQ {
    mpq_class re;
    mpq_class im;

    GaussQ() : re(0), im(0) {}
    GaussQ(long r) : re(r), im(0) {}
    GaussQ(long num, long den) : re(mpq_class(num, den)), im(0) { re.canonicalize(); }
    GaussQ(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussQ i() { return GaussQ(mpq_class(0), mpq_class(1)); }
    static GaussQ imag(long num, long den = 1) {
        mpq_class v(num, den);
        v.canonicalize();
        return GaussQ(mpq_class(0), v);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussQ conj() const { return GaussQ(re, -im); }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string str() const;

    GaussQ operator-() const { return GaussQ(-re, -im); }
    GaussQ& operator+=(const GaussQ& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussQ& operator-=(const GaussQ& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
    friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend bool operator==(const GaussQ& a, const GaussQ& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace adshiggs
