#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "adshiggs/rational.hpp"

namespace adshiggs {

/// Symbol alphabet for the field data (a,b,c,d stand for the four
/// holomorphic fields), their formal conjugates, the metric entries h, k,
/// the derived scalar g with rewrite rule g^2 -> h^-1 k, the circle phase
/// E = e^{i theta}, the free jet scalar w with conjugate, and the auxiliary
/// pair u, u* used by the domination lemma.
enum Sym : int {
    SymA = 0,
    SymAc,
    SymB,
    SymBc,
    SymC,
    SymCc,
    SymD,
    SymDc,
    SymH,
    SymK,
    SymG,
    SymE,
    SymW,
    SymWc,
    SymU,
    SymUc,
    SymCount
};

const char* sym_name(Sym s);

using Exps = std::array<int16_t, SymCount>;

/// Multivariate Laurent polynomial with exact Gaussian-rational
/// coefficients. Negative exponents encode inverses (h^-1, E^-1, ...).
/// Normal form: the rewrite g^2 -> h^-1 k is applied exhaustively, so every
/// stored term has g-exponent in {-1, 0, 1}; zero-coefficient terms are
/// dropped. The g-exponent parity is rewrite-invariant, so a term with
/// g-exponent 0 had an even g-power before rewriting.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(GaussQ constant);
    explicit LaurentPoly(long constant);

    static LaurentPoly var(Sym s, int exponent = 1);
    static LaurentPoly monomial(GaussQ coeff, const Exps& exps);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exps, GaussQ>& terms() const { return terms_; }

    /// True when every term has even g-power (exponent 0 in normal form).
    bool even_in_g() const;

    /// Formal conjugation: swaps each symbol with its conjugate partner,
    /// negates the E-exponent, conjugates coefficients; h, k, g are fixed.
    LaurentPoly conjugate() const;

    /// Formal d/d theta: multiplies each term by i * (E-exponent).
    LaurentPoly theta_derivative() const;

    /// Sets a symbol (and optionally its conjugate partner) to zero:
    /// terms with a positive exponent of it vanish. Throws when a negative
    /// exponent of the symbol is present.
    LaurentPoly substitute_zero(Sym s, bool with_conjugate = true) const;

    /// Numeric evaluation at an assignment of the alphabet.
    std::complex<double> eval(const std::array<std::complex<double>, SymCount>& values) const;

    std::string str() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const GaussQ& c, const LaurentPoly& p);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    void add_term(Exps exps, const GaussQ& coeff);

    std::map<Exps, GaussQ> terms_;
};

/// Conjugate-partner map: a<->a*, b<->b*, c<->c*, d<->d*, w<->w*, u<->u*;
/// h, k, g, E map to themselves (E is handled by exponent negation).
Sym conj_partner(Sym s);

}  // namespace adshiggs
