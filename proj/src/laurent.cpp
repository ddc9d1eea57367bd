#include "adshiggs/laurent.hpp"

#include <cmath>
#include <stdexcept>

namespace adshiggs {

const char* sym_name(Sym s) {
    static const char* names[SymCount] = {"a", "a*", "b", "b*", "c", "c*", "d", "d*",
                                          "h", "k",  "g", "E", "w", "w*", "u", "u*"};
    return names[s];
}

Sym conj_partner(Sym s) {
    switch (s) {
        case SymA: return SymAc;
        case SymAc: return SymA;
        case SymB: return SymBc;
        case SymBc: return SymB;
        case SymC: return SymCc;
        case SymCc: return SymC;
        case SymD: return SymDc;
        case SymDc: return SymD;
        case SymW: return SymWc;
        case SymWc: return SymW;
        case SymU: return SymUc;
        case SymUc: return SymU;
        default: return s;
    }
}

LaurentPoly::LaurentPoly(GaussQ constant) {
    if (!constant.is_zero()) terms_[Exps{}] = std::move(constant);
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(GaussQ(constant)) {}

LaurentPoly LaurentPoly::var(Sym s, int exponent) {
    Exps e{};
    e[s] = static_cast<int16_t>(exponent);
    return monomial(GaussQ(1), e);
}

LaurentPoly LaurentPoly::monomial(GaussQ coeff, const Exps& exps) {
    LaurentPoly p;
    p.add_term(exps, coeff);
    return p;
}

void LaurentPoly::add_term(Exps exps, const GaussQ& coeff) {
    if (coeff.is_zero()) return;
    // g^2 -> h^-1 k applied exhaustively; the canonical form keeps the
    // g-exponent in {0, 1} (so g^-1 is stored as h k^-1 g).
    const int ge = exps[SymG];
    const int r = ((ge % 2) + 2) % 2;
    const int shift = (ge - r) / 2;
    if (shift != 0) {
        exps[SymG] = static_cast<int16_t>(r);
        exps[SymH] = static_cast<int16_t>(exps[SymH] - shift);
        exps[SymK] = static_cast<int16_t>(exps[SymK] + shift);
    }
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool LaurentPoly::even_in_g() const {
    for (const auto& [e, c] : terms_)
        if (e[SymG] % 2 != 0) return false;
    return true;
}

LaurentPoly LaurentPoly::conjugate() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        Exps f{};
        for (int s = 0; s < SymCount; ++s) f[conj_partner(static_cast<Sym>(s))] = e[s];
        f[SymE] = static_cast<int16_t>(-e[SymE]);
        out.add_term(f, c.conj());
    }
    return out;
}

LaurentPoly LaurentPoly::theta_derivative() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        long n = e[SymE];
        if (n == 0) continue;
        out.add_term(e, GaussQ::imag(n) * c);
    }
    return out;
}

LaurentPoly LaurentPoly::substitute_zero(Sym s, bool with_conjugate) const {
    Sym partner = conj_partner(s);
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[s] < 0 || (with_conjugate && e[partner] < 0))
            throw std::domain_error(std::string("substitute_zero: negative power of ") +
                                    sym_name(s));
        if (e[s] > 0) continue;
        if (with_conjugate && partner != s && e[partner] > 0) continue;
        out.add_term(e, c);
    }
    return out;
}

std::complex<double> LaurentPoly::eval(
    const std::array<std::complex<double>, SymCount>& values) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int s = 0; s < SymCount; ++s) {
            if (e[s] == 0) continue;
            t *= std::pow(values[s], static_cast<double>(e[s]));
        }
        acc += t;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += "(" + c.str() + ")";
        for (int s = 0; s < SymCount; ++s) {
            if (e[s] == 0) continue;
            out += " ";
            out += sym_name(static_cast<Sym>(s));
            if (e[s] != 1) out += "^" + std::to_string(e[s]);
        }
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exps e;
            for (int s = 0; s < SymCount; ++s) e[s] = static_cast<int16_t>(ea[s] + eb[s]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly operator*(const GaussQ& c, const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, pc] : p.terms_) out.add_term(e, c * pc);
    return out;
}

}  // namespace adshiggs
