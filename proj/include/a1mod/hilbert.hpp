#pragma once

#include "a1mod/module.hpp"

#include <climits>
#include <string>
#include <vector>

namespace a1mod {

/* Laurent polynomial with integer coefficients, c[i] is the coefficient of t^(lo+i) */
struct LaurentPoly
{
    int lo = 0;
    std::vector<long> c;

    static LaurentPoly monomial(int e, long coef = 1);
    static LaurentPoly from(std::vector<long> c, int lo = 0) { return {lo, std::move(c)}; }
    long at(int e) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly pow(int k) const;
};

/* coefficients of degrees lo..cutoff */
struct TruncatedSeries
{
    int lo = 0;
    int cutoff = -1;
    std::vector<long> coef;
    /* all coefficients above cutoff are known to be zero (finite modules) */
    bool exact = false;

    long at(int d) const { return (d < lo || d > cutoff) ? 0 : coef[d - lo]; }
    /* last degree where the coefficient is known */
    int known_to() const { return exact ? INT_MAX : cutoff; }
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    /* equal in degrees lo..hi */
    bool agrees(const TruncatedSeries& o, int lo, int hi) const;
    std::string to_string() const;
};

TruncatedSeries series_of(const GradedModule& m);
TruncatedSeries series_of(const LaurentPoly& p, int cutoff);
/* num/den as a power series in t, den with a unit lowest coefficient */
TruncatedSeries expand_rational(const LaurentPoly& num, const LaurentPoly& den, int lo, int cutoff);

/* H(P_n) from the extension description: t^{8k} (t^{a}/(1-t) + finite part) */
TruncatedSeries hilbert_P(int n, int cutoff);
/* H(P_n) = t^{2n} Q_n(t)/(1-t) */
TruncatedSeries hilbert_P_q_form(int n, int cutoff);
/* Q_n(t) as a Laurent polynomial */
LaurentPoly q_poly(int n);
/* (t/(1-t))^n */
TruncatedSeries hilbert_poly_tensor(int n, int cutoff);
/* Hilbert series of the free part of P^(x)n */
TruncatedSeries free_part_series(int n, int cutoff);
/* the same divided by H(A(1)): number of free generators per degree */
TruncatedSeries free_generator_series(int n, int cutoff);

}  // namespace a1mod
