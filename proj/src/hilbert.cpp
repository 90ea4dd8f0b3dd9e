#include "a1mod/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace a1mod {

LaurentPoly LaurentPoly::monomial(int e, long coef)
{
    return {e, {coef}};
}

long LaurentPoly::at(int e) const
{
    return (e < lo || e >= lo + int(c.size())) ? 0 : c[e - lo];
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    if (c.empty() || o.c.empty())
        return {0, {}};
    LaurentPoly r{lo + o.lo, std::vector<long>(c.size() + o.c.size() - 1, 0)};
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] += c[i] * o.c[j];
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    if (c.empty())
        return o;
    if (o.c.empty())
        return *this;
    int l = std::min(lo, o.lo);
    int h = std::max(lo + int(c.size()), o.lo + int(o.c.size()));
    LaurentPoly r{l, std::vector<long>(h - l, 0)};
    for (int e = l; e < h; ++e)
        r.c[e - l] = at(e) + o.at(e);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    LaurentPoly n = o;
    for (long& x : n.c)
        x = -x;
    return *this + n;
}

LaurentPoly LaurentPoly::pow(int k) const
{
    LaurentPoly r = monomial(0);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const
{
    TruncatedSeries r;
    r.lo = lo + o.lo;
    r.exact = exact && o.exact;
    if (r.exact)
        r.cutoff = cutoff + o.cutoff;
    else if (exact)
        r.cutoff = o.cutoff + lo;
    else if (o.exact)
        r.cutoff = cutoff + o.lo;
    else
        r.cutoff = std::min(cutoff + o.lo, o.cutoff + lo);
    r.coef.assign(std::max(0, r.cutoff - r.lo + 1), 0);
    for (int a = lo; a <= cutoff; ++a)
        for (int b = o.lo; b <= o.cutoff && a + b <= r.cutoff; ++b)
            r.coef[a + b - r.lo] += at(a) * o.at(b);
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r;
    r.lo = std::min(lo, o.lo);
    r.exact = exact && o.exact;
    r.cutoff = r.exact ? std::max(cutoff, o.cutoff) : std::min(exact ? INT_MAX : cutoff, o.exact ? INT_MAX : o.cutoff);
    for (int d = r.lo; d <= r.cutoff; ++d)
        r.coef.push_back(at(d) + o.at(d));
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const
{
    TruncatedSeries r;
    r.lo = std::min(lo, o.lo);
    r.exact = exact && o.exact;
    r.cutoff = r.exact ? std::max(cutoff, o.cutoff) : std::min(exact ? INT_MAX : cutoff, o.exact ? INT_MAX : o.cutoff);
    for (int d = r.lo; d <= r.cutoff; ++d)
        r.coef.push_back(at(d) - o.at(d));
    return r;
}

bool TruncatedSeries::agrees(const TruncatedSeries& o, int l, int h) const
{
    for (int d = l; d <= h; ++d)
        if (at(d) != o.at(d))
            return false;
    return true;
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int d = lo; d <= cutoff; ++d) {
        long x = at(d);
        if (!x)
            continue;
        os << (first ? (x < 0 ? "-" : "") : (x < 0 ? " - " : " + "));
        first = false;
        long ax = x < 0 ? -x : x;
        if (ax != 1 || d == 0)
            os << ax;
        if (d != 0)
            os << (ax != 1 ? "*" : "") << "t^" << d;
    }
    if (first)
        os << "0";
    os << " + O(t^" << cutoff + 1 << ")";
    return os.str();
}

TruncatedSeries series_of(const GradedModule& m)
{
    TruncatedSeries s;
    s.lo = m.window().lo;
    s.exact = m.complete_top();
    s.cutoff = s.exact ? m.window().hi : m.trusted().hi;
    for (int d = s.lo; d <= s.cutoff; ++d)
        s.coef.push_back(long(m.dim(d)));
    return s;
}

TruncatedSeries series_of(const LaurentPoly& p, int cutoff)
{
    TruncatedSeries s;
    s.lo = p.lo;
    s.cutoff = cutoff;
    for (int d = s.lo; d <= cutoff; ++d)
        s.coef.push_back(p.at(d));
    return s;
}

TruncatedSeries expand_rational(const LaurentPoly& num, const LaurentPoly& den, int lo, int cutoff)
{
    // strip leading zeros of the denominator
    LaurentPoly d = den;
    size_t z = 0;
    while (z < d.c.size() && d.c[z] == 0)
        ++z;
    if (z == d.c.size())
        throw std::invalid_argument("expand_rational: zero denominator");
    d.c.erase(d.c.begin(), d.c.begin() + z);
    d.lo += int(z);
    if (d.c[0] != 1 && d.c[0] != -1)
        throw std::invalid_argument("expand_rational: lowest denominator coefficient must be a unit");
    // num / d = t^(num.lo - d.lo) * (num' / d')
    int shift = num.lo - d.lo;
    int n = cutoff - shift + 1;
    std::vector<long> q(std::max(0, n), 0);
    for (int k = 0; k < n; ++k) {
        long acc = k < int(num.c.size()) ? num.c[k] : 0;
        for (int j = 1; j <= k && j < int(d.c.size()); ++j)
            acc -= d.c[j] * q[k - j];
        q[k] = acc * d.c[0];  // d.c[0] = +-1 is its own inverse
    }
    TruncatedSeries s;
    s.lo = lo;
    s.cutoff = cutoff;
    for (int e = lo; e <= cutoff; ++e) {
        int k = e - shift;
        s.coef.push_back((k >= 0 && k < n) ? q[k] : 0);
    }
    return s;
}

namespace {

int floor_div4(int n)
{
    return n >= 0 ? n / 4 : -((-n + 3) / 4);
}

LaurentPoly one_minus_t()
{
    return LaurentPoly::from({1, -1});
}

}  // namespace

TruncatedSeries hilbert_P(int n, int cutoff)
{
    int k = floor_div4(n), i = n - 4 * k;
    static const int bottoms[4] = {-1, 1, 2, 3};
    LaurentPoly extra{0, {}};
    if (i == 2)
        extra = LaurentPoly::from({1, 0, 1, 1}, 3);
    if (i == 3)
        extra = LaurentPoly::from({1, 1}, 6);
    int lo = bottoms[i] + 8 * k;
    TruncatedSeries a = expand_rational(LaurentPoly::monomial(lo), one_minus_t(), lo, cutoff);
    TruncatedSeries b = series_of(extra * LaurentPoly::monomial(8 * k), cutoff);
    if (extra.c.empty())
        return a;
    return a + b;
}

LaurentPoly q_poly(int n)
{
    int i = ((n % 4) + 4) % 4;
    switch (i) {
    case 0:
    case 1:
        return LaurentPoly::monomial(-1);
    case 2:
        return LaurentPoly::from({1, 1, -1, 1, 0, -1}, -2);
    default:
        return LaurentPoly::from({1, 0, 0, 1, 0, -1}, -3);
    }
}

TruncatedSeries hilbert_P_q_form(int n, int cutoff)
{
    LaurentPoly num = LaurentPoly::monomial(2 * n) * q_poly(n);
    return expand_rational(num, one_minus_t(), std::min(num.lo, cutoff), cutoff);
}

TruncatedSeries hilbert_poly_tensor(int n, int cutoff)
{
    return expand_rational(LaurentPoly::monomial(n), one_minus_t().pow(n), n, cutoff);
}

namespace {

LaurentPoly free_numerator(int n)
{
    // t^n (1 - t^n (1-t)^{n-1} Q_n(t))
    LaurentPoly inner = LaurentPoly::monomial(0) - LaurentPoly::monomial(n) * one_minus_t().pow(n - 1) * q_poly(n);
    return LaurentPoly::monomial(n) * inner;
}

LaurentPoly free_denominator(int n)
{
    return one_minus_t().pow(n - 1) * LaurentPoly::from({1, 0, 0, 0, -1}) * LaurentPoly::from({1, 0, 0, 1});
}

}  // namespace

TruncatedSeries free_generator_series(int n, int cutoff)
{
    if (n < 1)
        throw std::invalid_argument("free_generator_series: n must be positive");
    return expand_rational(free_numerator(n), free_denominator(n), 0, cutoff);
}

TruncatedSeries free_part_series(int n, int cutoff)
{
    if (n < 1)
        throw std::invalid_argument("free_part_series: n must be positive");
    LaurentPoly ha = LaurentPoly::from({1, 1}) * LaurentPoly::from({1, 0, 1}) * LaurentPoly::from({1, 0, 0, 1});
    return expand_rational(free_numerator(n) * ha, free_denominator(n), 0, cutoff);
}

}  // namespace a1mod
