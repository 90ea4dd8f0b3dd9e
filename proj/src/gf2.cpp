#include "a1mod/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace a1mod {

bool BitVector::is_zero() const
{
    for (uint64_t w : words_)
        if (w)
            return false;
    return true;
}

size_t BitVector::popcount() const
{
    size_t c = 0;
    for (uint64_t w : words_)
        c += std::popcount(w);
    return c;
}

BitVector& BitVector::operator^=(const BitVector& o)
{
    if (o.len_ != len_)
        throw std::invalid_argument("BitVector xor: length mismatch");
    for (size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= o.words_[i];
    return *this;
}

BitVector BitVector::from_string(const std::string& bits)
{
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i] == '1')
            v.set(i);
    return v;
}

std::string BitVector::to_string() const
{
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::identity(size_t n)
{
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows, size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("BitMatrix::from_rows: ragged row");
        for (size_t c = 0; c < cols; ++c)
            if (rows[r][c] & 1)
                m.set(r, c);
    }
    return m;
}

BitMatrix BitMatrix::from_row_vectors(const std::vector<BitVector>& rows, size_t cols)
{
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

BitVector BitMatrix::row(size_t r) const
{
    BitVector v(cols_);
    std::copy(row_data(r), row_data(r) + wpr_, v.data());
    return v;
}

BitVector BitMatrix::col(size_t c) const
{
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; ++r)
        if (get(r, c))
            v.set(r);
    return v;
}

void BitMatrix::set_row(size_t r, const BitVector& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    std::copy(v.data(), v.data() + wpr_, row_data(r));
}

void BitMatrix::xor_row(size_t dst, size_t src)
{
    uint64_t* d = row_data(dst);
    const uint64_t* s = row_data(src);
    for (size_t i = 0; i < wpr_; ++i)
        d[i] ^= s[i];
}

void BitMatrix::xor_row_from(size_t dst, const BitMatrix& other, size_t src)
{
    uint64_t* d = row_data(dst);
    const uint64_t* s = other.row_data(src);
    for (size_t i = 0; i < wpr_; ++i)
        d[i] ^= s[i];
}

void BitMatrix::swap_rows(size_t a, size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(row_data(a), row_data(a) + wpr_, row_data(b));
}

bool BitMatrix::row_is_zero(size_t r) const
{
    const uint64_t* p = row_data(r);
    for (size_t i = 0; i < wpr_; ++i)
        if (p[i])
            return false;
    return true;
}

void BitMatrix::append_row(const BitVector& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix::append_row: length mismatch");
    data_.insert(data_.end(), v.data(), v.data() + wpr_);
    ++rows_;
}

bool BitMatrix::is_zero() const
{
    for (uint64_t w : data_)
        if (w)
            return false;
    return true;
}

size_t BitMatrix::popcount() const
{
    size_t c = 0;
    for (uint64_t w : data_)
        c += std::popcount(w);
    return c;
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        const uint64_t* p = row_data(r);
        for (size_t w = 0; w < wpr_; ++w) {
            uint64_t x = p[w];
            while (x) {
                int b = std::countr_zero(x);
                t.set(w * 64 + b, r);
                x &= x - 1;
            }
        }
    }
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("BitMatrix product: shape mismatch");
    BitMatrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        const uint64_t* p = row_data(r);
        for (size_t w = 0; w < wpr_; ++w) {
            uint64_t x = p[w];
            while (x) {
                int b = std::countr_zero(x);
                out.xor_row_from(r, o, w * 64 + b);
                x &= x - 1;
            }
        }
    }
    return out;
}

BitVector BitMatrix::operator*(const BitVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix times vector: shape mismatch");
    BitVector out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        const uint64_t* p = row_data(r);
        uint64_t acc = 0;
        for (size_t w = 0; w < wpr_; ++w)
            acc ^= p[w] & v.data()[w];
        if (std::popcount(acc) & 1)
            out.set(r);
    }
    return out;
}

BitMatrix& BitMatrix::operator+=(const BitMatrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("BitMatrix sum: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i)
        data_[i] ^= o.data_[i];
    return *this;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const
{
    BitMatrix r = *this;
    r += o;
    return r;
}

bool BitMatrix::operator==(const BitMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

BitMatrix BitMatrix::block(size_t r0, size_t nr, size_t c0, size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("BitMatrix::block");
    BitMatrix b(nr, nc);
    for (size_t r = 0; r < nr; ++r)
        for (size_t c = 0; c < nc; ++c)
            if (get(r0 + r, c0 + c))
                b.set(r, c);
    return b;
}

void BitMatrix::set_block(size_t r0, size_t c0, const BitMatrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw std::out_of_range("BitMatrix::set_block");
    for (size_t r = 0; r < b.rows_; ++r)
        for (size_t c = 0; c < b.cols_; ++c)
            set(r0 + r, c0 + c, b.get(r, c));
}

BitMatrix BitMatrix::select_rows(const std::vector<size_t>& idx) const
{
    BitMatrix out(idx.size(), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        std::copy(row_data(idx[i]), row_data(idx[i]) + wpr_, out.row_data(i));
    return out;
}

BitMatrix BitMatrix::select_cols(const std::vector<size_t>& idx) const
{
    BitMatrix out(rows_, idx.size());
    for (size_t r = 0; r < rows_; ++r)
        for (size_t i = 0; i < idx.size(); ++i)
            if (get(r, idx[i]))
                out.set(r, i);
    return out;
}

BitMatrix BitMatrix::hstack(const BitMatrix& a, const BitMatrix& b)
{
    if (a.rows_ != b.rows_)
        throw std::invalid_argument("hstack: row mismatch");
    BitMatrix out(a.rows_, a.cols_ + b.cols_);
    out.set_block(0, 0, a);
    out.set_block(0, a.cols_, b);
    return out;
}

BitMatrix BitMatrix::vstack(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols_ != b.cols_)
        throw std::invalid_argument("vstack: column mismatch");
    BitMatrix out(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + a.data_.size());
    return out;
}

std::vector<std::vector<int>> BitMatrix::to_rows() const
{
    std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            out[r][c] = get(r, c);
    return out;
}

std::string BitMatrix::to_string() const
{
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c)
            s += get(r, c) ? '1' : '0';
        s += '\n';
    }
    return s;
}

RowReduction row_reduce(const BitMatrix& m)
{
    RowReduction res;
    res.rref = m;
    BitMatrix& a = res.rref;
    size_t r = 0;
    const size_t wpr = a.words_per_row();
    for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        const size_t w = c >> 6;
        const uint64_t bit = uint64_t(1) << (c & 63);
        size_t p = r;
        while (p < a.rows() && !(a.row_data(p)[w] & bit))
            ++p;
        if (p == a.rows())
            continue;
        a.swap_rows(r, p);
        const uint64_t* pr = a.row_data(r);
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == r)
                continue;
            uint64_t* ri = a.row_data(i);
            if (ri[w] & bit)
                for (size_t k = w; k < wpr; ++k)
                    ri[k] ^= pr[k];
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

size_t rank(const BitMatrix& m)
{
    if (m.rows() > m.cols())
        return row_reduce(m.transpose()).rank;
    return row_reduce(m).rank;
}

BitMatrix kernel_basis(const BitMatrix& m)
{
    RowReduction rr = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : rr.pivots)
        is_pivot[p] = true;
    BitMatrix ker(m.cols() - rr.rank, m.cols());
    size_t k = 0;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        ker.set(k, f);
        for (size_t i = 0; i < rr.rank; ++i)
            if (rr.rref.get(i, f))
                ker.set(k, rr.pivots[i]);
        ++k;
    }
    return ker;
}

BitMatrix image_basis(const BitMatrix& m)
{
    RowReduction rr = row_reduce(m.transpose());
    std::vector<size_t> idx(rr.rank);
    for (size_t i = 0; i < rr.rank; ++i)
        idx[i] = i;
    return rr.rref.select_rows(idx);
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length does not match row count");
    BitMatrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (size_t r = 0; r < m.rows(); ++r)
        if (b.get(r))
            aug.set(r, m.cols());
    RowReduction rr = row_reduce(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == m.cols())
        return std::nullopt;
    BitVector x(m.cols());
    for (size_t i = 0; i < rr.rank; ++i)
        if (rr.rref.get(i, m.cols()))
            x.set(rr.pivots[i]);
    return x;
}

std::optional<BitMatrix> solve_matrix(const BitMatrix& a, const BitMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_matrix: row count mismatch");
    BitMatrix aug = BitMatrix::hstack(a, b);
    RowReduction rr = row_reduce(aug);
    size_t arank = 0;
    while (arank < rr.rank && rr.pivots[arank] < a.cols())
        ++arank;
    if (arank < rr.rank)
        return std::nullopt;
    BitMatrix x(a.cols(), b.cols());
    for (size_t i = 0; i < arank; ++i)
        for (size_t c = 0; c < b.cols(); ++c)
            if (rr.rref.get(i, a.cols() + c))
                x.set(rr.pivots[i], c);
    return x;
}

Subspace Subspace::span(const BitMatrix& rows)
{
    Subspace s(rows.cols());
    RowReduction rr = row_reduce(rows);
    std::vector<size_t> idx(rr.rank);
    for (size_t i = 0; i < rr.rank; ++i)
        idx[i] = i;
    s.basis_ = rr.rref.select_rows(idx);
    s.pivots_ = rr.pivots;
    return s;
}

Subspace Subspace::whole(size_t ambient)
{
    return span(BitMatrix::identity(ambient));
}

BitVector Subspace::reduce(const BitVector& v) const
{
    BitVector r = v;
    for (size_t i = 0; i < pivots_.size(); ++i)
        if (r.get(pivots_[i])) {
            const uint64_t* p = basis_.row_data(i);
            for (size_t w = 0; w < r.num_words(); ++w)
                r.data()[w] ^= p[w];
        }
    return r;
}

BitVector Subspace::coords(const BitVector& v) const
{
    BitVector c(pivots_.size());
    for (size_t i = 0; i < pivots_.size(); ++i)
        if (v.get(pivots_[i]))
            c.set(i);
    return c;
}

std::vector<size_t> Subspace::non_pivots() const
{
    std::vector<size_t> out;
    size_t k = 0;
    for (size_t c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

BitVector Subspace::quotient_coords(const BitVector& v) const
{
    BitVector r = reduce(v);
    std::vector<size_t> np = non_pivots();
    BitVector out(np.size());
    for (size_t i = 0; i < np.size(); ++i)
        if (r.get(np[i]))
            out.set(i);
    return out;
}

bool Subspace::add(const BitVector& v)
{
    BitVector r = reduce(v);
    if (r.is_zero())
        return false;
    size_t p = 0;
    while (!r.get(p))
        ++p;
    for (size_t i = 0; i < pivots_.size(); ++i)
        if (basis_.get(i, p)) {
            uint64_t* q = basis_.row_data(i);
            for (size_t w = 0; w < r.num_words(); ++w)
                q[w] ^= r.data()[w];
        }
    size_t pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    BitMatrix nb(basis_.rows() + 1, ambient_);
    for (size_t i = 0; i < pos; ++i)
        std::copy(basis_.row_data(i), basis_.row_data(i) + nb.words_per_row(), nb.row_data(i));
    nb.set_row(pos, r);
    for (size_t i = pos; i < basis_.rows(); ++i)
        std::copy(basis_.row_data(i), basis_.row_data(i) + nb.words_per_row(), nb.row_data(i + 1));
    basis_ = std::move(nb);
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

void Subspace::add_rows(const BitMatrix& rows)
{
    if (rows.rows() == 0)
        return;
    *this = span(BitMatrix::vstack(basis_, rows));
}

}  // namespace a1mod
