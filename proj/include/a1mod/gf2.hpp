#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace a1mod {

class BitVector
{
public:
    BitVector() = default;
    explicit BitVector(size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    size_t size() const { return len_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool v = true)
    {
        if (v)
            words_[i >> 6] |= uint64_t(1) << (i & 63);
        else
            words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }
    bool is_zero() const;
    size_t popcount() const;
    BitVector& operator^=(const BitVector& o);
    bool operator==(const BitVector& o) const { return len_ == o.len_ && words_ == o.words_; }

    const uint64_t* data() const { return words_.data(); }
    uint64_t* data() { return words_.data(); }
    size_t num_words() const { return words_.size(); }

    static BitVector from_string(const std::string& bits);
    std::string to_string() const;

private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/* Dense GF(2) matrix, row-major, bit c of a row stored in word c/64 at position c%64. */
class BitMatrix
{
public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows, size_t cols);
    static BitMatrix from_row_vectors(const std::vector<BitVector>& rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return wpr_; }

    bool get(size_t r, size_t c) const { return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
    void set(size_t r, size_t c, bool v = true)
    {
        uint64_t& w = data_[r * wpr_ + (c >> 6)];
        if (v)
            w |= uint64_t(1) << (c & 63);
        else
            w &= ~(uint64_t(1) << (c & 63));
    }
    void flip(size_t r, size_t c) { data_[r * wpr_ + (c >> 6)] ^= uint64_t(1) << (c & 63); }

    uint64_t* row_data(size_t r) { return data_.data() + r * wpr_; }
    const uint64_t* row_data(size_t r) const { return data_.data() + r * wpr_; }
    BitVector row(size_t r) const;
    BitVector col(size_t c) const;
    void set_row(size_t r, const BitVector& v);
    void xor_row(size_t dst, size_t src);
    void xor_row_from(size_t dst, const BitMatrix& other, size_t src);
    void swap_rows(size_t a, size_t b);
    bool row_is_zero(size_t r) const;
    void append_row(const BitVector& v);

    bool is_zero() const;
    size_t popcount() const;
    BitMatrix transpose() const;
    BitMatrix operator*(const BitMatrix& o) const;
    BitVector operator*(const BitVector& v) const;
    BitMatrix& operator+=(const BitMatrix& o);
    BitMatrix operator+(const BitMatrix& o) const;
    bool operator==(const BitMatrix& o) const;
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    /* rows [r0, r0+nr) and columns [c0, c0+nc) */
    BitMatrix block(size_t r0, size_t nr, size_t c0, size_t nc) const;
    void set_block(size_t r0, size_t c0, const BitMatrix& b);
    BitMatrix select_rows(const std::vector<size_t>& idx) const;
    BitMatrix select_cols(const std::vector<size_t>& idx) const;

    static BitMatrix hstack(const BitMatrix& a, const BitMatrix& b);
    static BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);

    std::vector<std::vector<int>> to_rows() const;
    std::string to_string() const;

private:
    size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

struct RowReduction
{
    BitMatrix rref;
    size_t rank = 0;
    std::vector<size_t> pivots;
};

RowReduction row_reduce(const BitMatrix& m);
size_t rank(const BitMatrix& m);
/* rows form a basis of the null space {v : m v = 0} */
BitMatrix kernel_basis(const BitMatrix& m);
/* rows of the returned matrix form a reduced echelon basis of the column space of m */
BitMatrix image_basis(const BitMatrix& m);
/* x with m x = b and free variables zero; throws std::invalid_argument on size mismatch */
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);
/* X with a X = b, column by column */
std::optional<BitMatrix> solve_matrix(const BitMatrix& a, const BitMatrix& b);

/* A subspace of F_2^n kept as reduced echelon rows. */
class Subspace
{
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(const BitMatrix& rows);
    static Subspace whole(size_t ambient);

    size_t ambient() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const BitMatrix& basis() const { return basis_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /* v minus its component along the span, in the non-pivot coordinates sense */
    BitVector reduce(const BitVector& v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    /* coordinates of v (assumed in the span) with respect to basis rows */
    BitVector coords(const BitVector& v) const;
    /* coordinates in the complement basis of standard vectors at non-pivot columns */
    BitVector quotient_coords(const BitVector& v) const;
    std::vector<size_t> non_pivots() const;
    bool add(const BitVector& v);
    void add_rows(const BitMatrix& rows);

private:
    size_t ambient_ = 0;
    BitMatrix basis_;
    std::vector<size_t> pivots_;
};

}  // namespace a1mod
