#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace stabcheck {

inline bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    // p is prime, a != 0 mod p
    assert(a % p != 0);
    std::uint64_t base = a % p, acc = 1;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

/// Dense matrix over the prime field F_p. Entries are kept reduced mod p.
/// A matrix represents a linear map F_p^cols -> F_p^rows.
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols, std::uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
        if (!is_prime(p)) throw std::invalid_argument("Matrix: modulus must be prime");
    }

    static Matrix zero(int rows, int cols, std::uint32_t p) { return Matrix(rows, cols, p); }

    static Matrix identity(int n, std::uint32_t p) {
        Matrix m(n, n, p);
        for (int i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    std::uint32_t operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    void set(int i, int j, std::uint32_t v) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        a_[static_cast<std::size_t>(i) * cols_ + j] = v % p_;
    }

    void add_at(int i, int j, std::uint32_t v) {
        auto& e = a_[static_cast<std::size_t>(i) * cols_ + j];
        e = (e + v) % p_;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("Matrix::mul: shape/modulus mismatch");
        Matrix r(rows_, o.cols_, p_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                std::uint64_t v = (*this)(i, k);
                if (!v) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    std::uint64_t e = r(i, j) + v * o(k, j);
                    r.set(i, j, static_cast<std::uint32_t>(e % p_));
                }
            }
        }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("Matrix::add: shape mismatch");
        Matrix r = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = (a_[i] + o.a_[i]) % p_;
        return r;
    }

    Matrix operator-(const Matrix& o) const { return *this + o.scaled(p_ - 1); }

    Matrix operator-() const { return scaled(p_ - 1); }

    Matrix scaled(std::uint32_t c) const {
        Matrix r = *this;
        c %= p_;
        for (auto& v : r.a_) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c % p_);
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.p_ != b.p_) throw std::invalid_argument("Matrix::hstack: shape mismatch");
        Matrix r(a.rows_, a.cols_ + b.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.set(i, j, a(i, j));
            for (int j = 0; j < b.cols_; ++j) r.set(i, a.cols_ + j, b(i, j));
        }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_ || a.p_ != b.p_) throw std::invalid_argument("Matrix::vstack: shape mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.set(i, j, a(i, j));
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, j, b(i, j));
        return r;
    }

    static Matrix direct_sum(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.p_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.set(i, j, a(i, j));
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) r.set(a.rows_ + i, a.cols_ + j, b(i, j));
        return r;
    }

    /// Kronecker product; block (i,j) of the result is a(i,j) * b.
    Matrix kronecker(const Matrix& b) const {
        Matrix r(rows_ * b.rows_, cols_ * b.cols_, p_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                std::uint64_t v = (*this)(i, j);
                if (!v) continue;
                for (int bi = 0; bi < b.rows_; ++bi)
                    for (int bj = 0; bj < b.cols_; ++bj)
                        r.set(i * b.rows_ + bi, j * b.cols_ + bj, static_cast<std::uint32_t>(v * b(bi, bj) % p_));
            }
        return r;
    }

    /// Copies src into this at row/col offset.
    void paste(int row0, int col0, const Matrix& src) {
        assert(row0 + src.rows_ <= rows_ && col0 + src.cols_ <= cols_);
        for (int i = 0; i < src.rows_; ++i)
            for (int j = 0; j < src.cols_; ++j) set(row0 + i, col0 + j, src(i, j));
    }

    void accumulate(int row0, int col0, const Matrix& src, std::uint32_t scale) {
        assert(row0 + src.rows_ <= rows_ && col0 + src.cols_ <= cols_);
        scale %= p_;
        if (!scale) return;
        for (int i = 0; i < src.rows_; ++i)
            for (int j = 0; j < src.cols_; ++j) {
                std::uint64_t v = src(i, j);
                if (v) add_at(row0 + i, col0 + j, static_cast<std::uint32_t>(v * scale % p_));
            }
    }

    int rank() const;
    Matrix kernel_basis() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
    Matrix inverse() const;
    Matrix solve_matrix(const Matrix& B) const;

private:
    friend struct Echelon;

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(a_[static_cast<std::size_t>(i) * cols_ + c], a_[static_cast<std::size_t>(j) * cols_ + c]);
    }
    void scale_row(int i, std::uint32_t f) {
        if (cols_ == 0) return;
        f %= p_;
        for (int c = 0; c < cols_; ++c) {
            auto& v = a_[static_cast<std::size_t>(i) * cols_ + c];
            v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * f % p_);
        }
    }
    // row[i] += f * row[j]
    void axpy_row(int i, int j, std::uint32_t f) {
        f %= p_;
        if (!f || cols_ == 0) return;
        for (int c = 0; c < cols_; ++c) {
            auto& v = a_[static_cast<std::size_t>(i) * cols_ + c];
            v = static_cast<std::uint32_t>((v + static_cast<std::uint64_t>(f) * a_[static_cast<std::size_t>(j) * cols_ + c]) % p_);
        }
    }

    int rows_ = 0;
    int cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> a_;
};

// Row echelon reduction; optionally carries a right-hand side through the
// same row operations. Fully reduced (pivots normalized, cleared above and
// below), so solutions read off directly.
struct Echelon {
    int rank = 0;
    std::vector<int> pivot_col_of_row;  // size rank
    std::vector<int> pivot_row_of_col;  // -1 for free columns
    Matrix R;                           // reduced matrix
    Matrix Rhs;

    std::uint32_t red(int i, int j) const { return R(i, j); }
    std::uint32_t rhs_red(int i, int j) const { return Rhs(i, j); }

    explicit Echelon(const Matrix& A, const Matrix* rhs = nullptr) : R(A), Rhs(rhs ? *rhs : Matrix(A.rows(), 0, A.prime())) {
        const int m = A.rows(), n = A.cols();
        const std::uint32_t p = A.prime();
        pivot_row_of_col.assign(static_cast<std::size_t>(n), -1);
        int r = 0;
        for (int c = 0; c < n && r < m; ++c) {
            int piv = -1;
            for (int i = r; i < m; ++i)
                if (R(i, c)) {
                    piv = i;
                    break;
                }
            if (piv < 0) continue;
            R.swap_rows(piv, r);
            Rhs.swap_rows(piv, r);
            std::uint32_t inv = fp_inv(R(r, c), p);
            R.scale_row(r, inv);
            Rhs.scale_row(r, inv);
            for (int i = 0; i < m; ++i) {
                if (i == r) continue;
                std::uint32_t f = R(i, c);
                if (!f) continue;
                R.axpy_row(i, r, p - f);
                Rhs.axpy_row(i, r, p - f);
            }
            pivot_row_of_col[static_cast<std::size_t>(c)] = r;
            pivot_col_of_row.push_back(c);
            ++r;
        }
        rank = r;
    }
};

inline int Matrix::rank() const { return Echelon(*this).rank; }

/// Columns form a basis of { x : Ax = 0 }.
inline Matrix Matrix::kernel_basis() const {
    Echelon e(*this);
    int free_count = cols_ - e.rank;
    Matrix k(cols_, free_count, p_);
    int fi = 0;
    for (int j = 0; j < cols_; ++j) {
        if (e.pivot_row_of_col[static_cast<std::size_t>(j)] >= 0) continue;
        // back-substitute the free column j
        k.set(j, fi, 1);
        for (int r = 0; r < e.rank; ++r) {
            int pc = e.pivot_col_of_row[static_cast<std::size_t>(r)];
            std::uint32_t v = e.red(r, j);
            if (v) k.set(pc, fi, p_ - v);
        }
        ++fi;
    }
    return k;
}

inline Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw std::domain_error("Matrix::inverse: not square");
    return solve_matrix(identity(rows_, p_));
}

/// Any X with (*this) * X == B; throws std::domain_error when inconsistent.
inline Matrix Matrix::solve_matrix(const Matrix& B) const {
    if (B.rows() != rows_ || B.prime() != p_) throw std::invalid_argument("Matrix::solve_matrix: shape mismatch");
    Echelon e(*this, &B);
    Matrix X(cols_, B.cols(), p_);
    for (int j = 0; j < B.cols(); ++j) {
        for (int r = e.rank; r < rows_; ++r)
            if (e.rhs_red(r, j) != 0) throw std::domain_error("Matrix::solve_matrix: inconsistent system");
        for (int r = 0; r < e.rank; ++r) X.set(e.pivot_col_of_row[static_cast<std::size_t>(r)], j, e.rhs_red(r, j));
    }
    return X;
}

/// Quotient of F_p^n by the column space of `rel`: a chosen basis of the
/// cokernel together with the projection and a section of it.
struct Cokernel {
    int dim = 0;
    Matrix proj;     // dim x n
    Matrix section;  // n x dim, proj * section = id
};

inline Cokernel cokernel(const Matrix& rel) {
    const int n = rel.rows();
    const std::uint32_t p = rel.prime();
    // Column echelon via row echelon of the transpose.
    Matrix rt = rel.transposed();
    // Reduced rows of rt = basis of the column space of rel.
    // Pivot columns of rt (as row vectors) mark coordinates spanned by the image.
    struct Red {
        std::vector<std::vector<std::uint32_t>> rows;  // reduced basis rows, length n
        std::vector<int> pivot;                        // pivot position per row
    } red;
    {
        Matrix R = rt;
        int m = R.rows();
        std::vector<bool> used(m, false);
        for (int c = 0; c < n; ++c) {
            int piv = -1;
            for (int i = 0; i < m; ++i) {
                if (used[i]) continue;
                if (R(i, c)) { piv = i; break; }
            }
            if (piv < 0) continue;
            used[piv] = true;
            std::uint32_t inv = fp_inv(R(piv, c), p);
            for (int j = 0; j < n; ++j) R.set(piv, j, static_cast<std::uint32_t>(static_cast<std::uint64_t>(R(piv, j)) * inv % p));
            for (int i = 0; i < m; ++i) {
                if (i == piv) continue;
                std::uint32_t f = R(i, c);
                if (!f) continue;
                for (int j = 0; j < n; ++j) {
                    std::uint64_t v = R(i, j) + static_cast<std::uint64_t>(p - f) * R(piv, j);
                    R.set(i, j, static_cast<std::uint32_t>(v % p));
                }
            }
            std::vector<std::uint32_t> row(n);
            for (int j = 0; j < n; ++j) row[j] = R(piv, j);
            red.rows.push_back(std::move(row));
            red.pivot.push_back(c);
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : red.pivot) is_pivot[c] = true;
    Cokernel ck;
    ck.dim = n - static_cast<int>(red.pivot.size());
    ck.proj = Matrix(ck.dim, n, p);
    ck.section = Matrix(n, ck.dim, p);
    // proj(e_c): reduce e_c modulo the image basis, then read non-pivot coords.
    std::vector<int> quot_index(n, -1);
    int qi = 0;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) quot_index[c] = qi++;
    for (int c = 0; c < n; ++c) {
        std::vector<std::uint32_t> v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < red.rows.size(); ++r) {
            std::uint32_t f = v[red.pivot[r]];
            if (!f) continue;
            for (int j = 0; j < n; ++j) v[j] = static_cast<std::uint32_t>((v[j] + static_cast<std::uint64_t>(p - f) * red.rows[r][j]) % p);
        }
        for (int j = 0; j < n; ++j)
            if (v[j] && quot_index[j] >= 0) ck.proj.set(quot_index[j], c, v[j]);
    }
    for (int c = 0; c < n; ++c)
        if (quot_index[c] >= 0) ck.section.set(c, quot_index[c], 1);
    return ck;
}

}  // namespace stabcheck
