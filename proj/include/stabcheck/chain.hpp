#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "stabcheck/matrix.hpp"

namespace stabcheck {

/// Bounded chain complex of finite-dimensional F_p vector spaces.
///
/// Degrees run over a finite support interval [lo, lo + dims.size() - 1];
/// diff(n) is the differential X_n -> X_{n-1}. Outside the support every
/// space is zero. d o d = 0 is enforced on construction via validate().
class ChainComplex {
public:
    ChainComplex() : p_(2) {}

    explicit ChainComplex(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("ChainComplex: modulus must be prime");
    }

    ChainComplex(std::uint32_t p, int lo, std::vector<int> dims, std::vector<Matrix> diffs) : lo_(lo), dims_(std::move(dims)), d_(std::move(diffs)), p_(p) {
        if (d_.size() != dims_.size()) throw std::invalid_argument("ChainComplex: need one differential slot per degree");
        validate();
        normalize();
    }

    static ChainComplex zero(std::uint32_t p) { return ChainComplex(p); }

    /// One copy of the field in degree n.
    static ChainComplex sphere(int n, std::uint32_t p) {
        ChainComplex x(p);
        x.lo_ = n;
        x.dims_ = {1};
        x.d_ = {Matrix(0, 1, p)};
        return x;
    }

    std::uint32_t prime() const { return p_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool is_zero_object() const { return dims_.empty(); }

    int dim(int n) const {
        int i = n - lo_;
        if (i < 0 || i >= static_cast<int>(dims_.size())) return 0;
        return dims_[i];
    }

    int total_dim() const {
        int t = 0;
        for (int d : dims_) t += d;
        return t;
    }

    /// Differential X_n -> X_{n-1} (sized dim(n-1) x dim(n), possibly empty).
    Matrix diff(int n) const {
        int i = n - lo_;
        if (i < 0 || i >= static_cast<int>(dims_.size())) return Matrix(dim(n - 1), dim(n), p_);
        return d_[i];
    }

    int homology_dim(int n) const {
        // dim ker d_n - rank d_{n+1}
        int k = dim(n) - diff(n).rank();
        return k - diff(n + 1).rank();
    }

    /// Map degree -> homology dimension, zero degrees omitted.
    std::map<int, int> homology_table() const {
        std::map<int, int> h;
        for (int n = lo(); n <= hi(); ++n) {
            int v = homology_dim(n);
            if (v) h[n] = v;
        }
        return h;
    }

    bool is_acyclic() const { return homology_table().empty(); }

    int euler_characteristic() const {
        int e = 0;
        for (int n = lo(); n <= hi(); ++n) e += (((n % 2) + 2) % 2 == 0 ? dim(n) : -dim(n));
        return e;
    }

    bool operator==(const ChainComplex& o) const { return p_ == o.p_ && lo_ == o.lo_ && dims_ == o.dims_ && d_ == o.d_; }
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }

    /// Degree shift with differential sign (-1)^k: shift(X,1) places X_n in degree n+1.
    ChainComplex shift(int k) const {
        if (is_zero_object()) return *this;
        ChainComplex r(p_);
        r.lo_ = lo_ + k;
        r.dims_ = dims_;
        r.d_ = d_;
        if (((k % 2) + 2) % 2 == 1)
            for (auto& m : r.d_) m = -m;
        return r;
    }

    static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("direct_sum: modulus mismatch");
        if (a.is_zero_object()) return b;
        if (b.is_zero_object()) return a;
        int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
        ChainComplex r(a.p_);
        r.lo_ = lo;
        for (int n = lo; n <= hi; ++n) {
            r.dims_.push_back(a.dim(n) + b.dim(n));
            r.d_.push_back(Matrix::direct_sum(a.diff(n), b.diff(n)));
        }
        r.normalize();
        return r;
    }

    /// Tensor product with Koszul signs: d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy.
    /// Basis of (X (x) Y)_n ordered by ascending i with x in degree i, y in n-i,
    /// x-index major.
    static ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("tensor: modulus mismatch");
        if (a.is_zero_object() || b.is_zero_object()) return zero(a.p_);
        const std::uint32_t p = a.p_;
        int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
        auto block_dims = [&](int n) {
            std::vector<std::pair<int, int>> blocks;  // (i, dim a_i * dim b_{n-i})
            for (int i = a.lo(); i <= a.hi(); ++i) {
                int d = a.dim(i) * b.dim(n - i);
                if (d) blocks.emplace_back(i, d);
            }
            return blocks;
        };
        auto offset_of = [&](int n, int i) {
            int off = 0;
            for (auto [j, d] : block_dims(n)) {
                if (j == i) return off;
                off += d;
            }
            return -1;
        };
        ChainComplex r(p);
        r.lo_ = lo;
        for (int n = lo; n <= hi; ++n) {
            int dn = 0;
            for (auto [i, d] : block_dims(n)) dn += d;
            r.dims_.push_back(dn);
        }
        for (int n = lo; n <= hi; ++n) {
            Matrix d(n - 1 >= lo ? r.dims_[static_cast<std::size_t>(n - 1 - lo)] : 0, r.dims_[static_cast<std::size_t>(n - lo)], p);
            for (auto [i, dim_block] : block_dims(n)) {
                int col0 = offset_of(n, i);
                // dx (x) y : block (i,n-i) -> (i-1,n-i)
                if (a.dim(i - 1) && b.dim(n - i)) {
                    int row0 = offset_of(n - 1, i - 1);
                    d.accumulate(row0, col0, a.diff(i).kronecker(Matrix::identity(b.dim(n - i), p)), 1);
                }
                // (-1)^i x (x) dy : block (i,n-i) -> (i,n-1-i)
                if (a.dim(i) && b.dim(n - i - 1)) {
                    int row0 = offset_of(n - 1, i);
                    std::uint32_t sign = (((i % 2) + 2) % 2 == 0) ? 1 : p - 1;
                    d.accumulate(row0, col0, Matrix::identity(a.dim(i), p).kronecker(b.diff(n - i)), sign);
                }
            }
            r.d_.push_back(std::move(d));
        }
        r.validate();
        r.normalize();
        return r;
    }

    void validate() const {
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (dims_[i] < 0) throw std::invalid_argument("ChainComplex: negative dimension");
            int n = lo_ + static_cast<int>(i);
            if (d_[i].rows() != dim(n - 1) || d_[i].cols() != dims_[i]) throw std::invalid_argument("ChainComplex: differential shape mismatch at degree " + std::to_string(n));
            if (d_[i].prime() != p_) throw std::invalid_argument("ChainComplex: differential modulus mismatch");
        }
        for (std::size_t i = 1; i < dims_.size(); ++i) {
            int n = lo_ + static_cast<int>(i);
            if (!(diff(n - 1) * diff(n)).is_zero()) throw std::invalid_argument("ChainComplex: d o d != 0 at degree " + std::to_string(n));
        }
    }

private:
    void normalize() {
        // trim zero-dimensional degrees at both ends
        while (!dims_.empty() && dims_.back() == 0) {
            dims_.pop_back();
            d_.pop_back();
        }
        std::size_t drop = 0;
        while (drop < dims_.size() && dims_[drop] == 0) ++drop;
        if (drop) {
            dims_.erase(dims_.begin(), dims_.begin() + static_cast<long>(drop));
            d_.erase(d_.begin(), d_.begin() + static_cast<long>(drop));
            lo_ += static_cast<int>(drop);
        }
        if (!d_.empty()) d_[0] = Matrix(0, dims_[0], p_);
        if (dims_.empty()) lo_ = 0;
    }

    friend class ChainMap;

    int lo_ = 0;
    std::vector<int> dims_;
    std::vector<Matrix> d_;  // d_[i]: degree lo_+i -> lo_+i-1
    std::uint32_t p_ = 2;
};

/// Degreewise map of chain complexes commuting with the differentials.
class ChainMap {
public:
    ChainMap() = default;

    ChainMap(ChainComplex src, ChainComplex tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
        if (src_.prime() != tgt_.prime()) throw std::invalid_argument("ChainMap: modulus mismatch");
        comp_.assign(src_.dims_.size(), Matrix());
        for (int n = src_.lo(); n <= src_.hi(); ++n) comp_[static_cast<std::size_t>(n - src_.lo())] = Matrix(tgt_.dim(n), src_.dim(n), src_.prime());
    }

    static ChainMap id(const ChainComplex& x) {
        ChainMap f(x, x);
        for (int n = x.lo(); n <= x.hi(); ++n) f.set_component(n, Matrix::identity(x.dim(n), x.prime()));
        return f;
    }

    static ChainMap zero(const ChainComplex& src, const ChainComplex& tgt) { return ChainMap(src, tgt); }

    const ChainComplex& source() const { return src_; }
    const ChainComplex& target() const { return tgt_; }

    Matrix component(int n) const {
        int i = n - src_.lo();
        if (i < 0 || i >= static_cast<int>(comp_.size())) return Matrix(tgt_.dim(n), src_.dim(n), src_.prime());
        return comp_[static_cast<std::size_t>(i)];
    }

    void set_component(int n, const Matrix& m) {
        int i = n - src_.lo();
        if (i < 0 || i >= static_cast<int>(comp_.size())) {
            if (m.is_zero() && m.rows() == tgt_.dim(n) && m.cols() == src_.dim(n)) return;
            throw std::invalid_argument("ChainMap: component outside source support");
        }
        if (m.rows() != tgt_.dim(n) || m.cols() != src_.dim(n)) throw std::invalid_argument("ChainMap: component shape mismatch at degree " + std::to_string(n));
        comp_[static_cast<std::size_t>(i)] = m;
    }

    bool operator==(const ChainMap& o) const { return src_ == o.src_ && tgt_ == o.tgt_ && comp_ == o.comp_; }

    void validate() const {
        for (int n = src_.lo(); n <= src_.hi() + 1; ++n) {
            Matrix lhs = component(n - 1) * src_.diff(n);
            Matrix rhs = tgt_.diff(n) * component(n);
            if (lhs != rhs) throw std::invalid_argument("ChainMap: does not commute with differentials at degree " + std::to_string(n));
        }
    }

    bool commutes() const {
        try {
            validate();
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }

    static ChainMap compose(const ChainMap& g, const ChainMap& f) {
        ChainMap r(f.src_, g.tgt_);
        for (int n = f.src_.lo(); n <= f.src_.hi(); ++n) r.set_component(n, g.component(n) * f.component(n));
        return r;
    }

    ChainMap operator+(const ChainMap& o) const {
        ChainMap r(src_, tgt_);
        for (int n = src_.lo(); n <= src_.hi(); ++n) r.set_component(n, component(n) + o.component(n));
        return r;
    }

    ChainMap operator-() const {
        ChainMap r(src_, tgt_);
        for (int n = src_.lo(); n <= src_.hi(); ++n) r.set_component(n, -component(n));
        return r;
    }

private:
    ChainComplex src_, tgt_;
    std::vector<Matrix> comp_;
};

/// cone(f)_n = X_{n-1} (+) Y_n with d(x,y) = (-dx, -f(x) + dy).
inline ChainComplex mapping_cone(const ChainMap& f) {
    const ChainComplex& x = f.source();
    const ChainComplex& y = f.target();
    const std::uint32_t p = x.prime();
    if (x.is_zero_object() && y.is_zero_object()) return ChainComplex::zero(p);
    int lo = std::min(x.lo() + 1, y.is_zero_object() ? x.lo() + 1 : y.lo());
    int hi = std::max(x.hi() + 1, y.is_zero_object() ? x.lo() + 1 : y.hi());
    std::vector<int> dims;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) dims.push_back(x.dim(n - 1) + y.dim(n));
    for (int n = lo; n <= hi; ++n) {
        Matrix d(n - 1 >= lo ? dims[static_cast<std::size_t>(n - 1 - lo)] : 0, dims[static_cast<std::size_t>(n - lo)], p);
        if (n - 1 >= lo) {
            d.accumulate(0, 0, -x.diff(n - 1), 1);
            d.accumulate(x.dim(n - 2), 0, -f.component(n - 1), 1);
            d.accumulate(x.dim(n - 2), x.dim(n - 1), y.diff(n), 1);
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(p, lo, std::move(dims), std::move(diffs));
}

inline bool is_quasi_iso(const ChainMap& f) { return mapping_cone(f).is_acyclic(); }

/// Two complexes over a field are isomorphic in the homotopy category
/// exactly when their homology dimensions agree degreewise.
inline bool same_homology(const ChainComplex& a, const ChainComplex& b) { return a.homology_table() == b.homology_table(); }

/// A bounded double complex given as columns with commuting horizontal maps
/// h_s : col_s -> col_{s-1}; the total complex applies the sign (-1)^s to
/// the vertical differential of column s.
struct DoubleComplex {
    std::vector<ChainComplex> columns;
    std::vector<ChainMap> horiz;  // horiz[s] : columns[s] -> columns[s-1]; horiz[0] unused

    void validate() const {
        for (std::size_t s = 1; s < columns.size(); ++s) {
            if (horiz.size() <= s) throw std::invalid_argument("DoubleComplex: missing horizontal map");
            if (!(horiz[s].source() == columns[s]) || !(horiz[s].target() == columns[s - 1])) throw std::invalid_argument("DoubleComplex: horizontal map endpoints");
            horiz[s].validate();
        }
        for (std::size_t s = 2; s < columns.size(); ++s) {
            ChainMap hh = ChainMap::compose(horiz[s - 1], horiz[s]);
            for (int n = hh.source().lo(); n <= hh.source().hi(); ++n)
                if (!hh.component(n).is_zero()) throw std::invalid_argument("DoubleComplex: h o h != 0");
        }
    }
};

/// Totalization; basis in total degree n is ordered by ascending column s,
/// then the column's own basis in degree n - s.
inline ChainComplex total_complex(const DoubleComplex& dc, int max_abs_degree = 64) {
    if (dc.columns.empty()) return ChainComplex::zero(2);
    const std::uint32_t p = dc.columns[0].prime();
    int lo = 0, hi = -1;
    bool any = false;
    for (std::size_t s = 0; s < dc.columns.size(); ++s) {
        const auto& c = dc.columns[s];
        if (c.is_zero_object()) continue;
        int clo = c.lo() + static_cast<int>(s), chi = c.hi() + static_cast<int>(s);
        if (!any) {
            lo = clo;
            hi = chi;
            any = true;
        } else {
            lo = std::min(lo, clo);
            hi = std::max(hi, chi);
        }
    }
    if (!any) return ChainComplex::zero(p);
    if (lo < -max_abs_degree || hi > max_abs_degree) throw std::domain_error("total_complex: degree cap exceeded");
    const int ncols = static_cast<int>(dc.columns.size());
    auto offset = [&](int n, int s) {
        int off = 0;
        for (int t = 0; t < s; ++t) off += dc.columns[static_cast<std::size_t>(t)].dim(n - t);
        return off;
    };
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(offset(n, ncols));
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        Matrix d(n - 1 >= lo ? dims[static_cast<std::size_t>(n - 1 - lo)] : 0, dims[static_cast<std::size_t>(n - lo)], p);
        if (n - 1 >= lo) {
            for (int s = 0; s < ncols; ++s) {
                const auto& col = dc.columns[static_cast<std::size_t>(s)];
                if (!col.dim(n - s)) continue;
                // horizontal part: column s -> column s-1, same inner degree
                if (s >= 1 && dc.columns[static_cast<std::size_t>(s - 1)].dim(n - s)) d.accumulate(offset(n - 1, s - 1), offset(n, s), dc.horiz[static_cast<std::size_t>(s)].component(n - s), 1);
                // vertical part with sign (-1)^s
                if (col.dim(n - s - 1)) d.accumulate(offset(n - 1, s), offset(n, s), col.diff(n - s), (s % 2 == 0) ? 1 : p - 1);
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(p, lo, std::move(dims), std::move(diffs));
}

/// Hom complex: Hom(X,Y)_n = (+)_i Hom(X_i, Y_{i+n}), d(f) = d_Y f - (-1)^n f d_X.
/// Basis within degree n: ascending source degree i, then column-major matrix
/// entries of Hom(X_i, Y_{i+n}) (target index fast).
inline ChainComplex hom_complex(const ChainComplex& x, const ChainComplex& y) {
    const std::uint32_t p = x.prime();
    if (x.is_zero_object() || y.is_zero_object()) return ChainComplex::zero(p);
    int lo = y.lo() - x.hi(), hi = y.hi() - x.lo();
    auto block_dim = [&](int n, int i) { return x.dim(i) * y.dim(i + n); };
    auto offset = [&](int n, int i) {
        int off = 0;
        for (int j = x.lo(); j < i; ++j) off += block_dim(n, j);
        return off;
    };
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(offset(n, x.hi() + 1));
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        Matrix d(n - 1 >= lo ? dims[static_cast<std::size_t>(n - 1 - lo)] : 0, dims[static_cast<std::size_t>(n - lo)], p);
        if (n - 1 >= lo) {
            std::uint32_t sign = (((n % 2) + 2) % 2 == 0) ? p - 1 : 1;  // -(-1)^n
            for (int i = x.lo(); i <= x.hi(); ++i) {
                if (!block_dim(n, i)) continue;
                // post-composition d_Y o f : block i stays at source degree i.
                // vec(f) column-major (source index major): d_Y f = (I_{x_i} (x) d_Y) vec
                if (x.dim(i) && y.dim(i + n - 1)) d.accumulate(offset(n - 1, i), offset(n, i), Matrix::identity(x.dim(i), p).kronecker(y.diff(i + n)), 1);
                // pre-composition f o d_X : block i -> block i+1... source degree i+1? No:
                // f d_X maps X_{i+1} -> Y_{i+n}: contributes to block i+1 of degree n-1.
                if (x.dim(i + 1) && y.dim(i + n)) d.accumulate(offset(n - 1, i + 1), offset(n, i), x.diff(i + 1).transposed().kronecker(Matrix::identity(y.dim(i + n), p)), sign);
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(p, lo, std::move(dims), std::move(diffs));
}

/// Functorial action Hom(X,Y) -> Hom(X2,Y2), f |-> post o f o pre,
/// for pre : X2 -> X and post : Y -> Y2.
inline ChainMap hom_push(const ChainComplex& x, const ChainComplex& y, const ChainComplex& x2, const ChainComplex& y2, const ChainMap& pre, const ChainMap& post) {
    const std::uint32_t p = x.prime();
    ChainComplex hx = hom_complex(x, y), hx2 = hom_complex(x2, y2);
    ChainMap r(hx, hx2);
    for (int n = hx.lo(); n <= hx.hi(); ++n) {
        if (!hx.dim(n) || !hx2.dim(n)) continue;
        Matrix m(hx2.dim(n), hx.dim(n), p);
        auto offset = [&](const ChainComplex& xx, const ChainComplex& yy, int i) {
            int off = 0;
            for (int j = xx.lo(); j < i; ++j) off += xx.dim(j) * yy.dim(j + n);
            return off;
        };
        for (int i = x.lo(); i <= x.hi(); ++i) {
            if (!(x.dim(i) * y.dim(i + n))) continue;
            for (int i2 = x2.lo(); i2 <= x2.hi(); ++i2) {
                if (!(x2.dim(i2) * y2.dim(i2 + n))) continue;
                if (i2 != i) continue;  // pre/post are degreewise
                // vec(post o f o pre) = (pre^T (x) post) vec(f), column-major with source major
                Matrix blk = pre.component(i).transposed().kronecker(post.component(i + n));
                m.accumulate(offset(x2, y2, i2), offset(x, y, i), blk, 1);
            }
        }
        r.set_component(n, m);
    }
    return r;
}

}  // namespace stabcheck
