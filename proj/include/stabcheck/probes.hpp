#pragma once

#include <random>

#include "stabcheck/chain.hpp"

namespace stabcheck {

/// Random bounded complex: dimensions up to max_dim per degree on [lo, hi],
/// differentials sampled uniformly among those with d o d = 0.
inline ChainComplex random_complex(std::mt19937_64& rng, std::uint32_t p, int lo, int hi, int max_dim) {
    std::uniform_int_distribution<int> dim_dist(0, max_dim);
    std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
    std::vector<int> dims;
    for (int n = lo; n <= hi; ++n) dims.push_back(dim_dist(rng));
    std::vector<Matrix> diffs;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        int below = i == 0 ? 0 : dims[i - 1];
        Matrix d(below, dims[i], p);
        if (i >= 1 && below > 0 && dims[i] > 0) {
            if (i == 1 || diffs[i - 1].cols() == 0) {
                for (int r = 0; r < below; ++r)
                    for (int c = 0; c < dims[i]; ++c) d.set(r, c, coef(rng));
            } else {
                // columns constrained to ker(previous differential)
                Matrix k = diffs[i - 1].kernel_basis();
                for (int c = 0; c < dims[i]; ++c)
                    for (int kc = 0; kc < k.cols(); ++kc) {
                        std::uint32_t w = coef(rng);
                        if (!w) continue;
                        for (int r = 0; r < below; ++r) d.add_at(r, c, static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) * k(r, kc) % p));
                    }
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(p, lo, std::move(dims), std::move(diffs));
}

namespace detail {

/// Unflatten a degree-0 element of hom_complex(x, y) into a ChainMap.
inline ChainMap unflatten_hom_cycle(const ChainComplex& x, const ChainComplex& y, const std::vector<std::uint32_t>& v) {
    ChainMap f(x, y);
    std::size_t off = 0;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        int rows = y.dim(i), cols = x.dim(i);
        if (!rows || !cols) continue;
        Matrix m(rows, cols, x.prime());
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) m.set(r, c, v[off + static_cast<std::size_t>(c) * rows + r]);
        off += static_cast<std::size_t>(rows) * cols;
        f.set_component(i, m);
    }
    return f;
}

}  // namespace detail

/// Uniformly random chain map x -> y (a random 0-cycle of the hom complex).
inline ChainMap random_chain_map(std::mt19937_64& rng, const ChainComplex& x, const ChainComplex& y) {
    if (x.is_zero_object() || y.is_zero_object()) return ChainMap::zero(x, y);
    ChainComplex h = hom_complex(x, y);
    int n0 = h.dim(0);
    if (!n0) return ChainMap::zero(x, y);
    Matrix k = h.diff(0).kernel_basis();
    std::uniform_int_distribution<std::uint32_t> coef(0, x.prime() - 1);
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n0), 0);
    for (int c = 0; c < k.cols(); ++c) {
        std::uint32_t w = coef(rng);
        if (!w) continue;
        for (int r = 0; r < n0; ++r) v[static_cast<std::size_t>(r)] = static_cast<std::uint32_t>((v[static_cast<std::size_t>(r)] + static_cast<std::uint64_t>(w) * k(r, c)) % x.prime());
    }
    ChainMap f = detail::unflatten_hom_cycle(x, y, v);
    f.validate();
    return f;
}

}  // namespace stabcheck
