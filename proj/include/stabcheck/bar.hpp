#pragma once

#include <map>

#include "stabcheck/chain.hpp"
#include "stabcheck/diagram.hpp"

namespace stabcheck {

/// Simplicial (bar) or cosimplicial (cobar) replacement of a diagram of
/// chain complexes over a strictly homotopy finite category, totalized over
/// nondegenerate simplices only.
///
/// Bar: the slot of an s-simplex a_0 -> ... -> a_s is X(a_0) placed so that
/// total degree n holds X(a_0)_{n-s}; the face d_0 applies X(f_1), inner
/// faces compose arrows, d_s drops the tail. Total differential is
/// sum_i (-1)^i d_i plus (-1)^s d_X.
///
/// Cobar: the slot of t-simplex b_0 -> ... -> b_t is X(b_t) holding
/// X(b_t)_{n+t} in total degree n; the coface towards larger t is
/// sum_i (-1)^i (pullback along partial_i), where the i = t face acts by
/// X(g_t). Total differential adds (-1)^t d_X.
class BarComplex {
public:
    BarComplex() = default;

    static BarComplex bar(const FinCat& shape, std::vector<ChainComplex> values, std::vector<ChainMap> arrow_maps, const KanOptions& opt = {}) { return BarComplex(true, shape, std::move(values), std::move(arrow_maps), opt); }

    static BarComplex cobar(const FinCat& shape, std::vector<ChainComplex> values, std::vector<ChainMap> arrow_maps, const KanOptions& opt = {}) { return BarComplex(false, shape, std::move(values), std::move(arrow_maps), opt); }

    bool is_bar() const { return is_bar_; }
    const FinCat& shape() const { return shape_; }
    const Nerve& simplices() const { return nv_; }
    const ChainComplex& total() const { return total_; }
    const ChainComplex& value(int obj) const { return values_[static_cast<std::size_t>(obj)]; }

    /// The object whose value sits in the slot: a_0 for bar, b_t for cobar.
    int slot_object(int s, int idx) const {
        const auto& chain = nv_.simplices[static_cast<std::size_t>(s)][static_cast<std::size_t>(idx)];
        if (s == 0) return chain[0];
        return is_bar_ ? shape_.src(chain[0]) : shape_.tgt(chain.back());
    }

    /// Inner degree held by column s at total degree n.
    int inner_degree(int n, int s) const { return is_bar_ ? n - s : n + s; }

    /// Offset of the slot (s, idx) within total degree n.
    int offset(int n, int s, int idx) const {
        int off = 0;
        for (int c = 0; c <= s; ++c) {
            int limit = (c == s) ? idx : static_cast<int>(nv_.count(c));
            for (int j = 0; j < limit; ++j) off += values_[static_cast<std::size_t>(slot_object(c, j))].dim(inner_degree(n, c));
        }
        return off;
    }

    /// Vertex inclusion X(v) -> total (bar only).
    ChainMap inj(int v) const {
        if (!is_bar_) throw std::logic_error("BarComplex::inj: bar only");
        const ChainComplex& x = values_[static_cast<std::size_t>(v)];
        ChainMap f(x, total_);
        for (int n = x.lo(); n <= x.hi(); ++n) {
            Matrix m(total_.dim(n), x.dim(n), p_);
            m.paste(offset(n, 0, v), 0, Matrix::identity(x.dim(n), p_));
            f.set_component(n, m);
        }
        return f;
    }

    /// Vertex projection total -> X(v) (cobar only).
    ChainMap proj(int v) const {
        if (is_bar_) throw std::logic_error("BarComplex::proj: cobar only");
        const ChainComplex& x = values_[static_cast<std::size_t>(v)];
        ChainMap f(total_, x);
        for (int n = x.lo(); n <= x.hi(); ++n) {
            Matrix m(x.dim(n), total_.dim(n), p_);
            if (total_.dim(n)) {
                Matrix id = Matrix::identity(x.dim(n), p_);
                for (int r = 0; r < x.dim(n); ++r)
                    for (int c = 0; c < x.dim(n); ++c)
                        if (id(r, c)) m.set(r, offset(n, 0, v) + c, id(r, c));
            }
            f.set_component(n, m);
        }
        return f;
    }

    /// Collapse along a strictly compatible cocone (bar): the map out of the
    /// totalization that applies cocone[obj] on vertex slots and vanishes on
    /// higher columns.
    ChainMap collapse(const ChainComplex& target, const std::vector<ChainMap>& cocone) const {
        if (!is_bar_) throw std::logic_error("BarComplex::collapse: bar only");
        ChainMap f(total_, target);
        for (int n = total_.lo(); n <= total_.hi(); ++n) {
            Matrix m(target.dim(n), total_.dim(n), p_);
            for (int v = 0; v < shape_.n_objects(); ++v) m.accumulate(0, offset(n, 0, v), cocone[static_cast<std::size_t>(v)].component(n), 1);
            f.set_component(n, m);
        }
        return f;
    }

    /// Dual gather for cobar: the map into the totalization from a strictly
    /// compatible cone.
    ChainMap gather(const ChainComplex& source, const std::vector<ChainMap>& cone) const {
        if (is_bar_) throw std::logic_error("BarComplex::gather: cobar only");
        ChainMap f(source, total_);
        for (int n = source.lo(); n <= source.hi(); ++n) {
            Matrix m(total_.dim(n), source.dim(n), p_);
            for (int v = 0; v < shape_.n_objects(); ++v) m.accumulate(offset(n, 0, v), 0, cone[static_cast<std::size_t>(v)].component(n), 1);
            f.set_component(n, m);
        }
        return f;
    }

    /// Induced map of bar totalizations along a shape functor F and a family
    /// comps[x] : value(x) -> other.value(F x); simplices whose image is
    /// degenerate map to zero.
    ChainMap push_forward(const BarComplex& other, const Functor& f, const std::vector<ChainMap>& comps) const {
        if (!is_bar_ || !other.is_bar_) throw std::logic_error("BarComplex::push_forward: bar only");
        ChainMap r(total_, other.total_);
        for (int n = total_.lo(); n <= total_.hi(); ++n) {
            Matrix m(other.total_.dim(n), total_.dim(n), p_);
            for (int s = 0; s <= nv_.top_dimension(); ++s) {
                for (int idx = 0; idx < static_cast<int>(nv_.count(s)); ++idx) {
                    int a0 = slot_object(s, idx);
                    const Matrix& blk = comps[static_cast<std::size_t>(a0)].component(n - s);
                    if (!blk.rows() || !blk.cols()) continue;
                    auto img = map_simplex(other, f, s, idx);
                    if (img < 0) continue;
                    m.accumulate(other.offset(n, s, img), offset(n, s, idx), blk, 1);
                }
            }
            r.set_component(n, m);
        }
        return r;
    }

    /// Induced map of cobar totalizations along g : other.shape -> shape and
    /// comps[x] : value(g x) -> other.value(x). Throws when g degenerates a
    /// simplex (no normalized pullback is defined here in that case).
    ChainMap pull_back(const BarComplex& other, const Functor& g, const std::vector<ChainMap>& comps) const {
        if (is_bar_ || other.is_bar_) throw std::logic_error("BarComplex::pull_back: cobar only");
        ChainMap r(total_, other.total_);
        for (int n = other.total_.lo(); n <= other.total_.hi(); ++n) {
            Matrix m(other.total_.dim(n), total_.dim(n), p_);
            for (int t = 0; t <= other.nv_.top_dimension(); ++t) {
                for (int idx = 0; idx < static_cast<int>(other.nv_.count(t)); ++idx) {
                    int bt = other.slot_object(t, idx);
                    const Matrix& blk = comps[static_cast<std::size_t>(bt)].component(n + t);
                    if (!blk.rows() || !blk.cols()) continue;
                    int src_slot = other.map_simplex(*this, g, t, idx);
                    if (src_slot < 0) throw std::logic_error("BarComplex::pull_back: functor degenerates a simplex");
                    m.accumulate(other.offset(n, t, idx), offset(n, t, src_slot), blk, 1);
                }
            }
            r.set_component(n, m);
        }
        return r;
    }

    /// Index of the image simplex in `other` under F, or -1 when degenerate.
    int map_simplex(const BarComplex& other, const Functor& f, int s, int idx) const {
        const auto& chain = nv_.simplices[static_cast<std::size_t>(s)][static_cast<std::size_t>(idx)];
        if (s == 0) return f.apply_ob(chain[0]);
        std::vector<int> img;
        for (int a : chain) {
            int fa = f.apply_ar(a);
            if (other.shape_.is_identity(fa)) return -1;
            img.push_back(fa);
        }
        return other.simplex_index(s, img);
    }

    int simplex_index(int s, const std::vector<int>& chain) const {
        auto it = index_[static_cast<std::size_t>(s)].find(chain);
        if (it == index_[static_cast<std::size_t>(s)].end()) throw std::logic_error("BarComplex: unknown simplex");
        return it->second;
    }

private:
    BarComplex(bool isbar, const FinCat& shape, std::vector<ChainComplex> values, std::vector<ChainMap> arrow_maps, const KanOptions& opt) : is_bar_(isbar), shape_(shape), values_(std::move(values)), arrow_maps_(std::move(arrow_maps)) {
        if (!is_strictly_homotopy_finite(shape_)) throw std::domain_error("BarComplex: index category is not strictly homotopy finite");
        p_ = 2;
        for (const auto& v : values_)
            if (!v.is_zero_object()) p_ = v.prime();
        nv_ = nerve(shape_);
        index_.resize(nv_.simplices.size());
        for (std::size_t s = 1; s < nv_.simplices.size(); ++s)
            for (std::size_t i = 0; i < nv_.simplices[s].size(); ++i) index_[s][nv_.simplices[s][i]] = static_cast<int>(i);
        build_total(opt);
    }

    // Face partial_i of a simplex: the target slot (dimension s-1) and the
    // arrow acting on the value, or -1 for the identity action. Returns
    // {-2, -1} when the face is degenerate.
    std::pair<int, int> face(int s, int idx, int i) const {
        const auto& chain = nv_.simplices[static_cast<std::size_t>(s)][static_cast<std::size_t>(idx)];
        if (s == 1) {
            int g = chain[0];
            if (i == 0) {
                // drop the source vertex
                return {shape_.tgt(g), is_bar_ ? g : -1};
            }
            return {shape_.src(g), is_bar_ ? -1 : g};
        }
        std::vector<int> out;
        int act = -1;
        if (i == 0) {
            out.assign(chain.begin() + 1, chain.end());
            if (is_bar_) act = chain[0];
        } else if (i == s) {
            out.assign(chain.begin(), chain.end() - 1);
            if (!is_bar_) act = chain.back();
        } else {
            out.assign(chain.begin(), chain.end());
            int c = shape_.compose(out[static_cast<std::size_t>(i)], out[static_cast<std::size_t>(i - 1)]);
            if (shape_.is_identity(c)) return {-2, -1};
            out.erase(out.begin() + i);
            out[static_cast<std::size_t>(i - 1)] = c;
        }
        return {simplex_index(s - 1, out), act};
    }

    void build_total(const KanOptions& opt) {
        int lo = 0, hi = -1;
        bool any = false;
        const int top = nv_.top_dimension();
        for (int s = 0; s <= top; ++s)
            for (int idx = 0; idx < static_cast<int>(nv_.count(s)); ++idx) {
                const ChainComplex& v = values_[static_cast<std::size_t>(slot_object(s, idx))];
                if (v.is_zero_object()) continue;
                int shift = is_bar_ ? s : -s;
                int l = v.lo() + shift, h = v.hi() + shift;
                if (!any) {
                    lo = l;
                    hi = h;
                    any = true;
                } else {
                    lo = std::min(lo, l);
                    hi = std::max(hi, h);
                }
            }
        if (!any) {
            total_ = ChainComplex::zero(p_);
            return;
        }
        if (lo < -opt.max_degree || hi > opt.max_degree) throw std::domain_error("BarComplex: degree cap exceeded");
        std::vector<int> dims;
        for (int n = lo; n <= hi; ++n) {
            int dn = 0;
            for (int s = 0; s <= top; ++s)
                for (int idx = 0; idx < static_cast<int>(nv_.count(s)); ++idx) dn += values_[static_cast<std::size_t>(slot_object(s, idx))].dim(inner_degree(n, s));
            dims.push_back(dn);
        }
        std::vector<Matrix> diffs;
        for (int n = lo; n <= hi; ++n) {
            Matrix d(n - 1 >= lo ? dims[static_cast<std::size_t>(n - 1 - lo)] : 0, dims[static_cast<std::size_t>(n - lo)], p_);
            if (n - 1 >= lo) {
                for (int s = 0; s <= top; ++s) {
                    for (int idx = 0; idx < static_cast<int>(nv_.count(s)); ++idx) {
                        const ChainComplex& v = values_[static_cast<std::size_t>(slot_object(s, idx))];
                        int m = inner_degree(n, s);
                        if (!v.dim(m)) continue;
                        // vertical differential with sign (-1)^s
                        if (v.dim(m - 1)) d.accumulate(offset(n - 1, s, idx), offset(n, s, idx), v.diff(m), (s % 2 == 0) ? 1 : p_ - 1);
                        if (is_bar_) {
                            // horizontal faces: column s -> s-1
                            if (s >= 1) {
                                for (int i = 0; i <= s; ++i) {
                                    auto [tgt_idx, act] = face(s, idx, i);
                                    if (tgt_idx == -2) continue;
                                    Matrix blk = (act >= 0) ? arrow_maps_[static_cast<std::size_t>(act)].component(m) : Matrix::identity(v.dim(m), p_);
                                    if (!blk.rows() || !blk.cols()) continue;
                                    d.accumulate(offset(n - 1, s - 1, tgt_idx), offset(n, s, idx), blk, (i % 2 == 0) ? 1 : p_ - 1);
                                }
                            }
                        } else {
                            // horizontal cofaces: column s -> s+1; enumerate
                            // targets tau' at s+1 whose i-face is this slot
                            if (s + 1 <= top) {
                                for (int idx2 = 0; idx2 < static_cast<int>(nv_.count(s + 1)); ++idx2) {
                                    for (int i = 0; i <= s + 1; ++i) {
                                        auto [src_idx, act] = face(s + 1, idx2, i);
                                        if (src_idx != idx) continue;
                                        Matrix blk = (act >= 0) ? arrow_maps_[static_cast<std::size_t>(act)].component(m) : Matrix::identity(v.dim(m), p_);
                                        if (!blk.rows() || !blk.cols()) continue;
                                        d.accumulate(offset(n - 1, s + 1, idx2), offset(n, s, idx), blk, (i % 2 == 0) ? 1 : p_ - 1);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            diffs.push_back(std::move(d));
        }
        total_ = ChainComplex(p_, lo, std::move(dims), std::move(diffs));
    }

    bool is_bar_ = true;
    FinCat shape_;
    std::vector<ChainComplex> values_;
    std::vector<ChainMap> arrow_maps_;
    Nerve nv_;
    std::vector<std::map<std::vector<int>, int>> index_;
    ChainComplex total_;
    std::uint32_t p_ = 2;
};

}  // namespace stabcheck
