#pragma once

#include <string>

#include "stabcheck/diagram.hpp"
#include "stabcheck/matrix.hpp"

namespace stabcheck {

/// The represented backend of finite-dimensional F_p vector spaces.
/// Colimits are cokernel presentations, limits are kernels, with bases
/// chosen canonically by Gaussian elimination.
struct FinVectBackend {
    static constexpr bool pointed = true;
    static constexpr const char* name = "finvect";

    struct Obj {
        int dim = 0;
        std::uint32_t p = 2;
        bool operator==(const Obj&) const = default;
    };

    // Morphisms are matrices; endpoints recoverable from the shape.
    using Mor = Matrix;

    static Obj zero_object(std::uint32_t p = 2) { return Obj{0, p}; }

    static Mor id(const Obj& x) { return Matrix::identity(x.dim, x.p); }
    static Mor compose(const Mor& g, const Mor& f) { return g * f; }
    static bool obj_equal(const Obj& a, const Obj& b) { return a == b; }
    static bool mor_equal(const Mor& a, const Mor& b) { return a == b; }
    static bool mor_has_endpoints(const Mor& f, const Obj& s, const Obj& t) { return f.cols() == s.dim && f.rows() == t.dim && f.prime() == s.p && s.p == t.p; }
    static bool is_iso(const Mor& f) { return f.is_invertible(); }

    static std::string obj_desc(const Obj& x) { return "F_" + std::to_string(x.p) + "^" + std::to_string(x.dim); }
    static std::string mor_desc(const Mor& f) { return "matrix " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) + " of rank " + std::to_string(f.rank()); }

    // ---- colimits: coker( (+)_{arrows} X(src) -> (+)_{objects} X(obj) ) ----

    struct ColimData {
        Obj value;
        std::vector<Mor> inj;
        Matrix proj;     // (+) X(obj) -> value
        Matrix section;  // value -> (+) X(obj)
        std::vector<int> offset;
    };

    static ColimData colimit(const FinCat& d, const std::vector<Obj>& ob, const std::vector<Mor>& ar, const KanOptions& = {}) {
        std::uint32_t p = ob.empty() ? 2 : ob[0].p;
        ColimData r;
        int total = 0;
        for (int o = 0; o < d.n_objects(); ++o) {
            r.offset.push_back(total);
            total += ob[static_cast<std::size_t>(o)].dim;
        }
        // relation columns: for every non-identity arrow g: inc_tgt X(g) - inc_src
        int rel_cols = 0;
        for (int f = 0; f < d.n_arrows(); ++f)
            if (!d.is_identity(f)) rel_cols += ob[static_cast<std::size_t>(d.src(f))].dim;
        Matrix rel(total, rel_cols, p);
        int col = 0;
        for (int f = 0; f < d.n_arrows(); ++f) {
            if (d.is_identity(f)) continue;
            int s = d.src(f), t = d.tgt(f);
            int sd = ob[static_cast<std::size_t>(s)].dim;
            rel.accumulate(r.offset[static_cast<std::size_t>(t)], col, ar[static_cast<std::size_t>(f)], 1);
            rel.accumulate(r.offset[static_cast<std::size_t>(s)], col, -Matrix::identity(sd, p), 1);
            col += sd;
        }
        Cokernel ck = cokernel(rel);
        r.value = Obj{ck.dim, p};
        r.proj = ck.proj;
        r.section = ck.section;
        for (int o = 0; o < d.n_objects(); ++o) {
            int od = ob[static_cast<std::size_t>(o)].dim;
            Matrix inc(total, od, p);
            inc.paste(r.offset[static_cast<std::size_t>(o)], 0, Matrix::identity(od, p));
            r.inj.push_back(ck.proj * inc);
        }
        return r;
    }

    static Mor colimit_factor(const ColimData& d, const Obj& target, const std::vector<Mor>& cocone) {
        // stack the cocone and factor through the chosen section
        int total = d.proj.cols();
        Matrix stacked(target.dim, total, target.p);
        for (std::size_t o = 0; o < cocone.size(); ++o) stacked.paste(0, d.offset[o], cocone[o]);
        return stacked * d.section;
    }

    static Mor colimit_map(const ColimData& from, const ColimData& to, const Functor& f, const std::vector<Mor>& comps) {
        std::vector<Mor> cocone;
        for (std::size_t s = 0; s < comps.size(); ++s) cocone.push_back(to.inj[static_cast<std::size_t>(f.apply_ob(static_cast<int>(s)))] * comps[s]);
        return colimit_factor(from, to.value, cocone);
    }

    // ---- limits: ker( (+) X(obj) -> (+)_{arrows} X(tgt) ) -------------------

    struct LimData {
        Obj value;
        std::vector<Mor> proj;
        Matrix incl;  // value -> (+) X(obj), columns a kernel basis
        std::vector<int> offset;
    };

    static LimData limit(const FinCat& d, const std::vector<Obj>& ob, const std::vector<Mor>& ar, const KanOptions& = {}) {
        std::uint32_t p = ob.empty() ? 2 : ob[0].p;
        LimData r;
        int total = 0;
        for (int o = 0; o < d.n_objects(); ++o) {
            r.offset.push_back(total);
            total += ob[static_cast<std::size_t>(o)].dim;
        }
        int rows = 0;
        for (int f = 0; f < d.n_arrows(); ++f)
            if (!d.is_identity(f)) rows += ob[static_cast<std::size_t>(d.tgt(f))].dim;
        Matrix con(rows, total, p);
        int row = 0;
        for (int f = 0; f < d.n_arrows(); ++f) {
            if (d.is_identity(f)) continue;
            int s = d.src(f), t = d.tgt(f);
            int td = ob[static_cast<std::size_t>(t)].dim;
            con.accumulate(row, r.offset[static_cast<std::size_t>(s)], ar[static_cast<std::size_t>(f)], 1);
            con.accumulate(row, r.offset[static_cast<std::size_t>(t)], -Matrix::identity(td, p), 1);
            row += td;
        }
        r.incl = con.kernel_basis();
        r.value = Obj{r.incl.cols(), p};
        for (int o = 0; o < d.n_objects(); ++o) {
            int od = ob[static_cast<std::size_t>(o)].dim;
            Matrix pr(od, total, p);
            pr.paste(0, r.offset[static_cast<std::size_t>(o)], Matrix::identity(od, p));
            r.proj.push_back(pr * r.incl);
        }
        return r;
    }

    static Mor limit_factor(const LimData& d, const Obj& source, const std::vector<Mor>& cone) {
        int total = d.incl.rows();
        Matrix stacked(total, source.dim, source.p);
        for (std::size_t o = 0; o < cone.size(); ++o) stacked.paste(d.offset[o], 0, cone[o]);
        return d.incl.solve_matrix(stacked);
    }

    static Mor limit_map(const LimData& from, const LimData& to, const Functor& g, const std::vector<Mor>& comps) {
        std::vector<Mor> cone;
        for (std::size_t s = 0; s < comps.size(); ++s) cone.push_back(comps[s] * from.proj[static_cast<std::size_t>(g.apply_ob(static_cast<int>(s)))]);
        return limit_factor(to, from.value, cone);
    }
};

}  // namespace stabcheck
