#pragma once

#include "stabcheck/fincat.hpp"
#include "stabcheck/functor.hpp"

namespace stabcheck {

/// Options threaded through Kan extension machinery. Only the chain backend
/// reads the degree cap; totalizations that would leave [-max_degree,
/// max_degree] throw std::domain_error.
struct KanOptions {
    int max_degree = 8;
};

/// A functor from a finite shape into a backend's value category, stored as
/// one value per object and one value-morphism per arrow.
template <class B>
struct Diagram {
    FinCat shape;
    std::vector<typename B::Obj> ob;
    std::vector<typename B::Mor> ar;

    const typename B::Obj& at(int o) const { return ob[static_cast<std::size_t>(o)]; }
    const typename B::Mor& map(int f) const { return ar[static_cast<std::size_t>(f)]; }

    /// Exhaustive functoriality check: identities and all composable pairs.
    void validate() const {
        if (ob.size() != static_cast<std::size_t>(shape.n_objects()) || ar.size() != static_cast<std::size_t>(shape.n_arrows())) throw std::invalid_argument("Diagram: size mismatch");
        for (int f = 0; f < shape.n_arrows(); ++f)
            if (!B::mor_has_endpoints(map(f), at(shape.src(f)), at(shape.tgt(f)))) throw std::invalid_argument("Diagram: arrow value endpoints wrong at " + shape.arrow_name(f));
        for (int o = 0; o < shape.n_objects(); ++o)
            if (!B::mor_equal(map(shape.id(o)), B::id(at(o)))) throw std::invalid_argument("Diagram: identity not preserved at " + shape.object_name(o));
        for (int f = 0; f < shape.n_arrows(); ++f)
            for (int g = 0; g < shape.n_arrows(); ++g) {
                if (shape.tgt(f) != shape.src(g)) continue;
                if (!B::mor_equal(map(shape.compose(g, f)), B::compose(map(g), map(f)))) throw std::invalid_argument("Diagram: composition not preserved on (" + shape.arrow_name(g) + ", " + shape.arrow_name(f) + ")");
            }
    }

    bool equals(const Diagram& o) const {
        if (!(shape == o.shape) || ob.size() != o.ob.size() || ar.size() != o.ar.size()) return false;
        for (std::size_t i = 0; i < ob.size(); ++i)
            if (!B::obj_equal(ob[i], o.ob[i])) return false;
        for (std::size_t i = 0; i < ar.size(); ++i)
            if (!B::mor_equal(ar[i], o.ar[i])) return false;
        return true;
    }

    /// Constant diagram on a shape.
    static Diagram constant(const FinCat& shape, const typename B::Obj& v) {
        Diagram d;
        d.shape = shape;
        d.ob.assign(static_cast<std::size_t>(shape.n_objects()), v);
        d.ar.assign(static_cast<std::size_t>(shape.n_arrows()), B::id(v));
        return d;
    }
};

/// Componentwise morphism between two parallel diagrams.
template <class B>
struct Transformation {
    Diagram<B> src;
    Diagram<B> tgt;
    std::vector<typename B::Mor> comp;

    const typename B::Mor& at(int o) const { return comp[static_cast<std::size_t>(o)]; }

    static Transformation identity(const Diagram<B>& d) {
        Transformation t;
        t.src = d;
        t.tgt = d;
        for (int o = 0; o < d.shape.n_objects(); ++o) t.comp.push_back(B::id(d.at(o)));
        return t;
    }

    /// Every naturality square must commute on the nose.
    void validate() const {
        if (!(src.shape == tgt.shape)) throw std::invalid_argument("Transformation: parallel diagrams required");
        if (comp.size() != static_cast<std::size_t>(src.shape.n_objects())) throw std::invalid_argument("Transformation: component count");
        for (int o = 0; o < src.shape.n_objects(); ++o)
            if (!B::mor_has_endpoints(at(o), src.at(o), tgt.at(o))) throw std::invalid_argument("Transformation: component endpoints wrong at " + src.shape.object_name(o));
        for (int f = 0; f < src.shape.n_arrows(); ++f) {
            auto lhs = B::compose(at(src.shape.tgt(f)), src.map(f));
            auto rhs = B::compose(tgt.map(f), at(src.shape.src(f)));
            if (!B::mor_equal(lhs, rhs)) throw std::invalid_argument("Transformation: naturality fails at " + src.shape.arrow_name(f));
        }
    }

    bool is_natural() const {
        try {
            validate();
            return true;
        } catch (const std::invalid_argument&) {
            return false;
        }
    }
};

template <class B>
Transformation<B> compose(const Transformation<B>& g, const Transformation<B>& f) {
    Transformation<B> r;
    r.src = f.src;
    r.tgt = g.tgt;
    for (int o = 0; o < f.src.shape.n_objects(); ++o) r.comp.push_back(B::compose(g.at(o), f.at(o)));
    return r;
}

/// Componentwise isomorphism test with a witness for the first failure.
struct IsoReport {
    bool ok = true;
    int object = -1;
    std::string object_name;
    std::string detail;
};

template <class B>
IsoReport check_iso(const Transformation<B>& t) {
    IsoReport r;
    for (int o = 0; o < t.src.shape.n_objects(); ++o) {
        if (!B::is_iso(t.at(o))) {
            r.ok = false;
            r.object = o;
            r.object_name = t.src.shape.object_name(o);
            r.detail = B::mor_desc(t.at(o));
            return r;
        }
    }
    return r;
}

template <class B>
bool is_iso(const Transformation<B>& t) {
    return check_iso(t).ok;
}

/// Precomposition with a functor into the diagram's shape.
template <class B>
Diagram<B> restrict(const Functor& u, const Diagram<B>& x) {
    if (!(u.tgt == x.shape)) throw std::invalid_argument("restrict: shape mismatch");
    Diagram<B> r;
    r.shape = u.src;
    for (int o = 0; o < u.src.n_objects(); ++o) r.ob.push_back(x.at(u.apply_ob(o)));
    for (int f = 0; f < u.src.n_arrows(); ++f) r.ar.push_back(x.map(u.apply_ar(f)));
    return r;
}

template <class B>
Transformation<B> restrict(const Functor& u, const Transformation<B>& t) {
    Transformation<B> r;
    r.src = restrict(u, t.src);
    r.tgt = restrict(u, t.tgt);
    for (int o = 0; o < u.src.n_objects(); ++o) r.comp.push_back(t.at(u.apply_ob(o)));
    return r;
}

}  // namespace stabcheck
