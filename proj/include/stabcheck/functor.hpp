#pragma once

#include "stabcheck/fincat.hpp"

namespace stabcheck {

/// A functor between finite categories, validated exhaustively on
/// construction: endpoints, identities, and composition are all preserved.
struct Functor {
    FinCat src;
    FinCat tgt;
    std::vector<int> ob;  // object map
    std::vector<int> ar;  // arrow map

    Functor() = default;

    Functor(FinCat s, FinCat t, std::vector<int> om, std::vector<int> am) : src(std::move(s)), tgt(std::move(t)), ob(std::move(om)), ar(std::move(am)) { validate(); }

    static Functor identity(const FinCat& a) {
        std::vector<int> om(static_cast<std::size_t>(a.n_objects())), am(static_cast<std::size_t>(a.n_arrows()));
        for (int o = 0; o < a.n_objects(); ++o) om[static_cast<std::size_t>(o)] = o;
        for (int f = 0; f < a.n_arrows(); ++f) am[static_cast<std::size_t>(f)] = f;
        return Functor(a, a, std::move(om), std::move(am));
    }

    /// The unique functor to the terminal category.
    static Functor to_point(const FinCat& a) {
        FinCat pt = terminal_cat();
        std::vector<int> om(static_cast<std::size_t>(a.n_objects()), 0), am(static_cast<std::size_t>(a.n_arrows()), pt.id(0));
        return Functor(a, pt, std::move(om), std::move(am));
    }

    /// The functor from the terminal category picking out object o.
    static Functor from_point(const FinCat& a, int o) { return Functor(terminal_cat(), a, {o}, {a.id(o)}); }

    int apply_ob(int o) const { return ob[static_cast<std::size_t>(o)]; }
    int apply_ar(int f) const { return ar[static_cast<std::size_t>(f)]; }

    void validate() const {
        if (ob.size() != static_cast<std::size_t>(src.n_objects()) || ar.size() != static_cast<std::size_t>(src.n_arrows())) throw std::invalid_argument("Functor: map sizes");
        for (int o = 0; o < src.n_objects(); ++o)
            if (apply_ob(o) < 0 || apply_ob(o) >= tgt.n_objects()) throw std::invalid_argument("Functor: object image out of range");
        for (int f = 0; f < src.n_arrows(); ++f) {
            int g = apply_ar(f);
            if (g < 0 || g >= tgt.n_arrows()) throw std::invalid_argument("Functor: arrow image out of range");
            if (tgt.src(g) != apply_ob(src.src(f)) || tgt.tgt(g) != apply_ob(src.tgt(f))) throw std::invalid_argument("Functor: endpoints not preserved at " + src.arrow_name(f));
        }
        for (int o = 0; o < src.n_objects(); ++o)
            if (apply_ar(src.id(o)) != tgt.id(apply_ob(o))) throw std::invalid_argument("Functor: identities not preserved");
        for (int f = 0; f < src.n_arrows(); ++f)
            for (int g = 0; g < src.n_arrows(); ++g) {
                if (src.tgt(f) != src.src(g)) continue;
                if (apply_ar(src.compose(g, f)) != tgt.compose(apply_ar(g), apply_ar(f))) throw std::invalid_argument("Functor: composition not preserved");
            }
    }

    bool is_injective_on_objects() const {
        std::set<int> seen;
        for (int o = 0; o < src.n_objects(); ++o)
            if (!seen.insert(apply_ob(o)).second) return false;
        return true;
    }

    bool is_fully_faithful() const {
        for (int a = 0; a < src.n_objects(); ++a)
            for (int b = 0; b < src.n_objects(); ++b) {
                auto dom = src.hom(a, b);
                auto cod = tgt.hom(apply_ob(a), apply_ob(b));
                if (dom.size() != cod.size()) return false;
                std::set<int> images;
                for (int f : dom) images.insert(apply_ar(f));
                if (images.size() != dom.size()) return false;
                for (int g : cod)
                    if (!images.count(g)) return false;
            }
        return true;
    }
};

inline Functor compose(const Functor& g, const Functor& f) {
    if (!(f.tgt == g.src)) throw std::invalid_argument("compose(Functor): middle category mismatch");
    std::vector<int> om(f.ob.size()), am(f.ar.size());
    for (std::size_t i = 0; i < om.size(); ++i) om[i] = g.apply_ob(f.ob[i]);
    for (std::size_t i = 0; i < am.size(); ++i) am[i] = g.apply_ar(f.ar[i]);
    return Functor(f.src, g.tgt, std::move(om), std::move(am));
}

inline Functor opposite_functor(const Functor& u) {
    // Same maps read between the opposite categories.
    return Functor(opposite(u.src), opposite(u.tgt), u.ob, u.ar);
}

inline Functor product_functor(const Functor& u, const Functor& v) {
    FinCat ps = product(u.src, v.src), pt = product(u.tgt, v.tgt);
    std::vector<int> om(static_cast<std::size_t>(ps.n_objects())), am(static_cast<std::size_t>(ps.n_arrows()));
    for (int oa = 0; oa < u.src.n_objects(); ++oa)
        for (int ob = 0; ob < v.src.n_objects(); ++ob) om[static_cast<std::size_t>(prod_obj(u.src, v.src, oa, ob))] = prod_obj(u.tgt, v.tgt, u.apply_ob(oa), v.apply_ob(ob));
    for (int fa = 0; fa < u.src.n_arrows(); ++fa)
        for (int fb = 0; fb < v.src.n_arrows(); ++fb) am[static_cast<std::size_t>(prod_arrow(u.src, v.src, fa, fb))] = prod_arrow(u.tgt, v.tgt, u.apply_ar(fa), v.apply_ar(fb));
    return Functor(std::move(ps), std::move(pt), std::move(om), std::move(am));
}

// ---------------------------------------------------------------------------
// Slice categories.
// ---------------------------------------------------------------------------

/// The comma category (u/b): objects (a, f: u(a) -> b), arrows the arrows
/// g: a -> a' of the source with f' o u(g) = f. `projection` forgets f.
struct Slice {
    FinCat cat;
    std::vector<std::pair<int, int>> objs;    // (object of u.src, arrow u(a) -> b in u.tgt)
    std::vector<std::pair<int, int>> arrows;  // (arrow of u.src, slice source object index)
    Functor projection;

    int find_obj(int a, int f) const {
        for (std::size_t i = 0; i < objs.size(); ++i)
            if (objs[i] == std::make_pair(a, f)) return static_cast<int>(i);
        return -1;
    }
};

inline Slice slice(const Functor& u, int b) {
    if (b < 0 || b >= u.tgt.n_objects()) throw std::invalid_argument("slice: unknown object");
    Slice s;
    for (int a = 0; a < u.src.n_objects(); ++a)
        for (int f : u.tgt.hom(u.apply_ob(a), b)) s.objs.emplace_back(a, f);
    const int n = static_cast<int>(s.objs.size());
    std::vector<std::string> names;
    for (auto [a, f] : s.objs) names.push_back("(" + u.src.object_name(a) + ";" + u.tgt.arrow_name(f) + ")");
    std::vector<FinCat::Arrow> arrows;
    std::vector<std::pair<int, int>> tags;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [a, f] = s.objs[static_cast<std::size_t>(i)];
            auto [a2, f2] = s.objs[static_cast<std::size_t>(j)];
            for (int g : u.src.hom(a, a2)) {
                if (u.src.is_identity(g) && i == j) continue;
                if (u.tgt.compose(f2, u.apply_ar(g)) == f) {
                    arrows.push_back({i, j, u.src.arrow_name(g) + "@" + std::to_string(i)});
                    tags.emplace_back(g, i);
                }
            }
        }
    // composition inherited from u.src; indices extended (identities first)
    std::vector<std::array<int, 3>> comps;
    for (std::size_t gi = 0; gi < arrows.size(); ++gi)
        for (std::size_t fi = 0; fi < arrows.size(); ++fi) {
            if (arrows[fi].tgt != arrows[gi].src) continue;
            int comp = u.src.compose(tags[gi].first, tags[fi].first);
            int src_obj = arrows[fi].src, tgt_obj = arrows[gi].tgt;
            int found = -1;
            if (u.src.is_identity(comp) && src_obj == tgt_obj) {
                found = src_obj;  // identity arrow
            } else {
                for (std::size_t k = 0; k < arrows.size(); ++k)
                    if (tags[k] == std::make_pair(comp, src_obj) && arrows[k].tgt == tgt_obj) {
                        found = n + static_cast<int>(k);
                        break;
                    }
            }
            if (found == -1) throw std::logic_error("slice: composition escaped the slice");
            comps.push_back({n + static_cast<int>(gi), n + static_cast<int>(fi), found});
        }
    s.cat = FinCat::make("(" + u.src.name() + "/" + u.tgt.object_name(b) + ")", std::move(names), std::move(arrows), comps);
    // projection to u.src
    std::vector<int> om, am;
    for (auto [a, f] : s.objs) om.push_back(a);
    for (int f = 0; f < s.cat.n_arrows(); ++f) {
        if (s.cat.is_identity(f)) {
            am.push_back(u.src.id(s.objs[static_cast<std::size_t>(s.cat.src(f))].first));
        } else {
            am.push_back(tags[static_cast<std::size_t>(f - s.cat.n_objects())].first);
        }
    }
    s.arrows.clear();
    for (int f = 0; f < s.cat.n_arrows(); ++f) s.arrows.emplace_back(am[static_cast<std::size_t>(f)], s.cat.src(f));
    s.projection = Functor(s.cat, u.src, std::move(om), std::move(am));
    return s;
}

/// The comma category (b/u); objects (a, f: b -> u(a)).
inline Slice coslice(const Functor& u, int b) {
    Slice raw = slice(opposite_functor(u), b);
    // Reinterpret: objects/arrows coincide, the category is the opposite.
    Slice s;
    s.objs = raw.objs;
    s.cat = opposite(raw.cat);
    s.arrows.clear();
    for (int f = 0; f < s.cat.n_arrows(); ++f) s.arrows.emplace_back(raw.arrows[static_cast<std::size_t>(f)].first, s.cat.src(f));
    std::vector<int> om = raw.projection.ob, am = raw.projection.ar;
    s.projection = Functor(s.cat, u.src, std::move(om), std::move(am));
    return s;
}

/// Postcomposition functor (u/b) -> (u/b2) for beta: b -> b2.
inline Functor slice_map(const Functor& u, const Slice& from, const Slice& to, int beta) {
    std::vector<int> om, am;
    for (auto [a, f] : from.objs) {
        int j = to.find_obj(a, u.tgt.compose(beta, f));
        if (j < 0) throw std::logic_error("slice_map: image object missing");
        om.push_back(j);
    }
    for (int f = 0; f < from.cat.n_arrows(); ++f) {
        auto [g, si] = from.arrows[static_cast<std::size_t>(f)];
        int s2 = om[static_cast<std::size_t>(si)];
        int t2 = om[static_cast<std::size_t>(from.cat.tgt(f))];
        // find the arrow of `to` tagged (g, s2) with target t2
        int found = -1;
        for (int k = 0; k < to.cat.n_arrows(); ++k)
            if (to.arrows[static_cast<std::size_t>(k)] == std::make_pair(g, s2) && to.cat.tgt(k) == t2) {
                found = k;
                break;
            }
        if (found < 0) throw std::logic_error("slice_map: image arrow missing");
        am.push_back(found);
    }
    return Functor(from.cat, to.cat, std::move(om), std::move(am));
}

/// Precomposition functor (b2/u) -> (b/u) for beta: b -> b2.
inline Functor coslice_map(const Functor& u, const Slice& from_b2, const Slice& to_b, int beta) {
    std::vector<int> om, am;
    for (auto [a, f] : from_b2.objs) {
        int j = to_b.find_obj(a, u.tgt.compose(f, beta));
        if (j < 0) throw std::logic_error("coslice_map: image object missing");
        om.push_back(j);
    }
    for (int f = 0; f < from_b2.cat.n_arrows(); ++f) {
        auto [g, si] = from_b2.arrows[static_cast<std::size_t>(f)];
        int s2 = om[static_cast<std::size_t>(si)];
        int t2 = om[static_cast<std::size_t>(from_b2.cat.tgt(f))];
        int found = -1;
        for (int k = 0; k < to_b.cat.n_arrows(); ++k)
            if (to_b.arrows[static_cast<std::size_t>(k)] == std::make_pair(g, s2) && to_b.cat.tgt(k) == t2) {
                found = k;
                break;
            }
        if (found < 0) throw std::logic_error("coslice_map: image arrow missing");
        am.push_back(found);
    }
    return Functor(from_b2.cat, to_b.cat, std::move(om), std::move(am));
}

// ---------------------------------------------------------------------------
// Twisted arrow category.
// ---------------------------------------------------------------------------

/// tw(B): objects the arrows g: a -> b of B; an arrow g -> g' is a pair
/// (h: a' -> a, k: b -> b') with g' = k g h. `ts` is the fibration
/// (target, source): tw(B) -> B x B^op.
struct TwistedArrows {
    FinCat cat;
    Functor ts;
    std::vector<int> base_arrow;  // object of tw -> arrow of B
};

inline TwistedArrows twisted_arrow(const FinCat& b) {
    TwistedArrows t;
    std::vector<std::string> names;
    for (int g = 0; g < b.n_arrows(); ++g) {
        names.push_back(b.arrow_name(g));
        t.base_arrow.push_back(g);
    }
    std::vector<FinCat::Arrow> arrows;
    std::vector<std::pair<int, int>> hk;  // (h, k) per non-identity arrow
    for (int g = 0; g < b.n_arrows(); ++g)
        for (int g2 = 0; g2 < b.n_arrows(); ++g2)
            for (int h : b.hom(b.src(g2), b.src(g)))
                for (int k : b.hom(b.tgt(g), b.tgt(g2))) {
                    if (b.compose(k, b.compose(g, h)) != g2) continue;
                    if (b.is_identity(h) && b.is_identity(k) && g == g2) continue;
                    arrows.push_back({g, g2, "(" + b.arrow_name(h) + ";" + b.arrow_name(k) + ")"});
                    hk.emplace_back(h, k);
                }
    const int nto = static_cast<int>(names.size());
    std::vector<std::array<int, 3>> comps;
    for (std::size_t gi = 0; gi < arrows.size(); ++gi)
        for (std::size_t fi = 0; fi < arrows.size(); ++fi) {
            if (arrows[fi].tgt != arrows[gi].src) continue;
            int h = b.compose(hk[fi].first, hk[gi].first);
            int k = b.compose(hk[gi].second, hk[fi].second);
            int found = -1;
            if (b.is_identity(h) && b.is_identity(k) && arrows[fi].src == arrows[gi].tgt) {
                found = arrows[fi].src;
            } else {
                for (std::size_t m = 0; m < arrows.size(); ++m)
                    if (arrows[m].src == arrows[fi].src && arrows[m].tgt == arrows[gi].tgt && hk[m] == std::make_pair(h, k)) {
                        found = nto + static_cast<int>(m);
                        break;
                    }
            }
            if (found == -1) throw std::logic_error("twisted_arrow: composite missing");
            comps.push_back({nto + static_cast<int>(gi), nto + static_cast<int>(fi), found});
        }
    t.cat = FinCat::make("tw(" + b.name() + ")", std::move(names), std::move(arrows), comps);
    FinCat bxb = product(b, opposite(b));
    std::vector<int> om, am;
    for (int g : t.base_arrow) om.push_back(prod_obj(b, b, b.tgt(g), b.src(g)));
    for (int f = 0; f < t.cat.n_arrows(); ++f) {
        if (t.cat.is_identity(f)) {
            am.push_back(bxb.id(om[static_cast<std::size_t>(t.cat.src(f))]));
        } else {
            auto [h, k] = hk[static_cast<std::size_t>(f - t.cat.n_objects())];
            am.push_back(prod_arrow(b, b, k, h));
        }
    }
    t.ts = Functor(t.cat, std::move(bxb), std::move(om), std::move(am));
    return t;
}

// ---------------------------------------------------------------------------
// Sieves, cosieves, homotopy finiteness.
// ---------------------------------------------------------------------------

inline void require_embedding(const Functor& u, const char* who) {
    if (!u.is_fully_faithful() || !u.is_injective_on_objects()) throw std::invalid_argument(std::string(who) + ": functor must be fully faithful and injective on objects");
}

/// u is a sieve when every arrow into its image lies in the image.
inline bool is_sieve(const Functor& u) {
    require_embedding(u, "is_sieve");
    std::set<int> image;
    for (int o : u.ob) image.insert(o);
    for (int f = 0; f < u.tgt.n_arrows(); ++f)
        if (image.count(u.tgt.tgt(f)) && !image.count(u.tgt.src(f))) return false;
    return true;
}

/// u is a cosieve when every arrow out of its image lies in the image.
inline bool is_cosieve(const Functor& u) {
    require_embedding(u, "is_cosieve");
    std::set<int> image;
    for (int o : u.ob) image.insert(o);
    for (int f = 0; f < u.tgt.n_arrows(); ++f)
        if (image.count(u.tgt.src(f)) && !image.count(u.tgt.tgt(f))) return false;
    return true;
}

inline bool is_strictly_homotopy_finite(const FinCat& a) {
    // no non-identity endomorphisms
    for (int f = 0; f < a.n_arrows(); ++f)
        if (a.src(f) == a.tgt(f) && !a.is_identity(f)) return false;
    // skeletal: no two distinct isomorphic objects
    for (int x = 0; x < a.n_objects(); ++x)
        for (int y = x + 1; y < a.n_objects(); ++y)
            for (int f : a.hom(x, y))
                for (int g : a.hom(y, x))
                    if (a.is_identity(a.compose(g, f)) && a.is_identity(a.compose(f, g))) return false;
    return true;
}

/// Skeleton: one object per isomorphism class (the first in object order),
/// with the inclusion and a retraction; retr o incl = id on the skeleton and
/// incl o retr is isomorphic to the identity.
struct Skeleton {
    FinCat cat;
    Functor incl;
    Functor retr;
};

inline Skeleton skeleton(const FinCat& a) {
    const int n = a.n_objects();
    std::vector<int> rep(static_cast<std::size_t>(n));
    std::vector<int> to_rep(static_cast<std::size_t>(n));    // iso a -> rep(a)
    std::vector<int> from_rep(static_cast<std::size_t>(n));  // inverse iso
    for (int x = 0; x < n; ++x) {
        rep[static_cast<std::size_t>(x)] = x;
        to_rep[static_cast<std::size_t>(x)] = a.id(x);
        from_rep[static_cast<std::size_t>(x)] = a.id(x);
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < x; ++y) {
            if (rep[static_cast<std::size_t>(y)] != y) continue;
            bool found = false;
            for (int f : a.hom(x, y)) {
                for (int g : a.hom(y, x))
                    if (a.is_identity(a.compose(g, f)) && a.is_identity(a.compose(f, g))) {
                        rep[static_cast<std::size_t>(x)] = y;
                        to_rep[static_cast<std::size_t>(x)] = f;
                        from_rep[static_cast<std::size_t>(x)] = g;
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (found) break;
        }
    }
    std::vector<int> chosen;
    std::vector<int> obj_index(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x)
        if (rep[static_cast<std::size_t>(x)] == x) {
            obj_index[static_cast<std::size_t>(x)] = static_cast<int>(chosen.size());
            chosen.push_back(x);
        }
    // full subcategory on chosen objects
    std::vector<std::string> names;
    for (int x : chosen) names.push_back(a.object_name(x));
    std::vector<FinCat::Arrow> arrows;
    std::vector<int> tag;  // arrow of a
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < chosen.size(); ++j)
            for (int f : a.hom(chosen[i], chosen[j])) {
                if (a.is_identity(f)) continue;
                arrows.push_back({static_cast<int>(i), static_cast<int>(j), a.arrow_name(f)});
                tag.push_back(f);
            }
    const int nsk = static_cast<int>(names.size());
    std::vector<std::array<int, 3>> comps;
    for (std::size_t gi = 0; gi < arrows.size(); ++gi)
        for (std::size_t fi = 0; fi < arrows.size(); ++fi) {
            if (arrows[fi].tgt != arrows[gi].src) continue;
            int c = a.compose(tag[gi], tag[fi]);
            int found = -1;
            if (a.is_identity(c)) {
                found = arrows[fi].src;
            } else {
                for (std::size_t m = 0; m < arrows.size(); ++m)
                    if (tag[m] == c && arrows[m].src == arrows[fi].src && arrows[m].tgt == arrows[gi].tgt) {
                        found = nsk + static_cast<int>(m);
                        break;
                    }
            }
            if (found == -1) throw std::logic_error("skeleton: full subcategory not closed");
            comps.push_back({static_cast<int>(nsk + gi), static_cast<int>(nsk + fi), found});
        }
    Skeleton sk;
    sk.cat = FinCat::make("sk(" + a.name() + ")", std::move(names), std::move(arrows), comps);
    auto skel_arrow = [&](int f_in_a, int si, int ti) {
        if (a.is_identity(f_in_a)) return sk.cat.id(si);
        for (int k = sk.cat.n_objects(); k < sk.cat.n_arrows(); ++k)
            if (tag[static_cast<std::size_t>(k - sk.cat.n_objects())] == f_in_a && sk.cat.src(k) == si && sk.cat.tgt(k) == ti) return k;
        throw std::logic_error("skeleton: arrow lookup failed");
    };
    {
        std::vector<int> om, am;
        for (int x : chosen) om.push_back(x);
        for (int k = 0; k < sk.cat.n_arrows(); ++k) {
            if (sk.cat.is_identity(k))
                am.push_back(a.id(chosen[static_cast<std::size_t>(sk.cat.src(k))]));
            else
                am.push_back(tag[static_cast<std::size_t>(k - sk.cat.n_objects())]);
        }
        sk.incl = Functor(sk.cat, a, std::move(om), std::move(am));
    }
    {
        std::vector<int> om, am;
        for (int x = 0; x < n; ++x) om.push_back(obj_index[static_cast<std::size_t>(rep[static_cast<std::size_t>(x)])]);
        for (int f = 0; f < a.n_arrows(); ++f) {
            // conjugate: to_rep[tgt] o f o from_rep[src]
            int g = a.compose(to_rep[static_cast<std::size_t>(a.tgt(f))], a.compose(f, from_rep[static_cast<std::size_t>(a.src(f))]));
            am.push_back(skel_arrow(g, om[static_cast<std::size_t>(a.src(f))], om[static_cast<std::size_t>(a.tgt(f))]));
        }
        sk.retr = Functor(a, sk.cat, std::move(om), std::move(am));
    }
    return sk;
}

// ---------------------------------------------------------------------------
// Nerve.
// ---------------------------------------------------------------------------

/// Nondegenerate simplices of the nerve, graded by dimension. Dimension 0
/// lists the objects; dimension n >= 1 lists chains [f_1, ..., f_n] of
/// composable non-identity arrows in path order.
struct Nerve {
    std::vector<std::vector<std::vector<int>>> simplices;  // [dim][index] -> arrow chain; dim 0 holds {object}

    int top_dimension() const { return static_cast<int>(simplices.size()) - 1; }
    std::size_t count(int dim) const { return dim < static_cast<int>(simplices.size()) ? simplices[static_cast<std::size_t>(dim)].size() : 0; }
};

inline Nerve nerve(const FinCat& a) {
    if (!is_strictly_homotopy_finite(a)) throw std::invalid_argument("nerve: category is not strictly homotopy finite");
    Nerve n;
    n.simplices.emplace_back();
    for (int o = 0; o < a.n_objects(); ++o) n.simplices[0].push_back({o});
    while (true) {
        const auto& prev = n.simplices.back();
        std::vector<std::vector<int>> next;
        for (const auto& chain : prev) {
            int end = n.simplices.size() == 1 ? chain[0] : a.tgt(chain.back());
            for (int f = 0; f < a.n_arrows(); ++f) {
                if (a.is_identity(f) || a.src(f) != end) continue;
                std::vector<int> c;
                if (n.simplices.size() > 1) c = chain;
                c.push_back(f);
                next.push_back(std::move(c));
            }
        }
        if (next.empty()) break;
        n.simplices.push_back(std::move(next));
        if (static_cast<int>(n.simplices.size()) > a.n_objects() + 1) throw std::logic_error("nerve: runaway chain enumeration");
    }
    return n;
}

}  // namespace stabcheck
