#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabcheck {

class FinCat;
inline FinCat product(const FinCat& a, const FinCat& b);
inline FinCat opposite(const FinCat& a);

/// A finite category presented by an explicit composition table.
///
/// Objects are referred to by index into an ordered list of string names;
/// arrows by index into the arrow list. Every object has a distinguished
/// identity arrow (named "id:<object>"). Construction validates totality of
/// composition on composable pairs, unit laws, and associativity by
/// exhaustive enumeration.
class FinCat {
public:
    struct Arrow {
        int src = 0;
        int tgt = 0;
        std::string name;
    };

    FinCat() = default;

    /// Builds a category from named objects, extra (non-identity) arrows, and
    /// a composite list. Identities are created first, so in `composites`
    /// the identity of object o has index o and the i-th extra arrow has
    /// index n_objects + i. Identity-against-anything composites are filled
    /// in automatically; all other composable pairs must be listed.
    static FinCat make(std::string name, std::vector<std::string> objects, std::vector<Arrow> arrows, const std::vector<std::array<int, 3>>& composites) {
        FinCat c;
        c.name_ = std::move(name);
        c.objects_ = std::move(objects);
        c.identity_.resize(c.objects_.size());
        for (std::size_t o = 0; o < c.objects_.size(); ++o) {
            c.identity_[o] = static_cast<int>(c.arrows_.size());
            c.arrows_.push_back({static_cast<int>(o), static_cast<int>(o), "id:" + c.objects_[o]});
        }
        for (auto& a : arrows) c.arrows_.push_back(std::move(a));
        const int na = static_cast<int>(c.arrows_.size());
        c.comp_.assign(static_cast<std::size_t>(na) * na, -1);
        auto put = [&](int g, int f, int gf) {
            auto& slot = c.comp_[static_cast<std::size_t>(g) * na + f];
            if (slot != -1 && slot != gf) throw std::invalid_argument(c.name_ + ": conflicting composite for (" + c.arrows_[static_cast<std::size_t>(g)].name + ", " + c.arrows_[static_cast<std::size_t>(f)].name + ")");
            slot = gf;
        };
        for (int f = 0; f < na; ++f) {
            put(c.identity_[static_cast<std::size_t>(c.arrows_[static_cast<std::size_t>(f)].tgt)], f, f);
            put(f, c.identity_[static_cast<std::size_t>(c.arrows_[static_cast<std::size_t>(f)].src)], f);
        }
        for (const auto& t : composites) {
            int g = t[0], f = t[1], gf = t[2];
            if (f < 0 || g < 0 || gf < 0 || f >= na || g >= na || gf >= na) throw std::invalid_argument(c.name_ + ": composite entry out of range");
            put(g, f, gf);
        }
        c.validate();
        return c;
    }

    const std::string& name() const { return name_; }
    int n_objects() const { return static_cast<int>(objects_.size()); }
    int n_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& object_name(int o) const { return objects_[static_cast<std::size_t>(o)]; }
    const std::string& arrow_name(int f) const { return arrows_[static_cast<std::size_t>(f)].name; }
    int src(int f) const { return arrows_[static_cast<std::size_t>(f)].src; }
    int tgt(int f) const { return arrows_[static_cast<std::size_t>(f)].tgt; }
    int id(int o) const { return identity_[static_cast<std::size_t>(o)]; }
    bool is_identity(int f) const { return identity_[static_cast<std::size_t>(arrows_[static_cast<std::size_t>(f)].src)] == f; }

    int object_index(const std::string& name) const {
        for (int o = 0; o < n_objects(); ++o)
            if (objects_[static_cast<std::size_t>(o)] == name) return o;
        throw std::invalid_argument(name_ + ": unknown object " + name);
    }

    /// g after f; throws when tgt(f) != src(g).
    int compose(int g, int f) const {
        if (tgt(f) != src(g)) throw std::invalid_argument(name_ + ": arrows not composable");
        int gf = comp_[static_cast<std::size_t>(g) * n_arrows() + f];
        if (gf < 0) throw std::invalid_argument(name_ + ": composition table incomplete");
        return gf;
    }

    std::vector<int> hom(int a, int b) const {
        std::vector<int> r;
        for (int f = 0; f < n_arrows(); ++f)
            if (src(f) == a && tgt(f) == b) r.push_back(f);
        return r;
    }

    std::vector<int> arrows_from(int a) const {
        std::vector<int> r;
        for (int f = 0; f < n_arrows(); ++f)
            if (src(f) == a) r.push_back(f);
        return r;
    }

    bool operator==(const FinCat& o) const { return objects_ == o.objects_ && arrows_eq(o) && comp_ == o.comp_; }

    void validate() const {
        for (const auto& a : arrows_)
            if (a.src < 0 || a.src >= n_objects() || a.tgt < 0 || a.tgt >= n_objects()) throw std::invalid_argument(name_ + ": arrow endpoint out of range");
        const int na = n_arrows();
        for (int f = 0; f < na; ++f)
            for (int g = 0; g < na; ++g) {
                int gf = comp_[static_cast<std::size_t>(g) * na + f];
                if (tgt(f) == src(g)) {
                    if (gf < 0) throw std::invalid_argument(name_ + ": missing composite (" + arrow_name(g) + ", " + arrow_name(f) + ")");
                    if (src(gf) != src(f) || tgt(gf) != tgt(g)) throw std::invalid_argument(name_ + ": composite endpoints wrong for (" + arrow_name(g) + ", " + arrow_name(f) + ")");
                } else if (gf >= 0) {
                    throw std::invalid_argument(name_ + ": composite defined for non-composable pair");
                }
            }
        for (int o = 0; o < n_objects(); ++o) {
            int e = identity_[static_cast<std::size_t>(o)];
            if (src(e) != o || tgt(e) != o) throw std::invalid_argument(name_ + ": identity endpoints wrong");
        }
        for (int f = 0; f < na; ++f) {
            if (comp_[static_cast<std::size_t>(identity_[static_cast<std::size_t>(tgt(f))]) * na + f] != f) throw std::invalid_argument(name_ + ": left unit law fails for " + arrow_name(f));
            if (comp_[static_cast<std::size_t>(f) * na + identity_[static_cast<std::size_t>(src(f))]] != f) throw std::invalid_argument(name_ + ": right unit law fails for " + arrow_name(f));
        }
        for (int f = 0; f < na; ++f)
            for (int g = 0; g < na; ++g) {
                if (tgt(f) != src(g)) continue;
                for (int h = 0; h < na; ++h) {
                    if (tgt(g) != src(h)) continue;
                    if (compose(h, compose(g, f)) != compose(compose(h, g), f)) throw std::invalid_argument(name_ + ": associativity fails on (" + arrow_name(h) + ", " + arrow_name(g) + ", " + arrow_name(f) + ")");
                }
            }
    }

    /// Builds a category from a reflexive-transitive relation: one arrow a->b
    /// whenever leq(a,b). Composition is forced by uniqueness of arrows.
    static FinCat poset(std::string name, std::vector<std::string> elements, const std::vector<std::pair<int, int>>& strict_pairs) {
        // strict_pairs must be transitively closed
        std::vector<Arrow> arrows;
        std::map<std::pair<int, int>, int> idx;
        for (auto [a, b] : strict_pairs) {
            if (a == b) continue;
            idx[{a, b}] = static_cast<int>(arrows.size());
            arrows.push_back({a, b, elements[static_cast<std::size_t>(a)] + "<" + elements[static_cast<std::size_t>(b)]});
        }
        const int nid = static_cast<int>(elements.size());
        std::vector<std::array<int, 3>> comps;
        for (auto& [gf, gi] : idx)
            for (auto& [ff, fi] : idx) {
                if (ff.second != gf.first) continue;
                auto it = idx.find({ff.first, gf.second});
                if (it == idx.end()) throw std::invalid_argument(name + ": relation not transitively closed");
                comps.push_back({nid + gi, nid + fi, nid + it->second});
            }
        return make(std::move(name), std::move(elements), std::move(arrows), comps);
    }

private:
    friend FinCat product(const FinCat&, const FinCat&);
    friend FinCat opposite(const FinCat&);

    bool arrows_eq(const FinCat& o) const {
        if (arrows_.size() != o.arrows_.size()) return false;
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].src != o.arrows_[i].src || arrows_[i].tgt != o.arrows_[i].tgt || arrows_[i].name != o.arrows_[i].name) return false;
        return identity_ == o.identity_;
    }

    std::string name_;
    std::vector<std::string> objects_;
    std::vector<Arrow> arrows_;
    std::vector<int> identity_;
    std::vector<int> comp_;  // comp_[g * n_arrows + f] = g o f, -1 when not composable
};

// ---------------------------------------------------------------------------
// Stock shapes.
// ---------------------------------------------------------------------------

inline FinCat terminal_cat() { return FinCat::poset("1", {"*"}, {}); }

inline FinCat empty_cat() { return FinCat::poset("0", {}, {}); }

inline FinCat discrete_cat(int n) {
    std::vector<std::string> obs;
    for (int i = 0; i < n; ++i) obs.push_back("d" + std::to_string(i));
    return FinCat::poset("disc" + std::to_string(n), std::move(obs), {});
}

/// The poset 0 < 1 < ... < n as a category.
inline FinCat simplex_cat(int n) {
    std::vector<std::string> obs;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i <= n; ++i) obs.push_back(std::to_string(i));
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) rel.emplace_back(i, j);
    return FinCat::poset("[" + std::to_string(n) + "]", std::move(obs), rel);
}

inline FinCat interval_cat() { return simplex_cat(1); }

/// Span shape: l <- c -> r.
inline FinCat span_cat() { return FinCat::poset("span", {"c", "l", "r"}, {{0, 1}, {0, 2}}); }

/// Cospan shape: l -> c <- r.
inline FinCat cospan_cat() { return FinCat::poset("cospan", {"l", "r", "c"}, {{0, 2}, {1, 2}}); }

/// Product object/arrow index conventions used throughout: first factor major.
inline int prod_obj(const FinCat& a, const FinCat& b, int oa, int ob) { return oa * b.n_objects() + ob; }
inline int prod_arrow(const FinCat& a, const FinCat& b, int fa, int fb) { return fa * b.n_arrows() + fb; }
inline std::pair<int, int> prod_obj_split(const FinCat& b, int o) { return {o / b.n_objects(), o % b.n_objects()}; }
inline std::pair<int, int> prod_arrow_split(const FinCat& b, int f) { return {f / b.n_arrows(), f % b.n_arrows()}; }

inline FinCat product(const FinCat& a, const FinCat& b) {
    std::vector<std::string> obs;
    for (int i = 0; i < a.n_objects(); ++i)
        for (int j = 0; j < b.n_objects(); ++j) obs.push_back("(" + a.object_name(i) + "," + b.object_name(j) + ")");
    const int naf = a.n_arrows(), nbf = b.n_arrows();
    FinCat r;
    r.name_ = a.name() + "x" + b.name();
    r.objects_ = std::move(obs);
    r.arrows_.resize(static_cast<std::size_t>(naf) * nbf);
    for (int fa = 0; fa < naf; ++fa)
        for (int fb = 0; fb < nbf; ++fb) {
            FinCat::Arrow ar;
            ar.src = prod_obj(a, b, a.src(fa), b.src(fb));
            ar.tgt = prod_obj(a, b, a.tgt(fa), b.tgt(fb));
            ar.name = "(" + a.arrow_name(fa) + "," + b.arrow_name(fb) + ")";
            r.arrows_[static_cast<std::size_t>(prod_arrow(a, b, fa, fb))] = ar;
        }
    r.identity_.resize(r.objects_.size());
    for (int oa = 0; oa < a.n_objects(); ++oa)
        for (int ob = 0; ob < b.n_objects(); ++ob) r.identity_[static_cast<std::size_t>(prod_obj(a, b, oa, ob))] = prod_arrow(a, b, a.id(oa), b.id(ob));
    const int na = r.n_arrows();
    r.comp_.assign(static_cast<std::size_t>(na) * na, -1);
    for (int ga = 0; ga < naf; ++ga)
        for (int gb = 0; gb < nbf; ++gb)
            for (int fa = 0; fa < naf; ++fa)
                for (int fb = 0; fb < nbf; ++fb) {
                    if (a.tgt(fa) != a.src(ga) || b.tgt(fb) != b.src(gb)) continue;
                    int g = prod_arrow(a, b, ga, gb), f = prod_arrow(a, b, fa, fb);
                    r.comp_[static_cast<std::size_t>(g) * na + f] = prod_arrow(a, b, a.compose(ga, fa), b.compose(gb, fb));
                }
    r.validate();
    return r;
}

inline FinCat opposite(const FinCat& a) {
    FinCat r;
    r.name_ = a.name() + "^op";
    r.objects_.clear();
    for (int o = 0; o < a.n_objects(); ++o) r.objects_.push_back(a.object_name(o));
    r.arrows_.resize(static_cast<std::size_t>(a.n_arrows()));
    for (int f = 0; f < a.n_arrows(); ++f) r.arrows_[static_cast<std::size_t>(f)] = {a.tgt(f), a.src(f), a.arrow_name(f)};
    r.identity_.resize(r.objects_.size());
    for (int o = 0; o < a.n_objects(); ++o) r.identity_[static_cast<std::size_t>(o)] = a.id(o);
    const int na = a.n_arrows();
    r.comp_.assign(static_cast<std::size_t>(na) * na, -1);
    for (int g = 0; g < na; ++g)
        for (int f = 0; f < na; ++f) {
            // (g o f) in A^op = (f o g) in A when src_A(f) = tgt_A(g)
            if (a.src(f) != a.tgt(g)) continue;
            r.comp_[static_cast<std::size_t>(g) * na + f] = a.compose(f, g);
        }
    r.validate();
    return r;
}

/// Square shape [1]x[1] with the product index conventions.
inline FinCat square_cat() { return product(interval_cat(), interval_cat()); }

/// The shape [2]x[1].
inline FinCat boxbar_cat() { return product(simplex_cat(2), interval_cat()); }

}  // namespace stabcheck
