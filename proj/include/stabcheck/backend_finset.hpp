#pragma once

#include <numeric>
#include <string>

#include "stabcheck/diagram.hpp"

namespace stabcheck {

/// The represented backend of finite sets and functions. Colimits are
/// quotients of disjoint unions, limits are sets of compatible tuples,
/// both with canonical element orderings so results are deterministic.
struct FinSetBackend {
    static constexpr bool pointed = false;
    static constexpr const char* name = "finset";

    struct Obj {
        int size = 0;
        bool operator==(const Obj&) const = default;
    };

    struct Mor {
        int src_size = 0;
        int tgt_size = 0;
        std::vector<int> map;  // element images
        bool operator==(const Mor&) const = default;
    };

    static Obj zero_object() { throw std::domain_error("finset: not pointed, no zero object"); }

    static Mor id(const Obj& x) {
        Mor f{x.size, x.size, std::vector<int>(static_cast<std::size_t>(x.size))};
        std::iota(f.map.begin(), f.map.end(), 0);
        return f;
    }

    static Mor compose(const Mor& g, const Mor& f) {
        if (f.tgt_size != g.src_size) throw std::invalid_argument("finset: not composable");
        Mor r{f.src_size, g.tgt_size, {}};
        r.map.reserve(f.map.size());
        for (int v : f.map) r.map.push_back(g.map[static_cast<std::size_t>(v)]);
        return r;
    }

    static bool obj_equal(const Obj& a, const Obj& b) { return a == b; }
    static bool mor_equal(const Mor& a, const Mor& b) { return a == b; }
    static bool mor_has_endpoints(const Mor& f, const Obj& s, const Obj& t) { return f.src_size == s.size && f.tgt_size == t.size && static_cast<int>(f.map.size()) == s.size; }

    static bool is_iso(const Mor& f) {
        if (f.src_size != f.tgt_size) return false;
        std::vector<bool> hit(static_cast<std::size_t>(f.tgt_size), false);
        for (int v : f.map) {
            if (v < 0 || v >= f.tgt_size || hit[static_cast<std::size_t>(v)]) return false;
            hit[static_cast<std::size_t>(v)] = true;
        }
        return true;
    }

    static std::string obj_desc(const Obj& x) { return "set of size " + std::to_string(x.size); }
    static std::string mor_desc(const Mor& f) { return "function " + std::to_string(f.src_size) + " -> " + std::to_string(f.tgt_size); }

    // ---- colimits ----------------------------------------------------------

    struct ColimData {
        Obj value;
        std::vector<Mor> inj;          // per object of the shape
        std::vector<int> class_of;     // flattened element -> class
        std::vector<int> elem_offset;  // per object
    };

    static ColimData colimit(const FinCat& d, const std::vector<Obj>& ob, const std::vector<Mor>& ar, const KanOptions& = {}) {
        ColimData r;
        int total = 0;
        for (int o = 0; o < d.n_objects(); ++o) {
            r.elem_offset.push_back(total);
            total += ob[static_cast<std::size_t>(o)].size;
        }
        std::vector<int> parent(static_cast<std::size_t>(total));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        };
        for (int f = 0; f < d.n_arrows(); ++f) {
            const Mor& m = ar[static_cast<std::size_t>(f)];
            for (int e = 0; e < m.src_size; ++e) unite(r.elem_offset[static_cast<std::size_t>(d.src(f))] + e, r.elem_offset[static_cast<std::size_t>(d.tgt(f))] + m.map[static_cast<std::size_t>(e)]);
        }
        // canonical class numbering by least representative
        std::vector<int> rep_to_class(static_cast<std::size_t>(total), -1);
        int classes = 0;
        r.class_of.assign(static_cast<std::size_t>(total), -1);
        for (int e = 0; e < total; ++e) {
            int rp = find(e);
            if (rep_to_class[static_cast<std::size_t>(rp)] < 0) rep_to_class[static_cast<std::size_t>(rp)] = classes++;
            r.class_of[static_cast<std::size_t>(e)] = rep_to_class[static_cast<std::size_t>(rp)];
        }
        r.value = Obj{classes};
        for (int o = 0; o < d.n_objects(); ++o) {
            Mor inj{ob[static_cast<std::size_t>(o)].size, classes, {}};
            for (int e = 0; e < inj.src_size; ++e) inj.map.push_back(r.class_of[static_cast<std::size_t>(r.elem_offset[static_cast<std::size_t>(o)] + e)]);
            r.inj.push_back(std::move(inj));
        }
        return r;
    }

    /// Unique map out of the colimit induced by a compatible cocone.
    static Mor colimit_factor(const ColimData& d, const Obj& target, const std::vector<Mor>& cocone) {
        Mor r{d.value.size, target.size, std::vector<int>(static_cast<std::size_t>(d.value.size), -1)};
        for (std::size_t o = 0; o < d.inj.size(); ++o)
            for (int e = 0; e < d.inj[o].src_size; ++e) {
                int cls = d.inj[o].map[static_cast<std::size_t>(e)];
                int img = cocone[o].map[static_cast<std::size_t>(e)];
                if (r.map[static_cast<std::size_t>(cls)] >= 0 && r.map[static_cast<std::size_t>(cls)] != img) throw std::logic_error("finset colimit_factor: cocone not compatible");
                r.map[static_cast<std::size_t>(cls)] = img;
            }
        for (int v : r.map)
            if (v < 0) throw std::logic_error("finset colimit_factor: class not covered");
        return r;
    }

    /// Induced map colim X -> colim X' along a shape functor F and a family
    /// comps[s] : X(s) -> X'(F s).
    static Mor colimit_map(const ColimData& from, const ColimData& to, const Functor& f, const std::vector<Mor>& comps) {
        std::vector<Mor> cocone;
        for (std::size_t s = 0; s < comps.size(); ++s) cocone.push_back(compose(to.inj[static_cast<std::size_t>(f.apply_ob(static_cast<int>(s)))], comps[s]));
        return colimit_factor(from, to.value, cocone);
    }

    // ---- limits ------------------------------------------------------------

    struct LimData {
        Obj value;
        std::vector<Mor> proj;
        std::vector<std::vector<int>> tuples;  // canonical lexicographic order
    };

    static LimData limit(const FinCat& d, const std::vector<Obj>& ob, const std::vector<Mor>& ar, const KanOptions& = {}) {
        LimData r;
        const int n = d.n_objects();
        std::vector<int> tuple(static_cast<std::size_t>(n), 0);
        std::function<void(int)> rec = [&](int at) {
            if (at == n) {
                r.tuples.push_back(tuple);
                return;
            }
            for (int v = 0; v < ob[static_cast<std::size_t>(at)].size; ++v) {
                tuple[static_cast<std::size_t>(at)] = v;
                bool ok = true;
                for (int f = 0; f < d.n_arrows() && ok; ++f) {
                    int s = d.src(f), t = d.tgt(f);
                    if (s >= at + 1 || t >= at + 1) continue;
                    if (ar[static_cast<std::size_t>(f)].map[static_cast<std::size_t>(tuple[static_cast<std::size_t>(s)])] != tuple[static_cast<std::size_t>(t)]) ok = false;
                }
                if (ok) rec(at + 1);
            }
        };
        if (n == 0)
            r.tuples.push_back({});
        else
            rec(0);
        r.value = Obj{static_cast<int>(r.tuples.size())};
        for (int o = 0; o < n; ++o) {
            Mor p{r.value.size, ob[static_cast<std::size_t>(o)].size, {}};
            for (const auto& tp : r.tuples) p.map.push_back(tp[static_cast<std::size_t>(o)]);
            r.proj.push_back(std::move(p));
        }
        return r;
    }

    static Mor limit_factor(const LimData& d, const Obj& source, const std::vector<Mor>& cone) {
        Mor r{source.size, d.value.size, std::vector<int>(static_cast<std::size_t>(source.size), -1)};
        for (int e = 0; e < source.size; ++e) {
            std::vector<int> tuple;
            for (const auto& c : cone) tuple.push_back(c.map[static_cast<std::size_t>(e)]);
            auto it = std::find(d.tuples.begin(), d.tuples.end(), tuple);
            if (it == d.tuples.end()) throw std::logic_error("finset limit_factor: cone not compatible");
            r.map[static_cast<std::size_t>(e)] = static_cast<int>(it - d.tuples.begin());
        }
        return r;
    }

    /// Induced map lim X -> lim X' along g : shape(X') -> shape(X) and
    /// comps[s] : X(g s) -> X'(s).
    static Mor limit_map(const LimData& from, const LimData& to, const Functor& g, const std::vector<Mor>& comps) {
        std::vector<Mor> cone;
        for (std::size_t s = 0; s < comps.size(); ++s) cone.push_back(compose(comps[s], from.proj[static_cast<std::size_t>(g.apply_ob(static_cast<int>(s)))]));
        return limit_factor(to, from.value, cone);
    }
};

}  // namespace stabcheck
