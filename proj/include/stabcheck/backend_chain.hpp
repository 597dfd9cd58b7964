#pragma once

#include <sstream>

#include "stabcheck/bar.hpp"
#include "stabcheck/probes.hpp"

namespace stabcheck {

/// The stable backend: bounded chain complexes over F_p. Isomorphism means
/// quasi-isomorphism; homotopy colimits and limits are bar and cobar
/// totalizations over strictly homotopy finite shapes (skeletalized first
/// when the shape merely has that homotopy type).
struct ChainBackend {
    static constexpr bool pointed = true;
    static constexpr const char* name = "chain";

    using Obj = ChainComplex;
    using Mor = ChainMap;

    static Obj zero_object(std::uint32_t p = 2) { return ChainComplex::zero(p); }

    static Mor id(const Obj& x) { return ChainMap::id(x); }
    static Mor compose(const Mor& g, const Mor& f) { return ChainMap::compose(g, f); }
    static bool obj_equal(const Obj& a, const Obj& b) { return a == b; }
    static bool mor_equal(const Mor& a, const Mor& b) { return a == b; }
    static bool mor_has_endpoints(const Mor& f, const Obj& s, const Obj& t) { return f.source() == s && f.target() == t; }
    static bool is_iso(const Mor& f) { return is_quasi_iso(f); }

    static std::string obj_desc(const Obj& x) {
        std::ostringstream os;
        os << "complex with homology";
        for (auto [n, d] : x.homology_table()) os << " H_" << n << "=" << d;
        if (x.homology_table().empty()) os << " 0";
        return os.str();
    }

    static std::string mor_desc(const Mor& f) {
        std::ostringstream os;
        os << "chain map [" << obj_desc(f.source()) << "] -> [" << obj_desc(f.target()) << "]";
        return os.str();
    }

    struct ColimData {
        Obj value;
        std::vector<Mor> inj;  // per object of the original shape
        BarComplex bar;
        // present when the shape was skeletalized first
        bool skeletalized = false;
        Skeleton sk;
        std::vector<Mor> to_rep;  // X(o) -> X(rep o), per original object
    };

    struct LimData {
        Obj value;
        std::vector<Mor> proj;
        BarComplex cobar;
        bool skeletalized = false;
        Skeleton sk;
        std::vector<Mor> from_rep;  // X(rep o) -> X(o), per original object
    };

    static ColimData colimit(const FinCat& d, const std::vector<Obj>& ob, const std::vector<Mor>& ar, const KanOptions& opt = {}) {
        ColimData r;
        if (is_strictly_homotopy_finite(d)) {
            r.bar = BarComplex::bar(d, ob, ar, opt);
            r.value = r.bar.total();
            for (int o = 0; o < d.n_objects(); ++o) r.inj.push_back(r.bar.inj(o));
            return r;
        }
        Skeleton sk = skeleton(d);
        if (!is_strictly_homotopy_finite(sk.cat)) throw std::domain_error("chain colimit: index category is not homotopy finite");
        r.skeletalized = true;
        r.sk = sk;
        for (int o = 0; o < d.n_objects(); ++o) r.to_rep.push_back(ar[static_cast<std::size_t>(find_iso(d, o, sk.incl.apply_ob(sk.retr.apply_ob(o))))]);
        std::vector<Obj> vals;
        std::vector<Mor> maps;
        for (int o = 0; o < sk.cat.n_objects(); ++o) vals.push_back(ob[static_cast<std::size_t>(sk.incl.apply_ob(o))]);
        for (int f = 0; f < sk.cat.n_arrows(); ++f) maps.push_back(ar[static_cast<std::size_t>(sk.incl.apply_ar(f))]);
        r.bar = BarComplex::bar(sk.cat, std::move(vals), std::move(maps), opt);
        r.value = r.bar.total();
        for (int o = 0; o < d.n_objects(); ++o) {
            int rep_obj = sk.retr.apply_ob(o);
            r.inj.push_back(ChainMap::compose(r.bar.inj(rep_obj), r.to_rep[static_cast<std::size_t>(o)]));
        }
        return r;
    }

    static Mor colimit_factor(const ColimData& d, const Obj& target, const std::vector<Mor>& cocone) {
        if (!d.skeletalized) return d.bar.collapse(target, cocone);
        std::vector<Mor> reduced;
        for (int o = 0; o < d.sk.cat.n_objects(); ++o) reduced.push_back(cocone[static_cast<std::size_t>(d.sk.incl.apply_ob(o))]);
        return d.bar.collapse(target, reduced);
    }

    static Mor colimit_map(const ColimData& from, const ColimData& to, const Functor& f, const std::vector<Mor>& comps) {
        if (!from.skeletalized && !to.skeletalized) return from.bar.push_forward(to.bar, f, comps);
        // conjugate through the skeletons on both sides
        Functor mid = from.skeletalized ? compose(f, from.sk.incl) : f;
        Functor eff = to.skeletalized ? compose(to.sk.retr, mid) : mid;
        std::vector<Mor> eff_comps;
        for (int o = 0; o < from.bar.shape().n_objects(); ++o) {
            int orig = from.skeletalized ? from.sk.incl.apply_ob(o) : o;
            Mor c = comps[static_cast<std::size_t>(orig)];
            if (to.skeletalized) {
                int img = f.apply_ob(orig);
                c = ChainMap::compose(to.to_rep[static_cast<std::size_t>(img)], c);
            }
            eff_comps.push_back(std::move(c));
        }
        return from.bar.push_forward(to.bar, eff, eff_comps);
    }

    static LimData limit(const FinCat& d, const std::vector<Obj>& ob, const std::vector<Mor>& ar, const KanOptions& opt = {}) {
        LimData r;
        if (is_strictly_homotopy_finite(d)) {
            r.cobar = BarComplex::cobar(d, ob, ar, opt);
            r.value = r.cobar.total();
            for (int o = 0; o < d.n_objects(); ++o) r.proj.push_back(r.cobar.proj(o));
            return r;
        }
        Skeleton sk = skeleton(d);
        if (!is_strictly_homotopy_finite(sk.cat)) throw std::domain_error("chain limit: index category is not homotopy finite");
        r.skeletalized = true;
        r.sk = sk;
        for (int o = 0; o < d.n_objects(); ++o) r.from_rep.push_back(ar[static_cast<std::size_t>(find_iso(d, sk.incl.apply_ob(sk.retr.apply_ob(o)), o))]);
        std::vector<Obj> vals;
        std::vector<Mor> maps;
        for (int o = 0; o < sk.cat.n_objects(); ++o) vals.push_back(ob[static_cast<std::size_t>(sk.incl.apply_ob(o))]);
        for (int f = 0; f < sk.cat.n_arrows(); ++f) maps.push_back(ar[static_cast<std::size_t>(sk.incl.apply_ar(f))]);
        r.cobar = BarComplex::cobar(sk.cat, std::move(vals), std::move(maps), opt);
        r.value = r.cobar.total();
        for (int o = 0; o < d.n_objects(); ++o) {
            int rep_obj = sk.retr.apply_ob(o);
            r.proj.push_back(ChainMap::compose(r.from_rep[static_cast<std::size_t>(o)], r.cobar.proj(rep_obj)));
        }
        return r;
    }

    static Mor limit_factor(const LimData& d, const Obj& source, const std::vector<Mor>& cone) {
        if (!d.skeletalized) return d.cobar.gather(source, cone);
        std::vector<Mor> reduced;
        for (int o = 0; o < d.sk.cat.n_objects(); ++o) reduced.push_back(cone[static_cast<std::size_t>(d.sk.incl.apply_ob(o))]);
        return d.cobar.gather(source, reduced);
    }

    static Mor limit_map(const LimData& from, const LimData& to, const Functor& g, const std::vector<Mor>& comps) {
        if (!from.skeletalized && !to.skeletalized) return from.cobar.pull_back(to.cobar, g, comps);
        Functor eff;
        {
            Functor mid = to.skeletalized ? compose(g, to.sk.incl) : g;
            eff = from.skeletalized ? compose(from.sk.retr, mid) : mid;
        }
        std::vector<Mor> eff_comps;
        for (int o = 0; o < to.cobar.shape().n_objects(); ++o) {
            int orig = to.skeletalized ? to.sk.incl.apply_ob(o) : o;
            Mor c = comps[static_cast<std::size_t>(orig)];
            if (from.skeletalized) {
                int pre = g.apply_ob(orig);
                c = ChainMap::compose(c, from_rep_map(from, pre));
            }
            eff_comps.push_back(std::move(c));
        }
        return from.cobar.pull_back(to.cobar, eff, eff_comps);
    }

private:
    static std::vector<int> iso_to_rep_arrows(const FinCat& d, const Skeleton& sk) {
        std::vector<int> r;
        for (int o = 0; o < d.n_objects(); ++o) r.push_back(find_iso(d, o, sk.incl.apply_ob(sk.retr.apply_ob(o))));
        return r;
    }
    static std::vector<int> iso_from_rep_arrows(const FinCat& d, const Skeleton& sk) {
        std::vector<int> r;
        for (int o = 0; o < d.n_objects(); ++o) r.push_back(find_iso(d, sk.incl.apply_ob(sk.retr.apply_ob(o)), o));
        return r;
    }
    static int find_iso(const FinCat& d, int a, int b) {
        for (int f : d.hom(a, b))
            for (int g : d.hom(b, a))
                if (d.is_identity(d.compose(g, f)) && d.is_identity(d.compose(f, g))) return f;
        throw std::logic_error("chain backend: objects not isomorphic");
    }
    static Mor to_rep_map(const ColimData& d, int obj) {
        // value at obj -> value at its representative, inside the original diagram
        return d.inj_conjugator.empty() ? Mor() : d.inj_conjugator[static_cast<std::size_t>(obj)];
    }
    static Mor from_rep_map(const LimData& d, int obj) { return d.proj_conjugator.empty() ? Mor() : d.proj_conjugator[static_cast<std::size_t>(obj)]; }
};

}  // namespace stabcheck
