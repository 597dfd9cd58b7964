#include <catch2/catch_amalgamated.hpp>

#include "stabcheck/fincat.hpp"
#include "stabcheck/functor.hpp"

using namespace stabcheck;

namespace {

// One-object category on the group Z/2.
FinCat z2_category() {
    std::vector<FinCat::Arrow> arrows = {{0, 0, "t"}};
    // t o t = id (extended index 0), t has extended index 1
    return FinCat::make("BZ/2", {"*"}, std::move(arrows), {{1, 1, 0}});
}

// Two isomorphic objects with a unique isomorphism either way.
FinCat iso_pair() {
    std::vector<FinCat::Arrow> arrows = {{0, 1, "u"}, {1, 0, "v"}};
    return FinCat::make("isopair", {"a", "b"}, std::move(arrows), {{3, 2, 0}, {2, 3, 1}});
}

// Chaotic category on n objects: exactly one arrow between any two objects.
FinCat chaotic(int n) {
    std::vector<std::string> obs;
    for (int i = 0; i < n; ++i) obs.push_back("c" + std::to_string(i));
    std::vector<FinCat::Arrow> arrows;
    std::vector<std::vector<int>> idx(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i;  // identity
            } else {
                idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = n + static_cast<int>(arrows.size());
                arrows.push_back({i, j, "e" + std::to_string(i) + std::to_string(j)});
            }
        }
    std::vector<std::array<int, 3>> comps;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (i == j || j == k) continue;
                comps.push_back({idx[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]});
            }
    return FinCat::make("chaotic" + std::to_string(n), std::move(obs), std::move(arrows), comps);
}

}  // namespace

TEST_CASE("stock shapes validate") {
    for (const FinCat& c : {terminal_cat(), empty_cat(), interval_cat(), simplex_cat(2), span_cat(), cospan_cat(), square_cat(), boxbar_cat(), discrete_cat(2), discrete_cat(3)}) {
        CHECK_NOTHROW(c.validate());
    }
    CHECK(square_cat().n_objects() == 4);
    CHECK(square_cat().n_arrows() == 4 + 5);  // identities + strict pairs
    CHECK(boxbar_cat().n_objects() == 6);
}

TEST_CASE("composition bookkeeping in [2]") {
    FinCat c = simplex_cat(2);
    int f01 = -1, f12 = -1, f02 = -1;
    for (int f = 0; f < c.n_arrows(); ++f) {
        if (c.is_identity(f)) continue;
        if (c.src(f) == 0 && c.tgt(f) == 1) f01 = f;
        if (c.src(f) == 1 && c.tgt(f) == 2) f12 = f;
        if (c.src(f) == 0 && c.tgt(f) == 2) f02 = f;
    }
    CHECK(c.compose(f12, f01) == f02);
    CHECK_THROWS(c.compose(f01, f12));
}

TEST_CASE("opposite is involutive") {
    for (const FinCat& c : {interval_cat(), span_cat(), boxbar_cat()}) {
        FinCat oo = opposite(opposite(c));
        CHECK(oo.n_objects() == c.n_objects());
        CHECK(oo.n_arrows() == c.n_arrows());
        for (int f = 0; f < c.n_arrows(); ++f) {
            CHECK(oo.src(f) == c.src(f));
            CHECK(oo.tgt(f) == c.tgt(f));
        }
    }
    CHECK(opposite(span_cat()).hom(1, 0).size() == 1);  // l -> c reversed
}

TEST_CASE("slice of identity on [1] at 1") {
    Functor u = Functor::identity(interval_cat());
    Slice s = slice(u, 1);
    CHECK(s.cat.n_objects() == 2);
    CHECK(s.cat.n_arrows() == 3);  // two identities and one arrow
    s.projection.validate();
}

TEST_CASE("slice of the empty functor is empty, point slices are points") {
    Functor pi0 = Functor::to_point(empty_cat());
    CHECK(slice(pi0, 0).cat.n_objects() == 0);

    Functor zero = Functor::from_point(interval_cat(), 0);
    Slice s0 = slice(zero, 0);
    CHECK(s0.cat.n_objects() == 1);
    CHECK(s0.cat.n_arrows() == 1);
    // at 1 the slice contains the single arrow 0 -> 1
    CHECK(slice(zero, 1).cat.n_objects() == 1);
    // the other coordinate has an empty slice
    Functor one = Functor::from_point(interval_cat(), 1);
    CHECK(slice(one, 0).cat.n_objects() == 0);
}

TEST_CASE("slice maps are functorial") {
    Functor u = Functor::to_point(span_cat());
    // slices of a functor to the point over the unique object: the category itself
    Slice s = slice(u, 0);
    CHECK(s.cat.n_objects() == 3);
    CHECK(s.cat.n_arrows() == 5);

    Functor v = Functor::identity(boxbar_cat());
    const FinCat& b = v.tgt;
    for (int f = 0; f < b.n_arrows(); ++f) {
        if (b.is_identity(f)) continue;
        Slice from = slice(v, b.src(f)), to = slice(v, b.tgt(f));
        Functor fm = slice_map(v, from, to, f);
        CHECK_NOTHROW(fm.validate());
    }
}

TEST_CASE("coslice mirrors slice") {
    Functor one = Functor::from_point(interval_cat(), 1);
    Slice c0 = coslice(one, 0);  // arrows 0 -> 1: one object
    CHECK(c0.cat.n_objects() == 1);
    Slice c1 = coslice(one, 1);
    CHECK(c1.cat.n_objects() == 1);
    Functor zero = Functor::from_point(interval_cat(), 0);
    CHECK(coslice(zero, 1).cat.n_objects() == 0);
    c0.projection.validate();
}

TEST_CASE("twisted arrow category of [1] is a cospan") {
    TwistedArrows t = twisted_arrow(interval_cat());
    CHECK(t.cat.n_objects() == 3);
    CHECK(t.cat.n_arrows() == 5);
    t.ts.validate();
    // identify the non-identity arrow of [1] among tw objects
    int f_obj = -1;
    for (int o = 0; o < t.cat.n_objects(); ++o)
        if (!interval_cat().is_identity(t.base_arrow[static_cast<std::size_t>(o)])) f_obj = o;
    REQUIRE(f_obj >= 0);
    // both identities map into it, nothing maps out
    int in = 0;
    for (int f = 0; f < t.cat.n_arrows(); ++f) {
        if (t.cat.is_identity(f)) continue;
        CHECK(t.cat.tgt(f) == f_obj);
        ++in;
    }
    CHECK(in == 2);
}

TEST_CASE("twisted arrows of the point and of discrete categories") {
    CHECK(twisted_arrow(terminal_cat()).cat.n_objects() == 1);
    CHECK(twisted_arrow(terminal_cat()).cat.n_arrows() == 1);
    TwistedArrows d2 = twisted_arrow(discrete_cat(2));
    CHECK(d2.cat.n_objects() == 2);
    CHECK(d2.cat.n_arrows() == 2);
}

TEST_CASE("sieves and cosieves") {
    Functor zero = Functor::from_point(interval_cat(), 0);
    Functor one = Functor::from_point(interval_cat(), 1);
    CHECK(is_sieve(zero));
    CHECK_FALSE(is_cosieve(zero));
    CHECK(is_cosieve(one));
    CHECK_FALSE(is_sieve(one));
    Functor empty_incl = Functor(empty_cat(), terminal_cat(), {}, {});
    CHECK(is_sieve(empty_incl));
    CHECK(is_cosieve(empty_incl));
    // non-fully-faithful input is rejected
    CHECK_THROWS(is_sieve(Functor::to_point(interval_cat())));
    // duality on a corpus of embeddings
    for (int o = 0; o < 3; ++o) {
        Functor j = Functor::from_point(span_cat(), o);
        CHECK(is_sieve(j) == is_cosieve(opposite_functor(j)));
    }
}

TEST_CASE("strict homotopy finiteness") {
    CHECK(is_strictly_homotopy_finite(interval_cat()));
    CHECK(is_strictly_homotopy_finite(boxbar_cat()));
    CHECK_FALSE(is_strictly_homotopy_finite(z2_category()));
    CHECK_FALSE(is_strictly_homotopy_finite(iso_pair()));
    CHECK(is_strictly_homotopy_finite(skeleton(iso_pair()).cat));
}

TEST_CASE("skeleton collapses isomorphism classes") {
    Skeleton sk = skeleton(iso_pair());
    CHECK(sk.cat.n_objects() == 1);
    CHECK(sk.cat.n_arrows() == 1);
    sk.incl.validate();
    sk.retr.validate();
    // retr o incl = id on the skeleton
    Functor ri = compose(sk.retr, sk.incl);
    CHECK(ri.ob == Functor::identity(sk.cat).ob);
    CHECK(ri.ar == Functor::identity(sk.cat).ar);

    Skeleton sk3 = skeleton(chaotic(3));
    CHECK(sk3.cat.n_objects() == 1);
    CHECK(sk3.cat.n_arrows() == 1);

    Skeleton skp = skeleton(interval_cat());
    CHECK(skp.cat.n_objects() == 2);
}

TEST_CASE("nerve sizes") {
    Nerve n1 = nerve(interval_cat());
    CHECK(n1.count(0) == 2);
    CHECK(n1.count(1) == 1);
    CHECK(n1.top_dimension() == 1);

    Nerve ns = nerve(span_cat());
    CHECK(ns.count(0) == 3);
    CHECK(ns.count(1) == 2);
    CHECK(ns.top_dimension() == 1);

    Nerve n2 = nerve(simplex_cat(2));
    CHECK(n2.count(0) == 3);
    CHECK(n2.count(1) == 3);
    CHECK(n2.count(2) == 1);

    CHECK_THROWS(nerve(z2_category()));
    CHECK_THROWS(nerve(iso_pair()));

    // top dimension bounded by object count - 1
    for (const FinCat& c : {boxbar_cat(), square_cat(), cospan_cat()}) CHECK(nerve(c).top_dimension() <= c.n_objects() - 1);
}

TEST_CASE("product categories and functors") {
    FinCat sq = square_cat();
    Functor pr = product_functor(Functor::identity(interval_cat()), Functor::to_point(interval_cat()));
    pr.validate();
    CHECK((pr.src == sq || pr.src.n_objects() == 4));

    // product indexing round-trips
    FinCat a = simplex_cat(2), b = interval_cat();
    FinCat ab = product(a, b);
    for (int oa = 0; oa < a.n_objects(); ++oa)
        for (int ob = 0; ob < b.n_objects(); ++ob) {
            auto [x, y] = prod_obj_split(b, prod_obj(a, b, oa, ob));
            CHECK(x == oa);
            CHECK(y == ob);
        }
    CHECK(ab.n_arrows() == a.n_arrows() * b.n_arrows());
}

TEST_CASE("functor validation catches breakage") {
    // map [1] to [1] flipping objects without flipping arrows: invalid
    std::vector<int> om = {1, 0};
    std::vector<int> am = {interval_cat().id(0), interval_cat().id(1), 2};
    CHECK_THROWS(Functor(interval_cat(), interval_cat(), om, am));
}
