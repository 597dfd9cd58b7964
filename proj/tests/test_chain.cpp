#include <catch2/catch_amalgamated.hpp>

#include "stabcheck/chain.hpp"
#include "stabcheck/probes.hpp"

using namespace stabcheck;

TEST_CASE("spheres and acyclic two-term complex") {
    auto s0 = ChainComplex::sphere(0, 2);
    CHECK(s0.homology_dim(0) == 1);
    CHECK(s0.homology_dim(1) == 0);

    // k --id--> k in degrees 1,0
    ChainComplex x(2, 0, {1, 1}, {Matrix(0, 1, 2), Matrix::identity(1, 2)});
    CHECK(x.is_acyclic());
    CHECK(x.euler_characteristic() == 0);
}

TEST_CASE("d o d enforced") {
    Matrix d1 = Matrix::identity(1, 2);
    CHECK_THROWS(ChainComplex(2, 0, {1, 1, 1}, {Matrix(0, 1, 2), d1, d1}));
}

TEST_CASE("shift moves homology") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
        auto x = random_complex(rng, 3, -2, 2, 3);
        auto tab = x.homology_table();
        auto y = x.shift(3);
        for (auto [n, d] : tab) CHECK(y.homology_dim(n + 3) == d);
        CHECK(x.shift(1).shift(-1) == x);
    }
}

TEST_CASE("cone of identity is acyclic") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
        auto x = random_complex(rng, t % 2 ? 5 : 2, -2, 2, 3);
        CHECK(mapping_cone(ChainMap::id(x)).is_acyclic());
        CHECK(is_quasi_iso(ChainMap::id(x)));
    }
    CHECK_FALSE(is_quasi_iso(ChainMap::zero(ChainComplex::zero(2), ChainComplex::sphere(4, 2))));
}

TEST_CASE("euler characteristic equals alternating homology sum") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 20; ++t) {
        auto x = random_complex(rng, t % 2 ? 3 : 2, -3, 3, 4);
        int e = 0;
        for (auto [n, d] : x.homology_table()) e += (((n % 2) + 2) % 2 == 0) ? d : -d;
        CHECK(e == x.euler_characteristic());
    }
}

TEST_CASE("tensor is exact over a field") {
    std::mt19937_64 rng(21);
    CHECK(ChainComplex::tensor(ChainComplex::sphere(1, 2), ChainComplex::sphere(1, 2)) == ChainComplex::sphere(2, 2));
    for (int t = 0; t < 12; ++t) {
        std::uint32_t p = t % 2 ? 3 : 2;
        auto x = random_complex(rng, p, -2, 1, 3);
        auto y = random_complex(rng, p, -1, 2, 3);
        auto xy = ChainComplex::tensor(x, y);
        xy.validate();
        for (int n = xy.lo() - 1; n <= xy.hi() + 1; ++n) {
            int expect = 0;
            for (int k = -4; k <= 4; ++k) expect += x.homology_dim(k) * y.homology_dim(n - k);
            CHECK(xy.homology_dim(n) == expect);
        }
    }
}

TEST_CASE("random chain maps commute and compose") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 10; ++t) {
        auto x = random_complex(rng, 2, -2, 2, 3);
        auto y = random_complex(rng, 2, -2, 2, 3);
        auto f = random_chain_map(rng, x, y);
        f.validate();
        auto g = random_chain_map(rng, y, x);
        ChainMap::compose(g, f).validate();
    }
}

TEST_CASE("total complex of a two-column double complex") {
    // columns: col_0 = S^0, col_1 = S^0, h the identity: total is acyclic
    DoubleComplex dc;
    dc.columns = {ChainComplex::sphere(0, 2), ChainComplex::sphere(0, 2)};
    dc.horiz.resize(2);
    dc.horiz[1] = ChainMap::id(ChainComplex::sphere(0, 2));
    dc.validate();
    auto tot = total_complex(dc);
    CHECK(tot.is_acyclic());

    // with zero horizontal map the total splits
    dc.horiz[1] = ChainMap::zero(ChainComplex::sphere(0, 2), ChainComplex::sphere(0, 2));
    auto tot2 = total_complex(dc);
    CHECK(tot2.homology_dim(0) == 1);
    CHECK(tot2.homology_dim(1) == 1);
}

TEST_CASE("hom complex H_0 counts maps up to homotopy") {
    // Hom(S^n, S^n) has H_0 = k
    for (int n : {-1, 0, 2}) {
        auto h = hom_complex(ChainComplex::sphere(n, 2), ChainComplex::sphere(n, 2));
        CHECK(h.homology_dim(0) == 1);
    }
    // Hom(S^0, S^1) has no degree-0 maps up to homotopy
    auto h = hom_complex(ChainComplex::sphere(0, 2), ChainComplex::sphere(1, 2));
    CHECK(h.homology_dim(0) == 0);

    std::mt19937_64 rng(55);
    for (int t = 0; t < 8; ++t) {
        auto x = random_complex(rng, 2, -2, 2, 3);
        auto y = random_complex(rng, 2, -2, 2, 3);
        auto h2 = hom_complex(x, y);
        h2.validate();
        // over a field: dim H_0 Hom(X,Y) = sum_n dim H_n(X) * dim H_n(Y)
        int expect = 0;
        for (int n = -3; n <= 3; ++n) expect += x.homology_dim(n) * y.homology_dim(n);
        CHECK(h2.homology_dim(0) == expect);
    }
}

TEST_CASE("hom_push is functorial on components") {
    std::mt19937_64 rng(77);
    auto x = random_complex(rng, 2, -1, 1, 2);
    auto y = random_complex(rng, 2, -1, 1, 2);
    auto x2 = random_complex(rng, 2, -1, 1, 2);
    auto y2 = random_complex(rng, 2, -1, 1, 2);
    auto pre = random_chain_map(rng, x2, x);
    auto post = random_chain_map(rng, y, y2);
    auto push = hom_push(x, y, x2, y2, pre, post);
    push.validate();
}
