#include <catch2/catch_amalgamated.hpp>

#include "stabcheck/matrix.hpp"

#include <random>

using namespace stabcheck;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, std::uint32_t p) {
    Matrix m(rows, cols, p);
    std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, d(rng));
    return m;
}

}  // namespace

TEST_CASE("primality and inverses") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u})
        for (std::uint32_t a = 1; a < p; ++a) CHECK(static_cast<std::uint64_t>(a) * fp_inv(a, p) % p == 1);
}

TEST_CASE("rank and kernel over F_2 and F_5") {
    std::mt19937_64 rng(42);
    for (std::uint32_t p : {2u, 5u}) {
        for (int trial = 0; trial < 30; ++trial) {
            int r = static_cast<int>(rng() % 6), c = static_cast<int>(rng() % 6);
            Matrix a = random_matrix(rng, r, c, p);
            Matrix k = a.kernel_basis();
            CHECK(a.rank() + k.cols() == c);
            if (k.cols() > 0) CHECK((a * k).is_zero());
            // kernel basis is linearly independent
            CHECK(k.rank() == k.cols());
        }
    }
}

TEST_CASE("solve_matrix finds solutions and detects inconsistency") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint32_t p = trial % 2 ? 3u : 2u;
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5), k = 1 + static_cast<int>(rng() % 3);
        Matrix a = random_matrix(rng, r, c, p);
        Matrix x = random_matrix(rng, c, k, p);
        Matrix b = a * x;
        Matrix sol = a.solve_matrix(b);
        CHECK(a * sol == b);
    }
    Matrix a(2, 1, 2);
    a.set(0, 0, 1);
    Matrix b(2, 1, 2);
    b.set(1, 0, 1);
    CHECK_THROWS_AS(a.solve_matrix(b), std::domain_error);
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(3);
    int found = 0;
    while (found < 10) {
        Matrix a = random_matrix(rng, 4, 4, 5);
        if (!a.is_invertible()) continue;
        ++found;
        CHECK(a * a.inverse() == Matrix::identity(4, 5));
        CHECK(a.inverse() * a == Matrix::identity(4, 5));
    }
}

TEST_CASE("cokernel projection and section") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t p = trial % 2 ? 5u : 2u;
        int n = 1 + static_cast<int>(rng() % 5), m = static_cast<int>(rng() % 5);
        Matrix rel = random_matrix(rng, n, m, p);
        Cokernel ck = cokernel(rel);
        CHECK(ck.dim == n - rel.rank());
        CHECK(ck.proj * ck.section == Matrix::identity(ck.dim, p));
        if (m > 0) CHECK((ck.proj * rel).is_zero());
        CHECK(ck.proj.rank() == ck.dim);
    }
}

TEST_CASE("kronecker respects multiplication") {
    std::mt19937_64 rng(5);
    Matrix a = random_matrix(rng, 2, 3, 5), b = random_matrix(rng, 3, 2, 5);
    Matrix c = random_matrix(rng, 3, 2, 5), d = random_matrix(rng, 2, 4, 5);
    CHECK((a * b).kronecker(c * d) == a.kronecker(c) * b.kronecker(d));
}
