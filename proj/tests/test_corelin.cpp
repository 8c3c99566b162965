#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hodgemicro/matrix.hpp>
#include <hodgemicro/rational.hpp>

#include <random>

using namespace hodgemicro;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1) / Rational(3)).str() == "1/3");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rank") {
    CHECK(Matrix(0, 0).rank() == 0);
    CHECK(Matrix::identity(3).rank() == 3);
    Matrix m(2, 2, {Rational(1), Rational(2), Rational(2), Rational(4)});
    CHECK(m.rank() == 1);
}

TEST_CASE("kernel_basis") {
    CHECK(Matrix::identity(4).kernel_basis().cols() == 0);
    CHECK(Matrix::zero(2, 3).kernel_basis().cols() == 3);
    Matrix m(1, 2, {Rational(1), Rational(1)});
    Matrix k = m.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) * k(1, 0) < Rational(0));  // span{(1,-1)}
    CHECK(k(0, 0) + k(1, 0) == Rational(0));
}

TEST_CASE("compose") {
    std::mt19937_64 rng(7);
    Matrix m = random_matrix(rng, 3, 4);
    CHECK(compose(Matrix::identity(3), m) == m);
    CHECK(compose(m, Matrix::zero(4, 2)) == Matrix::zero(3, 2));
    Matrix j2(2, 2);
    j2(1, 0) = Rational(1);
    CHECK(compose(j2, j2).is_zero());
    CHECK_THROWS_AS(compose(m, m), std::invalid_argument);
}

TEST_CASE("rank/kernel invariants on random matrices") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(0, 7);
        Matrix m = random_matrix(rng, dim(rng), dim(rng));
        std::size_t rk = m.rank();
        CHECK(rk == m.transpose().rank());
        Matrix k = m.kernel_basis();
        CHECK(m.cols() == rk + k.cols());
        CHECK((m * k).is_zero());
    }
}
