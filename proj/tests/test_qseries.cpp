#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qbailey/qprod.hpp"
#include "qbailey/qseries.hpp"

#include <random>
#include <sstream>

using qbailey::QSeries;

namespace {

QSeries poly(std::initializer_list<long> coeffs, long trunc, int denom = 1) {
    QSeries s = QSeries::zero(denom, trunc);
    long k = 0;
    for (long c : coeffs)
        s += QSeries::monomial(c, k++, denom, trunc);
    return s;
}

bool equals(const QSeries& a, const QSeries& b) {
    return !QSeries::first_mismatch(a, b, std::min(a.trunc(), b.trunc())).has_value();
}

QSeries random_series(std::mt19937& rng, long trunc, bool unit_constant) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    QSeries s = QSeries::zero(1, trunc);
    for (long k = 0; k < trunc; ++k)
        s += QSeries::monomial(coeff(rng), k, 1, trunc);
    if (unit_constant) {
        s += QSeries::monomial(-s.coeff(0), 0, 1, trunc);
        s += QSeries::monomial(coeff(rng) >= 0 ? 1 : -1, 0, 1, trunc);
    }
    return s;
}

} // namespace

TEST_CASE("monomial basics") {
    CHECK(QSeries::monomial(1, 0, 1, 10).to_text() == "1");
    CHECK(QSeries::monomial(-1, 3, 1, 10).to_text() == "-q^3");
    CHECK(QSeries::monomial(5, 12, 1, 10).is_zero()); // beyond truncation
    CHECK_THROWS_AS(QSeries::monomial(1, -1, 1, 10), std::domain_error);
}

TEST_CASE("product expansions") {
    const long T = 10;
    QSeries a = poly({1, -1}, T);                                   // 1-q
    QSeries b = QSeries::one(1, T) - QSeries::monomial(1, 2, 1, T); // 1-q^2
    CHECK(equals(a * b, poly({1, -1, -1, 1}, T)));

    QSeries p = (QSeries::one(1, T) + QSeries::monomial(1, 1, 1, T)) *
                (QSeries::one(1, T) + QSeries::monomial(1, 2, 1, T)) *
                (QSeries::one(1, T) + QSeries::monomial(1, 3, 1, T));
    CHECK(equals(p, poly({1, 1, 1, 2, 1, 1, 1}, T)));

    CHECK((a + (-a)).is_zero());
    CHECK_THROWS_AS(a + QSeries::one(2, T), std::invalid_argument);
}

TEST_CASE("inverse") {
    const long T = 12;
    QSeries g = poly({1, -1}, T).inverse();
    for (long k = 0; k < T; ++k)
        CHECK(g.coeff(k) == 1);
    CHECK(equals(QSeries::one(1, T).inverse(), QSeries::one(1, T)));

    // partition numbers out of the inverted Euler product
    QSeries euler = qbailey::poch(qbailey::PochSpec::infinite(1, 1, 1), 1, 8);
    const long expect[] = {1, 1, 2, 3, 5, 7, 11, 15};
    QSeries inv = euler.inverse();
    for (long k = 0; k < 8; ++k)
        CHECK(inv.coeff(k) == expect[k]);

    CHECK_THROWS_AS(poly({2, 1}, 5).inverse(), std::domain_error);
    CHECK_THROWS_AS(poly({0, 1}, 5).inverse(), std::domain_error);
}

TEST_CASE("rescale") {
    QSeries a = poly({1, 1}, 4); // 1+q
    QSeries fine = a.rescaled(2);
    CHECK(fine.denom() == 2);
    CHECK(fine.trunc() == 8);
    CHECK(fine.coeff(0) == 1);
    CHECK(fine.coeff(2) == 1);
    CHECK(fine.coeff(1) == 0);
    CHECK(equals(fine.rescaled(1), a)); // lossless round trip

    QSeries half = QSeries::one(2, 8) + QSeries::monomial(1, 1, 2, 8); // 1 + q^(1/2)
    CHECK_THROWS_AS(half.rescaled(1), std::domain_error);
}

TEST_CASE("substitute q power") {
    QSeries s = poly({0, 1, 1}, 20); // q + q^2
    QSeries t = s.substitute_q_power(4);
    CHECK(t.coeff(4) == 1);
    CHECK(t.coeff(8) == 1);
    CHECK(t.coeff(1) == 0);
    CHECK(t.coeff(2) == 0);
}

TEST_CASE("shift") {
    QSeries s = poly({0, 0, 1, 2}, 8); // q^2 + 2q^3
    QSeries up = s.shifted(3);
    CHECK(up.coeff(5) == 1);
    CHECK(up.coeff(6) == 2);
    QSeries down = s.shifted(-2);
    CHECK(down.trunc() == 6);
    CHECK(down.coeff(0) == 1);
    CHECK(down.coeff(1) == 2);
    CHECK_THROWS_AS(s.shifted(-3), std::domain_error);
}

TEST_CASE("first_mismatch") {
    const long T = 10;
    QSeries a = poly({1, 1}, T);
    QSeries b = a + QSeries::monomial(1, 5, 1, T);
    CHECK(!QSeries::first_mismatch(a, a, T).has_value());
    CHECK(!QSeries::first_mismatch(a, b, 5).has_value());
    auto mm = QSeries::first_mismatch(a, b, 6);
    REQUIRE(mm.has_value());
    CHECK(mm->expo_num == 5);
    CHECK(mm->lhs == 0);
    CHECK(mm->rhs == 1);
    CHECK_THROWS_AS(QSeries::first_mismatch(a, b, 11), std::invalid_argument);
}

TEST_CASE("ring laws on random series") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 40; ++iter) {
        const long T = 5 + static_cast<long>(rng() % 26);
        QSeries a = random_series(rng, T, false);
        QSeries b = random_series(rng, T, false);
        QSeries c = random_series(rng, T, false);
        CHECK(equals((a + b) + c, a + (b + c)));
        CHECK(equals(a + b, b + a));
        CHECK(equals(a * b, b * a));
        CHECK(equals((a * b) * c, a * (b * c)));
        CHECK(equals(a * (b + c), a * b + a * c));
    }
}

TEST_CASE("inverse is a true reciprocal on random unit series") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 20; ++iter) {
        const long T = 5 + static_cast<long>(rng() % 26);
        QSeries a = random_series(rng, T, true);
        CHECK(equals(a * a.inverse(), QSeries::one(1, T)));
    }
}

TEST_CASE("truncation coherence") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        const long T = 10 + static_cast<long>(rng() % 21);
        const long Tp = 3 + static_cast<long>(rng() % (T - 3));
        QSeries a = random_series(rng, T, true);
        QSeries b = random_series(rng, T, false);
        CHECK(equals((a * b).truncated(Tp), a.truncated(Tp) * b.truncated(Tp)));
        CHECK(equals(a.inverse().truncated(Tp), a.truncated(Tp).inverse()));
    }
}

TEST_CASE("rendering") {
    QSeries s = poly({1, 0, -2}, 6) + QSeries::monomial(1, 5, 1, 6);
    CHECK(s.to_text() == "1 - 2*q^2 + q^5");
    QSeries h = QSeries::one(2, 6) + QSeries::monomial(-3, 1, 2, 6) +
                QSeries::monomial(1, 2, 2, 6) + QSeries::monomial(1, 3, 2, 6);
    CHECK(h.to_text() == "1 - 3*q^(1/2) + q + q^(3/2)");
    std::ostringstream os;
    s.write_csv(os);
    CHECK(os.str() == "0,1,1\n2,1,-2\n5,1,1\n");
}
