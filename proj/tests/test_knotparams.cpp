#include <doctest.h>

#include <numeric>

#include "twobridge/dilog.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/knotparams.hpp"

using namespace twobridge;

TEST_CASE("make_params computes ell") {
    CHECK(make_params(5, 3).ell == 3);
    CHECK(make_params(7, 3).ell == 9);
    CHECK(make_params(7, 1).ell == 13);   // q = 1 gives ell = 2p - 1
    CHECK(make_params(49, 1).ell == 97);
    CHECK(make_params(15, 7).ell == 17);

    for (std::int64_t p = 3; p < 200; p += 2) {
        for (std::int64_t q = 1; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            BridgeParams k = make_params(p, q);
            CHECK(k.ell % 2 == 1);
            CHECK(k.ell > 0);
            CHECK(k.ell < 2 * p);
            CHECK((k.ell * k.q + 1) % (2 * p) == 0);
        }
    }
}

TEST_CASE("make_params rejects invalid input") {
    CHECK_THROWS_AS(make_params(9, 3), NotCoprime);
    CHECK_THROWS_AS(make_params(8, 3), NotOdd);
    CHECK_THROWS_AS(make_params(9, 4), NotOdd);
    CHECK_THROWS_AS(make_params(5, 0), OutOfRange);
    CHECK_THROWS_AS(make_params(5, 5), OutOfRange);
    CHECK_THROWS_AS(make_params(5, 7), OutOfRange);
    CHECK_THROWS_AS(make_params(1, 1), OutOfRange);
    CHECK_THROWS_AS(make_params(5, -3), OutOfRange);

    CHECK_THROWS_WITH_AS(make_params(9, 3), doctest::Contains("NotCoprime"), NotCoprime);
}

TEST_CASE("epsilon sequence values") {
    BridgeParams k53 = make_params(5, 3);
    SignSequence s = epsilon_sequence(k53, 4);
    CHECK(s.signs == std::vector<int>{1, -1, -1, 1});

    BridgeParams k73 = make_params(7, 3);
    SignSequence s73 = epsilon_sequence(k73, 6);
    CHECK(s73.signs == std::vector<int>{1, 1, -1, -1, 1, 1});

    BridgeParams k91 = make_params(9, 1);
    for (int s9 : epsilon_sequence(k91, 8).signs) CHECK(s9 == 1);

    CHECK(epsilon(k53, 0) == 1);  // eps_0 = +1 enters the word g
}

TEST_CASE("epsilon palindrome and antiperiodicity") {
    for (std::int64_t p = 3; p < 100; p += 2) {
        for (std::int64_t q = 1; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            BridgeParams k = make_params(p, q);
            for (std::int64_t i = 1; i <= p - 1; ++i) {
                CHECK(epsilon(k, i) == epsilon(k, p - i));
                CHECK(epsilon(k, i + p) == -epsilon(k, i));
            }
        }
    }
}

TEST_CASE("cf_positive canonical expansion") {
    CFExpansion cf73 = cf_positive(7, 3);
    CHECK(cf73.terms == std::vector<std::int64_t>{2, 3});

    CFExpansion cf53 = cf_positive(5, 3);
    CHECK(cf53.terms == std::vector<std::int64_t>{1, 1, 2});

    CHECK(cf_positive(9, 1).terms == std::vector<std::int64_t>{9});

    // round trip: evaluating the expansion gives back p/q exactly
    for (std::int64_t p = 3; p < 120; p += 2) {
        for (std::int64_t q = 1; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            CFExpansion cf = cf_positive(p, q);
            std::int64_t num = cf.terms.back(), den = 1;
            for (auto it = std::next(cf.terms.rbegin()); it != cf.terms.rend(); ++it) {
                std::int64_t new_num = *it * num + den;
                den = num;
                num = new_num;
            }
            CHECK(num == p);
            CHECK(den == q);
            if (cf.terms.size() > 1) CHECK(cf.terms.back() >= 2);
            for (auto a : cf.terms) CHECK(a >= 1);
        }
    }
}

TEST_CASE("lackenby bounds") {
    CFExpansion one{{9}, 9, 1};
    LackenbyBounds b1 = lackenby_bounds(one);
    CHECK(b1.lower == doctest::Approx(-v3() / 2).epsilon(1e-12));
    CHECK(b1.upper == doctest::Approx(0.0));

    CFExpansion two{{2, 3}, 7, 3};
    LackenbyBounds b2 = lackenby_bounds(two);
    CHECK(b2.lower == doctest::Approx(0.0));
    CHECK(b2.upper == doctest::Approx(16 * v3()).epsilon(1e-12));

    CFExpansion three{{1, 1, 2}, 5, 3};
    LackenbyBounds b3 = lackenby_bounds(three);
    CHECK(b3.lower == doctest::Approx(0.5074708).epsilon(1e-6));
    CHECK(b3.upper == doctest::Approx(32.478131).epsilon(1e-6));
}

TEST_CASE("equivalent_params") {
    CHECK(equivalent_params(make_params(5, 3)) == std::set<std::int64_t>{3});
    CHECK(equivalent_params(make_params(7, 3)) == std::set<std::int64_t>{3, 5});
    CHECK(equivalent_params(make_params(9, 1)) == std::set<std::int64_t>{1});

    // closure: the set is the same from any member
    for (std::int64_t p = 3; p < 60; p += 2) {
        for (std::int64_t q = 1; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            auto set = equivalent_params(make_params(p, q));
            CHECK(set.count(q) == 1);
            for (std::int64_t q2 : set) {
                CHECK(q2 % 2 == 1);
                CHECK(q2 > 0);
                CHECK(q2 < p);
                CHECK(equivalent_params(make_params(p, q2)) == set);
            }
        }
    }
}
