#include "wittenlab/hurwitz.hpp"

#include "wittenlab/characters.hpp"

#include <doctest.h>

using namespace wittenlab;

TEST_CASE("character tables") {
    const auto& t3 = character_table(3);
    CHECK(t3.dimension(Partition{3}) == 1);
    CHECK(t3.dimension(Partition{2, 1}) == 2);
    CHECK(t3.dimension(Partition{1, 1, 1}) == 1);
    CHECK(t3.value(Partition{1, 1, 1}, Partition{2, 1}) == -1);  // sign character
    for (int d = 2; d <= 8; ++d) {
        const auto& t = character_table(d);
        CHECK(t.row_orthogonality_ok());
        CHECK(t.column_orthogonality_ok());
    }
}

TEST_CASE("exhaustive counts match the classics") {
    CHECK(factorization_count_bruteforce({{1, 1, 1}, {1, 1, 1}, 4, true}) == Rational(4));
    CHECK(factorization_count_bruteforce({{1, 1}, {1, 1}, 2, true}) == Rational(1, 2));
    CHECK(factorization_count_bruteforce({{1, 1, 1}, {3}, 2, true}) == Rational(1));
    // degenerate cylinder: count*|C_nu|/d! gives 1/d, the normalization the
    // Phi-z-D cancellations force
    CHECK(factorization_count_bruteforce({{3}, {3}, 0, true}) == Rational(1, 3));
    CHECK(factorization_count_bruteforce({{2}, {2}, 0, true}) == Rational(1, 2));
    CHECK_THROWS_AS(factorization_count_bruteforce({{6, 1}, {7}, 2, true}),
                    std::invalid_argument);
    CHECK_THROWS_AS(factorization_count_bruteforce({{1, 1}, {1, 1}, 9, false}),
                    std::invalid_argument);
    CHECK_THROWS_AS(factorization_count_bruteforce({{1, 1}, {1}, 2, false}),
                    std::invalid_argument);
}

TEST_CASE("frobenius formula") {
    CHECK(factorization_count_frobenius({{1, 1}, {1, 1}, 2, false}) == Rational(1, 2));
    CHECK(factorization_count_frobenius({{1, 1, 1}, {1, 1, 1}, 4, false}) == Rational(9, 2));
    CHECK(factorization_count_frobenius({{2, 1}, {2, 1}, 0, false}) == Rational(1, 2));
    CHECK_THROWS_AS(factorization_count_frobenius({{2, 1}, {2, 1}, 2, true}),
                    std::invalid_argument);
}

TEST_CASE("brute force equals frobenius on disconnected keys") {
    for (int d = 2; d <= 4; ++d) {
        const auto ps = partitions_of(d);
        for (const auto& nu : ps) {
            for (int r = 0; r <= 5; ++r) {
                auto census = factorization_census(nu, r);
                for (const auto& mu : ps) {
                    auto it = census.all.find(mu);
                    mpz_class count = it == census.all.end() ? mpz_class(0) : it->second;
                    Rational brute(count * (factorial(static_cast<unsigned long>(d)) / z_order(nu)),
                                   factorial(static_cast<unsigned long>(d)));
                    CHECK(brute == factorization_count_frobenius({nu, mu, r, false}));
                }
            }
        }
    }
}

TEST_CASE("parity and transitivity monotonicity") {
    for (int d = 2; d <= 4; ++d) {
        const auto ps = partitions_of(d);
        for (const auto& nu : ps) {
            for (int r = 0; r <= 5; ++r) {
                auto census = factorization_census(nu, r);
                for (const auto& mu : ps) {
                    auto a = census.all.find(mu);
                    mpz_class all = a == census.all.end() ? mpz_class(0) : a->second;
                    auto t = census.transitive.find(mu);
                    mpz_class trans = t == census.transitive.end() ? mpz_class(0) : t->second;
                    if ((r + nu.length() + mu.length()) % 2 != 0) CHECK(all == 0);
                    CHECK(trans <= all);
                }
            }
        }
    }
}

TEST_CASE("threaded census agrees with the single-threaded one") {
    auto a = factorization_census(Partition{2, 1, 1}, 5, 1);
    auto b = factorization_census(Partition{2, 1, 1}, 5, 4);
    CHECK(a.all == b.all);
    CHECK(a.transitive == b.transitive);
}

TEST_CASE("connected values through the transform") {
    // connected part of the disconnected 9/2 is the classical 4
    CHECK(connected_double_hurwitz(Partition{1, 1, 1}, Partition{1, 1, 1}, 4) == Rational(4));
    for (int d = 2; d <= 4; ++d) {
        const auto ps = partitions_of(d);
        for (const auto& nu : ps)
            for (const auto& mu : ps)
                for (int r = 0; r <= 5; ++r)
                    CHECK(connected_double_hurwitz(nu, mu, r) ==
                          factorization_count_bruteforce({nu, mu, r, true}));
    }
}

TEST_CASE("exp and log transforms round trip") {
    // closed table of connected values for d <= 3, r <= 4
    HurwitzTable conn;
    for (int d = 1; d <= 3; ++d) {
        const auto ps = partitions_of(d);
        for (const auto& nu : ps)
            for (const auto& mu : ps)
                for (int r = 0; r <= 4; ++r)
                    conn[{nu, mu, r}] = factorization_count_bruteforce({nu, mu, r, true});
    }
    auto dis = connected_disconnected_transform(conn, TransformDirection::connected_to_disconnected);
    // disconnected values agree with Frobenius
    for (const auto& [key, value] : dis) {
        const auto& [nu, mu, r] = key;
        CHECK(value == factorization_count_frobenius({nu, mu, r, false}));
    }
    // two identical sheets at r=0
    CHECK(dis.at({Partition{1, 1}, Partition{1, 1}, 0}) == Rational(1, 2));
    // single component forced: log transform is the identity there
    CHECK(dis.at({Partition{3}, Partition{3}, 0}) == conn.at({Partition{3}, Partition{3}, 0}));
    auto back = connected_disconnected_transform(dis, TransformDirection::disconnected_to_connected);
    CHECK(back == conn);
}

TEST_CASE("transforms invert each other on arbitrary tables") {
    // the exp/log pair is an algebraic inverse, independent of the values
    // being genuine Hurwitz numbers
    uint32_t state = 98765u;
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    HurwitzTable table;
    for (int d = 1; d <= 3; ++d) {
        const auto ps = partitions_of(d);
        for (const auto& nu : ps)
            for (const auto& mu : ps)
                for (int r = 0; r <= 3; ++r) {
                    if ((r + nu.length() + mu.length()) % 2 != 0) {
                        table[{nu, mu, r}] = Rational(0);
                        continue;
                    }
                    table[{nu, mu, r}] =
                        Rational(static_cast<long>(next() % 19) - 9, 1 + next() % 5);
                }
    }
    auto dis = connected_disconnected_transform(table, TransformDirection::connected_to_disconnected);
    auto back = connected_disconnected_transform(dis, TransformDirection::disconnected_to_connected);
    CHECK(back == table);
}

TEST_CASE("transform rejects tables missing component keys") {
    HurwitzTable partial;
    partial[{Partition{1, 1}, Partition{1, 1}, 0}] = Rational(1, 2);
    CHECK_THROWS_AS(
        connected_disconnected_transform(partial, TransformDirection::disconnected_to_connected),
        std::invalid_argument);
}

TEST_CASE("single Hurwitz numbers") {
    CHECK(single_hurwitz(0, Partition{2, 1}) == Rational(4));
    CHECK(single_hurwitz(0, Partition{1, 1, 1}) == Rational(4));
    CHECK(single_hurwitz(0, Partition{3}) == Rational(1));
    CHECK(single_hurwitz(0, Partition{1, 1}) == Rational(1, 2));
    CHECK(single_hurwitz(0, Partition{2}) == Rational(1, 2));
    CHECK(single_hurwitz(1, Partition{1}) == Rational(0));
    CHECK(single_hurwitz(1, Partition{2}) == Rational(1, 2));
    CHECK(single_hurwitz(0, Partition{1}) == Rational(1));
}

TEST_CASE("cut-and-join recursion for single Hurwitz numbers") {
    const std::vector<std::pair<int, Partition>> instances = {
        {0, Partition{1, 1, 1}}, {0, Partition{2, 1}},    {1, Partition{1}},
        {1, Partition{2}},       {0, Partition{2, 2}},    {0, Partition{3, 1}},
        {1, Partition{1, 1}},    {1, Partition{2, 1}},    {0, Partition{2, 1, 1}},
        {1, Partition{3}},       {0, Partition{3, 2}},    {2, Partition{1}},
        {2, Partition{2}},
    };
    for (const auto& [g, mu] : instances) {
        CAPTURE(g);
        CAPTURE(mu.to_string());
        CHECK(cutjoin_hurwitz_check(g, mu));
    }
}
