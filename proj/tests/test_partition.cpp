#include "wittenlab/partition.hpp"
#include "wittenlab/permutations.hpp"

#include <doctest.h>

#include <map>

using namespace wittenlab;

TEST_CASE("double factorial convention and values") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(9) == 945);
    CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
    // (2k+1)!! 2^k k! = (2k+1)!
    for (int k = 0; k <= 12; ++k) {
        mpz_class lhs = double_factorial(2L * k + 1) * (mpz_class(1) << k) *
                        factorial(static_cast<unsigned long>(k));
        CHECK(lhs == factorial(static_cast<unsigned long>(2 * k + 1)));
    }
}

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2).den() > 0);
    CHECK(Rational::from_string("945/1152") == Rational(945, 1152));
    CHECK(Rational(945, 1152).to_string() == "105/128");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("aut order") {
    CHECK(aut_order(Partition{3, 2, 1}) == 1);
    CHECK(aut_order(Partition{2, 2, 2}) == 6);
    CHECK(aut_order(Partition{4, 4, 2, 1, 1, 1}) == 12);
    // aut divides l!
    for (int d = 1; d <= 7; ++d)
        for (const auto& mu : partitions_of(d))
            CHECK(factorial(static_cast<unsigned long>(mu.length())) % aut_order(mu) == 0);
}

TEST_CASE("z order is the centralizer order") {
    CHECK(z_order(Partition{1, 1}) == 2);
    CHECK(z_order(Partition{3}) == 3);
    CHECK(z_order(Partition{2, 2, 1}) == 8);
    // z_nu * #permutations of cycle type nu = d!, by full census of S_d
    for (int d = 1; d <= 8; ++d) {
        std::map<Partition, long> census;
        Perm p = perm_identity(d);
        std::sort(p.begin(), p.end());
        do {
            ++census[cycle_type(p)];
        } while (std::next_permutation(p.begin(), p.end()));
        for (const auto& [type, count] : census)
            CHECK(z_order(type) * count == factorial(static_cast<unsigned long>(d)));
    }
}

TEST_CASE("cut and join moves") {
    CHECK(cut_join_moves(Partition{1}).empty());

    auto m2 = cut_join_moves(Partition{2});
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].kind == CutJoinMove::Kind::cut);
    CHECK(m2[0].result == Partition{1, 1});
    CHECK(m2[0].weight == Rational(1, 2));

    auto m21 = cut_join_moves(Partition{2, 1});
    REQUIRE(m21.size() == 2);
    CHECK(m21[0].kind == CutJoinMove::Kind::join);
    CHECK(m21[0].result == Partition{3});
    CHECK(m21[0].weight == Rational(3));
    CHECK(m21[1].kind == CutJoinMove::Kind::cut);
    CHECK(m21[1].result == Partition{1, 1, 1});
    CHECK(m21[1].weight == Rational(1, 2));

    // duplicate configurations collapse to one move
    auto m22 = cut_join_moves(Partition{2, 2});
    int joins = 0;
    for (const auto& m : m22)
        if (m.kind == CutJoinMove::Kind::join) {
            ++joins;
            CHECK(m.weight == Rational(4, 2));
        }
    CHECK(joins == 1);

    // size conservation and length bookkeeping on everything small
    for (int d = 1; d <= 8; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (const auto& m : cut_join_moves(mu)) {
                CHECK(m.result.size() == mu.size());
                int dl = m.result.length() - mu.length();
                CHECK(dl == (m.kind == CutJoinMove::Kind::join ? -1 : 1));
            }
        }
    }
}

TEST_CASE("partition parsing round trip") {
    for (int d = 0; d <= 6; ++d)
        for (const auto& mu : partitions_of(d)) CHECK(Partition::parse(mu.to_string()) == mu);
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
}
