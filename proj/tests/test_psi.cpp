#include "wittenlab/psi.hpp"

#include <doctest.h>

#include <functional>
#include <thread>

using namespace wittenlab;

namespace {

CorrelatorCache& cache() {
    static CorrelatorCache c;
    return c;
}

Rational psi(int g, std::vector<int> ks) { return psi_correlator(CorrelatorKey(g, std::move(ks)), cache()); }

void for_each_stable_key(int g, int n, const std::function<void(const std::vector<int>&)>& f) {
    long target = 3L * g - 3 + n;
    if (target < 0 || 2 * g - 2 + n <= 0) return;
    std::vector<int> k(static_cast<size_t>(n), 0);
    std::function<void(int, int, long)> rec = [&](int pos, int maxv, long rem) {
        if (pos == n) {
            if (rem == 0) f(k);
            return;
        }
        for (int v = static_cast<int>(std::min<long>(maxv, rem)); v >= 0; --v) {
            if (static_cast<long>(v) * (n - pos) < rem) break;
            k[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v, rem - v);
        }
    };
    rec(0, static_cast<int>(target), target);
}

}  // namespace

TEST_CASE("base cases and the one-point tower") {
    CHECK(psi(0, {0, 0, 0}) == Rational(1));
    CHECK(psi(1, {1}) == Rational(1, 24));
    CHECK(psi(2, {4}) == Rational(1, 1152));
    CHECK(psi(3, {7}) == Rational(1, 82944));
    CHECK(one_point_closed_form(1) == Rational(1, 24));
    CHECK(one_point_closed_form(2) == Rational(1, 1152));
    CHECK(one_point_closed_form(3) == Rational(1, 82944));
    CHECK_THROWS_AS(one_point_closed_form(0), std::invalid_argument);
}

TEST_CASE("dimension constraint and unstable keys vanish") {
    CHECK(psi(1, {0, 0}) == Rational(0));
    CHECK(psi(0, {1, 1}) == Rational(0));
    CHECK(psi(2, {1, 1}) == Rational(0));
    for (int g = 0; g <= 3; ++g)
        for (int n = 1; n <= 5; ++n)
            for_each_stable_key(g, n, [&](const std::vector<int>& ks) {
                // perturb away from the dimension constraint
                std::vector<int> bad = ks;
                bad[0] += 1;
                CHECK(psi(g, bad) == Rational(0));
            });
}

TEST_CASE("genus zero closed form") {
    CHECK(genus0_closed_form({0, 0, 0}) == Rational(1));
    CHECK(genus0_closed_form({1, 1, 0, 0, 0}) == Rational(2));
    CHECK(genus0_closed_form({2, 0, 0, 0, 0}) == Rational(1));
    CHECK_THROWS_AS(genus0_closed_form({1, 0, 0}), std::invalid_argument);
    for (int n = 3; n <= 9; ++n)
        for_each_stable_key(0, n, [&](const std::vector<int>& ks) {
            CHECK(psi(0, ks) == genus0_closed_form(ks));
        });
}

TEST_CASE("known multi-point values") {
    CHECK(psi(1, {2, 0}) == Rational(1, 24));
    CHECK(psi(1, {1, 1}) == Rational(1, 24));
    CHECK(psi(1, {1, 1, 1}) == Rational(1, 12));
    CHECK(psi(2, {3, 2}) == Rational(29, 5760));
    CHECK(psi(2, {4, 1}) == Rational(1, 384));
    CHECK(psi(0, {1, 0, 0, 0}) == Rational(1));
}

TEST_CASE("string and dilaton equations") {
    for (int g = 0; g <= 2; ++g) {
        for (int n = 1; n <= 5; ++n) {
            for_each_stable_key(g, n, [&](const std::vector<int>& ks) {
                std::vector<int> with0 = ks;
                with0.push_back(0);
                Rational rhs(0);
                for (size_t j = 0; j < ks.size(); ++j) {
                    if (ks[j] == 0) continue;
                    auto c = ks;
                    --c[j];
                    rhs += psi(g, c);
                }
                CHECK(psi(g, with0) == rhs);

                std::vector<int> with1 = ks;
                with1.push_back(1);
                CHECK(psi(g, with1) == Rational(2L * g - 2 + n) * psi(g, ks));
            });
        }
    }
}

TEST_CASE("positivity in the verified range") {
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 5; ++n)
            for_each_stable_key(g, n, [&](const std::vector<int>& ks) {
                CHECK(psi(g, ks) > Rational(0));
            });
}

TEST_CASE("cache idempotence") {
    CorrelatorCache warm;
    Rational a = psi_correlator(CorrelatorKey(2, {2, 2, 2}), warm);
    auto snapshot = warm.snapshot_sorted();
    CorrelatorCache cold;
    CHECK(psi_correlator(CorrelatorKey(2, {2, 2, 2}), cold) == a);
    for (const auto& [key, value] : snapshot)
        CHECK(psi_correlator(key, cold) == value);
}

TEST_CASE("concurrent lookups against one cache") {
    CorrelatorCache shared;
    std::vector<Rational> results(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            // overlapping recursions race on the same keys
            results[static_cast<size_t>(t)] =
                psi_correlator(CorrelatorKey(2, {2 + t % 2, 2, 2 - t % 2}), shared);
        });
    for (auto& w : workers) w.join();
    CHECK(results[0] == results[2]);
    CHECK(results[1] == results[3]);
    CorrelatorCache fresh;
    CHECK(results[0] == psi_correlator(CorrelatorKey(2, {2, 2, 2}), fresh));
    CHECK(results[1] == psi_correlator(CorrelatorKey(2, {3, 2, 1}), fresh));
}

TEST_CASE("sharp versus star") {
    CHECK(sharp_vs_star_check(CorrelatorKey(1, {1}), cache()));
    CHECK(sharp_vs_star_check(CorrelatorKey(2, {4}), cache()));
    CHECK(sharp_vs_star_check(CorrelatorKey(1, {2, 0}), cache()));
    for (int g = 0; g <= 2; ++g)
        for (int n = 1; n <= 4; ++n)
            for_each_stable_key(g, n, [&](const std::vector<int>& ks) {
                CHECK(sharp_vs_star_check(CorrelatorKey(g, ks), cache()));
            });
}

TEST_CASE("tilde normalization factor") {
    CHECK(tilde_factor({4}) == Rational(945));
    CHECK(tilde_factor({1}) * psi(1, {1}) == Rational(1, 8));
    // <sigma~_2 sigma~_0>_1 = 5/8
    CHECK(tilde_factor({2, 0}) * psi(1, {2, 0}) == Rational(5, 8));
}
