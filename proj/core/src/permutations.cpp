#include "wittenlab/permutations.hpp"

#include <numeric>
#include <stdexcept>

namespace wittenlab {

Perm perm_identity(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), static_cast<uint8_t>(0));
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
    return r;
}

Partition cycle_type(const Perm& p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (size_t x = s; !seen[x]; x = p[x]) {
            seen[x] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

Perm perm_of_type(const Partition& type, int d) {
    if (type.size() != d) throw std::invalid_argument("perm_of_type: |type| != d");
    Perm p(static_cast<size_t>(d));
    int pos = 0;
    for (int len : type.parts()) {
        for (int i = 0; i < len; ++i)
            p[static_cast<size_t>(pos + i)] = static_cast<uint8_t>(pos + (i + 1) % len);
        pos += len;
    }
    return p;
}

std::vector<std::pair<uint8_t, uint8_t>> transpositions(int d) {
    std::vector<std::pair<uint8_t, uint8_t>> t;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            t.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
    return t;
}

bool acts_transitively(const Perm& sigma0,
                       const std::vector<std::pair<uint8_t, uint8_t>>& pairs, int d) {
    std::vector<int> parent(static_cast<size_t>(d));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (int x = 0; x < d; ++x) unite(x, sigma0[static_cast<size_t>(x)]);
    for (const auto& [a, b] : pairs) unite(a, b);
    int root = find(0);
    for (int x = 1; x < d; ++x)
        if (find(x) != root) return false;
    return true;
}

}  // namespace wittenlab
