#include "wittenlab/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wittenlab {

namespace {

// Murnaghan-Nakayama on the beta-set (Maya diagram) of the remaining shape:
// removing a border strip of length t is moving a bead from b to b-t; the
// sign is the parity of the beads jumped over.
long mn_value(std::vector<int> beta, const std::vector<int>& cls, size_t idx,
              std::map<std::pair<std::vector<int>, size_t>, long>& memo) {
    if (idx == cls.size()) return 1;
    auto key = std::make_pair(beta, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int t = cls[idx];
    long total = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
        const int target = beta[j] - t;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (size_t l = 0; l < beta.size(); ++l) {
            if (l == j) continue;
            if (beta[l] == target) occupied = true;
            if (beta[l] > target && beta[l] < beta[j]) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> next = beta;
        next[j] = target;
        std::sort(next.begin(), next.end(), std::greater<int>());
        long sub = mn_value(std::move(next), cls, idx + 1, memo);
        total += (jumped % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::vector<int> beta_set(const Partition& lambda, int rows) {
    std::vector<int> beta(static_cast<size_t>(rows), 0);
    for (int j = 0; j < rows; ++j) {
        int lam = j < lambda.length() ? lambda.part(j) : 0;
        beta[static_cast<size_t>(j)] = lam + (rows - 1 - j);
    }
    return beta;
}

}  // namespace

CharacterTable::CharacterTable(int d) : d_(d), labels_(partitions_of(d)) {
    if (d < 1) throw std::invalid_argument("CharacterTable: d >= 1");
    table_.assign(labels_.size(), std::vector<long>(labels_.size(), 0));
    std::map<std::pair<std::vector<int>, size_t>, long> memo;
    for (size_t c = 0; c < labels_.size(); ++c) {
        memo.clear();
        const auto& cls = labels_[c].parts();
        for (size_t l = 0; l < labels_.size(); ++l)
            table_[l][c] = mn_value(beta_set(labels_[l], d), cls, 0, memo);
    }
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = std::find(labels_.begin(), labels_.end(), p);
    if (it == labels_.end()) throw std::invalid_argument("CharacterTable: not a partition of d");
    return static_cast<int>(it - labels_.begin());
}

long CharacterTable::value(const Partition& irrep, const Partition& cls) const {
    return table_[static_cast<size_t>(index_of(irrep))][static_cast<size_t>(index_of(cls))];
}

long CharacterTable::dimension(const Partition& irrep) const {
    return value(irrep, Partition(std::vector<int>(static_cast<size_t>(d_), 1)));
}

mpz_class CharacterTable::class_size(const Partition& cls) const {
    return factorial(static_cast<unsigned long>(d_)) / z_order(cls);
}

bool CharacterTable::row_orthogonality_ok() const {
    for (size_t a = 0; a < labels_.size(); ++a) {
        for (size_t b = a; b < labels_.size(); ++b) {
            mpz_class sum = 0;
            for (size_t c = 0; c < labels_.size(); ++c)
                sum += class_size(labels_[c]) * table_[a][c] * table_[b][c];
            mpz_class expect = a == b ? factorial(static_cast<unsigned long>(d_)) : mpz_class(0);
            if (sum != expect) return false;
        }
    }
    return true;
}

bool CharacterTable::column_orthogonality_ok() const {
    for (size_t c = 0; c < labels_.size(); ++c) {
        for (size_t c2 = c; c2 < labels_.size(); ++c2) {
            mpz_class sum = 0;
            for (size_t l = 0; l < labels_.size(); ++l) sum += mpz_class(table_[l][c]) * table_[l][c2];
            mpz_class expect = c == c2 ? z_order(labels_[c]) : mpz_class(0);
            if (sum != expect) return false;
        }
    }
    return true;
}

const CharacterTable& character_table(int d) {
    static std::mutex mu;
    static std::map<int, CharacterTable> tables;
    std::lock_guard lock(mu);
    auto it = tables.find(d);
    if (it == tables.end()) it = tables.emplace(d, CharacterTable(d)).first;
    return it->second;
}

}  // namespace wittenlab
