#pragma once

#include "wittenlab/partition.hpp"

#include <map>
#include <vector>

namespace wittenlab {

// Irreducible character table of S_d, computed by the Murnaghan-Nakayama
// rule. Rows are indexed by irreducibles (partitions of d), columns by
// conjugacy classes (partitions of d), both in the order of partitions_of(d).
class CharacterTable {
public:
    explicit CharacterTable(int d);

    int degree() const { return d_; }
    const std::vector<Partition>& labels() const { return labels_; }
    long value(const Partition& irrep, const Partition& cls) const;
    long dimension(const Partition& irrep) const;
    mpz_class class_size(const Partition& cls) const;

    bool row_orthogonality_ok() const;
    bool column_orthogonality_ok() const;

private:
    int index_of(const Partition& p) const;
    int d_;
    std::vector<Partition> labels_;
    std::vector<std::vector<long>> table_;  // [irrep][class]
};

// Shared per-degree tables.
const CharacterTable& character_table(int d);

}  // namespace wittenlab
