#pragma once

#include "wittenlab/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace wittenlab {

// Weakly decreasing sequence of positive integers. The empty partition is
// allowed (size 0, length 0). Parts are stored canonically sorted, so two
// partitions compare equal iff they are the same multiset.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }                        // |mu|
    int length() const { return static_cast<int>(parts_.size()); }  // l(mu)
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    bool empty() const { return parts_.empty(); }

    // Multiset union with another partition.
    Partition merged(const Partition& other) const;
    // Copy with the part at position i removed.
    Partition without(int i) const;

    std::string to_string() const;  // e.g. "3,2,1" ("-" for the empty partition)
    static Partition parse(const std::string& s);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// prod over distinct part values v of m_v!
mpz_class aut_order(const Partition& mu);

// Centralizer order prod v^{m_v} m_v!; |C_mu| = |mu|! / z_mu.
mpz_class z_order(const Partition& nu);

struct CutJoinMove {
    enum class Kind { join, cut };
    Kind kind;
    // join: positions (i, j) of the merged parts, i < j.
    // cut: position i of the split part and the smaller half p (p <= mu_i - p).
    int i = 0;
    int j = 0;
    int p = 0;
    Partition source;
    Partition result;
    Rational weight;  // (mu_i+mu_j)/(1+delta) for joins, p(mu_i-p)/(1+delta) for cuts
};

// All joins over unordered position pairs and all cuts with p <= mu_i - p,
// one move per resulting configuration, delta-weights absorbing symmetry.
std::vector<CutJoinMove> cut_join_moves(const Partition& mu);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of_max_length(int n, int max_len);

}  // namespace wittenlab
