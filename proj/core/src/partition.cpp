#include "wittenlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace wittenlab {

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    return Rational(q);
}

std::string Rational::to_string() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class double_factorial(long m) {
    if (m < -1) throw std::invalid_argument("double_factorial: m < -1");
    if (m <= 0) return 1;
    mpz_class r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> v = parts_;
    v.insert(v.end(), other.parts_.begin(), other.parts_.end());
    return Partition(std::move(v));
}

Partition Partition::without(int i) const {
    std::vector<int> v = parts_;
    v.erase(v.begin() + i);
    return Partition(std::move(v));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    if (s.empty() || s == "-") return Partition();
    std::vector<int> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int x = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("Partition: cannot parse '" + s + "'");
        v.push_back(x);
    }
    return Partition(std::move(v));
}

bool operator<(const Partition& a, const Partition& b) {
    return a.parts() < b.parts();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << "(" << p.to_string() << ")";
}

mpz_class aut_order(const Partition& mu) {
    mpz_class r = 1;
    size_t i = 0;
    const auto& parts = mu.parts();
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        r *= factorial(j - i);
        i = j;
    }
    return r;
}

mpz_class z_order(const Partition& nu) {
    mpz_class r = 1;
    size_t i = 0;
    const auto& parts = nu.parts();
    while (i < parts.size()) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        mpz_class v = parts[i];
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), v.get_mpz_t(), j - i);
        r *= pw * factorial(j - i);
        i = j;
    }
    return r;
}

std::vector<CutJoinMove> cut_join_moves(const Partition& mu) {
    std::vector<CutJoinMove> moves;
    const auto& parts = mu.parts();
    const int n = mu.length();
    // Joins over unordered position pairs. Pairs with the same part values
    // give identical moves; emit each configuration once and let the delta
    // weight absorb the symmetry.
    std::set<std::pair<int, int>> seen_joins;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!seen_joins.insert({parts[i], parts[j]}).second) continue;
            CutJoinMove m;
            m.kind = CutJoinMove::Kind::join;
            m.i = i;
            m.j = j;
            m.source = mu;
            std::vector<int> v = parts;
            v[i] += v[j];
            v.erase(v.begin() + j);
            m.result = Partition(std::move(v));
            int delta = parts[i] == parts[j] ? 1 : 0;
            m.weight = Rational(parts[i] + parts[j], 1 + delta);
            moves.push_back(std::move(m));
        }
    }
    // Cuts mu_i -> (p, mu_i - p), canonicalized with p <= mu_i - p.
    for (int i = 0; i < n; ++i) {
        if (i > 0 && parts[i] == parts[i - 1]) continue;  // same configuration
        for (int p = 1; 2 * p <= parts[i]; ++p) {
            int q = parts[i] - p;
            CutJoinMove m;
            m.kind = CutJoinMove::Kind::cut;
            m.i = i;
            m.p = p;
            m.source = mu;
            std::vector<int> v = parts;
            v.erase(v.begin() + i);
            v.push_back(p);
            v.push_back(q);
            m.result = Partition(std::move(v));
            int delta = p == q ? 1 : 0;
            m.weight = Rational(static_cast<long>(p) * q, 1 + delta);
            moves.push_back(std::move(m));
        }
    }
    return moves;
}

namespace {

void partitions_rec(int n, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    return partitions_of_max_length(n, n);
}

std::vector<Partition> partitions_of_max_length(int n, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n >= 0) partitions_rec(n, n, max_len, cur, out);
    return out;
}

}  // namespace wittenlab
