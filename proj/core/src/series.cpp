#include "wittenlab/series.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wittenlab {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (uint8_t e : m) d += e;
    return d;
}

int monomial_max_index(const Monomial& m) {
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
        if (m[static_cast<size_t>(i)]) return i;
    return -1;
}

std::string monomial_to_string(const Monomial& m) {
    if (monomial_degree(m) == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!first) os << '*';
        first = false;
        os << "t" << i;
        if (m[i] > 1) os << '^' << static_cast<int>(m[i]);
    }
    return os.str();
}

namespace {

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

void SparseSeries::add_term(const Monomial& m_in, const Rational& c) {
    if (c.is_zero()) return;
    Monomial m = m_in;
    trim(m);
    if (monomial_degree(m) > max_degree_ || monomial_max_index(m) > max_index_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational SparseSeries::coefficient(const Monomial& m_in) const {
    Monomial m = m_in;
    trim(m);
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

SparseSeries SparseSeries::clipped(int max_index, int max_degree) const {
    SparseSeries out(std::min(max_index, max_index_), std::min(max_degree, max_degree_));
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

SparseSeries& SparseSeries::operator+=(const SparseSeries& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparseSeries& SparseSeries::operator-=(const SparseSeries& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

void SparseSeries::scale(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return;
    }
    for (auto& [m, v] : terms_) v *= c;
}

SparseSeries operator*(const SparseSeries& a, const SparseSeries& b) {
    SparseSeries out(std::min(a.max_index_, b.max_index_), std::min(a.max_degree_, b.max_degree_));
    for (const auto& [ma, ca] : a.terms_) {
        int da = monomial_degree(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + monomial_degree(mb) > out.max_degree_) continue;
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (size_t i = 0; i < ma.size(); ++i) m[i] = ma[i];
            for (size_t i = 0; i < mb.size(); ++i) m[i] = static_cast<uint8_t>(m[i] + mb[i]);
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

SparseSeries series_exp(const SparseSeries& s) {
    if (!s.coefficient({}).is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    const int D = s.max_degree();
    // bucket N(s) = sum_i t_i d/dt_i s by total degree
    std::vector<std::vector<std::pair<Monomial, Rational>>> ns(static_cast<size_t>(D) + 1);
    for (const auto& [m, c] : s.terms()) {
        int d = monomial_degree(m);
        if (d >= 1) ns[static_cast<size_t>(d)].push_back({m, Rational(d) * c});
    }
    SparseSeries out(s.max_index(), D);
    out.add_term({}, Rational(1));
    // degree-graded coefficients of exp(s)
    std::vector<std::vector<std::pair<Monomial, Rational>>> e(static_cast<size_t>(D) + 1);
    e[0].push_back({{}, Rational(1)});
    for (int d = 1; d <= D; ++d) {
        std::map<Monomial, Rational> acc;
        for (int d1 = 1; d1 <= d; ++d1) {
            for (const auto& [mf, cf] : ns[static_cast<size_t>(d1)]) {
                for (const auto& [me, ce] : e[static_cast<size_t>(d - d1)]) {
                    Monomial m(std::max(mf.size(), me.size()), 0);
                    for (size_t i = 0; i < mf.size(); ++i) m[i] = mf[i];
                    for (size_t i = 0; i < me.size(); ++i) m[i] = static_cast<uint8_t>(m[i] + me[i]);
                    if (monomial_max_index(m) > s.max_index()) continue;
                    auto it = acc.find(m);
                    if (it == acc.end())
                        acc.emplace(std::move(m), cf * ce);
                    else
                        it->second += cf * ce;
                }
            }
        }
        const Rational inv_d(1, d);
        for (auto& [m, c] : acc) {
            c *= inv_d;
            if (c.is_zero()) continue;
            e[static_cast<size_t>(d)].push_back({m, c});
            out.add_term(m, c);
        }
    }
    return out;
}

SparseSeries series_log(const SparseSeries& s) {
    if (s.coefficient({}) != Rational(1))
        throw std::invalid_argument("series_log: constant term must be 1");
    const int D = s.max_degree();
    std::vector<std::vector<std::pair<Monomial, Rational>>> sd(static_cast<size_t>(D) + 1);
    for (const auto& [m, c] : s.terms()) sd[static_cast<size_t>(monomial_degree(m))].push_back({m, c});
    SparseSeries out(s.max_index(), D);
    std::vector<std::vector<std::pair<Monomial, Rational>>> l(static_cast<size_t>(D) + 1);
    for (int d = 1; d <= D; ++d) {
        // d*L_d = (N s)_d - sum_{d1=1}^{d-1} (d1 L_{d1}) * s_{d-d1}
        std::map<Monomial, Rational> acc;
        for (const auto& [m, c] : sd[static_cast<size_t>(d)]) acc[m] = Rational(d) * c;
        for (int d1 = 1; d1 < d; ++d1) {
            for (const auto& [ml, cl] : l[static_cast<size_t>(d1)]) {
                for (const auto& [ms, cs] : sd[static_cast<size_t>(d - d1)]) {
                    Monomial m(std::max(ml.size(), ms.size()), 0);
                    for (size_t i = 0; i < ml.size(); ++i) m[i] = ml[i];
                    for (size_t i = 0; i < ms.size(); ++i) m[i] = static_cast<uint8_t>(m[i] + ms[i]);
                    acc[m] -= Rational(d1) * cl * cs;
                }
            }
        }
        const Rational inv_d(1, d);
        for (auto& [m, c] : acc) {
            Rational v = c * inv_d;
            if (v.is_zero()) continue;
            l[static_cast<size_t>(d)].push_back({m, v});
            out.add_term(m, v);
        }
    }
    return out;
}

}  // namespace wittenlab
