#pragma once

#include "wittenlab/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wittenlab {

// Exponent vector over t~_0..t~_K with trailing zeros trimmed.
using Monomial = std::vector<uint8_t>;

int monomial_degree(const Monomial& m);
int monomial_max_index(const Monomial& m);
std::string monomial_to_string(const Monomial& m);

// Finitely supported map monomial -> Rational, clipped to the reliable
// window (total degree <= max_degree, variable indices <= max_index).
// No stored zero coefficients.
class SparseSeries {
public:
    SparseSeries(int max_index, int max_degree)
        : max_index_(max_index), max_degree_(max_degree) {}

    int max_index() const { return max_index_; }
    int max_degree() const { return max_degree_; }

    // Adds c * t^m, silently dropping terms outside the window.
    void add_term(const Monomial& m, const Rational& c);
    Rational coefficient(const Monomial& m) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Restricts to a smaller window.
    SparseSeries clipped(int max_index, int max_degree) const;

    SparseSeries& operator+=(const SparseSeries& o);
    SparseSeries& operator-=(const SparseSeries& o);
    void scale(const Rational& c);

    friend SparseSeries operator+(SparseSeries a, const SparseSeries& b) { a += b; return a; }
    friend SparseSeries operator-(SparseSeries a, const SparseSeries& b) { a -= b; return a; }

    // Product, clipped to the intersection of the two windows.
    friend SparseSeries operator*(const SparseSeries& a, const SparseSeries& b);

    friend bool operator==(const SparseSeries& a, const SparseSeries& b) {
        return a.terms_ == b.terms_;
    }

private:
    int max_index_;
    int max_degree_;
    std::map<Monomial, Rational> terms_;
};

// exp of a series with zero constant term; log of a series with constant
// term 1. Both exact within the window.
SparseSeries series_exp(const SparseSeries& s);
SparseSeries series_log(const SparseSeries& s);

}  // namespace wittenlab
