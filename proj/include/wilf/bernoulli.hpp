#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "wilf/primes.hpp"
#include "wilf/rational.hpp"

namespace wilf {

/// Cache of Bernoulli numbers under the B_1 = -1/2 convention, grown on
/// demand through the defining recurrence
///     sum_{k=0}^{n} C(n+1,k) B_k = 0   (n >= 1).
///
/// Growth is not synchronized: either call ensure() up to the largest index
/// needed before any parallel section, or keep the table thread-private.
class BernoulliTable {
public:
    BernoulliTable() {
        table_.emplace_back(1);      // B_0
        table_.emplace_back(-1, 2);  // B_1
    }

    void ensure(std::size_t n) {
        while (table_.size() <= n) {
            std::size_t i = table_.size();
            Rational acc(0);
            for (std::size_t k = 0; k < i; ++k)
                acc += Rational(binomial(i + 1, k)) * table_[k];
            table_.push_back(-acc / Rational(mpz_class(i + 1)));
        }
    }

    const Rational& operator()(std::size_t n) {
        ensure(n);
        return table_[n];
    }

    std::size_t size() const { return table_.size(); }

private:
    std::vector<Rational> table_;
};

/// Process-wide table; see the class note for the concurrency contract.
inline BernoulliTable& bernoulli_table() {
    static BernoulliTable table;
    return table;
}

inline Rational bernoulli_number(std::size_t n) { return bernoulli_table()(n); }

/// B_m(x) = sum_{k=0}^{m} C(m,k) B_k x^{m-k}, evaluated exactly.
inline Rational bernoulli_poly_eval(std::size_t m, const Rational& x) {
    BernoulliTable& table = bernoulli_table();
    table.ensure(m);
    Rational acc(0);
    Rational xpow(1);
    // Accumulate from k = m down so x^{m-k} builds up by one multiply per term.
    for (std::size_t j = 0; j <= m; ++j) {
        std::size_t k = m - j;
        acc += Rational(binomial(m, k)) * table(k) * xpow;
        xpow *= x;
    }
    return acc;
}

}  // namespace wilf
