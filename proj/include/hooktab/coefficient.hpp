#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>

namespace hooktab {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[alpha, beta], stored sparsely by (alpha, beta) exponent
// pair. Zero entries are never kept.
class CoefficientAB {
public:
    CoefficientAB() = default;
    CoefficientAB(long long constant);  // implicit: integers embed as constants

    static CoefficientAB term(BigInt value, int alpha_exp, int beta_exp);
    static CoefficientAB alpha(int exp = 1) { return term(1, exp, 0); }
    static CoefficientAB beta(int exp = 1) { return term(1, 0, exp); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
    BigInt coefficient(int alpha_exp, int beta_exp) const;

    // Total (alpha+beta)-degree of the highest term, -1 when zero.
    int degree() const;
    // Drop all terms of total degree above the bound.
    CoefficientAB truncated(int max_degree) const;
    // Substitute alpha = 0 (keep beta) or beta = 0 (keep alpha).
    CoefficientAB alpha_zero() const;
    CoefficientAB beta_zero() const;

    CoefficientAB& operator+=(const CoefficientAB& o);
    CoefficientAB& operator-=(const CoefficientAB& o);
    CoefficientAB operator+(const CoefficientAB& o) const;
    CoefficientAB operator-(const CoefficientAB& o) const;
    CoefficientAB operator*(const CoefficientAB& o) const;
    CoefficientAB operator-() const;

    bool operator==(const CoefficientAB&) const = default;
    auto operator<=>(const CoefficientAB&) const = default;

    // Human-readable form, e.g. "1 + 2ab" for 1 + 2*alpha*beta.
    std::string str() const;

private:
    void add_term(int alpha_exp, int beta_exp, const BigInt& value);
    std::map<std::pair<int, int>, BigInt> terms_;
};

}  // namespace hooktab
