#pragma once

#include <map>
#include <vector>

#include "hooktab/coefficient.hpp"
#include "hooktab/partition.hpp"

namespace hooktab {

// Polynomial in x_1..x_m over Z[alpha, beta], truncated at a total
// x-degree. Terms above the bound are dropped and the truncation is
// recorded. All constructors in this library produce symmetric polynomials.
class TruncatedSymmetricPolynomial {
public:
    TruncatedSymmetricPolynomial() = default;
    TruncatedSymmetricPolynomial(int num_variables, int max_degree)
        : num_variables_(num_variables), max_degree_(max_degree) {}

    int num_variables() const { return num_variables_; }
    int max_degree() const { return max_degree_; }
    bool truncated() const { return truncated_; }
    const std::map<std::vector<int>, CoefficientAB>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const CoefficientAB& coeff);
    CoefficientAB coefficient(const std::vector<int>& exponents) const;

    TruncatedSymmetricPolynomial& operator+=(const TruncatedSymmetricPolynomial& o);
    TruncatedSymmetricPolynomial scaled(const CoefficientAB& c) const;
    // Keep only terms whose alpha+beta degree is at most the bound.
    TruncatedSymmetricPolynomial marker_truncated(int max_marker_degree) const;
    TruncatedSymmetricPolynomial alpha_zero() const;
    TruncatedSymmetricPolynomial beta_zero() const;

    bool is_symmetric() const;  // checks invariance under adjacent transpositions

    bool operator==(const TruncatedSymmetricPolynomial& o) const {
        return num_variables_ == o.num_variables_ && terms_ == o.terms_;
    }

private:
    int num_variables_ = 0;
    int max_degree_ = 0;
    bool truncated_ = false;
    std::map<std::vector<int>, CoefficientAB> terms_;
};

enum class Basis { Schur, BigG, SmallG };

// Formal sum of basis symbols indexed by partitions with coefficients in
// Z[alpha, beta], exact for shapes up to the stated size bound.
struct BasisExpansion {
    Basis basis = Basis::Schur;
    std::map<Partition, CoefficientAB> terms;
    int truncation_bound = 0;

    CoefficientAB coefficient(const Partition& shape) const {
        auto it = terms.find(shape);
        return it == terms.end() ? CoefficientAB() : it->second;
    }
};

}  // namespace hooktab
