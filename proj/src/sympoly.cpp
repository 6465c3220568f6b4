#include "hooktab/sympoly.hpp"

#include <numeric>

#include "hooktab/errors.hpp"

namespace hooktab {

void TruncatedSymmetricPolynomial::add_term(const std::vector<int>& exponents,
                                            const CoefficientAB& coeff) {
    if (static_cast<int>(exponents.size()) > num_variables_) {
        throw TableauError("monomial uses more variables than the polynomial holds");
    }
    if (coeff.is_zero()) return;
    int degree = std::accumulate(exponents.begin(), exponents.end(), 0);
    if (degree > max_degree_) {
        truncated_ = true;
        return;
    }
    std::vector<int> key = exponents;
    key.resize(num_variables_, 0);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[std::move(key)] = coeff;
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

CoefficientAB TruncatedSymmetricPolynomial::coefficient(const std::vector<int>& exponents) const {
    std::vector<int> key = exponents;
    key.resize(num_variables_, 0);
    auto it = terms_.find(key);
    return it == terms_.end() ? CoefficientAB() : it->second;
}

TruncatedSymmetricPolynomial& TruncatedSymmetricPolynomial::operator+=(
    const TruncatedSymmetricPolynomial& o) {
    if (o.num_variables_ != num_variables_) throw TableauError("variable count mismatch");
    truncated_ = truncated_ || o.truncated_;
    for (const auto& [exps, c] : o.terms_) add_term(exps, c);
    return *this;
}

TruncatedSymmetricPolynomial TruncatedSymmetricPolynomial::scaled(const CoefficientAB& c) const {
    TruncatedSymmetricPolynomial out(num_variables_, max_degree_);
    out.truncated_ = truncated_;
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff * c);
    return out;
}

TruncatedSymmetricPolynomial TruncatedSymmetricPolynomial::marker_truncated(
    int max_marker_degree) const {
    TruncatedSymmetricPolynomial out(num_variables_, max_degree_);
    out.truncated_ = truncated_;
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff.truncated(max_marker_degree));
    return out;
}

TruncatedSymmetricPolynomial TruncatedSymmetricPolynomial::alpha_zero() const {
    TruncatedSymmetricPolynomial out(num_variables_, max_degree_);
    out.truncated_ = truncated_;
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff.alpha_zero());
    return out;
}

TruncatedSymmetricPolynomial TruncatedSymmetricPolynomial::beta_zero() const {
    TruncatedSymmetricPolynomial out(num_variables_, max_degree_);
    out.truncated_ = truncated_;
    for (const auto& [exps, coeff] : terms_) out.add_term(exps, coeff.beta_zero());
    return out;
}

bool TruncatedSymmetricPolynomial::is_symmetric() const {
    for (int k = 0; k + 1 < num_variables_; ++k) {
        for (const auto& [exps, coeff] : terms_) {
            std::vector<int> swapped = exps;
            std::swap(swapped[k], swapped[k + 1]);
            auto it = terms_.find(swapped);
            if (it == terms_.end() || !(it->second == coeff)) return false;
        }
    }
    return true;
}

}  // namespace hooktab
