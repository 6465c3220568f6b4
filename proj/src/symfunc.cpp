#include "hooktab/symfunc.hpp"

#include <algorithm>

#include "hooktab/crowding.hpp"
#include "hooktab/crystal.hpp"
#include "hooktab/enumerate.hpp"
#include "hooktab/errors.hpp"
#include "hooktab/uncrowding.hpp"

namespace hooktab {

namespace {

Partition weight_partition(const std::vector<int>& weight) {
    std::vector<int> parts = weight;
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return Partition(parts);  // throws unless weakly decreasing
}

}  // namespace

TruncatedSymmetricPolynomial schur_poly(const Partition& lambda, int m, int max_degree) {
    TruncatedSymmetricPolynomial poly(m, max_degree);
    for (const auto& t : enumerate_hvt(lambda, m, 0, 0)) {
        poly.add_term(t.weight(), CoefficientAB(1));
    }
    return poly;
}

TruncatedSymmetricPolynomial stable_grothendieck(const Partition& mu, int m, int max_degree,
                                                 BetaMode beta) {
    TruncatedSymmetricPolynomial poly(m, max_degree);
    for (int excess = 0; mu.size() + excess <= max_degree; ++excess) {
        CoefficientAB coeff = (beta == BetaMode::Formal)
                                  ? CoefficientAB::beta(excess)
                                  : CoefficientAB(excess % 2 == 0 ? 1 : -1);
        for (const auto& t : enumerate_hvt(mu, m, 0, excess)) {
            poly.add_term(t.weight(), coeff);
        }
    }
    return poly;
}

TruncatedSymmetricPolynomial dual_grothendieck(const Partition& mu, int m) {
    TruncatedSymmetricPolynomial poly(m, mu.size());
    for (const auto& r : enumerate_rpp(mu, m)) {
        poly.add_term(rpp_eval_and_word(r).first, CoefficientAB(1));
    }
    return poly;
}

TruncatedSymmetricPolynomial weak_grothendieck(const Partition& lambda, int m, int max_letters) {
    TruncatedSymmetricPolynomial poly(m, max_letters);
    for (int excess = 0; lambda.size() + excess <= max_letters; ++excess) {
        for (const auto& t : enumerate_hvt(lambda, m, excess, 0)) {
            poly.add_term(t.weight(), CoefficientAB::alpha(excess));
        }
    }
    return poly;
}

TruncatedSymmetricPolynomial canonical_grothendieck(const Partition& lambda, int m,
                                                    int max_letters) {
    TruncatedSymmetricPolynomial poly(m, max_letters);
    for (int a = 0; lambda.size() + a <= max_letters; ++a) {
        for (int l = 0; lambda.size() + a + l <= max_letters; ++l) {
            CoefficientAB coeff = CoefficientAB::term(1, a, l);
            for (const auto& t : enumerate_hvt(lambda, m, a, l)) {
                poly.add_term(t.weight(), coeff);
            }
        }
    }
    return poly;
}

BasisExpansion schur_expansion_canonical(const Partition& lambda, int max_shape_size) {
    BasisExpansion expansion;
    expansion.basis = Basis::Schur;
    expansion.truncation_bound = max_shape_size;
    for (int a = 0; lambda.size() + a <= max_shape_size; ++a) {
        for (int l = 0; lambda.size() + a + l <= max_shape_size; ++l) {
            for (const auto& t : enumerate_hvt(lambda, max_shape_size, a, l)) {
                if (!is_highest_weight(t)) continue;
                Partition nu = weight_partition(t.weight());
                auto& c = expansion.terms[nu];
                c += CoefficientAB::term(1, a, l);
            }
        }
    }
    return expansion;
}

BasisExpansion schur_expansion_stable(const Partition& mu, int max_size) {
    BasisExpansion expansion;
    expansion.basis = Basis::Schur;
    expansion.truncation_bound = max_size;
    for (int l = 0; mu.size() + l <= max_size; ++l) {
        for (const auto& t : enumerate_hvt(mu, max_size, 0, l)) {
            if (!is_highest_weight(t)) continue;
            expansion.terms[weight_partition(t.weight())] += CoefficientAB(l % 2 == 0 ? 1 : -1);
        }
    }
    return expansion;
}

BasisExpansion schur_expansion_dual(const Partition& mu) {
    BasisExpansion expansion;
    expansion.basis = Basis::Schur;
    expansion.truncation_bound = mu.size();
    for (const auto& f : enumerate_flagged_with_outer(mu, Orientation::RowFlagged)) {
        expansion.terms[f.inner()] += CoefficientAB(1);
    }
    return expansion;
}

int phi_lambda(const HookValuedTableau& svt, const Partition& lambda) {
    if (!svt.shape().contains(lambda)) return 0;
    int count = 0;
    for (const auto& f : enumerate_flagged(lambda, svt.shape(), Orientation::ColumnFlagged)) {
        if (k_lambda_member(svt, f)) ++count;
    }
    return count;
}

CoefficientAB wt_lambda(const Ssyt& t, const Partition& lambda) {
    if (!ssyt_is_highest_weight(t)) throw PreconditionError("wt_lambda requires a highest-weight tableau");
    Partition nu = ssyt_shape(t);
    CoefficientAB result;
    if (!nu.contains(lambda)) return result;
    HookValuedTableau plain = t.empty() ? HookValuedTableau() : ssyt_to_hvt(t);
    for (const auto& mu : Partition::all_containing(lambda, nu.size())) {
        if (!nu.contains(mu)) continue;
        for (const auto& q : enumerate_flagged(mu, nu, Orientation::RowFlagged)) {
            HookValuedTableau svt = inverse_uncrowd_svt(plain, q);
            int phi = phi_lambda(svt, lambda);
            if (phi > 0) {
                result += CoefficientAB::term(phi, mu.size() - lambda.size(), nu.size() - mu.size());
            }
        }
    }
    return result;
}

BasisExpansion expand_in_basis(const Partition& lambda, Basis basis, int size_bound) {
    if (basis == Basis::Schur) return schur_expansion_canonical(lambda, size_bound);
    BasisExpansion expansion;
    expansion.basis = basis;
    expansion.truncation_bound = size_bound;
    int letter_bound = std::max(size_bound, lambda.size());
    for (const auto& sigma : Partition::all_up_to_size(size_bound)) {
        CoefficientAB coeff;
        if (basis == Basis::BigG) {
            for (const auto& r : enumerate_rpp(sigma, letter_bound)) {
                Word w = rpp_eval_and_word(r).second;
                if (static_cast<int>(w.size()) > letter_bound) continue;
                Ssyt p = rsk_insert(w);
                if (!ssyt_is_highest_weight(p) || !ssyt_shape(p).contains(lambda)) continue;
                coeff += wt_lambda(p, lambda);
            }
        } else {
            for (int l = 0; sigma.size() + l <= letter_bound; ++l) {
                int sign = (l % 2 == 0) ? 1 : -1;
                for (const auto& s : enumerate_hvt(sigma, letter_bound, 0, l)) {
                    Word w = svt_reading_word(s);
                    Ssyt p = rsk_insert(w);
                    if (!ssyt_is_highest_weight(p) || !ssyt_shape(p).contains(lambda)) continue;
                    coeff += wt_lambda(p, lambda) * CoefficientAB(sign);
                }
            }
        }
        if (!coeff.is_zero()) expansion.terms[sigma] = coeff;
    }
    return expansion;
}

}  // namespace hooktab
