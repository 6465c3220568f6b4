#pragma once

#include "hooktab/rsk.hpp"
#include "hooktab/sympoly.hpp"
#include "hooktab/tableau.hpp"

namespace hooktab {

enum class BetaMode { Formal, MinusOne };

// Schur polynomial s_lambda(x_1..x_m) as the generating function of
// semistandard Young tableaux.
TruncatedSymmetricPolynomial schur_poly(const Partition& lambda, int m, int max_degree);

// Stable Grothendieck polynomial G_mu: sum over set-valued tableaux of
// beta^(|T|-|mu|) x^weight, with letters at most max_degree in total;
// BetaMode::MinusOne substitutes beta = -1.
TruncatedSymmetricPolynomial stable_grothendieck(const Partition& mu, int m, int max_degree,
                                                 BetaMode beta = BetaMode::Formal);

// Dual stable Grothendieck polynomial g_mu(x;1): sum over reverse plane
// partitions of x^ev.
TruncatedSymmetricPolynomial dual_grothendieck(const Partition& mu, int m);

// Weak variant J_lambda(x;alpha): sum over multiset-valued tableaux of
// alpha^(|T|-|lambda|) x^weight.
TruncatedSymmetricPolynomial weak_grothendieck(const Partition& lambda, int m, int max_letters);

// Canonical Grothendieck polynomial: sum over hook-valued tableaux of
// alpha^armExcess beta^legExcess x^weight with at most max_letters letters.
TruncatedSymmetricPolynomial canonical_grothendieck(const Partition& lambda, int m,
                                                    int max_letters);

// Tableaux Schur expansion of the canonical Grothendieck polynomial:
// coefficient of s_nu collects alpha^a beta^l over highest-weight
// hook-valued tableaux of weight nu with at most max_shape_size letters.
BasisExpansion schur_expansion_canonical(const Partition& lambda, int max_shape_size);

// Schur expansions of G_mu(x;-1) (over highest-weight set-valued tableaux)
// and of g_mu(x;1) (over flagged increasing tableaux with outer shape mu).
BasisExpansion schur_expansion_stable(const Partition& mu, int max_size);
BasisExpansion schur_expansion_dual(const Partition& mu);

// Weight of a highest-weight semistandard tableau in the tableaux Schur
// expansion: sums alpha^(|mu|-|lambda|) beta^(|shape|-|mu|) phi_lambda over
// intermediate shapes mu and row-flagged recording tableaux, where
// phi_lambda counts column-flagged partners admitted by the crowding map.
CoefficientAB wt_lambda(const Ssyt& t, const Partition& lambda);

// Number of column-flagged tableaux F with (svt, F) in K_lambda.
int phi_lambda(const HookValuedTableau& svt, const Partition& lambda);

// Expansion of the canonical Grothendieck polynomial in the G_mu(x;-1) or
// g_mu(x;1) basis, exact for basis shapes up to size_bound and marker
// degree up to size_bound - |lambda|.
BasisExpansion expand_in_basis(const Partition& lambda, Basis basis, int size_bound);

}  // namespace hooktab
