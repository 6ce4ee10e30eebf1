#pragma once

// Hilbert series and graded trace generating functions of splitting
// algebras, assembled from Möbius polynomials:
//
//   H(A(P), z)        = (1 - z) / (1 - z M_P(z))
//   Tr_sigma(A(P), z) = (1 - z) / (1 - z M_{P^sigma}(z))
//
// Both formulas hold for finite ranked posets with a unique minimal element;
// these functions refuse anything else.

#include "mobius/constructions.hpp"
#include "mobius/poset.hpp"
#include "mobius/rational_series.hpp"

namespace mobius {

// Throws SeriesError naming the violated hypothesis.
void require_hilbert_hypotheses(const RankedPoset& rp);

// (1 - z) / (1 - z m)
RationalSeries series_from_mobius(const IntPolynomial& m);

RationalSeries hilbert_series(const RankedPoset& rp);

RationalSeries graded_trace(const PosetAutomorphism& aut);

// Closed form through shuffle_fixed_mobius, without building the product.
RationalSeries shuffle_trace(const FactorShuffle& fs);

}  // namespace mobius
