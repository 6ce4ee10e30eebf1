#include "mobius/series.hpp"

#include "mobius/incidence.hpp"

namespace mobius {

void require_hilbert_hypotheses(const RankedPoset& rp)
{
    auto diags = validate(rp.poset, rp.ranks);
    if (rp.ranks.kind != RankKind::ranked || !diags.empty()) {
        std::string msg = "Hilbert theorem requires ranked poset";
        if (!diags.empty())
            msg += ": " + diags.front().message;
        throw SeriesError(msg);
    }
    auto mins = rp.poset.minimal_elements();
    if (mins.size() != 1) {
        std::string msg = "Hilbert theorem requires a unique minimal element, found";
        for (std::size_t m : mins)
            msg += " " + rp.poset.label(m);
        throw SeriesError(msg);
    }
}

RationalSeries series_from_mobius(const IntPolynomial& m)
{
    return {IntPolynomial{1, -1}, IntPolynomial{1} - IntPolynomial{0, 1} * m};
}

RationalSeries hilbert_series(const RankedPoset& rp)
{
    require_hilbert_hypotheses(rp);
    return series_from_mobius(mobius_polynomial(rp));
}

RationalSeries graded_trace(const PosetAutomorphism& aut)
{
    require_hilbert_hypotheses(aut.base());
    return series_from_mobius(mobius_polynomial(fixed_subposet(aut)));
}

RationalSeries shuffle_trace(const FactorShuffle& fs)
{
    // A product of ranked posets with unique minima is again one.
    for (const auto& f : fs.factors())
        require_hilbert_hypotheses(f);
    return series_from_mobius(shuffle_fixed_mobius(fs));
}

}  // namespace mobius
