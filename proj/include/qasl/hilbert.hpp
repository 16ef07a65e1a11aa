/**
 * @file hilbert.hpp
 * @brief Hilbert series from standard-monomial combinatorics, growth
 *        dimension extraction, and the Gorenstein functional-equation test
 *        H(1/t) = ± t^l H(t).
 */
#ifndef QASL_HILBERT_HPP
#define QASL_HILBERT_HPP

#include "qasl/poset.hpp"
#include "qasl/straighten.hpp"

namespace qasl {

struct HilbertSeries {
    RationalFunc series;        // in the grading variable t
    int pole_order_at_1 = 0;    // multiplicity of t = 1 in the denominator
    nlohmann::json to_json() const { return series.to_json(); }
};

/// The series of the configured algebra: the degree-weighted multichain
/// generating function of its poset. Taylor coefficients are cross-checked
/// against direct multichain counts for degree <= 6 before returning.
HilbertSeries hilbert_series(const AlgebraContext& ctx);
HilbertSeries hilbert_series(const Poset& poset);

/// Pole order at t = 1; throws std::logic_error unless it equals the rank of
/// the configured poset (growth dimension = longest chain length).
int gk_dimension(const HilbertSeries& h, const Poset& poset);

struct GorensteinVerdict {
    bool gorenstein = false;
    std::optional<int> shift;  // the witnessing exponent l
};

/// Searches H(1/t) = ± t^l H(t) over the bounded shift band. Only meaningful
/// for series of configurations verified to carry a straightening law on a
/// distributive lattice.
GorensteinVerdict gorenstein_test(const HilbertSeries& h);

/// {"config", "series", "gk_dim", "poset_rank", "gorenstein", "shift", "proviso"}
nlohmann::json hilbert_report(const AlgebraContext& ctx);

}  // namespace qasl

#endif
