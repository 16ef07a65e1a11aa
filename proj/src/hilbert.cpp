#include "qasl/hilbert.hpp"

#include <functional>

namespace qasl {

namespace {

long direct_multichain_count(const Poset& p, int total_degree) {
    long count = 0;
    std::function<void(int, int)> rec = [&](int last, int remaining) {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (int e = (last < 0 ? 0 : last); e < p.size(); ++e) {
            if (last >= 0 && !p.leq(last, e)) continue;
            if (p.degree(e) > remaining) continue;
            rec(e, remaining - p.degree(e));
        }
    };
    rec(-1, total_degree);
    return count;
}

}  // namespace

HilbertSeries hilbert_series(const Poset& poset) {
    HilbertSeries h;
    h.series = poset.multichain_genfunc();
    h.pole_order_at_1 = h.series.pole_order_at_one();

    auto coeffs = h.series.taylor(6);
    for (int d = 0; d <= 6; ++d) {
        const Rational& c = coeffs[static_cast<size_t>(d)];
        if (boost::multiprecision::denominator(c) != 1 || c < 0)
            throw std::logic_error("hilbert_series: coefficient at degree " + std::to_string(d) +
                                   " is not a nonnegative integer");
        if (Rational(direct_multichain_count(poset, d)) != c)
            throw std::logic_error("hilbert_series: coefficient at degree " + std::to_string(d) +
                                   " disagrees with the multichain count");
    }
    return h;
}

HilbertSeries hilbert_series(const AlgebraContext& ctx) {
    return hilbert_series(ctx.config_poset());
}

int gk_dimension(const HilbertSeries& h, const Poset& poset) {
    if (h.pole_order_at_1 != poset.rank())
        throw std::logic_error("gk_dimension: pole order " + std::to_string(h.pole_order_at_1) +
                               " differs from poset rank " + std::to_string(poset.rank()));
    return h.pole_order_at_1;
}

GorensteinVerdict gorenstein_test(const HilbertSeries& h) {
    GorensteinVerdict v;
    if (h.series.is_zero()) return v;
    RationalFunc inverted = h.series.substitute_inverse();
    const int band = h.series.num().degree() + h.series.den().degree();
    for (int l = -band; l <= band; ++l) {
        RationalFunc shifted = RationalFunc::monomial_power(l) * h.series;
        if (inverted == shifted || inverted == -shifted) {
            v.gorenstein = true;
            v.shift = l;
            return v;
        }
    }
    return v;
}

nlohmann::json hilbert_report(const AlgebraContext& ctx) {
    HilbertSeries h = hilbert_series(ctx);
    const Poset& poset = ctx.config_poset();
    GorensteinVerdict g = gorenstein_test(h);
    nlohmann::json j;
    j["config"] = ctx.config().to_json();
    j["series"] = h.to_json();
    j["gk_dim"] = gk_dimension(h, poset);
    j["poset_rank"] = poset.rank();
    j["gorenstein"] = g.gorenstein;
    j["shift"] = g.shift ? nlohmann::json(*g.shift) : nlohmann::json(nullptr);
    j["proviso"] =
        "functional-equation criterion; meaningful for straightening-law algebras on distributive lattices";
    return j;
}

}  // namespace qasl
