#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qasl/poset.hpp"

#include <functional>

using namespace qasl;

namespace {

// Independent oracle: count multichains of a given total degree by direct
// enumeration over index-sorted non-decreasing sequences.
long count_multichains(const Poset& p, int total_degree) {
    long count = 0;
    std::function<void(int, int)> rec = [&](int last, int remaining) {
        if (remaining == 0) {
            ++count;
            return;
        }
        for (int e = last; e < p.size(); ++e) {
            if (last >= 0 && !(last == e || p.leq(last, e))) continue;
            if (p.degree(e) > remaining) continue;
            rec(e, remaining - p.degree(e));
        }
    };
    // construction order of our posets is a linear extension, so index-sorted
    // enumeration lists every multichain exactly once
    std::function<void(int)> start = [&](int d) {
        if (d == 0) {
            ++count;
            return;
        }
        for (int e = 0; e < p.size(); ++e)
            if (p.degree(e) <= d) rec(e, d - p.degree(e));
    };
    start(total_degree);
    return count;
}

Poset bowtie() {
    // two maxima over two minima plus a bottom
    std::vector<std::string> labels{"bot", "a", "b", "A", "B"};
    std::vector<int> deg(5, 1);
    std::vector<std::vector<bool>> leq(5, std::vector<bool>(5, false));
    for (int i = 0; i < 5; ++i) leq[i][i] = true;
    for (int j = 1; j < 5; ++j) leq[0][j] = true;
    leq[1][3] = leq[1][4] = leq[2][3] = leq[2][4] = true;
    return Poset(labels, deg, leq);
}

}  // namespace

TEST_CASE("pi poset structure") {
    PiPoset p24 = build_pi_poset(2, 4);
    CHECK(p24.order.size() == 6);

    int bottom = p24.index_of({1, 2});
    int top = p24.index_of({3, 4});
    for (int e = 0; e < 6; ++e) {
        CHECK(p24.order.leq(bottom, e));
        CHECK(p24.order.leq(e, top));
    }

    // {1,4} and {2,3} are the only incomparable pair
    int a = p24.index_of({1, 4});
    int b = p24.index_of({2, 3});
    CHECK_FALSE(p24.order.comparable(a, b));
    int incomparable = 0;
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y)
            if (!p24.order.comparable(x, y)) ++incomparable;
    CHECK(incomparable == 1);

    PiPoset p13 = build_pi_poset(1, 3);
    CHECK(p13.order.size() == 3);
    CHECK(p13.order.leq(p13.index_of({1}), p13.index_of({2})));
    CHECK(p13.order.leq(p13.index_of({2}), p13.index_of({3})));

    CHECK_THROWS_AS(build_pi_poset(3, 2), std::invalid_argument);
}

TEST_CASE("delta poset structure") {
    // binomial count oracle: sum_t C(m,t) C(n,t)
    DeltaPoset d221 = build_delta_poset(2, 2, 1);
    CHECK(d221.order.size() == 2 * 2 + 1 * 1);
    int det = d221.index_of(IndexPair{{1, 2}, {1, 2}});
    REQUIRE(det >= 0);
    for (int e = 0; e < d221.order.size(); ++e) CHECK(d221.order.leq(det, e));

    DeltaPoset d222 = build_delta_poset(2, 2, 2);
    CHECK(d222.order.size() == 1);
    CHECK(d222.elements[0] == (IndexPair{{1, 2}, {1, 2}}));

    DeltaPoset d231 = build_delta_poset(2, 3, 1);
    CHECK(d231.order.size() == 2 * 3 + 1 * 3);

    // degree is the pair size
    for (int e = 0; e < d231.order.size(); ++e)
        CHECK(d231.order.degree(e) == d231.elements[static_cast<size_t>(e)].size());

    CHECK_THROWS_AS(build_delta_poset(2, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_delta_poset(2, 3, 3), std::invalid_argument);
}

TEST_CASE("delta order examples") {
    // larger size sits below smaller size when entries allow
    IndexPair det{{1, 2}, {1, 2}};
    IndexPair x12{{1}, {2}};
    IndexPair x21{{2}, {1}};
    CHECK(index_pair_leq(det, x12));
    CHECK_FALSE(index_pair_leq(x12, det));
    CHECK_FALSE(index_pair_leq(x12, x21));
    CHECK_FALSE(index_pair_leq(x21, x12));
    CHECK(index_pair_leq(IndexPair{{1}, {1}}, x12));
}

TEST_CASE("rank") {
    PiPoset p24 = build_pi_poset(2, 4);
    CHECK(p24.order.rank() == 5);
    CHECK(p24.order.rank({}) == 0);

    PiPoset p13 = build_pi_poset(1, 3);
    CHECK(p13.order.rank({p13.index_of({2})}) == 2);

    // rk Pi_{m,n} = m(n-m) + 1 on small cases
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 5; ++n) CHECK(build_pi_poset(m, n).order.rank() == m * (n - m) + 1);
}

TEST_CASE("pi ideals") {
    PiPoset p24 = build_pi_poset(2, 4);
    const Poset& P = p24.order;

    PiIdeal empty = P.ideal_cogenerated({p24.index_of({1, 2})});
    CHECK(empty.count() == 0);

    PiIdeal omega14 = P.ideal_cogenerated({p24.index_of({1, 4})});
    CHECK(omega14.count() == 3);
    CHECK(omega14.contains(p24.index_of({1, 2})));
    CHECK(omega14.contains(p24.index_of({1, 3})));
    CHECK(omega14.contains(p24.index_of({2, 3})));

    PiIdeal gen13 = P.ideal_generated({p24.index_of({1, 3})});
    CHECK(gen13.count() == 2);
    CHECK(gen13.contains(p24.index_of({1, 2})));
    CHECK(gen13.contains(p24.index_of({1, 3})));

    // downward closure + maximality of the cogenerated ideal
    for (int g = 0; g < P.size(); ++g) {
        PiIdeal co = P.ideal_cogenerated({g});
        CHECK(P.is_pi_ideal(co));
        CHECK(P.is_pi_ideal(P.ideal_generated({g})));
        for (int e = 0; e < P.size(); ++e) {
            if (co.contains(e)) {
                CHECK_FALSE(P.leq(g, e));  // disjoint from the up-set of g
            } else {
                // adding e would either meet the up-set or break closure
                bool meets_up = P.leq(g, e);
                bool breaks_closure = false;
                for (int f = 0; f < P.size(); ++f)
                    if (P.leq(f, e) && !co.contains(f) && f != e && P.leq(g, f)) breaks_closure = true;
                CHECK((meets_up || breaks_closure));
            }
        }
    }
}

TEST_CASE("meet and join on index sets are componentwise min and max") {
    // the exhaustive bound search doubles as an oracle for the formula
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}}) {
        PiPoset p = build_pi_poset(m, n);
        for (int a = 0; a < p.order.size(); ++a) {
            for (int b = 0; b < p.order.size(); ++b) {
                IndexSet lo(static_cast<size_t>(m)), hi(static_cast<size_t>(m));
                for (int s = 0; s < m; ++s) {
                    lo[static_cast<size_t>(s)] = std::min(p.elements[static_cast<size_t>(a)][static_cast<size_t>(s)],
                                                          p.elements[static_cast<size_t>(b)][static_cast<size_t>(s)]);
                    hi[static_cast<size_t>(s)] = std::max(p.elements[static_cast<size_t>(a)][static_cast<size_t>(s)],
                                                          p.elements[static_cast<size_t>(b)][static_cast<size_t>(s)]);
                }
                CHECK(p.order.meet(a, b) == p.index_of(lo));
                CHECK(p.order.join(a, b) == p.index_of(hi));
            }
        }
    }
}

TEST_CASE("distributive lattice detection") {
    CHECK(build_pi_poset(2, 4).order.check_distributive_lattice().ok());
    CHECK(build_pi_poset(2, 5).order.check_distributive_lattice().ok());
    CHECK(build_pi_poset(3, 5).order.check_distributive_lattice().ok());

    // both slices of Delta_{2,3}: the 1x1 grid and the size-2 chain
    CHECK(build_delta_poset_range(2, 3, 1, 1).order.check_distributive_lattice().ok());
    CHECK(build_delta_poset_range(2, 3, 2, 2).order.check_distributive_lattice().ok());

    DistributivityResult res = bowtie().check_distributive_lattice();
    CHECK_FALSE(res.ok());
    CHECK_FALSE(res.is_lattice);
    REQUIRE(res.witness.has_value());
}

TEST_CASE("poset axioms are enforced") {
    std::vector<std::vector<bool>> not_reflexive{{false}};
    CHECK_THROWS_AS(Poset({"x"}, {1}, not_reflexive), std::invalid_argument);

    std::vector<std::vector<bool>> not_antisym{{true, true}, {true, true}};
    CHECK_THROWS_AS(Poset({"x", "y"}, {1, 1}, not_antisym), std::invalid_argument);

    // x <= y <= z but not x <= z
    std::vector<std::vector<bool>> not_trans{
        {true, true, false}, {false, true, true}, {false, false, true}};
    CHECK_THROWS_AS(Poset({"x", "y", "z"}, {1, 1, 1}, not_trans), std::invalid_argument);

    std::vector<std::vector<bool>> fine{{true}};
    CHECK_THROWS_AS(Poset({"x"}, {0}, fine), std::invalid_argument);
}

TEST_CASE("delta embedding images") {
    CHECK(delta_embedding_image(IndexPair{{1}, {1}}, 2, 2) == IndexSet{1, 3});
    CHECK(delta_embedding_image(IndexPair{{1, 2}, {1, 2}}, 2, 2) == IndexSet{1, 2});

    // image of Delta_{2,2} is Pi_{2,4} minus its top
    DeltaEmbedding e22 = delta_embedding(2, 2);
    PiPoset p24 = build_pi_poset(2, 4);
    std::set<IndexSet> image;
    for (const auto& [pair, k] : e22.graph) image.insert(k);
    CHECK(image.size() == e22.graph.size());  // injective
    std::set<IndexSet> expected(p24.elements.begin(), p24.elements.end());
    expected.erase({3, 4});
    CHECK(image == expected);
}

TEST_CASE("delta embedding preserves and reflects order") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = m; n <= 4; ++n) {
            DeltaEmbedding emb = delta_embedding(m, n);
            for (const auto& [p, kp] : emb.graph)
                for (const auto& [r, kr] : emb.graph)
                    CHECK(index_pair_leq(p, r) == index_set_leq(kp, kr));
        }
    }
}

TEST_CASE("multichain generating functions") {
    // single element of degree 1: 1/(1-t)
    Poset single({"x"}, {1}, {{true}});
    RationalFunc expected(DensePoly(BigInt(1)), DensePoly(std::vector<BigInt>{1, -1}));
    CHECK(single.multichain_genfunc() == expected);

    // antichain of two degree-1 elements: (1+t)/(1-t)
    Poset anti({"x", "y"}, {1, 1}, {{true, false}, {false, true}});
    RationalFunc anti_expected(DensePoly(std::vector<BigInt>{1, 1}),
                               DensePoly(std::vector<BigInt>{1, -1}));
    CHECK(anti.multichain_genfunc() == anti_expected);

    // Pi_{2,4}: (1+t)/(1-t)^5 with multichain counts 1, 6, 20, 50, 105
    PiPoset p24 = build_pi_poset(2, 4);
    RationalFunc h = p24.order.multichain_genfunc();
    DensePoly onemt(std::vector<BigInt>{1, -1});
    DensePoly den5 = onemt * onemt * onemt * onemt * onemt;
    CHECK(h == RationalFunc(DensePoly(std::vector<BigInt>{1, 1}), den5));
    auto coeffs = h.taylor(4);
    CHECK(coeffs[0] == 1);
    CHECK(coeffs[1] == 6);
    CHECK(coeffs[2] == 20);
    CHECK(coeffs[3] == 50);
    CHECK(coeffs[4] == 105);
}

TEST_CASE("genfunc agrees with brute-force enumeration") {
    std::vector<Poset> cases;
    cases.push_back(build_pi_poset(2, 4).order);
    cases.push_back(build_pi_poset(1, 3).order);
    cases.push_back(build_delta_poset(2, 2, 1).order);
    cases.push_back(build_delta_poset(2, 3, 1).order);
    cases.push_back(bowtie());
    for (const auto& p : cases) {
        auto coeffs = p.multichain_genfunc().taylor(6);
        for (int d = 0; d <= 6; ++d)
            CHECK(coeffs[static_cast<size_t>(d)] == count_multichains(p, d));
    }
}

TEST_CASE("poset exports") {
    PiPoset p13 = build_pi_poset(1, 3);
    nlohmann::json j = p13.order.to_json();
    CHECK(j["elements"].size() == 3);
    CHECK(j["cover_relations"].size() == 2);
    CHECK(j["degrees"]["[2]"] == 1);
    std::string dot = p13.order.to_dot();
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("[1]") != std::string::npos);
}

TEST_CASE("restrict keeps order and labels") {
    PiPoset p24 = build_pi_poset(2, 4);
    std::vector<int> keep;
    int gamma = p24.index_of({1, 3});
    for (int e = 0; e < p24.order.size(); ++e)
        if (p24.order.leq(gamma, e)) keep.push_back(e);
    Poset sub = p24.order.restrict(keep);
    CHECK(sub.size() == 5);
    CHECK(sub.check_distributive_lattice().ok());
}
