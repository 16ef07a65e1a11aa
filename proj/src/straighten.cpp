#include "qasl/straighten.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace qasl {

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Grassmannian: return "grassmannian";
        case AlgebraKind::Matrix: return "matrix";
        case AlgebraKind::Schubert: return "schubert";
        case AlgebraKind::DetRing: return "detring";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// AlgebraConfig
// ---------------------------------------------------------------------------

AlgebraConfig AlgebraConfig::grassmannian(int m, int n) {
    AlgebraConfig c;
    c.kind = AlgebraKind::Grassmannian;
    c.m = m;
    c.n = n;
    c.validate();
    return c;
}

AlgebraConfig AlgebraConfig::matrix(int m, int n) {
    AlgebraConfig c;
    c.kind = AlgebraKind::Matrix;
    c.m = m;
    c.n = n;
    c.validate();
    return c;
}

AlgebraConfig AlgebraConfig::schubert(int m, int n, IndexSet gamma) {
    AlgebraConfig c;
    c.kind = AlgebraKind::Schubert;
    c.m = m;
    c.n = n;
    c.gamma = std::move(gamma);
    c.validate();
    return c;
}

AlgebraConfig AlgebraConfig::detring(int m, int n, int t) {
    AlgebraConfig c;
    c.kind = AlgebraKind::DetRing;
    c.m = m;
    c.n = n;
    c.t = t;
    c.validate();
    return c;
}

void AlgebraConfig::validate() const {
    if (m < 1 || m > n)
        throw std::invalid_argument("config: need 1 <= m <= n (reduce via the transpose)");
    if (kind == AlgebraKind::DetRing && (t < 1 || t > m))
        throw std::invalid_argument("config: detring needs 1 <= t <= m");
    if (kind == AlgebraKind::Schubert) {
        if (static_cast<int>(gamma.size()) != m)
            throw std::invalid_argument("config: schubert gamma must have m entries");
        for (size_t i = 0; i < gamma.size(); ++i) {
            if (gamma[i] < 1 || gamma[i] > n || (i > 0 && gamma[i - 1] >= gamma[i]))
                throw std::invalid_argument(
                    "config: schubert gamma must be a strictly increasing subset of [1,n]");
        }
    }
}

std::string AlgebraConfig::label() const {
    std::ostringstream os;
    os << kind_name(kind) << "(" << m << "," << n;
    if (kind == AlgebraKind::DetRing) os << ";t=" << t;
    if (kind == AlgebraKind::Schubert) os << ";gamma=" << index_set_label(gamma);
    os << ")";
    return os.str();
}

nlohmann::json AlgebraConfig::to_json() const {
    nlohmann::json j{{"kind", kind_name(kind)}, {"m", m}, {"n", n}};
    if (kind == AlgebraKind::DetRing) j["t"] = t;
    if (kind == AlgebraKind::Schubert) j["gamma"] = gamma;
    return j;
}

void StandardCombination::add(const StandardMonomial& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool AslReport::overall() const {
    if (trivial_quotient) return true;
    for (const auto& c : conditions)
        if (!c.pass) return false;
    return true;
}

nlohmann::json AslReport::to_json() const {
    nlohmann::json j;
    j["config"] = config.to_json();
    j["max_check_degree"] = max_check_degree;
    j["trivial_quotient"] = trivial_quotient;
    j["conditions"] = nlohmann::json::object();
    for (int i = 0; i < 5; ++i)
        j["conditions"][std::to_string(i + 1)] = {{"pass", conditions[i].pass},
                                                  {"detail", conditions[i].detail}};
    j["overall"] = overall() ? "pass" : "fail";
    return j;
}

// ---------------------------------------------------------------------------
// AlgebraContext: construction
// ---------------------------------------------------------------------------

AlgebraContext::AlgebraContext(AlgebraConfig cfg)
    : cfg_(std::move(cfg)), alg_(Shape{cfg_.m, cfg_.n}) {
    cfg_.validate();
    if (cfg_.on_pi_poset()) {
        PiPoset pi = build_pi_poset(cfg_.m, cfg_.n);
        std::vector<int> all_rows(static_cast<size_t>(cfg_.m));
        std::iota(all_rows.begin(), all_rows.end(), 1);
        for (const auto& cols : pi.elements) elements_.push_back(IndexPair{all_rows, cols});
        ambient_ = pi.order;  // labels are the column sets, every degree 1
    } else {
        DeltaPoset d = build_delta_poset(cfg_.m, cfg_.n, 1);
        elements_ = d.elements;
        ambient_ = d.order;  // degree = minor size
    }

    const int count = ambient_.size();
    omega_.members.assign(static_cast<size_t>(count), false);
    if (cfg_.kind == AlgebraKind::Schubert) {
        int g = -1;
        for (int e = 0; e < count; ++e)
            if (elements_[static_cast<size_t>(e)].cols == cfg_.gamma) g = e;
        omega_ = ambient_.ideal_cogenerated({g});
    } else if (cfg_.kind == AlgebraKind::DetRing) {
        for (int e = 0; e < count; ++e)
            if (elements_[static_cast<size_t>(e)].size() >= cfg_.t)
                omega_.members[static_cast<size_t>(e)] = true;
    }
    if (!ambient_.is_pi_ideal(omega_))
        throw std::logic_error("config quotient mask is not a Pi-ideal");

    for (int e = 0; e < count; ++e)
        if (alive(e)) alive_.push_back(e);
    config_poset_ = ambient_.restrict(alive_);
}

int AlgebraContext::element_index(const IndexPair& p) const {
    auto it = std::find(elements_.begin(), elements_.end(), p);
    return it == elements_.end() ? -1 : static_cast<int>(it - elements_.begin());
}

int AlgebraContext::pbw_degree(int config_degree) const {
    return cfg_.on_pi_poset() ? cfg_.m * config_degree : config_degree;
}

// ---------------------------------------------------------------------------
// Standard monomials and realization
// ---------------------------------------------------------------------------

void AlgebraContext::enumerate_chains(int degree, bool ambient_only,
                                      std::vector<StandardMonomial>& out) const {
    // construction order is a linear extension, so extending by index keeps
    // each multichain enumerated exactly once
    std::vector<int> chain;
    std::function<void(int, int)> rec = [&](int last, int remaining) {
        if (remaining == 0) {
            out.push_back(StandardMonomial{chain});
            return;
        }
        int start = chain.empty() ? 0 : last;
        for (int e = start; e < ambient_.size(); ++e) {
            if (!ambient_only && !alive(e)) continue;
            if (!chain.empty() && !ambient_.leq(last, e)) continue;
            if (ambient_.degree(e) > remaining) continue;
            chain.push_back(e);
            rec(e, remaining - ambient_.degree(e));
            chain.pop_back();
        }
    };
    rec(-1, degree);
}

std::vector<StandardMonomial> AlgebraContext::standard_monomials(int degree) const {
    if (degree < 0) throw std::invalid_argument("standard_monomials: negative degree");
    std::vector<StandardMonomial> out;
    enumerate_chains(degree, false, out);
    return out;
}

std::vector<StandardMonomial> AlgebraContext::ambient_standard_monomials(int degree) const {
    if (degree < 0) throw std::invalid_argument("standard_monomials: negative degree");
    std::vector<StandardMonomial> out;
    enumerate_chains(degree, true, out);
    return out;
}

AlgebraElement AlgebraContext::realize(const StandardMonomial& mono) const {
    return realize_product(mono.chain);
}

AlgebraElement AlgebraContext::realize_product(const std::vector<int>& element_seq) const {
    AlgebraElement acc = alg_.one();
    for (int e : element_seq) {
        if (e < 0 || e >= ambient_.size())
            throw std::invalid_argument("realize: element index out of range");
        acc = alg_.multiply(acc, alg_.quantum_minor(elements_[static_cast<size_t>(e)]));
    }
    return acc;
}

std::string AlgebraContext::chain_label(const StandardMonomial& mono) const {
    std::ostringstream os;
    for (size_t i = 0; i < mono.chain.size(); ++i) os << element_label(mono.chain[i]);
    if (mono.chain.empty()) os << "1";
    return os.str();
}

nlohmann::json AlgebraContext::combination_to_json(const StandardCombination& c) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [mono, coeff] : c.terms) {
        nlohmann::json chain = nlohmann::json::array();
        for (int e : mono.chain) chain.push_back(element_label(e));
        arr.push_back({{"chain", chain}, {"coeff", coeff.to_json()}});
    }
    return arr;
}

// ---------------------------------------------------------------------------
// Exact coordinates: incremental Gaussian elimination over Q(q)
// ---------------------------------------------------------------------------

struct AlgebraContext::DegreeBasis {
    int pbw_deg = 0;
    std::vector<StandardMonomial> monomials;
    std::map<Word, int> col_index;
    struct EchelonRow {
        std::map<int, RationalFunc> v;  // smallest column is the pivot, scaled to 1
        std::map<int, RationalFunc> t;  // expansion in original rows
        int pivot = -1;
    };
    std::vector<EchelonRow> rows;
    std::map<int, int> pivot_row;  // pivot column -> row index
};

AlgebraContext::~AlgebraContext() = default;
AlgebraContext::AlgebraContext(AlgebraContext&&) noexcept = default;

const AlgebraContext::DegreeBasis& AlgebraContext::degree_basis(int pbw_deg) const {
    auto cached = basis_cache_.find(pbw_deg);
    if (cached != basis_cache_.end()) return *cached->second;

    auto basis = std::make_unique<DegreeBasis>();
    basis->pbw_deg = pbw_deg;
    const int factor = cfg_.on_pi_poset() ? cfg_.m : 1;
    if (pbw_deg % factor != 0)
        throw OutsideSpanError("PBW degree " + std::to_string(pbw_deg) +
                               " is not a multiple of the generator degree");
    basis->monomials = ambient_standard_monomials(pbw_deg / factor);

    std::vector<AlgebraElement> realized;
    realized.reserve(basis->monomials.size());
    for (const auto& mono : basis->monomials) {
        realized.push_back(realize(mono));
        for (const auto& [w, c] : realized.back().terms()) basis->col_index.emplace(w, 0);
    }
    int next = 0;
    for (auto& [w, idx] : basis->col_index) idx = next++;

    for (size_t j = 0; j < realized.size(); ++j) {
        std::map<int, RationalFunc> v;
        for (const auto& [w, c] : realized[j].terms())
            v.emplace(basis->col_index.at(w), RationalFunc(c));
        std::map<int, RationalFunc> t{{static_cast<int>(j), RationalFunc(BigInt(1))}};
        while (true) {
            if (v.empty())
                throw BasisDependenceError(
                    "standard monomials are linearly dependent at PBW degree " +
                    std::to_string(pbw_deg) + " in " + cfg_.label());
            const int lead = v.begin()->first;
            auto hit = basis->pivot_row.find(lead);
            if (hit == basis->pivot_row.end()) {
                const RationalFunc piv = v.begin()->second;
                for (auto& [col, val] : v) val /= piv;
                for (auto& [row, val] : t) val /= piv;
                basis->pivot_row.emplace(lead, static_cast<int>(basis->rows.size()));
                basis->rows.push_back({std::move(v), std::move(t), lead});
                break;
            }
            const DegreeBasis::EchelonRow& r = basis->rows[static_cast<size_t>(hit->second)];
            const RationalFunc c = v.begin()->second;
            for (const auto& [col, val] : r.v) {
                auto it = v.find(col);
                if (it == v.end()) {
                    v.emplace(col, -(c * val));
                } else {
                    it->second -= c * val;
                    if (it->second.is_zero()) v.erase(it);
                }
            }
            for (const auto& [row, val] : r.t) {
                auto it = t.find(row);
                if (it == t.end()) {
                    t.emplace(row, -(c * val));
                } else {
                    it->second -= c * val;
                    if (it->second.is_zero()) t.erase(it);
                }
            }
        }
    }

    const DegreeBasis& ref = *basis;
    basis_cache_.emplace(pbw_deg, std::move(basis));
    return ref;
}

StandardCombination AlgebraContext::ambient_coordinates(const AlgebraElement& elem) const {
    StandardCombination out;
    if (elem.is_zero()) return out;
    auto deg = elem.homogeneous_degree();
    if (!deg) throw std::invalid_argument("coordinates: element is not homogeneous");
    const DegreeBasis& basis = degree_basis(*deg);

    std::map<int, RationalFunc> v;
    for (const auto& [w, c] : elem.terms()) {
        auto it = basis.col_index.find(w);
        if (it == basis.col_index.end())
            throw OutsideSpanError("element outside the standard-monomial span (foreign PBW monomial)");
        v.emplace(it->second, RationalFunc(c));
    }

    std::map<int, RationalFunc> lambda;  // echelon-row coefficients
    while (!v.empty()) {
        const int lead = v.begin()->first;
        auto hit = basis.pivot_row.find(lead);
        if (hit == basis.pivot_row.end())
            throw OutsideSpanError("element outside the standard-monomial span (nonzero residual)");
        const DegreeBasis::EchelonRow& r = basis.rows[static_cast<size_t>(hit->second)];
        const RationalFunc c = v.begin()->second;
        auto lit = lambda.find(hit->second);
        if (lit == lambda.end()) {
            lambda.emplace(hit->second, c);
        } else {
            lit->second += c;
        }
        for (const auto& [col, val] : r.v) {
            auto it = v.find(col);
            if (it == v.end()) {
                v.emplace(col, -(c * val));
            } else {
                it->second -= c * val;
                if (it->second.is_zero()) v.erase(it);
            }
        }
    }

    std::map<int, RationalFunc> x;
    for (const auto& [row, c] : lambda) {
        if (c.is_zero()) continue;
        for (const auto& [orig, val] : basis.rows[static_cast<size_t>(row)].t) {
            auto it = x.find(orig);
            if (it == x.end()) {
                x.emplace(orig, c * val);
            } else {
                it->second += c * val;
                if (it->second.is_zero()) x.erase(it);
            }
        }
    }

    for (const auto& [orig, val] : x) {
        auto laurent = val.to_laurent();
        if (!laurent)
            throw IntegralityError("coordinate on " +
                                   chain_label(basis.monomials[static_cast<size_t>(orig)]) +
                                   " is not in Z[q^{±1}]: " + val.to_string("q"));
        out.add(basis.monomials[static_cast<size_t>(orig)], *laurent);
    }
    return out;
}

bool AlgebraContext::in_ambient_span(const AlgebraElement& elem) const {
    try {
        ambient_coordinates(elem);
        return true;
    } catch (const OutsideSpanError&) {
        return false;
    }
}

StandardCombination AlgebraContext::coordinates(const AlgebraElement& elem, int expect_degree) const {
    if (expect_degree >= 0 && !elem.is_zero()) {
        auto deg = elem.homogeneous_degree();
        if (!deg || *deg != pbw_degree(expect_degree))
            throw std::invalid_argument("coordinates: element degree does not match the configured degree");
    }
    StandardCombination full = ambient_coordinates(elem);
    if (!cfg_.is_quotient()) return full;
    StandardCombination projected;
    for (const auto& [mono, c] : full.terms)
        if (mono.chain.empty() || alive(mono.chain.front())) projected.add(mono, c);
    return projected;
}

// ---------------------------------------------------------------------------
// Straightening and commutation
// ---------------------------------------------------------------------------

namespace {

std::string shape_violation(const std::string& what) { return "shape certificate failed: " + what; }

}  // namespace

StraighteningResult AlgebraContext::straightening_relation(int a, int b) const {
    if (a < 0 || a >= ambient_.size() || b < 0 || b >= ambient_.size())
        throw std::invalid_argument("straightening_relation: element out of range");
    if (!alive(a) || !alive(b))
        throw std::invalid_argument("straightening_relation: element not in the configured poset");
    if (ambient_.comparable(a, b))
        throw std::invalid_argument("straightening_relation: pair is comparable");

    StraighteningResult res;
    res.lhs_a = a;
    res.lhs_b = b;
    AlgebraElement prod = alg_.multiply(alg_.quantum_minor(elements_[static_cast<size_t>(a)]),
                                        alg_.quantum_minor(elements_[static_cast<size_t>(b)]));
    res.rhs = coordinates(prod);
    res.certified = true;
    for (const auto& [mono, c] : res.rhs.terms) {
        (void)c;
        if (mono.length() < 1 || mono.length() > 2) {
            res.certified = false;
            res.failure = shape_violation("monomial " + chain_label(mono) + " has length " +
                                          std::to_string(mono.length()));
            break;
        }
        const int first = mono.chain.front();
        if (!ambient_.strictly_less(first, a) || !ambient_.strictly_less(first, b)) {
            res.certified = false;
            res.failure = shape_violation("first entry " + element_label(first) +
                                          " is not strictly below both factors");
            break;
        }
    }
    return res;
}

CommutationResult AlgebraContext::commutation_relation(int a, int b) const {
    if (a < 0 || a >= ambient_.size() || b < 0 || b >= ambient_.size())
        throw std::invalid_argument("commutation_relation: element out of range");
    if (!alive(a) || !alive(b))
        throw std::invalid_argument("commutation_relation: element not in the configured poset");

    CommutationResult res;
    res.lhs_a = a;
    res.lhs_b = b;

    AlgebraElement ab = alg_.multiply(alg_.quantum_minor(elements_[static_cast<size_t>(a)]),
                                      alg_.quantum_minor(elements_[static_cast<size_t>(b)]));
    AlgebraElement ba = alg_.multiply(alg_.quantum_minor(elements_[static_cast<size_t>(b)]),
                                      alg_.quantum_minor(elements_[static_cast<size_t>(a)]));
    StandardCombination ca = ambient_coordinates(ab);
    StandardCombination cb = ambient_coordinates(ba);

    // closed-form exponent: match the coefficient of the chain [min <= max]
    if (ambient_.comparable(a, b)) {
        StandardMonomial s{{a, b}};
        if (!ambient_.leq(a, b)) s.chain = {b, a};
        auto ia = ca.terms.find(s);
        auto ib = cb.terms.find(s);
        const LaurentPoly c1 = ia == ca.terms.end() ? LaurentPoly() : ia->second;
        const LaurentPoly c2 = ib == cb.terms.end() ? LaurentPoly() : ib->second;
        if (c1.is_zero() && c2.is_zero()) {
            res.exponent = 0;
        } else if (c1.is_zero() || c2.is_zero()) {
            res.failure = "chain " + chain_label(s) + " appears on only one side";
            return res;
        } else {
            auto ratio = (RationalFunc(c1) / RationalFunc(c2)).to_laurent();
            std::optional<int> f = ratio ? ratio->unit_exponent() : std::nullopt;
            if (!f) {
                res.failure = "leading coefficient of " + chain_label(s) + " is not a pure power of q";
                return res;
            }
            res.exponent = *f;
        }
    } else {
        res.exponent = 0;
    }

    StandardCombination lower = ca;
    for (const auto& [mono, c] : cb.terms) lower.add(mono, -(LaurentPoly::q_power(res.exponent) * c));
    if (cfg_.is_quotient()) {
        StandardCombination projected;
        for (const auto& [mono, c] : lower.terms)
            if (mono.chain.empty() || alive(mono.chain.front())) projected.add(mono, c);
        lower = std::move(projected);
    }
    res.lower_terms = std::move(lower);

    res.certified = true;
    for (const auto& [mono, c] : res.lower_terms.terms) {
        (void)c;
        if (mono.length() < 1 || mono.length() > 2) {
            res.certified = false;
            res.failure = shape_violation("monomial " + chain_label(mono) + " has length " +
                                          std::to_string(mono.length()));
            return res;
        }
        const int first = mono.chain.front();
        if (!ambient_.strictly_less(first, a) || !ambient_.strictly_less(first, b)) {
            res.certified = false;
            res.failure = shape_violation("first entry " + element_label(first) +
                                          " is not strictly below both factors");
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// The five-condition verifier
// ---------------------------------------------------------------------------

namespace {

// rank of a family of elements by local elimination over Q(q)
int rank_of_rows(const std::vector<AlgebraElement>& rows) {
    std::map<Word, int> col_index;
    for (const auto& r : rows)
        for (const auto& [w, c] : r.terms()) col_index.emplace(w, 0);
    int next = 0;
    for (auto& [w, idx] : col_index) idx = next++;

    std::map<int, std::map<int, RationalFunc>> echelon;  // pivot -> normalized row
    int rank = 0;
    for (const auto& r : rows) {
        std::map<int, RationalFunc> v;
        for (const auto& [w, c] : r.terms()) v.emplace(col_index.at(w), RationalFunc(c));
        while (!v.empty()) {
            const int lead = v.begin()->first;
            auto hit = echelon.find(lead);
            if (hit == echelon.end()) {
                const RationalFunc piv = v.begin()->second;
                for (auto& [col, val] : v) val /= piv;
                echelon.emplace(lead, std::move(v));
                ++rank;
                break;
            }
            const RationalFunc c = v.begin()->second;
            for (const auto& [col, val] : hit->second) {
                auto it = v.find(col);
                if (it == v.end()) {
                    v.emplace(col, -(c * val));
                } else {
                    it->second -= c * val;
                    if (it->second.is_zero()) v.erase(it);
                }
            }
        }
    }
    return rank;
}

}  // namespace

AslReport AlgebraContext::verify_asl(int max_check_degree) const {
    if (max_check_degree < 2)
        throw std::invalid_argument("verify_asl: max_check_degree must be >= 2");
    AslReport report;
    report.config = cfg_;
    report.max_check_degree = max_check_degree;

    if (config_poset_.size() == 0) {
        // t = 1 quotient: the algebra collapses to the base ring
        report.trivial_quotient = true;
        for (auto& cond : report.conditions) {
            cond.pass = true;
            cond.detail = "trivial quotient (empty poset)";
        }
        return report;
    }

    // (1) homogeneous generators of positive degree
    {
        int lo = config_poset_.degree(0), hi = lo;
        bool ok = true;
        for (int e = 0; e < config_poset_.size(); ++e) {
            lo = std::min(lo, config_poset_.degree(e));
            hi = std::max(hi, config_poset_.degree(e));
            if (config_poset_.degree(e) < 1) ok = false;
        }
        report.conditions[0].pass = ok;
        report.conditions[0].detail = std::to_string(config_poset_.size()) +
                                      " generators, degrees in [" + std::to_string(lo) + "," +
                                      std::to_string(hi) + "]";
    }

    // (2) the generators generate: structural; matrix-side posets must retain
    // every 1x1 pair
    {
        bool ok = true;
        std::string detail = "generators span the algebra by construction";
        if (!cfg_.on_pi_poset()) {
            for (int i = 1; i <= cfg_.m && ok; ++i)
                for (int j = 1; j <= cfg_.n && ok; ++j) {
                    int e = element_index(IndexPair{{i}, {j}});
                    if (e < 0 || !alive(e)) {
                        ok = false;
                        detail = "missing 1x1 generator X[" + std::to_string(i) + "," +
                                 std::to_string(j) + "]";
                    }
                }
        }
        report.conditions[1].pass = ok;
        report.conditions[1].detail = detail;
    }

    // (3) standard monomials are linearly independent in each degree
    {
        bool ok = true;
        std::ostringstream counts;
        std::string failure;
        for (int d = 1; d <= max_check_degree && ok; ++d) {
            auto monos = standard_monomials(d);
            int expected = static_cast<int>(monos.size());
            int rank = 0;
            try {
                if (cfg_.is_quotient()) {
                    // cosets of the surviving chains are independent iff the
                    // ambient standard monomials are free (the basis then
                    // splits along Omega) and the chains themselves are
                    // independent in the ambient algebra
                    degree_basis(pbw_degree(d));
                    std::vector<AlgebraElement> rows;
                    rows.reserve(monos.size());
                    for (const auto& m : monos) rows.push_back(realize(m));
                    rank = rank_of_rows(rows);
                } else {
                    const DegreeBasis& basis = degree_basis(pbw_degree(d));
                    rank = static_cast<int>(basis.rows.size());
                    expected = static_cast<int>(basis.monomials.size());
                }
            } catch (const BasisDependenceError& e) {
                ok = false;
                failure = e.what();
                break;
            }
            if (rank != expected) {
                ok = false;
                failure = "degree " + std::to_string(d) + ": rank " + std::to_string(rank) +
                          " != count " + std::to_string(expected);
                break;
            }
            if (d > 1) counts << ", ";
            counts << "d" << d << ":" << expected;
        }
        report.conditions[2].pass = ok;
        report.conditions[2].detail = ok ? "independent, counts " + counts.str() : failure;
    }

    // (4) straightening for every ordered incomparable pair
    {
        bool ok = true;
        int checked = 0;
        std::string detail;
        for (size_t i = 0; i < alive_.size() && ok; ++i) {
            for (size_t j = 0; j < alive_.size(); ++j) {
                const int a = alive_[i], b = alive_[j];
                if (ambient_.comparable(a, b)) continue;
                StraighteningResult r = straightening_relation(a, b);
                ++checked;
                if (!r.certified) {
                    ok = false;
                    detail = element_label(a) + "." + element_label(b) + ": " + r.failure;
                    break;
                }
            }
        }
        report.conditions[3].pass = ok;
        report.conditions[3].detail =
            ok ? std::to_string(checked) + " incomparable ordered pairs straightened" : detail;
    }

    // (5) commutation for every ordered pair
    {
        bool ok = true;
        int checked = 0;
        std::string detail;
        for (size_t i = 0; i < alive_.size() && ok; ++i) {
            for (size_t j = 0; j < alive_.size(); ++j) {
                const int a = alive_[i], b = alive_[j];
                CommutationResult r = commutation_relation(a, b);
                ++checked;
                if (!r.certified) {
                    ok = false;
                    detail = element_label(a) + "." + element_label(b) + ": " + r.failure;
                    break;
                }
            }
        }
        report.conditions[4].pass = ok;
        report.conditions[4].detail =
            ok ? std::to_string(checked) + " ordered pairs commute up to q^f" : detail;
    }

    return report;
}

// ---------------------------------------------------------------------------
// Pi-ideal operations
// ---------------------------------------------------------------------------

MembershipResult AlgebraContext::ideal_membership(const AlgebraElement& elem,
                                                  const PiIdeal& omega) const {
    if (cfg_.is_quotient())
        throw std::invalid_argument("ideal_membership: defined on the full configurations");
    if (!ambient_.is_pi_ideal(omega))
        throw std::invalid_argument("ideal_membership: input set is not a Pi-ideal");
    MembershipResult res;
    StandardCombination coords = ambient_coordinates(elem);
    for (const auto& [mono, c] : coords.terms) {
        // a standard monomial involves an element of Omega iff its first
        // (smallest) entry lies in Omega
        if (!mono.chain.empty() && omega.contains(mono.chain.front())) {
            res.inside.add(mono, c);
        } else {
            res.outside.add(mono, c);
        }
    }
    res.member = res.outside.is_zero();
    return res;
}

NormalizingSequenceReport AlgebraContext::normalizing_sequence_check(
    const PiIdeal& omega, const std::vector<int>& total_order) const {
    NormalizingSequenceReport rep;
    if (cfg_.is_quotient())
        throw std::invalid_argument("normalizing_sequence_check: defined on the full configurations");
    if (!ambient_.is_pi_ideal(omega))
        throw std::invalid_argument("normalizing_sequence_check: input set is not a Pi-ideal");
    {
        std::vector<bool> seen(static_cast<size_t>(ambient_.size()), false);
        for (int e : total_order) {
            if (e < 0 || e >= ambient_.size() || !omega.contains(e) || seen[static_cast<size_t>(e)])
                throw std::invalid_argument(
                    "normalizing_sequence_check: order is not an enumeration of Omega");
            seen[static_cast<size_t>(e)] = true;
        }
        if (static_cast<int>(total_order.size()) != omega.count())
            throw std::invalid_argument(
                "normalizing_sequence_check: order is not an enumeration of Omega");
        for (size_t i = 0; i < total_order.size(); ++i)
            for (size_t j = i + 1; j < total_order.size(); ++j)
                if (ambient_.strictly_less(total_order[j], total_order[i]))
                    throw std::invalid_argument(
                        "normalizing_sequence_check: total order does not respect the partial order");
    }

    PiIdeal prefix{std::vector<bool>(static_cast<size_t>(ambient_.size()), false)};
    for (size_t i = 0; i < total_order.size(); ++i) {
        const int w = total_order[i];
        if (!ambient_.is_pi_ideal(prefix)) {
            rep.failure = "prefix before " + element_label(w) + " is not a Pi-ideal";
            return rep;
        }
        for (int g = 0; g < ambient_.size(); ++g) {
            CommutationResult cr = commutation_relation(w, g);
            if (!cr.certified) {
                rep.failure = "commutation failed for " + element_label(w) + ", " +
                              element_label(g) + ": " + cr.failure;
                return rep;
            }
            AlgebraElement lhs =
                alg_.multiply(alg_.quantum_minor(elements_[static_cast<size_t>(w)]),
                              alg_.quantum_minor(elements_[static_cast<size_t>(g)])) -
                alg_.multiply(alg_.quantum_minor(elements_[static_cast<size_t>(g)]),
                              alg_.quantum_minor(elements_[static_cast<size_t>(w)]))
                    .scaled(LaurentPoly::q_power(cr.exponent));
            MembershipResult mem = ideal_membership(lhs, prefix);
            ++rep.checked_pairs;
            if (!mem.member) {
                rep.failure = element_label(w) + "." + element_label(g) + " - q^f " +
                              element_label(g) + "." + element_label(w) +
                              " escapes the preceding ideal";
                return rep;
            }
        }
        prefix.members[static_cast<size_t>(w)] = true;
    }
    rep.pass = true;
    return rep;
}

// ---------------------------------------------------------------------------
// Dehomogenisation identity and relation export
// ---------------------------------------------------------------------------

bool verify_dehom_plucker(const IndexPair& p, int m, int n) {
    if (m < 1 || m > n) throw std::invalid_argument("verify_dehom_plucker: need 1 <= m <= n");
    if (!p.fits(Shape{m, n})) throw std::invalid_argument("verify_dehom_plucker: pair out of shape");
    if (p.size() < 2) throw std::invalid_argument("verify_dehom_plucker: pair must have size >= 2");

    QMatrixAlgebra wide(Shape{m, n + m});
    std::vector<int> all_rows(static_cast<size_t>(m));
    std::iota(all_rows.begin(), all_rows.end(), 1);
    auto maximal_minor = [&](const IndexSet& cols) -> const AlgebraElement& {
        return wide.quantum_minor(IndexPair{all_rows, cols});
    };

    const int s = p.size();
    std::vector<int> rows_minus_last(p.rows.begin(), p.rows.end() - 1);
    AlgebraElement lhs(wide.shape());
    for (int k = 1; k <= s; ++k) {
        std::vector<int> cols_minus_k;
        for (int i = 0; i < s; ++i)
            if (i != k - 1) cols_minus_k.push_back(p.cols[static_cast<size_t>(i)]);
        IndexSet left = delta_embedding_image(IndexPair{rows_minus_last, cols_minus_k}, m, n);
        IndexSet right = delta_embedding_image(
            IndexPair{{p.rows.back()}, {p.cols[static_cast<size_t>(k - 1)]}}, m, n);
        BigInt sign = ((s - k) % 2 == 0) ? 1 : -1;
        lhs += wide.multiply(maximal_minor(left), maximal_minor(right))
                   .scaled(LaurentPoly(sign, s - k));
    }
    lhs = lhs.scaled(LaurentPoly::q_power(1));

    IndexSet top;
    for (int v = n + 1; v <= n + m; ++v) top.push_back(v);
    AlgebraElement rhs =
        wide.multiply(maximal_minor(delta_embedding_image(p, m, n)), maximal_minor(top));
    return lhs == rhs;
}

nlohmann::json export_relation_table(const AlgebraContext& ctx, int max_degree) {
    nlohmann::json table = nlohmann::json::array();
    const auto& alive = ctx.alive_elements();
    const Poset& poset = ctx.ambient_poset();
    for (size_t i = 0; i < alive.size(); ++i) {
        for (size_t j = i + 1; j < alive.size(); ++j) {
            const int a = alive[i], b = alive[j];
            if (poset.comparable(a, b)) continue;
            if (poset.degree(a) + poset.degree(b) > max_degree) continue;
            StraighteningResult r = ctx.straightening_relation(a, b);
            table.push_back({{"lhs", {ctx.element_label(a), ctx.element_label(b)}},
                             {"f", nullptr},
                             {"rhs", ctx.combination_to_json(r.rhs)},
                             {"certified", r.certified}});
        }
    }
    for (int a : alive) {
        for (int b : alive) {
            if (poset.degree(a) + poset.degree(b) > max_degree) continue;
            CommutationResult r = ctx.commutation_relation(a, b);
            table.push_back({{"lhs", {ctx.element_label(a), ctx.element_label(b)}},
                             {"f", r.exponent},
                             {"rhs", ctx.combination_to_json(r.lower_terms)},
                             {"certified", r.certified}});
        }
    }
    return table;
}

}  // namespace qasl
