#include "qasl/poset.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qasl {

std::string index_set_label(const IndexSet& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << "]";
    return os.str();
}

int PiIdeal::count() const {
    int c = 0;
    for (bool b : members) c += b ? 1 : 0;
    return c;
}

// ---------------------------------------------------------------------------
// Poset
// ---------------------------------------------------------------------------

Poset::Poset(std::vector<std::string> labels, std::vector<int> degrees,
             std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), degrees_(std::move(degrees)), leq_(std::move(leq)) {
    const size_t n = labels_.size();
    if (degrees_.size() != n || leq_.size() != n)
        throw std::invalid_argument("Poset: inconsistent sizes");
    for (const auto& row : leq_)
        if (row.size() != n) throw std::invalid_argument("Poset: leq matrix not square");
    for (int d : degrees_)
        if (d < 1) throw std::invalid_argument("Poset: degrees must be positive");
    for (size_t a = 0; a < n; ++a) {
        if (!leq_[a][a]) throw std::invalid_argument("Poset: relation not reflexive");
        for (size_t b = 0; b < n; ++b) {
            if (a != b && leq_[a][b] && leq_[b][a])
                throw std::invalid_argument("Poset: relation not antisymmetric");
            if (!leq_[a][b]) continue;
            for (size_t c = 0; c < n; ++c)
                if (leq_[b][c] && !leq_[a][c])
                    throw std::invalid_argument("Poset: relation not transitive");
        }
    }
}

std::vector<int> Poset::linear_extension() const {
    const int n = size();
    std::vector<int> below(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (strictly_less(b, a)) ++below[static_cast<size_t>(a)];
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return below[static_cast<size_t>(a)] < below[static_cast<size_t>(b)];
    });
    return order;
}

int Poset::rank() const {
    std::vector<int> all(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) all[static_cast<size_t>(i)] = i;
    return rank(all);
}

int Poset::rank(const std::vector<int>& subset) const {
    const int n = size();
    std::vector<int> rk(static_cast<size_t>(n), 1);
    for (int a : linear_extension())
        for (int b = 0; b < n; ++b)
            if (strictly_less(b, a))
                rk[static_cast<size_t>(a)] = std::max(rk[static_cast<size_t>(a)], rk[static_cast<size_t>(b)] + 1);
    int best = 0;
    for (int e : subset) best = std::max(best, rk[static_cast<size_t>(e)]);
    return best;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!strictly_less(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < n && direct; ++c)
                if (strictly_less(a, c) && strictly_less(c, b)) direct = false;
            if (direct) covers.emplace_back(a, b);
        }
    return covers;
}

std::optional<int> Poset::meet(int a, int b) const {
    std::vector<int> lower;
    for (int c = 0; c < size(); ++c)
        if (leq(c, a) && leq(c, b)) lower.push_back(c);
    for (int g : lower) {
        bool greatest = true;
        for (int c : lower)
            if (!leq(c, g)) {
                greatest = false;
                break;
            }
        if (greatest) return g;
    }
    return std::nullopt;
}

std::optional<int> Poset::join(int a, int b) const {
    std::vector<int> upper;
    for (int c = 0; c < size(); ++c)
        if (leq(a, c) && leq(b, c)) upper.push_back(c);
    for (int g : upper) {
        bool least = true;
        for (int c : upper)
            if (!leq(g, c)) {
                least = false;
                break;
            }
        if (least) return g;
    }
    return std::nullopt;
}

DistributivityResult Poset::check_distributive_lattice() const {
    DistributivityResult res;
    const int n = size();
    std::vector<std::vector<int>> meets(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::vector<int>> joins = meets;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            auto m = meet(a, b);
            auto j = join(a, b);
            if (!m) {
                res.witness = {a, b, -1};
                res.detail = "no meet for " + label(a) + ", " + label(b);
                return res;
            }
            if (!j) {
                res.witness = {a, b, -1};
                res.detail = "no join for " + label(a) + ", " + label(b);
                return res;
            }
            meets[static_cast<size_t>(a)][static_cast<size_t>(b)] = *m;
            joins[static_cast<size_t>(a)][static_cast<size_t>(b)] = *j;
        }
    res.is_lattice = true;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int bc = joins[static_cast<size_t>(b)][static_cast<size_t>(c)];
                int lhs = meets[static_cast<size_t>(a)][static_cast<size_t>(bc)];
                int ab = meets[static_cast<size_t>(a)][static_cast<size_t>(b)];
                int ac = meets[static_cast<size_t>(a)][static_cast<size_t>(c)];
                int rhs = joins[static_cast<size_t>(ab)][static_cast<size_t>(ac)];
                if (lhs != rhs) {
                    res.witness = {a, b, c};
                    res.detail = "meet does not distribute over join at " + label(a) + ", " + label(b) +
                                 ", " + label(c);
                    return res;
                }
            }
    res.is_distributive = true;
    res.detail = "distributive lattice";
    return res;
}

PiIdeal Poset::ideal_generated(const std::vector<int>& generators) const {
    PiIdeal ideal{std::vector<bool>(static_cast<size_t>(size()), false)};
    for (int g : generators)
        for (int e = 0; e < size(); ++e)
            if (leq(e, g)) ideal.members[static_cast<size_t>(e)] = true;
    return ideal;
}

PiIdeal Poset::ideal_cogenerated(const std::vector<int>& generators) const {
    PiIdeal ideal{std::vector<bool>(static_cast<size_t>(size()), true)};
    for (int e = 0; e < size(); ++e)
        for (int g : generators)
            if (leq(g, e)) {
                ideal.members[static_cast<size_t>(e)] = false;
                break;
            }
    return ideal;
}

bool Poset::is_pi_ideal(const PiIdeal& ideal) const {
    if (static_cast<int>(ideal.members.size()) != size()) return false;
    for (int e = 0; e < size(); ++e) {
        if (!ideal.contains(e)) continue;
        for (int f = 0; f < size(); ++f)
            if (leq(f, e) && !ideal.contains(f)) return false;
    }
    return true;
}

RationalFunc Poset::multichain_genfunc() const {
    // g[p] generates multichains with maximum p: such a multichain is a
    // (possibly empty) multichain strictly below p followed by >= 1 copies of
    // p, hence g . (1 - t^deg) = t^deg . (1 + sum_{p' < p} g[p']).
    const int n = size();
    std::vector<RationalFunc> g(static_cast<size_t>(n));
    for (int p : linear_extension()) {
        RationalFunc s(BigInt(1));
        for (int p2 = 0; p2 < n; ++p2)
            if (strictly_less(p2, p)) s += g[static_cast<size_t>(p2)];
        const int d = degree(p);
        DensePoly one_minus_td = DensePoly(BigInt(1)) - DensePoly::monomial(1, d);
        g[static_cast<size_t>(p)] = RationalFunc(DensePoly::monomial(1, d), one_minus_td) * s;
    }
    RationalFunc total(BigInt(1));
    for (int p = 0; p < n; ++p) total += g[static_cast<size_t>(p)];
    return total;
}

Poset Poset::restrict(const std::vector<int>& keep) const {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (int e : keep) {
        labels.push_back(label(e));
        degrees.push_back(degree(e));
    }
    const size_t k = keep.size();
    std::vector<std::vector<bool>> sub(k, std::vector<bool>(k, false));
    for (size_t a = 0; a < k; ++a)
        for (size_t b = 0; b < k; ++b)
            sub[a][b] = leq(keep[a], keep[b]);
    return Poset(std::move(labels), std::move(degrees), std::move(sub));
}

nlohmann::json Poset::to_json() const {
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (int e = 0; e < size(); ++e) j["elements"].push_back(label(e));
    j["cover_relations"] = nlohmann::json::array();
    for (auto [a, b] : cover_relations()) j["cover_relations"].push_back({label(a), label(b)});
    j["degrees"] = nlohmann::json::object();
    for (int e = 0; e < size(); ++e) j["degrees"][label(e)] = degree(e);
    return j;
}

std::string Poset::to_dot() const {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int e = 0; e < size(); ++e) os << "  n" << e << " [label=\"" << label(e) << "\"];\n";
    for (auto [a, b] : cover_relations()) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Concrete posets
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

bool index_set_leq(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

PiPoset build_pi_poset(int m, int n) {
    if (m < 1 || m > n)
        throw std::invalid_argument("build_pi_poset: need 1 <= m <= n (reduce via transpose)");
    PiPoset p;
    p.m = m;
    p.n = n;
    p.elements = subsets_of_size(n, m);
    const size_t cnt = p.elements.size();
    std::vector<std::string> labels;
    for (const auto& s : p.elements) labels.push_back(index_set_label(s));
    std::vector<std::vector<bool>> leq(cnt, std::vector<bool>(cnt, false));
    for (size_t a = 0; a < cnt; ++a)
        for (size_t b = 0; b < cnt; ++b) leq[a][b] = index_set_leq(p.elements[a], p.elements[b]);
    p.order = Poset(std::move(labels), std::vector<int>(cnt, 1), std::move(leq));
    return p;
}

int PiPoset::index_of(const IndexSet& s) const {
    auto it = std::find(elements.begin(), elements.end(), s);
    return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

bool index_pair_leq(const IndexPair& a, const IndexPair& b) {
    if (a.size() < b.size()) return false;
    for (int s = 0; s < b.size(); ++s) {
        if (a.rows[static_cast<size_t>(s)] > b.rows[static_cast<size_t>(s)]) return false;
        if (a.cols[static_cast<size_t>(s)] > b.cols[static_cast<size_t>(s)]) return false;
    }
    return true;
}

DeltaPoset build_delta_poset_range(int m, int n, int min_size, int max_size) {
    if (m < 1 || m > n) throw std::invalid_argument("build_delta_poset: need 1 <= m <= n");
    if (min_size < 1 || min_size > max_size || max_size > m)
        throw std::invalid_argument("build_delta_poset: need 1 <= min_size <= max_size <= m");
    DeltaPoset d;
    d.m = m;
    d.n = n;
    d.min_size = min_size;
    d.max_size = max_size;
    // descending size keeps construction order a linear extension
    for (int t = max_size; t >= min_size; --t)
        for (const auto& rows : subsets_of_size(m, t))
            for (const auto& cols : subsets_of_size(n, t)) d.elements.push_back(IndexPair{rows, cols});
    const size_t cnt = d.elements.size();
    std::vector<std::string> labels;
    std::vector<int> degrees;
    for (const auto& p : d.elements) {
        labels.push_back(p.label());
        degrees.push_back(p.size());
    }
    std::vector<std::vector<bool>> leq(cnt, std::vector<bool>(cnt, false));
    for (size_t a = 0; a < cnt; ++a)
        for (size_t b = 0; b < cnt; ++b) leq[a][b] = index_pair_leq(d.elements[a], d.elements[b]);
    d.order = Poset(std::move(labels), std::move(degrees), std::move(leq));
    return d;
}

DeltaPoset build_delta_poset(int m, int n, int min_size) {
    return build_delta_poset_range(m, n, min_size, m);
}

int DeltaPoset::index_of(const IndexPair& p) const {
    auto it = std::find(elements.begin(), elements.end(), p);
    return it == elements.end() ? -1 : static_cast<int>(it - elements.begin());
}

IndexSet delta_embedding_image(const IndexPair& p, int m, int n) {
    std::set<int> k(p.cols.begin(), p.cols.end());
    std::set<int> removed;
    for (int i : p.rows) removed.insert(n + m + 1 - i);
    for (int v = n + 1; v <= n + m; ++v)
        if (!removed.count(v)) k.insert(v);
    return IndexSet(k.begin(), k.end());
}

DeltaEmbedding delta_embedding(int m, int n) {
    if (m < 1 || m > n) throw std::invalid_argument("delta_embedding: need 1 <= m <= n");
    DeltaEmbedding e;
    e.m = m;
    e.n = n;
    for (const auto& p : build_delta_poset(m, n, 1).elements)
        e.graph.emplace_back(p, delta_embedding_image(p, m, n));
    return e;
}

}  // namespace qasl
