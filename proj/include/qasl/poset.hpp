/**
 * @file poset.hpp
 * @brief Finite posets with explicit order matrices: the index-set poset
 *        Pi_{m,n}, the index-pair poset Delta_{m,n}, Pi-ideals, lattice
 *        checks, and multichain generating functions.
 */
#ifndef QASL_POSET_HPP
#define QASL_POSET_HPP

#include "qasl/laurent.hpp"
#include "qasl/qmatrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qasl {

/// Strictly increasing subset of [1, n]; the m-subsets form Pi_{m,n}.
using IndexSet = std::vector<int>;

std::string index_set_label(const IndexSet& s);  // "[1,4]"

/// Downward closed subset of a poset, stored as a membership mask.
struct PiIdeal {
    std::vector<bool> members;
    bool contains(int e) const { return members[static_cast<size_t>(e)]; }
    int count() const;
};

struct DistributivityResult {
    bool is_lattice = false;
    bool is_distributive = false;
    /// On failure: the offending pair (meet/join gap) or triple (distributivity).
    std::optional<std::array<int, 3>> witness;
    std::string detail;
    bool ok() const { return is_lattice && is_distributive; }
};

/// A finite poset given by labels, positive degrees and a full <= matrix.
/// Order axioms are checked exhaustively on construction.
class Poset {
public:
    Poset() = default;  // the empty poset
    Poset(std::vector<std::string> labels, std::vector<int> degrees,
          std::vector<std::vector<bool>> leq);

    int size() const { return static_cast<int>(labels_.size()); }
    bool leq(int a, int b) const { return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    bool strictly_less(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
    const std::string& label(int e) const { return labels_[static_cast<size_t>(e)]; }
    int degree(int e) const { return degrees_[static_cast<size_t>(e)]; }

    /// Length of the longest chain ending inside `subset` (whole poset when
    /// absent); chains may pass through elements outside the subset. The
    /// empty set has rank 0.
    int rank() const;
    int rank(const std::vector<int>& subset) const;

    std::vector<std::pair<int, int>> cover_relations() const;

    std::optional<int> meet(int a, int b) const;  // exhaustive bound search
    std::optional<int> join(int a, int b) const;
    DistributivityResult check_distributive_lattice() const;

    PiIdeal ideal_generated(const std::vector<int>& generators) const;
    PiIdeal ideal_cogenerated(const std::vector<int>& generators) const;
    bool is_pi_ideal(const PiIdeal& ideal) const;

    /// Indices ordered compatibly with the partial order.
    std::vector<int> linear_extension() const;

    /// Degree-weighted multichain generating function: the sum over all
    /// multichains of t^(total degree), as an exact rational function.
    RationalFunc multichain_genfunc() const;

    /// Sub-poset on `keep` (construction order preserved), inheriting labels,
    /// degrees and order.
    Poset restrict(const std::vector<int>& keep) const;

    nlohmann::json to_json() const;
    std::string to_dot() const;

private:
    std::vector<std::string> labels_;
    std::vector<int> degrees_;
    std::vector<std::vector<bool>> leq_;
};

/// Pi_{m,n}: all m-subsets of [1, n] under the componentwise order, every
/// element of degree 1. Elements are listed in lexicographic order, which is
/// a linear extension.
struct PiPoset {
    int m = 0, n = 0;
    std::vector<IndexSet> elements;
    Poset order;
    int index_of(const IndexSet& s) const;  // -1 if absent
};
PiPoset build_pi_poset(int m, int n);

/// Componentwise order on equal-size index sets.
bool index_set_leq(const IndexSet& a, const IndexSet& b);

/// The standard order on index pairs: (I,J) <= (K,L) iff |I| >= |K| and the
/// first |K| entries of I (resp. J) are componentwise <= those of K (resp. L).
bool index_pair_leq(const IndexPair& a, const IndexPair& b);

/// Index pairs of size between min_size and max_size, ordered by the standard
/// order; degree(p) = p.size(). Elements are listed by descending size, then
/// lexicographically, which is a linear extension.
struct DeltaPoset {
    int m = 0, n = 0;
    int min_size = 1, max_size = 0;
    std::vector<IndexPair> elements;
    Poset order;
    int index_of(const IndexPair& p) const;  // -1 if absent
};
/// All of Delta_{m,n} when min_size == 1.
DeltaPoset build_delta_poset(int m, int n, int min_size);
DeltaPoset build_delta_poset_range(int m, int n, int min_size, int max_size);

/// K_{(I,J)}: the index set in Pi_{m,n+m} obtained by ordering
/// {j_1..j_t} ∪ {n+1..n+m} \ {n+m+1-i_1 .. n+m+1-i_t}.
IndexSet delta_embedding_image(const IndexPair& p, int m, int n);

/// The order isomorphism Delta_{m,n} -> Pi_{m,n+m} \ {top}, materialized.
struct DeltaEmbedding {
    int m = 0, n = 0;
    std::vector<std::pair<IndexPair, IndexSet>> graph;
};
DeltaEmbedding delta_embedding(int m, int n);

/// All strictly increasing k-subsets of [1, n], lexicographic.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

}  // namespace qasl

#endif
