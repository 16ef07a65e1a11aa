/**
 * @file straighten.hpp
 * @brief Standard-monomial bases, exact coordinate extraction, straightening
 *        and commutation relations, the five-condition straightening-law
 *        verifier, Pi-ideal machinery and the dehomogenisation identity.
 *
 * Four algebra configurations share one engine. Grassmannian and matrix
 * configurations are "full": their poset elements realize to quantum minors
 * inside O_q(M_{m,n}) and the standard monomials form a basis. Schubert and
 * determinantal configurations are quotients of these by the ideal of a
 * Pi-ideal Omega; their coordinates are full coordinates with the
 * Omega-supported chains projected away.
 */
#ifndef QASL_STRAIGHTEN_HPP
#define QASL_STRAIGHTEN_HPP

#include "qasl/poset.hpp"
#include "qasl/qmatrix.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qasl {

enum class AlgebraKind { Grassmannian, Matrix, Schubert, DetRing };

std::string kind_name(AlgebraKind k);

struct AlgebraConfig {
    AlgebraKind kind = AlgebraKind::Grassmannian;
    int m = 0;
    int n = 0;
    int t = 0;         // determinantal parameter, 1 <= t <= m
    IndexSet gamma;    // Schubert parameter, an element of Pi_{m,n}

    static AlgebraConfig grassmannian(int m, int n);
    static AlgebraConfig matrix(int m, int n);
    static AlgebraConfig schubert(int m, int n, IndexSet gamma);
    static AlgebraConfig detring(int m, int n, int t);

    void validate() const;  // throws std::invalid_argument
    bool is_quotient() const { return kind == AlgebraKind::Schubert || kind == AlgebraKind::DetRing; }
    /// Grassmannian-side configs live on Pi (maximal minors, degree 1);
    /// matrix-side configs live on Delta (all minors, degree = size).
    bool on_pi_poset() const { return kind == AlgebraKind::Grassmannian || kind == AlgebraKind::Schubert; }
    std::string label() const;
    nlohmann::json to_json() const;
};

/// A chain e_1 <= ... <= e_s of poset element indices (empty = the monomial 1).
struct StandardMonomial {
    std::vector<int> chain;
    int length() const { return static_cast<int>(chain.size()); }
    auto operator<=>(const StandardMonomial&) const = default;
};

/// Linear combination of standard monomials over Z[q^{±1}].
struct StandardCombination {
    std::map<StandardMonomial, LaurentPoly> terms;
    bool is_zero() const { return terms.empty(); }
    void add(const StandardMonomial& m, const LaurentPoly& c);
};

/// Thrown when an element does not lie in the span of the configured basis
/// (wrong degree, wrong subalgebra, or an internal bug).
struct OutsideSpanError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Thrown when a solved coordinate fails to lie in Z[q^{±1}]; this would
/// falsify basis integrality and must abort loudly.
struct IntegralityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Thrown when the realized standard monomials of some degree turn out to be
/// linearly dependent (never happens unless the engine is broken).
struct BasisDependenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StraighteningResult {
    int lhs_a = -1, lhs_b = -1;
    StandardCombination rhs;
    bool certified = false;
    std::string failure;  // empty when certified
};

struct CommutationResult {
    int lhs_a = -1, lhs_b = -1;
    int exponent = 0;  // f in a.b - q^f b.a = lower terms
    StandardCombination lower_terms;
    bool certified = false;
    std::string failure;
};

struct ConditionVerdict {
    bool pass = false;
    std::string detail;
};

struct AslReport {
    AlgebraConfig config;
    int max_check_degree = 0;
    bool trivial_quotient = false;
    ConditionVerdict conditions[5];
    bool overall() const;
    nlohmann::json to_json() const;
};

struct MembershipResult {
    bool member = false;
    StandardCombination inside;   // chains starting in Omega
    StandardCombination outside;  // the complement
};

struct NormalizingSequenceReport {
    bool pass = false;
    int checked_pairs = 0;
    std::string failure;
};

/// One algebra configuration with its ambient algebra, poset data, and the
/// cached exact linear solver per degree. Logically immutable: all mutable
/// state is memoization.
class AlgebraContext {
public:
    explicit AlgebraContext(AlgebraConfig cfg);
    ~AlgebraContext();
    AlgebraContext(AlgebraContext&&) noexcept;

    const AlgebraConfig& config() const { return cfg_; }
    const QMatrixAlgebra& algebra() const { return alg_; }

    /// Elements of the ambient poset (Pi or Delta), uniformly as index pairs.
    const std::vector<IndexPair>& elements() const { return elements_; }
    const Poset& ambient_poset() const { return ambient_; }
    /// Omega: the Pi-ideal quotiented away (all-false for full configs).
    const PiIdeal& omega() const { return omega_; }
    bool alive(int e) const { return !omega_.contains(e); }
    const std::vector<int>& alive_elements() const { return alive_; }
    /// The configured algebra's own poset: ambient restricted to non-Omega.
    const Poset& config_poset() const { return config_poset_; }

    int element_index(const IndexPair& p) const;
    std::string element_label(int e) const { return ambient_.label(e); }

    /// PBW word length of a configured degree-d element.
    int pbw_degree(int config_degree) const;

    /// All standard monomials of the configured algebra in one degree,
    /// deterministically ordered.
    std::vector<StandardMonomial> standard_monomials(int degree) const;
    /// Same, over the ambient (un-quotiented) poset.
    std::vector<StandardMonomial> ambient_standard_monomials(int degree) const;

    /// Product of the chain's quantum minors, in PBW normal form.
    AlgebraElement realize(const StandardMonomial& mono) const;
    AlgebraElement realize_product(const std::vector<int>& element_seq) const;

    /// Exact coordinates in the ambient standard-monomial basis. Throws
    /// OutsideSpanError / IntegralityError.
    StandardCombination ambient_coordinates(const AlgebraElement& elem) const;
    /// Configured coordinates: ambient coordinates with Omega-chains dropped
    /// (identity for full configs). `expect_degree`, when >= 0, validates the
    /// element's homogeneous degree against the configured grading.
    StandardCombination coordinates(const AlgebraElement& elem, int expect_degree = -1) const;

    /// Is the element expressible in the ambient basis at all? (Used by span
    /// tests; false means the linear system is inconsistent.)
    bool in_ambient_span(const AlgebraElement& elem) const;

    StraighteningResult straightening_relation(int a, int b) const;  // pre: incomparable
    CommutationResult commutation_relation(int a, int b) const;

    AslReport verify_asl(int max_check_degree) const;

    MembershipResult ideal_membership(const AlgebraElement& elem, const PiIdeal& omega) const;

    NormalizingSequenceReport normalizing_sequence_check(const PiIdeal& omega,
                                                         const std::vector<int>& total_order) const;

    std::string chain_label(const StandardMonomial& mono) const;
    nlohmann::json combination_to_json(const StandardCombination& c) const;

private:
    struct DegreeBasis;
    const DegreeBasis& degree_basis(int pbw_degree) const;
    void enumerate_chains(int degree, bool ambient_only, std::vector<StandardMonomial>& out) const;

    AlgebraConfig cfg_;
    QMatrixAlgebra alg_;
    std::vector<IndexPair> elements_;
    Poset ambient_;
    PiIdeal omega_;
    std::vector<int> alive_;
    Poset config_poset_;
    mutable std::map<int, std::unique_ptr<DegreeBasis>> basis_cache_;
};

/// The quantum Pluecker identity behind the dehomogenisation map, checked as
/// an exact PBW identity among maximal minors of the widened shape (m, n+m):
///   q . sum_k (-q)^{t+1-k} [K_(I',J_k)][K_(i_last,j_k)] = [K_(I,J)][n+1..n+m]
bool verify_dehom_plucker(const IndexPair& p, int m, int n);

/// One straightening record per incomparable pair and one commutation record
/// per ordered pair (degree sum capped by max_degree), as deterministic JSON.
nlohmann::json export_relation_table(const AlgebraContext& ctx, int max_degree);

}  // namespace qasl

#endif
