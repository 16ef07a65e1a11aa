/**
 * @file qmatrix.hpp
 * @brief The quantum matrix algebra O_q(M_{m,n}) as a rewriting system.
 *
 * Elements are exact linear combinations of PBW-ordered words in the
 * generators X_{ij} with coefficients in Z[q^{±1}]. Words are kept
 * non-decreasing in the row-major order on (row, col); normal_form rewrites
 * arbitrary words into that basis using the four defining relations.
 */
#ifndef QASL_QMATRIX_HPP
#define QASL_QMATRIX_HPP

#include "qasl/laurent.hpp"

#include <compare>
#include <map>
#include <vector>

namespace qasl {

struct Shape {
    int rows = 0;
    int cols = 0;
    bool operator==(const Shape&) const = default;
};

/// One generator X_{row,col}, 1-based.
struct Generator {
    int row = 0;
    int col = 0;
    auto operator<=>(const Generator&) const = default;
};

using Word = std::vector<Generator>;

/// An index pair (I, J): equal-cardinality row and column subsets, strictly
/// increasing. Size-t pairs label the t x t quantum minors.
struct IndexPair {
    std::vector<int> rows;
    std::vector<int> cols;

    int size() const { return static_cast<int>(rows.size()); }
    bool well_formed() const;           // sizes match, >= 1, strictly increasing
    bool fits(const Shape& s) const;    // entries within [1,m] x [1,n]
    std::string label() const;          // "[1,2|1,3]"
    auto operator<=>(const IndexPair&) const = default;
};

/// Finite Z[q^{±1}]-combination of PBW monomials of one shape.
class AlgebraElement {
public:
    explicit AlgebraElement(Shape shape) : shape_(shape) {}
    static AlgebraElement unit(Shape shape);

    const Shape& shape() const { return shape_; }
    const std::map<Word, LaurentPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const LaurentPoly& c);
    const LaurentPoly& coeff(const Word& w) const;  // zero() if absent

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement operator-() const;
    AlgebraElement scaled(const LaurentPoly& c) const;
    bool operator==(const AlgebraElement& o) const = default;

    /// Word length shared by every monomial, if the element is homogeneous.
    std::optional<int> homogeneous_degree() const;

    /// Termwise evaluation at q = value; words keep their PBW order. Used for
    /// classical-limit checks.
    std::map<Word, Rational> specialize(const Rational& value) const;

    nlohmann::json to_json() const;
    std::string to_string() const;

private:
    Shape shape_;
    std::map<Word, LaurentPoly> terms_;
};

/// Rewriting engine for one shape, with a minor cache. All operations are
/// pure; elements are immutable values.
class QMatrixAlgebra {
public:
    explicit QMatrixAlgebra(Shape shape);

    const Shape& shape() const { return shape_; }

    AlgebraElement one() const { return AlgebraElement::unit(shape_); }
    AlgebraElement generator(int row, int col) const;

    /// Rewrites an arbitrary word into the PBW basis.
    AlgebraElement normal_form(const Word& w) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

    /// Quantum minor [I|J] = sum over permutations of (-q)^{l(sigma)} X... ;
    /// the permutation words are already PBW-ordered. Cached per pair.
    const AlgebraElement& quantum_minor(const IndexPair& p) const;

    /// Last-row Laplace expansion of [I|J]; must agree with quantum_minor.
    AlgebraElement laplace_expand(const IndexPair& p) const;

private:
    void check_in_shape(const Word& w) const;
    Shape shape_;
    mutable std::map<IndexPair, AlgebraElement> minor_cache_;
};

/// The algebra map X_{ij} -> X_{ji} into the transposed shape.
AlgebraElement transpose(const AlgebraElement& a);

}  // namespace qasl

#endif
