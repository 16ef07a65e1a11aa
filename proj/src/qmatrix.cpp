#include "qasl/qmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qasl {

// ---------------------------------------------------------------------------
// IndexPair
// ---------------------------------------------------------------------------

bool IndexPair::well_formed() const {
    if (rows.empty() || rows.size() != cols.size()) return false;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i - 1] >= rows[i]) return false;
    for (size_t i = 1; i < cols.size(); ++i)
        if (cols[i - 1] >= cols[i]) return false;
    return true;
}

bool IndexPair::fits(const Shape& s) const {
    if (!well_formed()) return false;
    return rows.front() >= 1 && rows.back() <= s.rows && cols.front() >= 1 && cols.back() <= s.cols;
}

std::string IndexPair::label() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << rows[i];
    }
    os << "|";
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ",";
        os << cols[i];
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// AlgebraElement
// ---------------------------------------------------------------------------

AlgebraElement AlgebraElement::unit(Shape shape) {
    AlgebraElement e(shape);
    e.terms_.emplace(Word{}, LaurentPoly::one());
    return e;
}

void AlgebraElement::add_term(const Word& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const LaurentPoly& AlgebraElement::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("AlgebraElement: shape mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (!(shape_ == o.shape_)) throw std::invalid_argument("AlgebraElement: shape mismatch");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(shape_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const LaurentPoly& c) const {
    AlgebraElement r(shape_);
    if (c.is_zero()) return r;
    for (const auto& [w, coeff] : terms_) r.add_term(w, coeff * c);
    return r;
}

std::optional<int> AlgebraElement::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [w, c] : terms_) {
        int len = static_cast<int>(w.size());
        if (!deg) {
            deg = len;
        } else if (*deg != len) {
            return std::nullopt;
        }
    }
    return deg;
}

std::map<Word, Rational> AlgebraElement::specialize(const Rational& value) const {
    std::map<Word, Rational> out;
    for (const auto& [w, c] : terms_) {
        Rational v = c.specialize(value);
        if (v != 0) out.emplace(w, v);
    }
    return out;
}

nlohmann::json AlgebraElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : terms_) {
        nlohmann::json word = nlohmann::json::array();
        for (const auto& g : w) word.push_back({g.row, g.col});
        arr.push_back({{"word", word}, {"coeff", c.to_json()}});
    }
    return arr;
}

std::string AlgebraElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (const auto& g : w) os << "*X[" << g.row << "," << g.col << "]";
        if (w.empty()) os << "*1";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// QMatrixAlgebra
// ---------------------------------------------------------------------------

QMatrixAlgebra::QMatrixAlgebra(Shape shape) : shape_(shape) {
    if (shape.rows < 1 || shape.cols < 1)
        throw std::invalid_argument("QMatrixAlgebra: shape must be positive");
}

void QMatrixAlgebra::check_in_shape(const Word& w) const {
    for (const auto& g : w)
        if (g.row < 1 || g.row > shape_.rows || g.col < 1 || g.col > shape_.cols)
            throw std::invalid_argument("generator out of shape");
}

AlgebraElement QMatrixAlgebra::generator(int row, int col) const {
    Word w{Generator{row, col}};
    check_in_shape(w);
    AlgebraElement e(shape_);
    e.add_term(w, LaurentPoly::one());
    return e;
}

AlgebraElement QMatrixAlgebra::normal_form(const Word& input) const {
    check_in_shape(input);
    // Worklist rewriting at the first descent. Each rewrite strictly
    // decreases (row inversions, column inversions within equal rows)
    // lexicographically, so this terminates.
    AlgebraElement result(shape_);
    std::vector<std::pair<LaurentPoly, Word>> work;
    work.emplace_back(LaurentPoly::one(), input);
    const LaurentPoly qdiff = LaurentPoly::q_power(1) - LaurentPoly::q_power(-1);
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        size_t k = 0;
        while (k + 1 < w.size() && !(w[k + 1] < w[k])) ++k;
        if (w.size() < 2 || k + 1 == w.size()) {
            result.add_term(w, c);
            continue;
        }
        const Generator hi = w[k];  // lexicographically larger, on the left
        const Generator lo = w[k + 1];
        Word swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        if (hi.row == lo.row || hi.col == lo.col) {
            // X_{ij} X_{il} = q X_{il} X_{ij} for j < l (and the column
            // analogue): moving the smaller generator left costs q^{-1}
            work.emplace_back(c * LaurentPoly::q_power(-1), std::move(swapped));
        } else if (hi.col < lo.col) {
            // antidiagonal pair commutes
            work.emplace_back(c, std::move(swapped));
        } else {
            // hi strictly south-east of lo:
            // X_{RC} X_{rc} = X_{rc} X_{RC} - (q - q^{-1}) X_{rC} X_{Rc}
            work.emplace_back(c, std::move(swapped));
            Word corr = w;
            corr[k] = Generator{lo.row, hi.col};
            corr[k + 1] = Generator{hi.row, lo.col};
            work.emplace_back(-(c * qdiff), std::move(corr));
        }
    }
    return result;
}

AlgebraElement QMatrixAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    if (!(a.shape() == shape_) || !(b.shape() == shape_))
        throw std::invalid_argument("multiply: shape mismatch");
    AlgebraElement r(shape_);
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r += normal_form(w).scaled(ca * cb);
        }
    }
    return r;
}

const AlgebraElement& QMatrixAlgebra::quantum_minor(const IndexPair& p) const {
    auto it = minor_cache_.find(p);
    if (it != minor_cache_.end()) return it->second;
    if (!p.fits(shape_)) throw std::invalid_argument("quantum_minor: index pair out of shape");

    const int t = p.size();
    AlgebraElement m(shape_);
    std::vector<int> perm(static_cast<size_t>(t));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
        Word w;
        w.reserve(static_cast<size_t>(t));
        for (int i = 0; i < t; ++i)
            w.push_back(Generator{p.rows[static_cast<size_t>(i)],
                                  p.cols[static_cast<size_t>(perm[static_cast<size_t>(i)])]});
        // rows strictly increase, so the word is already PBW ordered
        BigInt sign = (inversions % 2 == 0) ? 1 : -1;
        m.add_term(w, LaurentPoly(sign, inversions));
    } while (std::next_permutation(perm.begin(), perm.end()));

    return minor_cache_.emplace(p, std::move(m)).first->second;
}

AlgebraElement QMatrixAlgebra::laplace_expand(const IndexPair& p) const {
    if (!p.fits(shape_)) throw std::invalid_argument("laplace_expand: index pair out of shape");
    const int s = p.size();
    if (s < 2) throw std::invalid_argument("laplace_expand: pair must have size >= 2");

    std::vector<int> rows_minus_last(p.rows.begin(), p.rows.end() - 1);
    AlgebraElement sum(shape_);
    for (int k = 1; k <= s; ++k) {
        std::vector<int> cols_minus_k;
        for (int i = 0; i < s; ++i)
            if (i != k - 1) cols_minus_k.push_back(p.cols[static_cast<size_t>(i)]);
        const AlgebraElement& sub = quantum_minor(IndexPair{rows_minus_last, cols_minus_k});
        AlgebraElement last = generator(p.rows.back(), p.cols[static_cast<size_t>(k - 1)]);
        BigInt sign = ((s - k) % 2 == 0) ? 1 : -1;
        sum += multiply(sub, last).scaled(LaurentPoly(sign, s - k));
    }
    return sum;
}

AlgebraElement transpose(const AlgebraElement& a) {
    Shape flipped{a.shape().cols, a.shape().rows};
    QMatrixAlgebra target(flipped);
    AlgebraElement r(flipped);
    for (const auto& [w, c] : a.terms()) {
        Word t;
        t.reserve(w.size());
        for (const auto& g : w) t.push_back(Generator{g.col, g.row});
        r += target.normal_form(t).scaled(c);
    }
    return r;
}

}  // namespace qasl
