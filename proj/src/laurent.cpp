#include "qasl/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qasl {

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(const BigInt& constant) {
    set(0, constant);
}

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly::LaurentPoly(const BigInt& coeff, int exponent) {
    set(exponent, coeff);
}

LaurentPoly LaurentPoly::q_power(int k) {
    return LaurentPoly(BigInt(1), k);
}

const LaurentPoly& LaurentPoly::zero() {
    static const LaurentPoly z;
    return z;
}

const LaurentPoly& LaurentPoly::one() {
    static const LaurentPoly o(BigInt(1));
    return o;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

std::optional<int> LaurentPoly::unit_exponent() const {
    if (terms_.size() == 1 && terms_.begin()->second == 1) return terms_.begin()->first;
    return std::nullopt;
}

int LaurentPoly::min_exponent() const {
    if (is_zero()) throw std::logic_error("min_exponent of zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (is_zero()) throw std::logic_error("max_exponent of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::set(int exponent, BigInt coeff) {
    if (coeff == 0) {
        terms_.erase(exponent);
    } else {
        terms_[exponent] = std::move(coeff);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_.emplace(ea + eb, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = one();
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Rational LaurentPoly::specialize(const Rational& value) const {
    if (value == 0) throw std::invalid_argument("specialize: q must be a unit, got 0");
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational p = 1;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= value;
        if (e < 0) p = Rational(1) / p;
        acc += Rational(c) * p;
    }
    return acc;
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) j[std::to_string(e)] = c.str();
    return j;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // highest exponent first, the way one writes q^2 - 2 + q^-2
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// DensePoly
// ---------------------------------------------------------------------------

DensePoly::DensePoly(const BigInt& c0) {
    if (c0 != 0) coeffs_.push_back(c0);
}

DensePoly::DensePoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

DensePoly DensePoly::monomial(const BigInt& coeff, int degree) {
    if (coeff == 0) return DensePoly();
    std::vector<BigInt> c(static_cast<size_t>(degree) + 1);
    c.back() = coeff;
    return DensePoly(std::move(c));
}

void DensePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt DensePoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

DensePoly& DensePoly::operator+=(const DensePoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return DensePoly(std::move(c));
}

DensePoly DensePoly::operator-() const {
    DensePoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

BigInt DensePoly::eval_int(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational DensePoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

BigInt DensePoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    if (!coeffs_.empty() && coeffs_.back() < 0) g = -g;
    return g;
}

DensePoly DensePoly::reversed() const {
    std::vector<BigInt> c(coeffs_.rbegin(), coeffs_.rend());
    return DensePoly(std::move(c));
}

std::optional<DensePoly> DensePoly::exact_div(const DensePoly& a, const DensePoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
    if (a.is_zero()) return DensePoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem = a.coeffs_;
    std::vector<BigInt> quot(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const BigInt& lead = b.coeffs_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        BigInt top = rem[static_cast<size_t>(k + b.degree())];
        if (top % lead != 0) return std::nullopt;
        BigInt f = top / lead;
        quot[static_cast<size_t>(k)] = f;
        if (f != 0)
            for (int i = 0; i <= b.degree(); ++i)
                rem[static_cast<size_t>(k + i)] -= f * b.coeffs_[static_cast<size_t>(i)];
    }
    for (const auto& c : rem)
        if (c != 0) return std::nullopt;
    return DensePoly(std::move(quot));
}

namespace {

// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a  mod  b
DensePoly pseudo_rem(DensePoly a, const DensePoly& b) {
    const BigInt lead = b.coeff(b.degree());
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        BigInt top = a.coeff(a.degree());
        DensePoly scaled(std::vector<BigInt>{lead});
        a = DensePoly(scaled * a - DensePoly::monomial(top, shift) * b);
    }
    return a;
}

DensePoly primitive_part(const DensePoly& p) {
    if (p.is_zero()) return p;
    BigInt c = p.content();
    auto q = DensePoly::exact_div(p, DensePoly(c));
    return *q;
}

}  // namespace

DensePoly DensePoly::gcd(DensePoly a, DensePoly b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive_part(b) * DensePoly(boost::multiprecision::abs(b.content()));
    if (b.is_zero()) return primitive_part(a) * DensePoly(boost::multiprecision::abs(a.content()));
    BigInt ca = boost::multiprecision::abs(a.content());
    BigInt cb = boost::multiprecision::abs(b.content());
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        DensePoly r = primitive_part(pseudo_rem(a, b));
        a = b;
        b = r;
    }
    a = primitive_part(a);
    if (a.coeff(a.degree()) < 0) a = -a;
    return a * DensePoly(boost::multiprecision::gcd(ca, cb));
}

nlohmann::json DensePoly::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    if (is_zero()) {
        j.push_back("0");
        return j;
    }
    for (const auto& c : coeffs_) j.push_back(c.str());
    return j;
}

std::string DensePoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        BigInt a = coeff(k);
        if (a == 0) continue;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << var;
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunc
// ---------------------------------------------------------------------------

RationalFunc::RationalFunc() : num_(), den_(BigInt(1)) {}

RationalFunc::RationalFunc(DensePoly num, DensePoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFunc: zero denominator");
    reduce();
}

RationalFunc::RationalFunc(const BigInt& constant) : num_(constant), den_(BigInt(1)) {}

RationalFunc::RationalFunc(long constant) : RationalFunc(BigInt(constant)) {}

RationalFunc::RationalFunc(const LaurentPoly& p) : num_(), den_(BigInt(1)) {
    if (p.is_zero()) return;
    int shift = std::min(0, p.min_exponent());
    std::vector<BigInt> c(static_cast<size_t>(p.max_exponent() - shift) + 1);
    for (const auto& [e, coeff] : p.terms()) c[static_cast<size_t>(e - shift)] = coeff;
    num_ = DensePoly(std::move(c));
    den_ = DensePoly::monomial(1, -shift);
    reduce();
}

RationalFunc RationalFunc::monomial_power(int k) {
    if (k >= 0) return RationalFunc(DensePoly::monomial(1, k), DensePoly(BigInt(1)));
    return RationalFunc(DensePoly(BigInt(1)), DensePoly::monomial(1, -k));
}

bool RationalFunc::is_one() const {
    return num_ == DensePoly(BigInt(1)) && den_ == DensePoly(BigInt(1));
}

void RationalFunc::reduce() {
    if (num_.is_zero()) {
        den_ = DensePoly(BigInt(1));
        return;
    }
    DensePoly g = DensePoly::gcd(num_, den_);
    num_ = *DensePoly::exact_div(num_, g);
    den_ = *DensePoly::exact_div(den_, g);
    if (den_.coeff(den_.degree()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) {
    if (o.is_zero()) throw std::invalid_argument("RationalFunc: division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    if (den_.is_zero()) throw std::invalid_argument("RationalFunc: division by zero");
    reduce();
    return *this;
}

RationalFunc RationalFunc::operator-() const {
    RationalFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::optional<LaurentPoly> RationalFunc::to_laurent() const {
    if (num_.is_zero()) return LaurentPoly();
    // reduced form: denominator must be exactly t^k
    for (int i = 0; i < den_.degree(); ++i)
        if (den_.coeff(i) != 0) return std::nullopt;
    if (den_.coeff(den_.degree()) != 1) return std::nullopt;
    int k = den_.degree();
    LaurentPoly r;
    for (int i = 0; i <= num_.degree(); ++i) {
        BigInt c = num_.coeff(i);
        if (c != 0) r += LaurentPoly(c, i - k);
    }
    return r;
}

RationalFunc RationalFunc::substitute_inverse() const {
    if (is_zero()) return RationalFunc();
    int dn = num_.degree();
    int dd = den_.degree();
    DensePoly n = num_.reversed();
    DensePoly d = den_.reversed();
    if (dd >= dn) {
        n = n * DensePoly::monomial(1, dd - dn);
    } else {
        d = d * DensePoly::monomial(1, dn - dd);
    }
    return RationalFunc(std::move(n), std::move(d));
}

std::vector<Rational> RationalFunc::taylor(int upto) const {
    if (den_.coeff(0) == 0) throw std::invalid_argument("taylor: denominator vanishes at 0");
    const Rational d0(den_.coeff(0));
    std::vector<Rational> a(static_cast<size_t>(upto) + 1);
    for (int k = 0; k <= upto; ++k) {
        Rational s(num_.coeff(k));
        for (int i = 1; i <= k && i <= den_.degree(); ++i)
            s -= Rational(den_.coeff(i)) * a[static_cast<size_t>(k - i)];
        a[static_cast<size_t>(k)] = s / d0;
    }
    return a;
}

int RationalFunc::pole_order_at_one() const {
    DensePoly d = den_;
    const DensePoly root(std::vector<BigInt>{-1, 1});  // t - 1
    int order = 0;
    while (!d.is_zero() && d.eval_int(1) == 0) {
        d = *DensePoly::exact_div(d, root);
        ++order;
    }
    return order;
}

nlohmann::json RationalFunc::to_json() const {
    return nlohmann::json{{"num", num_.to_json()}, {"den", den_.to_json()}};
}

std::string RationalFunc::to_string(const std::string& var) const {
    if (den_ == DensePoly(BigInt(1))) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace qasl
