#include "eqc/laurent.hpp"

#include <sstream>

#include "eqc/errors.hpp"

namespace eqc {

LaurentPoly::LaurentPoly(const Integer& constant) : low_(0), coeffs_{constant} { canonicalize(); }

LaurentPoly::LaurentPoly(long low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
    canonicalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::from_terms(const std::map<long, Integer>& terms) {
    if (terms.empty()) return {};
    const long lo = terms.begin()->first;
    const long hi = terms.rbegin()->first;
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] += v;
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::from_intpoly(const IntPoly& p, long shift) { return LaurentPoly(shift, p); }

void LaurentPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        low_ += static_cast<long>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

long LaurentPoly::min_exponent() const { return low_; }

long LaurentPoly::max_exponent() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }

Integer LaurentPoly::coeff(long e) const {
    if (coeffs_.empty() || e < low_ || e > max_exponent()) return 0;
    return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<long, Integer>> LaurentPoly::terms() const {
    std::vector<std::pair<long, Integer>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    if (is_zero()) return {};
    return LaurentPoly(low_ + k, coeffs_);
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    if (is_zero()) return {};
    std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPoly(-max_exponent(), std::move(r));
}

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (is_zero()) return 0;
    if (x == 0) {
        if (low_ < 0) throw DomainError(ErrorCode::UndefinedEvaluation, "negative exponent at t = 0");
        return Rational(coeff(0));
    }
    // Horner on the polynomial part, then divide by x^(-low)
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
    Rational scale = 1;
    const long k = low_ < 0 ? -low_ : low_;
    for (long i = 0; i < k; ++i) scale *= x;
    Rational r = low_ < 0 ? Rational(acc / scale) : Rational(acc * scale);
    r.canonicalize();
    return r;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
    Rational r = evaluate(Rational(x));
    if (r.get_den() != 1) throw DomainError(ErrorCode::NonIntegral, "evaluation is not an integer");
    return r.get_num();
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        const long e = low_ + static_cast<long>(i);
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0 || mag != 1) os << mag.get_str();
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long lo = std::min(a.low_, b.low_);
    const long hi = std::max(a.max_exponent(), b.max_exponent());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[static_cast<std::size_t>(a.low_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[static_cast<std::size_t>(b.low_ - lo) + i] += b.coeffs_[i];
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a) {
    std::vector<Integer> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs_[i];
    return LaurentPoly(a.low_, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly(a.low_ + b.low_, poly_mul(a.coeffs_, b.coeffs_));
}

IntPoly NormalizedKnotPoly::representative() const { return p_.dense(); }

NormalizedKnotPoly normalize(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError(ErrorCode::NotNormalizable, "zero polynomial");
    const long span = p.min_exponent() + p.max_exponent();
    if (span % 2 != 0) throw DomainError(ErrorCode::NotNormalizable, "odd span " + p.to_string());
    LaurentPoly c = p.shifted(-span / 2);
    if (c.substitute_inverse() != c) throw DomainError(ErrorCode::NotNormalizable, "not palindromic: " + p.to_string());
    const Integer at1 = c.evaluate(Integer(1));
    if (at1 == -1) {
        c = -c;
    } else if (at1 != 1) {
        throw DomainError(ErrorCode::NotNormalizable, "value at 1 is " + at1.get_str());
    }
    return NormalizedKnotPoly(std::move(c));
}

Integer second_derivative_at_one(const NormalizedKnotPoly& d) {
    Integer acc = 0;
    for (const auto& [e, c] : d.poly().terms()) acc += c * e * (e - 1);
    return acc;
}

int levine_arf(const NormalizedKnotPoly& d) {
    const long r = mod_floor(d.poly().evaluate(Integer(-1)), 8);
    if (r == 1) return 0;
    if (r == 5) return 1;
    throw DomainError(ErrorCode::InvalidResidue, "d(-1) = " + std::to_string(r) + " mod 8");
}

namespace {

IntPoly geometric_sum(long n) { return IntPoly(static_cast<std::size_t>(n), Integer(1)); }

}  // namespace

Integer cover_h1_order(const NormalizedKnotPoly& d, long n) {
    if (n < 1) throw DomainError(ErrorCode::InvalidInput, "cover degree must be positive");
    if (n == 1) return 1;
    return abs(multiplication_norm(d.representative(), geometric_sum(n)));
}

NormalizedKnotPoly fox_cover_polynomial(const NormalizedKnotPoly& d, long n) {
    if (n < 1) throw DomainError(ErrorCode::InvalidInput, "cover degree must be positive");
    if (cover_h1_order(d, n) != 1)
        throw DomainError(ErrorCode::CoverNotZHS, "cover of degree " + std::to_string(n) + " is not a homology sphere");
    if (n == 1) return d;
    const IntPoly f = d.representative();
    const long D = degree(f);
    const std::size_t nn = static_cast<std::size_t>(n);
    // R(u) = det of multiplication by f on Z[u][x]/(x^n - u), degree <= D in u.
    // Sample at D + 1 integers u and interpolate.
    std::vector<Integer> us;
    std::vector<Rational> values;
    for (long k = 0; k <= D; ++k) {
        const Integer u = k - D / 2;
        DenseMatrix<Integer> m(nn, nn);
        for (std::size_t col = 0; col < nn; ++col) {
            // x^col * f reduced with x^n = u
            for (std::size_t j = 0; j < f.size(); ++j) {
                std::size_t e = col + j;
                Integer c = f[j];
                for (std::size_t w = 0; w < e / nn; ++w) c *= u;
                m(e % nn, col) += c;
            }
        }
        us.push_back(u);
        values.emplace_back(bareiss_determinant(std::move(m)));
    }
    // Newton divided differences
    const long npts_l = static_cast<long>(us.size());
    const std::size_t npts = us.size();
    std::vector<Rational> coef = values;
    for (long j = 1; j < npts_l; ++j)
        for (long i = npts_l - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / Rational(us[i] - us[i - j]);
    std::vector<Rational> poly(npts, Rational(0));
    for (std::size_t i = npts; i-- > 0;) {
        // poly = poly * (u - us[i]) + coef[i]
        std::vector<Rational> next(npts, Rational(0));
        for (std::size_t k = 0; k + 1 < npts; ++k) next[k + 1] += poly[k];
        for (std::size_t k = 0; k < npts; ++k) next[k] -= poly[k] * Rational(us[i]);
        next[0] += coef[i];
        poly = std::move(next);
    }
    IntPoly r(npts);
    for (std::size_t k = 0; k < npts; ++k) {
        poly[k].canonicalize();
        if (poly[k].get_den() != 1) throw DomainError(ErrorCode::NonIntegral, "cover resultant is not integral");
        r[k] = poly[k].get_num();
    }
    return normalize(LaurentPoly::from_intpoly(r));
}

GaloisReport galois_check(const NormalizedKnotPoly& d, long n) {
    const NormalizedKnotPoly D = fox_cover_polynomial(d, n);
    GaloisReport rep;
    rep.D_at_minus1 = D.poly().evaluate(Integer(-1));
    rep.d_at_minus1 = d.poly().evaluate(Integer(-1));
    if (rep.d_at_minus1 != 0 && rep.D_at_minus1 % rep.d_at_minus1 == 0)
        rep.ratio_residue = mod_floor(Integer(rep.D_at_minus1 / rep.d_at_minus1), 8);
    rep.equal = rep.D_at_minus1 == rep.d_at_minus1;
    // D(-1) = nu^2 (n even) or nu^2 d(-1) (n odd) with nu an integer
    const Integer nu2 = n % 2 == 0 ? rep.D_at_minus1
                        : rep.ratio_residue ? Integer(rep.D_at_minus1 / rep.d_at_minus1)
                                            : Integer(-1);
    rep.nu_square = nu2 >= 0 && mpz_perfect_square_p(nu2.get_mpz_t()) != 0;
    if (n % 2 == 0) {
        rep.pass = rep.nu_square && mod_floor(rep.D_at_minus1, 8) == 1 && rep.d_at_minus1 == 1;
    } else {
        rep.pass = rep.nu_square && rep.ratio_residue.has_value() && *rep.ratio_residue == 1;
    }
    return rep;
}

}  // namespace eqc
