#include "eqc/seifert.hpp"

#include <algorithm>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "eqc/errors.hpp"
#include "eqc/modular.hpp"
#include "eqc/mp.hpp"

namespace eqc {

SeifertMatrix SeifertMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t n = rows.size();
    SeifertMatrix v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw DomainError(ErrorCode::InvalidInput, "Seifert matrix must be square");
        for (std::size_t j = 0; j < n; ++j) v(i, j) = rows[i][j];
    }
    return v;
}

std::vector<std::vector<long>> SeifertMatrix::rows() const {
    std::vector<std::vector<long>> out(n_, std::vector<long>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

SeifertMatrix SeifertMatrix::transpose() const {
    SeifertMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

SeifertMatrix mirror(const SeifertMatrix& v) {
    SeifertMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = -v(j, i);
    return m;
}

SeifertMatrix direct_sum(const SeifertMatrix& v, const SeifertMatrix& w) {
    const std::size_t a = v.size();
    SeifertMatrix s(a + w.size());
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < a; ++j) s(i, j) = v(i, j);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) s(a + i, a + j) = w(i, j);
    return s;
}

SignatureLevel::SignatureLevel(long m_, long n_) : m(m_), n(n_) {
    if (n <= 0) throw DomainError(ErrorCode::InvalidInput, "signature level denominator must be positive");
}

SignatureLevel SignatureLevel::parse(const std::string& text) {
    Rational r = parse_rational(text);
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw DomainError(ErrorCode::InvalidInput, "signature level out of range: " + text);
    return SignatureLevel(r.get_num().get_si(), r.get_den().get_si());
}

SignatureLevel SignatureLevel::reduced() const {
    long mm = mod_floor(m, n);
    long g = gcd_long(mm, n);
    if (mm == 0) return SignatureLevel(0, 1);
    return SignatureLevel(mm / g, n / g);
}

std::string SignatureLevel::to_string() const { return std::to_string(m) + "/" + std::to_string(n); }

// ---------------------------------------------------------------------------
// Alexander polynomial
//
// With K = V - V^T invertible, tV - V^T = K (I + (t - 1) K^{-1} V), so the
// determinant follows from the characteristic polynomial of K^{-1} V. This
// is done modulo word-size primes and lifted by CRT past a Hadamard bound.

AlexanderData alexander_data(const SeifertMatrix& v) {
    const std::size_t n = v.size();
    if (n == 0) return {IntPoly{Integer(1)}, normalize(LaurentPoly(Integer(1)))};

    double bound_bits = 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0, c = 0;
        for (std::size_t j = 0; j < n; ++j) {
            r += static_cast<double>(v(i, j)) * static_cast<double>(v(i, j));
            c += static_cast<double>(v(j, i)) * static_cast<double>(v(j, i));
        }
        bound_bits += std::log2(std::max(1.0, std::sqrt(r) + std::sqrt(c)));
    }

    std::vector<modp::Crt> crt(n + 1);
    double have_bits = 0;
    for (std::size_t k = 0; have_bits < bound_bits + 1; ++k) {
        const modp::u64 p = modp::large_prime(k);
        DenseMatrix<modp::u64> kp(n, n), m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                kp(i, j) = modp::reduce(v(i, j) - v(j, i), p);
                m(i, j) = modp::reduce(v(i, j), p);
            }
        modp::u64 det = 0;
        if (!modp::solve(kp, m, p, det))
            throw DomainError(ErrorCode::NotAKnotMatrix, "det(V - V^T) is not 1");
        const std::vector<modp::u64> chi = modp::charpoly(m, p);
        // det(I + sM) = sum_k (-1)^k chi_{n-k} s^k, then s = t - 1
        std::vector<modp::u64> in_s(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            modp::u64 c = modp::mulmod(chi[n - j], det, p);
            in_s[j] = (j % 2 == 1 && c != 0) ? p - c : c;
        }
        std::vector<modp::u64> in_t{in_s[n]};
        for (std::size_t j = n; j-- > 0;) {
            std::vector<modp::u64> next(in_t.size() + 1, 0);
            for (std::size_t i = 0; i < in_t.size(); ++i) {
                next[i + 1] = modp::addmod(next[i + 1], in_t[i], p);
                next[i] = modp::submod(next[i], in_t[i], p);
            }
            next[0] = modp::addmod(next[0], in_s[j], p);
            in_t = std::move(next);
        }
        for (std::size_t i = 0; i <= n; ++i) crt[i].add(in_t[i], p);
        have_bits += std::log2(static_cast<double>(p)) - 1e-9;
    }
    IntPoly det_poly(n + 1);
    for (std::size_t i = 0; i <= n; ++i) det_poly[i] = crt[i].symmetric();
    trim(det_poly);
    if (poly_eval(det_poly, Integer(1)) != 1)
        throw DomainError(ErrorCode::NotAKnotMatrix, "det(V - V^T) is not 1");
    // strip trailing powers of t so the representative has a nonzero constant term
    std::size_t low = 0;
    while (low < det_poly.size() && det_poly[low] == 0) ++low;
    NormalizedKnotPoly delta = normalize(LaurentPoly::from_intpoly(det_poly));
    IntPoly rep(det_poly.begin() + static_cast<long>(low), det_poly.end());
    return {std::move(rep), std::move(delta)};
}

NormalizedKnotPoly alexander(const SeifertMatrix& v) { return alexander_data(v).delta; }

bool level_is_nondegenerate(const IntPoly& delta_rep, const SignatureLevel& level) {
    const SignatureLevel r = level.reduced();
    if (r.n == 1) return true;
    return !poly_rem_monic(delta_rep, cyclotomic(r.n)).empty();
}

// ---------------------------------------------------------------------------
// Audit hook

namespace {

std::mutex& audit_mutex() {
    static std::mutex mu;
    return mu;
}

std::shared_ptr<const SignatureAudit>& audit_slot() {
    static std::shared_ptr<const SignatureAudit> slot;
    return slot;
}

void emit(const SignatureProbe& probe) {
    std::shared_ptr<const SignatureAudit> fn;
    {
        std::lock_guard<std::mutex> lock(audit_mutex());
        fn = audit_slot();
    }
    if (fn) (*fn)(probe);
}

}  // namespace

ScopedSignatureAudit::ScopedSignatureAudit(SignatureAudit fn) {
    auto next = std::make_shared<const SignatureAudit>(std::move(fn));
    std::lock_guard<std::mutex> lock(audit_mutex());
    previous_ = audit_slot();
    audit_slot() = std::move(next);
}

ScopedSignatureAudit::~ScopedSignatureAudit() {
    std::lock_guard<std::mutex> lock(audit_mutex());
    audit_slot() = std::move(previous_);
}

// ---------------------------------------------------------------------------
// Signature kernel

namespace kernel {

long precision_floor() {
    long bits = 128;
    if (const char* env = std::getenv("EQC_PRECISION_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) bits = v;
    }
    return std::max(bits, 100L);
}

namespace {

using mp::Real;

// Cyclic Jacobi on the real embedding [[A, -B], [B, A]] of H = A + iB.
// Each eigenvalue of H appears twice. Returns 0 when the smallest eigenvalue
// is too close to zero for this precision.
std::optional<int> jacobi_signature(const SeifertMatrix& v, const Real& c, const Real& s, long bits) {
    const std::size_t n = v.size();
    const std::size_t N = 2 * n;
    std::vector<Real> a(N * N, Real(bits));
    auto at = [&](std::size_t i, std::size_t j) -> Real& { return a[i * N + j]; };
    Real one_minus_c = Real(1L, bits) - c;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Real re = one_minus_c * Real(v(j, k) + v(k, j), bits);
            Real im = -(s * Real(v(j, k) - v(k, j), bits));
            at(j, k) = re;
            at(n + j, n + k) = re;
            at(j, n + k) = -im;
            at(n + j, k) = im;
        }
    Real norm2(bits);
    for (const Real& x : a) norm2 += x * x;
    if (norm2.is_zero()) return 0;
    const Real tol2 = mul_2si(norm2, -2 * (bits - 8));
    for (int sweep = 0; sweep < 200; ++sweep) {
        Real off(bits);
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) off += at(p, q) * at(p, q);
        if (!(off > tol2)) break;
        for (std::size_t p = 0; p < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) {
                if (at(p, q).is_zero()) continue;
                Real theta = (at(q, q) - at(p, p)) / mul_2si(at(p, q), 1);
                Real t = Real(1L, bits) / (abs(theta) + sqrt(theta * theta + Real(1L, bits)));
                if (theta.sign() < 0) t = -t;
                Real cs = Real(1L, bits) / sqrt(t * t + Real(1L, bits));
                Real sn = t * cs;
                Real apq = at(p, q);
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = Real(bits);
                at(q, p) = Real(bits);
                for (std::size_t r = 0; r < N; ++r) {
                    if (r == p || r == q) continue;
                    Real arp = at(r, p);
                    Real arq = at(r, q);
                    at(r, p) = cs * arp - sn * arq;
                    at(p, r) = at(r, p);
                    at(r, q) = sn * arp + cs * arq;
                    at(q, r) = at(r, q);
                }
            }
    }
    const Real zero_tol = mul_2si(sqrt(norm2), -50);
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const Real& d = at(i, i);
        if (!(abs(d) > zero_tol)) return std::nullopt;
        (d.sign() > 0 ? pos : neg)++;
    }
    return (pos - neg) / 2;
}

Result multiprecision_path(const SeifertMatrix& v, const std::function<std::pair<Real, Real>(long)>& cs, long bits) {
    for (; bits <= 8192; bits *= 2) {
        auto [c, s] = cs(bits + 32);
        if (auto sig = jacobi_signature(v, c, s, bits)) return {*sig, true, bits};
    }
    throw std::logic_error("signature kernel failed to separate eigenvalues from zero");
}

Result double_path(const SeifertMatrix& v, double c, double s, bool& certified) {
    const std::size_t n = v.size();
    Eigen::MatrixXcd h(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            h(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                std::complex<double>((1.0 - c) * static_cast<double>(v(j, k) + v(k, j)),
                                     -s * static_cast<double>(v(j, k) - v(k, j)));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    const double tol = std::ldexp(h.norm(), -40);
    int pos = 0, neg = 0;
    certified = es.info() == Eigen::Success;
    for (Eigen::Index i = 0; certified && i < es.eigenvalues().size(); ++i) {
        const double ev = es.eigenvalues()(i);
        if (std::abs(ev) <= tol) certified = false;
        (ev > 0 ? pos : neg)++;
    }
    return {pos - neg, false, 53};
}

}  // namespace

Result hermitian_signature(const SeifertMatrix& v, const Rational& alpha) {
    Rational a(alpha);
    a.canonicalize();
    if (v.size() == 0 || a.get_den() == 1) return {};
    const double c = mp::cos_2pi(a, 128).to_double();
    const double s = mp::sin_2pi(a, 128).to_double();
    bool certified = false;
    Result r = double_path(v, c, s, certified);
    if (certified) return r;
    return hermitian_signature_mp(v, a, precision_floor());
}

Result hermitian_signature_mp(const SeifertMatrix& v, const Rational& alpha, long bits) {
    Rational a(alpha);
    a.canonicalize();
    if (v.size() == 0 || a.get_den() == 1) return {0, true, bits};
    return multiprecision_path(
        v, [&](long b) { return std::make_pair(mp::cos_2pi(a, b), mp::sin_2pi(a, b)); }, bits);
}

Result hermitian_signature_at_cos(const SeifertMatrix& v, const Rational& c) {
    if (v.size() == 0) return {};
    auto cs = [&](long b) {
        Real cr(c, b);
        Real sr = sqrt(Real(1L, b) - cr * cr);
        return std::make_pair(cr, sr);
    };
    auto [c0, s0] = cs(128);
    bool certified = false;
    Result r = double_path(v, c0.to_double(), s0.to_double(), certified);
    if (certified) return r;
    return multiprecision_path(v, cs, precision_floor());
}

}  // namespace kernel

// ---------------------------------------------------------------------------
// Averaged jumps
//
// On the unit circle t = exp(i theta), Delta equals F(cos theta) for an
// integer polynomial F (Chebyshev expansion). Roots of F are isolated with
// Sturm sequences over Q; the one-sided limits are read at the rational
// endpoints of the isolating interval around the degenerate level.

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
    qtrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational f = a.back() / b.back();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a.pop_back();
        qtrim(a);
    }
    return a;
}

QPoly qderiv(const QPoly& a) {
    QPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Rational(static_cast<long>(i)));
    qtrim(d);
    return d;
}

QPoly qgcd(QPoly a, QPoly b) {
    qtrim(a);
    qtrim(b);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

QPoly qdiv(QPoly a, const QPoly& b) {
    qtrim(a);
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        a.pop_back();
        qtrim(a);
    }
    qtrim(q);
    return q;
}

Rational qeval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

struct Sturm {
    std::vector<QPoly> chain;

    explicit Sturm(const QPoly& f) {
        chain.push_back(f);
        chain.push_back(qderiv(f));
        while (!chain.back().empty()) {
            QPoly r = qrem(chain[chain.size() - 2], chain.back());
            for (auto& c : r) c = -c;
            if (r.empty()) break;
            chain.push_back(std::move(r));
        }
    }

    int variations(const Rational& x) const {
        int v = 0, last = 0;
        for (const QPoly& p : chain) {
            int s = sgn(qeval(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    // roots in (a, b], for a, b not roots
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
};

QPoly chebyshev_form(const NormalizedKnotPoly& d) {
    const long g = d.half_degree();
    std::vector<QPoly> T{{Rational(1)}, {Rational(0), Rational(1)}};
    for (long k = 2; k <= g; ++k) {
        QPoly next(static_cast<std::size_t>(k + 1), Rational(0));
        for (std::size_t i = 0; i < T[k - 1].size(); ++i) next[i + 1] += 2 * T[k - 1][i];
        for (std::size_t i = 0; i < T[k - 2].size(); ++i) next[i] -= T[k - 2][i];
        T.push_back(std::move(next));
    }
    QPoly f(static_cast<std::size_t>(g + 1), Rational(0));
    for (long k = 0; k <= g; ++k) {
        Rational w = Rational(d.poly().coeff(k)) * (k == 0 ? 1 : 2);
        for (std::size_t i = 0; i < T[k].size(); ++i) f[i] += w * T[k][i];
    }
    qtrim(f);
    return f;
}

}  // namespace

SignatureEvaluator::SignatureEvaluator(SeifertMatrix v) : v_(std::move(v)), alex_(alexander_data(v_)) {}

int SignatureEvaluator::signature(const SignatureLevel& level) const {
    const SignatureLevel r = level.reduced();
    // the form at 1 - alpha is the entrywise conjugate of the form at alpha
    const auto key = std::make_pair(std::min(r.m, r.n - r.m), r.n);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) {
            emit({v_, r, alex_.det_poly, true, it->second, true, false});
            return it->second;
        }
    }
    if (!level_is_nondegenerate(alex_.det_poly, r)) {
        emit({v_, r, alex_.det_poly, false, std::nullopt, false, false});
        throw DomainError(ErrorCode::SignatureAtRoot,
                          "Alexander polynomial vanishes at level " + level.to_string());
    }
    const kernel::Result res = kernel::hermitian_signature(v_, frac(key.first, key.second));
    {
        std::lock_guard<std::mutex> lock(mu_);
        cache_.emplace(key, res.signature);
    }
    emit({v_, r, alex_.det_poly, true, res.signature, false, res.multiprecision});
    return res.signature;
}

long SignatureEvaluator::signature_sum(long n) const {
    if (n < 1) throw DomainError(ErrorCode::InvalidInput, "signature sum needs n >= 1");
    long total = 0;
    for (long m = 0; m < n; ++m) total += signature(SignatureLevel(m, n));
    return total;
}

Rational SignatureEvaluator::averaged_signature(const SignatureLevel& level) const {
    const SignatureLevel r = level.reduced();
    if (level_is_nondegenerate(alex_.det_poly, r)) return Rational(signature(r));
    // fold into (0, 1/2]
    Rational theta = r.value();
    if (theta > Rational(1, 2)) theta = 1 - theta;
    const long bits = 256;
    const mp::Real x0 = mp::cos_2pi(theta, bits);

    const QPoly f = chebyshev_form(alex_.delta);
    const QPoly sqf = qdiv(f, qgcd(f, qderiv(f)));
    const Sturm sturm(sqf);
    Rational a(-1), b(1);
    auto rel = [&](const Rational& q) {  // sign of q - x0
        mp::Real diff = mp::Real(q, bits) - x0;
        if (!(mp::abs(diff) > mp::mul_2si(mp::Real(1L, bits), -200)))
            throw std::logic_error("isolation point collides with the degenerate level");
        return diff.sign();
    };
    // |cos| < 1 and F(+-1) != 0 for knot polynomials, so the ends are valid
    while (sturm.count(a, b) != 1) {
        Rational mid = (a + b) / 2;
        while (qeval(sqf, mid) == 0) mid = (mid + b) / 2;
        if (rel(mid) > 0) b = mid; else a = mid;
    }
    const int left = kernel::hermitian_signature_at_cos(v_, a).signature;
    const int right = kernel::hermitian_signature_at_cos(v_, b).signature;
    return frac(left + right, 2);
}

int tl_signature(const SeifertMatrix& v, const SignatureLevel& level) {
    return SignatureEvaluator(v).signature(level);
}

long signature_sum(const SeifertMatrix& v, long n) { return SignatureEvaluator(v).signature_sum(n); }

int arf(const SeifertMatrix& v) { return levine_arf(alexander(v)); }

Rational averaged_signature(const SeifertMatrix& v, const SignatureLevel& level) {
    return SignatureEvaluator(v).averaged_signature(level);
}

}  // namespace eqc
