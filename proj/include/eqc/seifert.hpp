#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eqc/laurent.hpp"

namespace eqc {

class SeifertMatrix {
public:
    SeifertMatrix() = default;
    explicit SeifertMatrix(std::size_t n) : n_(n), e_(n * n, 0) {}
    static SeifertMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t size() const { return n_; }
    long& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    long operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    std::vector<std::vector<long>> rows() const;

    SeifertMatrix transpose() const;

    bool operator==(const SeifertMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator<(const SeifertMatrix& o) const { return n_ != o.n_ ? n_ < o.n_ : e_ < o.e_; }

private:
    std::size_t n_ = 0;
    std::vector<long> e_;
};

SeifertMatrix mirror(const SeifertMatrix& v);  // -V^T
SeifertMatrix direct_sum(const SeifertMatrix& v, const SeifertMatrix& w);

// alpha = m/n, read modulo 1.
struct SignatureLevel {
    long m = 0;
    long n = 1;

    SignatureLevel() = default;
    SignatureLevel(long m_, long n_);
    static SignatureLevel parse(const std::string& text);

    // m in [0, n), gcd(m, n) = 1
    SignatureLevel reduced() const;
    Rational value() const { return Rational(m, n); }
    std::string to_string() const;
    bool operator<(const SignatureLevel& o) const { return m * o.n < o.m * n; }
    bool operator==(const SignatureLevel& o) const { return m * o.n == o.m * n; }
};

struct AlexanderData {
    IntPoly det_poly;  // det(tV - V^T), coefficient of t^k at index k
    NormalizedKnotPoly delta;
};

// Exact det(tV - V^T) and its normalization; NotAKnotMatrix unless det(V - V^T) = 1.
AlexanderData alexander_data(const SeifertMatrix& v);
NormalizedKnotPoly alexander(const SeifertMatrix& v);

// True when no root of the polynomial lies at exp(2 pi i alpha); exact.
bool level_is_nondegenerate(const IntPoly& delta_rep, const SignatureLevel& level);

int tl_signature(const SeifertMatrix& v, const SignatureLevel& level);
long signature_sum(const SeifertMatrix& v, long n);
int arf(const SeifertMatrix& v);

// Mean of the one-sided limits at alpha; equals tl_signature at
// nondegenerate levels. Never used by the invariant formulas.
Rational averaged_signature(const SeifertMatrix& v, const SignatureLevel& level);

// Caches the Alexander data and every evaluated level of one matrix.
class SignatureEvaluator {
public:
    explicit SignatureEvaluator(SeifertMatrix v);

    const SeifertMatrix& matrix() const { return v_; }
    const AlexanderData& alexander() const { return alex_; }
    int signature(const SignatureLevel& level) const;
    long signature_sum(long n) const;
    Rational averaged_signature(const SignatureLevel& level) const;

private:
    SeifertMatrix v_;
    AlexanderData alex_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long, long>, int> cache_;
};

// Instrumentation seen by every tl_signature call, including refused levels.
struct SignatureProbe {
    const SeifertMatrix& matrix;
    SignatureLevel level;  // reduced
    const IntPoly& delta_rep;
    bool nondegenerate;
    std::optional<int> result;
    bool cached;
    bool multiprecision;
};

using SignatureAudit = std::function<void(const SignatureProbe&)>;

class ScopedSignatureAudit {
public:
    explicit ScopedSignatureAudit(SignatureAudit fn);
    ~ScopedSignatureAudit();
    ScopedSignatureAudit(const ScopedSignatureAudit&) = delete;
    ScopedSignatureAudit& operator=(const ScopedSignatureAudit&) = delete;

private:
    std::shared_ptr<const SignatureAudit> previous_;
};

namespace kernel {

struct Result {
    int signature = 0;
    bool multiprecision = false;
    long bits = 53;
};

// Signature of (1 - w)V + (1 - conj w)V^T with w = exp(2 pi i alpha).
// Caller guarantees nondegeneracy.
Result hermitian_signature(const SeifertMatrix& v, const Rational& alpha);

// Same form forced through the multiprecision path.
Result hermitian_signature_mp(const SeifertMatrix& v, const Rational& alpha, long bits);

// w = c + i sqrt(1 - c^2) for rational c in (-1, 1).
Result hermitian_signature_at_cos(const SeifertMatrix& v, const Rational& c);

// Floor from EQC_PRECISION_BITS (default 128), never below 100.
long precision_floor();

}  // namespace kernel

}  // namespace eqc
