#include "eqc/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "eqc/braid.hpp"
#include "eqc/casson.hpp"
#include "eqc/equivariant.hpp"
#include "eqc/errors.hpp"
#include "eqc/io.hpp"
#include "eqc/pillowcase.hpp"
#include "eqc/random_knots.hpp"

namespace eqc {

namespace {

using Clock = std::chrono::steady_clock;

class Battery {
public:
    Battery(std::string suite, std::uint64_t seed) : start_(Clock::now()) {
        report_.suite = std::move(suite);
        report_.seed = seed;
    }

    // Runs one case; a thrown error counts as a failure of that case.
    void check(const std::string& input, const std::function<std::string()>& body) {
        ++report_.cases;
        std::string reason;
        try {
            reason = body();
        } catch (const DomainError& e) {
            reason = std::string(e.name()) + ": " + e.detail();
        } catch (const std::exception& e) {
            reason = std::string("internal: ") + e.what();
        }
        if (!reason.empty()) report_.failures.push_back({input, reason});
    }

    VerifyReport finish() {
        std::sort(report_.failures.begin(), report_.failures.end());
        report_.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return report_;
    }

private:
    VerifyReport report_;
    Clock::time_point start_;
};

std::string encode(const SeifertMatrix& v) { return io::seifert(v).dump(); }

long random_q(std::mt19937_64& rng, long n, long bound) {
    for (;;) {
        long q = uniform(rng, -bound, bound);
        if (q != 0 && gcd_long(n, q) == 1) return q;
    }
}

struct CoverCase {
    SeifertMatrix v;
    long n;
};

// Random matrices whose n-fold branched cover is a ZHS.
std::vector<CoverCase> cover_cases(const VerifyOptions& opt, long n_lo, long n_hi) {
    std::mt19937_64 rng(opt.seed);
    std::vector<CoverCase> out;
    for (long attempt = 0; static_cast<long>(out.size()) < opt.cases && attempt < 200 * opt.cases; ++attempt) {
        SeifertMatrix v = random_seifert_matrix(rng);
        const long n = uniform(rng, n_lo, n_hi);
        if (cover_h1_order(alexander(v), n) == 1) out.push_back({std::move(v), n});
    }
    return out;
}

struct SurgeryCase {
    SeifertMatrix v;
    long n, q;
    Integer lambdaY;
};

std::vector<SurgeryCase> surgery_cases(const VerifyOptions& opt) {
    std::mt19937_64 rng(opt.seed);
    std::vector<SurgeryCase> out;
    for (long attempt = 0; static_cast<long>(out.size()) < opt.cases && attempt < 200 * opt.cases; ++attempt) {
        SeifertMatrix v = random_seifert_matrix(rng);
        const long n = uniform(rng, 1, 6);
        const long q = random_q(rng, n, 6);
        const long lambda = uniform(rng, -5, 5);
        if (cover_h1_order(alexander(v), n) == 1) out.push_back({std::move(v), n, q, Integer(lambda)});
    }
    return out;
}

std::string surgery_input(const SurgeryCase& c) {
    std::ostringstream s;
    s << "n=" << c.n << " q=" << c.q << " lambdaY=" << to_string(c.lambdaY) << " V=" << encode(c.v);
    return s.str();
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> names{"galois", "arf-cover", "rohlin", "boyer-nicas", "pillowcase", "brieskorn"};
    return names;
}

VerifyReport verify_galois(const VerifyOptions& opt) {
    Battery b("galois", opt.seed);
    for (const CoverCase& c : cover_cases(opt, 2, 6)) {
        b.check("n=" + std::to_string(c.n) + " V=" + encode(c.v), [&]() -> std::string {
            const GaloisReport g = galois_check(alexander(c.v), c.n);
            if (!g.pass) return "D(-1)=" + to_string(g.D_at_minus1) + " d(-1)=" + to_string(g.d_at_minus1);
            return "";
        });
    }
    return b.finish();
}

VerifyReport verify_arf_cover(const VerifyOptions& opt) {
    Battery b("arf-cover", opt.seed);
    for (const CoverCase& c : cover_cases(opt, 2, 6)) {
        b.check("n=" + std::to_string(c.n) + " V=" + encode(c.v), [&]() -> std::string {
            const ArfCoverReport r = arf_cover_check(c.v, c.n);
            if (!r.pass) return "arf(k)=" + std::to_string(r.arf_knot) + " arf(k_n)=" + std::to_string(r.arf_cover);
            return "";
        });
    }
    return b.finish();
}

VerifyReport verify_rohlin(const VerifyOptions& opt) {
    Battery b("rohlin", opt.seed);
    for (const SurgeryCase& c : surgery_cases(opt)) {
        b.check(surgery_input(c), [&]() -> std::string {
            const SignatureEvaluator ev(c.v);
            const RohlinReport r = rohlin_reduction_check(c.n, c.q, c.lambdaY, ev);
            if (!r.pass) return "lhs=" + std::to_string(r.lhs) + " rhs=" + std::to_string(r.rhs);
            const Integer via = casson_surgery(c.lambdaY, ev.alexander().delta, c.q);
            if (rohlin_from_casson(via) != rohlin_surgery(rohlin_from_casson(c.lambdaY), c.q, arf(c.v)))
                return "Rohlin surgery formula disagrees with the Casson surgery formula";
            if (c.n == 1 && eq_casson_free(1, c.q, c.lambdaY, ev) != via) return "n = 1 does not reduce to casson_surgery";
            return "";
        });
    }
    return b.finish();
}

VerifyReport verify_boyer_nicas(const VerifyOptions& opt) {
    Battery b("boyer-nicas", opt.seed);
    for (const SurgeryCase& c : surgery_cases(opt)) {
        b.check(surgery_input(c), [&]() -> std::string {
            const SignatureEvaluator ev(c.v);
            const Rational tau(eq_casson_free(c.n, c.q, c.lambdaY, ev));
            const Rational l0 = boyer_nicas(0, c.n, c.q, c.lambdaY, ev).value;
            Rational sum = l0;
            if (c.n % 2 == 0) sum += boyer_nicas(1, c.n, c.q, c.lambdaY, ev).value;
            if (sum != tau) return "lambda_w sum " + to_string(sum) + " != lambda_tau " + to_string(tau);
            const LambdaBarReport bar = lambda_bar(c.n, c.q, c.lambdaY, ev);
            if (!bar.relation_holds) return "n * lambda_bar = " + to_string(Rational(c.n) * bar.lambda_bar);
            const EquivariantReport rep = equivariant_report(c.n, c.q, c.lambdaY, ev);
            if (rep.lambda_tau != tau || rep.lefschetz != 2 * tau) return "equivariant report inconsistent";
            return "";
        });
    }
    return b.finish();
}

VerifyReport verify_pillowcase(const VerifyOptions& opt) {
    Battery b("pillowcase", opt.seed);
    const std::array<std::pair<long, long>, 4> knots{{{2, 3}, {2, 5}, {3, 4}, {2, 7}}};
    for (auto [p, pq] : knots) {
        const PillowcaseCurve curve = torus_knot_curve(p, pq, Hand::Right);
        const PillowcaseCurve image = apply_sigma(curve);
        const SignatureEvaluator ev(seifert_matrix_of_closure(torus_knot(p, pq, Hand::Right)));
        const Integer d2 = second_derivative_at_one(ev.alexander().delta);
        b.check(curve.knot_tag + " structure", [&]() -> std::string {
            if (!is_sigma_invariant(curve)) return "curve is not sigma-invariant";
            if (static_cast<long>(curve.arcs.size()) != (p - 1) * (pq - 1)) return "wrong arc count";
            if (abs(intersect(curve, psi_pi_circle())) != 2 * d2) return "psi = pi count is not 2 Delta''(1)";
            return "";
        });
        for (long n = 1; n <= 8; ++n)
            for (long q = -8; q <= 8; ++q) {
                if (q == 0 || gcd_long(n, q) != 1) continue;
                for (int w = 0; w <= (n % 2 == 0 ? 1 : 0); ++w) {
                    std::ostringstream in;
                    in << curve.knot_tag << " n=" << n << " q=" << q << " w=" << w;
                    b.check(in.str(), [&]() -> std::string {
                        std::optional<std::string> count_err, formula_err;
                        Rational count, formula;
                        try {
                            count = pillowcase_lambda(curve, n, q, w);
                            if (!decomposition_check(curve, n, q, w)) return "decomposition fails";
                            if (intersect_line(image, n, q, w) != intersect_line(curve, n, q, w))
                                return "sigma changes the line count";
                        } catch (const DomainError& e) {
                            count_err = e.name();
                        }
                        try {
                            formula = boyer_nicas(w, n, q, 0, ev).value;
                        } catch (const DomainError& e) {
                            formula_err = e.name();
                        }
                        // both sides excluded: a degenerate level meets an arc endpoint
                        if (count_err && formula_err) return "";
                        if (count_err) return "count raised " + *count_err;
                        if (formula_err) return "boyer_nicas raised " + *formula_err;
                        if (count != formula) return "count gives " + to_string(count) + ", formula " + to_string(formula);
                        return "";
                    });
                }
            }
    }
    return b.finish();
}

VerifyReport verify_brieskorn(const VerifyOptions& opt) {
    Battery b("brieskorn", opt.seed);
    const long m = opt.max_entry;
    std::map<std::pair<long, long>, std::unique_ptr<SignatureEvaluator>> evals;
    auto torus = [&](long p, long q) -> const SignatureEvaluator& {
        auto& slot = evals[{p, q}];
        if (!slot) slot = std::make_unique<SignatureEvaluator>(seifert_matrix_of_closure(torus_knot(p, q, Hand::Right)));
        return *slot;
    };
    auto triple = [](long p, long q, long r) {
        return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
    };

    // permutation symmetry
    for (long p = 2; p <= m; ++p)
        for (long q = p + 1; q <= m; ++q)
            for (long r = q + 1; r <= m; ++r) {
                if (gcd_long(p, q) != 1 || gcd_long(p, r) != 1 || gcd_long(q, r) != 1) continue;
                b.check("permute " + triple(p, q, r), [&]() -> std::string {
                    std::array<long, 3> t{p, q, r};
                    const Integer ref = casson_brieskorn(torus(p, q), r);
                    do {
                        const Integer v = casson_brieskorn(torus(t[0], t[1]), t[2]);
                        if (v != ref) return triple(t[0], t[1], t[2]) + " gives " + to_string(v) + " vs " + to_string(ref);
                    } while (std::next_permutation(t.begin(), t.end()));
                    return "";
                });
            }

    // lambda(p, q, r + pq) = lambda(p, q, r) - Delta''/2, and the free formula at q = -1
    for (long p = 2; p <= m; ++p)
        for (long q = p + 1; q <= m; ++q) {
            if (gcd_long(p, q) != 1) continue;
            for (long r = 1; r <= m; ++r) {
                if (gcd_long(r, p * q) != 1) continue;
                b.check("surgery " + triple(p, q, r), [&]() -> std::string {
                    const SignatureEvaluator& ev = torus(p, q);
                    const Integer half = second_derivative_at_one(ev.alexander().delta) / 2;
                    const Integer lo = r == 1 ? Integer(0) : casson_brieskorn(ev, r);
                    const Integer hi = casson_brieskorn(ev, r + p * q);
                    if (hi != lo - half) return "lambda(r + pq) = " + to_string(hi) + ", expected " + to_string(Integer(lo - half));
                    if (p <= 5 && q <= 5) {
                        const Integer free = eq_casson_free(r, -1, 0, ev);
                        if (free != hi) return "free formula gives " + to_string(free);
                    }
                    const long res = mod_floor(r, p * q);
                    if (res == 1 || res == p * q - 1) {
                        const Integer path = casson_brieskorn_by_surgery({p, q, r});
                        if (path != lo) return "iterated surgery gives " + to_string(path);
                    }
                    return "";
                });
            }
        }
    return b.finish();
}

std::vector<VerifyReport> verify(const std::string& suite, const VerifyOptions& opt) {
    static const std::map<std::string, VerifyReport (*)(const VerifyOptions&)> table{
        {"galois", verify_galois},         {"arf-cover", verify_arf_cover},
        {"rohlin", verify_rohlin},         {"boyer-nicas", verify_boyer_nicas},
        {"pillowcase", verify_pillowcase}, {"brieskorn", verify_brieskorn},
    };
    std::vector<VerifyReport> out;
    if (suite == "all") {
        for (const std::string& name : verify_suites()) out.push_back(table.at(name)(opt));
        return out;
    }
    auto it = table.find(suite);
    if (it == table.end()) throw DomainError(ErrorCode::InvalidInput, "unknown suite " + suite);
    out.push_back(it->second(opt));
    return out;
}

}  // namespace eqc
