#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "eqc/braid.hpp"
#include "eqc/casson.hpp"
#include "eqc/equivariant.hpp"
#include "eqc/errors.hpp"
#include "eqc/io.hpp"
#include "eqc/pillowcase.hpp"
#include "eqc/verify.hpp"

namespace eqc::cli {

namespace {

using io::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<long, long> parse_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError(std::string(what) + " expects two integers a,b");
    try {
        std::size_t used1 = 0, used2 = 0;
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        const long x = std::stol(a, &used1), y = std::stol(b, &used2);
        if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument(text);
        return {x, y};
    } catch (const std::logic_error&) {
        throw UsageError(std::string(what) + " expects two integers a,b");
    }
}

struct KnotArgs {
    std::string torus, hand = "right", braid, seifert;

    void attach(CLI::App* app) {
        app->add_option("--torus", torus, "torus knot p,q");
        app->add_option("--hand", hand, "right or left (with --torus)");
        app->add_option("--braid", braid, "braid word, \"N | 1 -2 1\" or \"strands: N; word: s1 s2^-1\"");
        app->add_option("--seifert", seifert, "file holding {\"matrix\": [[...]]}");
    }

    int given() const { return !torus.empty() + !braid.empty() + !seifert.empty(); }

    SeifertMatrix matrix() const {
        if (given() != 1) throw UsageError("give exactly one of --torus, --braid, --seifert");
        if (!torus.empty()) {
            auto [p, q] = parse_pair(torus, "--torus");
            return seifert_matrix_of_closure(torus_knot(p, q, parse_hand(hand)));
        }
        if (!braid.empty()) return seifert_matrix_of_closure(BraidWord::parse(braid));
        return io::read_seifert_file(seifert);
    }
};

// {"matrix": ...} | {"braid": "..."} | {"torus": [p, q], "hand": "..."}
SeifertMatrix knot_from_json(const ordered_json& k) {
    if (!k.is_object()) throw DomainError(ErrorCode::InvalidInput, "knot reference must be an object");
    if (k.contains("matrix")) return io::parse_seifert(k);
    if (k.contains("braid") && k["braid"].is_string())
        return seifert_matrix_of_closure(BraidWord::parse(k["braid"].get<std::string>()));
    if (k.contains("torus") && k["torus"].is_array() && k["torus"].size() == 2) {
        const Hand h = k.contains("hand") ? parse_hand(k["hand"].get<std::string>()) : Hand::Right;
        return seifert_matrix_of_closure(torus_knot(k["torus"][0].get<long>(), k["torus"][1].get<long>(), h));
    }
    throw DomainError(ErrorCode::InvalidInput, "unrecognized knot reference");
}

struct SurgeryArgs {
    KnotArgs knot;
    std::string spec, lambdaY = "0";
    long n = 1, q = 1;

    void attach(CLI::App* app, bool with_n) {
        knot.attach(app);
        app->add_option("--spec", spec, "SurgerySpec document {lambdaY, knot, n, q}");
        app->add_option("--lambdaY", lambdaY, "Casson invariant of Y");
        if (with_n) app->add_option("--n", n, "cover degree");
        app->add_option("--q", q, "surgery denominator");
    }

    struct Resolved {
        SeifertMatrix v;
        Integer lambdaY;
        long n, q;
    };

    Resolved resolve() const {
        if (!spec.empty()) {
            if (knot.given() != 0) throw UsageError("--spec cannot be combined with a knot option");
            std::ifstream in(spec);
            if (!in) throw DomainError(ErrorCode::InvalidInput, "cannot read " + spec);
            std::stringstream buf;
            buf << in.rdbuf();
            const ordered_json doc = ordered_json::parse(buf.str(), nullptr, false);
            if (doc.is_discarded() || !doc.is_object() || !doc.contains("knot"))
                throw DomainError(ErrorCode::InvalidInput, spec + " is not a SurgerySpec document");
            Resolved r{knot_from_json(doc["knot"]), Integer(doc.value("lambdaY", 0L)), doc.value("n", 1L),
                       doc.value("q", 1L)};
            SurgerySpec{r.lambdaY, r.v, r.n, r.q}.validate();
            return r;
        }
        Resolved r{knot.matrix(), parse_integer(lambdaY), n, q};
        SurgerySpec{r.lambdaY, r.v, r.n, r.q}.validate();
        return r;
    }
};

ordered_json verify_json(const VerifyReport& r) {
    ordered_json failures = ordered_json::array();
    for (const VerifyFailure& f : r.failures) failures.push_back({{"input", f.input}, {"reason", f.reason}});
    return {{"suite", r.suite},
            {"seed", r.seed},
            {"cases", r.cases},
            {"failures", failures}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact knot and Casson-type invariants", "eqc"};
    app.require_subcommand(1);
    ordered_json doc;
    int status = 0;

    // alexander
    KnotArgs alex_knot;
    auto* alex = app.add_subcommand("alexander", "normalized Alexander polynomial");
    alex_knot.attach(alex);
    alex->callback([&] { doc["alexander"] = io::laurent(alexander(alex_knot.matrix()).poly()); });

    // signature
    KnotArgs sig_knot;
    std::string sig_alpha;
    long sig_sum = 0;
    bool sig_averaged = false;
    auto* sig = app.add_subcommand("signature", "Tristram-Levine signature");
    sig_knot.attach(sig);
    sig->add_option("--alpha", sig_alpha, "level m/n");
    sig->add_option("--sum", sig_sum, "sum over the levels m/n, 0 <= m < n");
    sig->add_flag("--averaged", sig_averaged, "mean of one-sided limits at a degenerate level");
    sig->callback([&] {
        if (sig_alpha.empty() == (sig_sum == 0)) throw UsageError("give exactly one of --alpha, --sum");
        const SignatureEvaluator ev(sig_knot.matrix());
        if (sig_sum != 0) {
            if (sig_averaged) throw UsageError("--averaged applies to --alpha only");
            doc["signature_sum"] = ev.signature_sum(sig_sum);
        } else if (sig_averaged) {
            doc["averaged_sign"] = io::rational(ev.averaged_signature(SignatureLevel::parse(sig_alpha)));
        } else {
            doc["sign"] = ev.signature(SignatureLevel::parse(sig_alpha));
        }
    });

    // arf
    KnotArgs arf_knot;
    auto* arfc = app.add_subcommand("arf", "Arf invariant");
    arf_knot.attach(arfc);
    arfc->callback([&] { doc["arf"] = arf(arf_knot.matrix()); });

    // foxcover
    KnotArgs fox_knot;
    long fox_n = 1;
    auto* fox = app.add_subcommand("foxcover", "Alexander polynomial of the lifted knot");
    fox_knot.attach(fox);
    fox->add_option("--n", fox_n, "cover degree")->required();
    fox->callback([&] {
        const NormalizedKnotPoly d = alexander(fox_knot.matrix());
        doc["cover_h1_order"] = io::count(cover_h1_order(d, fox_n));
        doc["foxcover"] = io::laurent(fox_cover_polynomial(d, fox_n).poly());
    });

    // galois
    KnotArgs gal_knot;
    long gal_n = 1;
    auto* gal = app.add_subcommand("galois", "Galois product lemma check");
    gal_knot.attach(gal);
    gal->add_option("--n", gal_n, "cover degree")->required();
    gal->callback([&] {
        const GaloisReport g = galois_check(alexander(gal_knot.matrix()), gal_n);
        doc["D_at_minus1"] = io::integer(g.D_at_minus1);
        doc["d_at_minus1"] = io::integer(g.d_at_minus1);
        doc["ratio_residue"] = g.ratio_residue ? ordered_json(*g.ratio_residue) : ordered_json(nullptr);
        doc["nu_square"] = g.nu_square;
        doc["equal"] = g.equal;
        doc["pass"] = g.pass;
    });

    // casson
    auto* cas = app.add_subcommand("casson", "Casson invariants");
    cas->require_subcommand(1);
    std::vector<long> triple;
    auto* bries = cas->add_subcommand("brieskorn", "Brieskorn sphere Sigma(p,q,r)");
    bries->add_option("triple", triple, "p q r, pairwise coprime")->expected(3)->required();
    bries->callback([&] {
        doc["lambda"] = io::integer(casson_brieskorn(BrieskornTriple{triple[0], triple[1], triple[2]}));
    });
    SurgeryArgs surg;
    auto* surgc = cas->add_subcommand("surgery", "lambda(Y + (1/q) k)");
    surg.attach(surgc, false);
    surgc->callback([&] {
        const auto r = surg.resolve();
        if (r.n != 1) throw DomainError(ErrorCode::InvalidInput, "Casson surgery needs n = 1");
        doc["lambda"] = io::integer(casson_surgery(r.lambdaY, alexander(r.v), r.q));
    });

    // eqcasson
    auto* eqc_cmd = app.add_subcommand("eqcasson", "equivariant Casson invariant");
    eqc_cmd->require_subcommand(1);
    KnotArgs br_knot;
    long br_n = 1;
    std::string br_lambda = "0";
    auto* branched = eqc_cmd->add_subcommand("branched", "n-fold branched cover");
    br_knot.attach(branched);
    branched->add_option("--n", br_n, "cover degree")->required();
    branched->add_option("--lambda", br_lambda, "Casson invariant of the quotient");
    branched->callback([&] {
        if (br_n < 1) throw DomainError(ErrorCode::InvalidInput, "n must be positive");
        doc["lambda_tau"] = io::rational(eq_casson_branched(br_n, parse_integer(br_lambda), br_knot.matrix()));
    });
    SurgeryArgs free_args;
    auto* freec = eqc_cmd->add_subcommand("free", "free action on Y + (n/q) k");
    free_args.attach(freec, true);
    freec->callback([&] {
        const auto r = free_args.resolve();
        const SignatureEvaluator ev(r.v);
        eq_casson_free(r.n, r.q, r.lambdaY, ev);
        doc = io::equivariant(equivariant_report(r.n, r.q, r.lambdaY, ev));
    });

    // boyernicas
    SurgeryArgs bn_args;
    int bn_w = 0;
    auto* bn = app.add_subcommand("boyernicas", "lambda_w on the quotient");
    bn_args.attach(bn, true);
    bn->add_option("--w", bn_w, "0 or 1");
    bn->callback([&] {
        if (bn_w != 0 && bn_w != 1) throw UsageError("--w must be 0 or 1");
        const auto r = bn_args.resolve();
        const BoyerNicasValue v = boyer_nicas(bn_w, r.n, r.q, r.lambdaY, r.v);
        doc["lambda_w"] = io::rational(v.value);
        doc["hypothesis_flags"] = io::flags(v.flags);
    });

    // lambdabar
    SurgeryArgs lb_args;
    auto* lb = app.add_subcommand("lambdabar", "averaged invariant and its relation to lambda_w");
    lb_args.attach(lb, true);
    lb->callback([&] {
        const auto r = lb_args.resolve();
        const LambdaBarReport rep = lambda_bar(r.n, r.q, r.lambdaY, r.v);
        doc["lambda_bar"] = io::rational(rep.lambda_bar);
        doc["lambda0"] = io::rational(rep.lambda0);
        doc["lambda1"] = rep.lambda1 ? io::rational(*rep.lambda1) : ordered_json(nullptr);
        doc["relation_holds"] = rep.relation_holds;
    });

    // mubar
    KnotArgs mu_knot;
    auto* mu = app.add_subcommand("mubar", "mu-bar invariant of the branch knot");
    mu_knot.attach(mu);
    mu->callback([&] { doc["mu_bar"] = io::integer(mu_bar(mu_knot.matrix())); });

    // lefschetz
    std::string lf_lambda = "0", lf_ranks;
    std::optional<long> lf_grading;
    auto* lf = app.add_subcommand("lefschetz", "Floer Lefschetz number");
    lf->add_option("--lambda-tau", lf_lambda, "equivariant Casson invariant")->required();
    lf->add_option("--ranks", lf_ranks, "Floer ranks b1,b3,b5,b7");
    lf->add_option("--grading", lf_grading, "report the sign of tau_* on this grading");
    lf->callback([&] {
        const Integer lt = parse_integer(lf_lambda);
        doc["lefschetz"] = io::integer(floer_lefschetz(lt));
        if (!lf_ranks.empty()) {
            std::vector<long> b;
            std::stringstream ss(lf_ranks);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    b.push_back(std::stol(item));
                } catch (const std::logic_error&) {
                    throw UsageError("--ranks expects four integers");
                }
            }
            if (b.size() != 4 || std::any_of(b.begin(), b.end(), [](long x) { return x < 0; }))
                throw UsageError("--ranks expects four nonnegative integers");
            doc["check"] = seifert_lefschetz_check(b[0], b[1], b[2], b[3], lt);
        }
        if (lf_grading) doc["grading_sign"] = grading_sign(*lf_grading);
    });

    // pillowcase
    auto* pc = app.add_subcommand("pillowcase", "pillowcase curves of torus knots");
    pc->require_subcommand(1);
    std::string pc_torus, pc_hand = "right";
    auto torus_curve = [&] {
        if (pc_torus.empty()) throw UsageError("--torus p,q is required");
        auto [p, q] = parse_pair(pc_torus, "--torus");
        return torus_knot_curve(p, q, parse_hand(pc_hand));
    };
    auto* pc_curve = pc->add_subcommand("curve", "arc list in the torus double cover");
    for (auto* sub : {pc_curve}) {
        sub->add_option("--torus", pc_torus, "p,q")->required();
        sub->add_option("--hand", pc_hand, "right or left");
    }
    pc_curve->callback([&] { doc["curve"] = io::curve(torus_curve()); });

    std::string cnt_line, cnt_phi, cnt_union;
    bool cnt_psi = false;
    auto* pc_count = pc->add_subcommand("count", "oriented intersection count");
    pc_count->add_option("--torus", pc_torus, "p,q")->required();
    pc_count->add_option("--hand", pc_hand, "right or left");
    pc_count->add_option("--line", cnt_line, "n,q,w: the line psi = w - (n/q) phi");
    pc_count->add_option("--phi", cnt_phi, "the circle phi = x (units of pi)");
    pc_count->add_flag("--psi-pi", cnt_psi, "the circle psi = pi");
    pc_count->add_option("--union", cnt_union, "n,w: circles where the line meets psi = 0");
    pc_count->callback([&] {
        const int chosen = !cnt_line.empty() + !cnt_phi.empty() + cnt_psi + !cnt_union.empty();
        if (chosen != 1) throw UsageError("give exactly one of --line, --phi, --psi-pi, --union");
        const PillowcaseCurve c = torus_curve();
        if (!cnt_line.empty()) {
            std::vector<long> v;
            std::stringstream ss(cnt_line);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    v.push_back(std::stol(item));
                } catch (const std::logic_error&) {
                    throw UsageError("--line expects n,q,w");
                }
            }
            if (v.size() != 3) throw UsageError("--line expects n,q,w");
            doc["count"] = io::count(intersect_line(c, v[0], v[1], static_cast<int>(v[2])));
        } else if (!cnt_phi.empty()) {
            doc["count"] = io::count(intersect_circle(c, CircleKind::PhiEquals, parse_rational(cnt_phi)));
        } else if (cnt_psi) {
            doc["count"] = io::count(intersect_circle(c, CircleKind::PsiEqualsPi));
        } else {
            auto [n, w] = parse_pair(cnt_union, "--union");
            doc["count"] = io::count(intersect_circle_union(c, n, static_cast<int>(w)));
        }
    });

    long chk_n = 1, chk_q = 1;
    int chk_w = 0;
    auto* pc_check = pc->add_subcommand("check", "decomposition and agreement with lambda_w");
    pc_check->add_option("--torus", pc_torus, "p,q")->required();
    pc_check->add_option("--hand", pc_hand, "right or left");
    pc_check->add_option("--n", chk_n, "cover degree")->required();
    pc_check->add_option("--q", chk_q, "surgery denominator")->required();
    pc_check->add_option("--w", chk_w, "0 or 1");
    pc_check->callback([&] {
        const PillowcaseCurve c = torus_curve();
        auto [p, q] = parse_pair(pc_torus, "--torus");
        const SeifertMatrix v = seifert_matrix_of_closure(torus_knot(p, q, parse_hand(pc_hand)));
        const Rational from_count = pillowcase_lambda(c, chk_n, chk_q, chk_w);
        const Rational formula = boyer_nicas(chk_w, chk_n, chk_q, 0, v).value;
        doc["count"] = io::count(intersect_line(c, chk_n, chk_q, chk_w));
        doc["calibrated_sign"] = calibrated_sign();
        doc["decomposition"] = decomposition_check(c, chk_n, chk_q, chk_w);
        doc["lambda_from_count"] = io::rational(from_count);
        doc["boyer_nicas"] = io::rational(formula);
        doc["agree"] = from_count == formula;
        if (!doc["decomposition"].get<bool>() || !doc["agree"].get<bool>()) status = 1;
    });

    // verify
    std::string suite;
    VerifyOptions vopt;
    auto* ver = app.add_subcommand("verify", "run an invariant battery");
    ver->add_option("suite", suite, "galois, arf-cover, rohlin, boyer-nicas, pillowcase, brieskorn or all")
        ->required();
    ver->add_option("--seed", vopt.seed, "random seed");
    ver->add_option("--cases", vopt.cases, "random cases per battery");
    ver->add_option("--max", vopt.max_entry, "largest Brieskorn entry");
    ver->callback([&] {
        const auto& names = verify_suites();
        if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
            throw UsageError("unknown suite " + suite);
        const auto start = std::chrono::steady_clock::now();
        const std::vector<VerifyReport> reports = verify(suite, vopt);
        ordered_json body = ordered_json::array();
        ordered_json timing = ordered_json::object();
        long failures = 0;
        for (const VerifyReport& r : reports) {
            body.push_back(verify_json(r));
            timing[r.suite] = r.wall_seconds;
            failures += static_cast<long>(r.failures.size());
        }
        timing["total"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        doc["report"] = reports.size() == 1 ? body[0] : body;
        doc["timing"] = timing;
        if (failures > 0) status = 1;
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        out << ordered_json{{"error", e.name()}, {"detail", e.detail()}}.dump() << "\n";
        err << e.name() << ": " << e.detail() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    out << doc.dump() << "\n";
    return status;
}

}  // namespace eqc::cli
