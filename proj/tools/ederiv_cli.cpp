// Command line front end: loads a session file, dispatches one subcommand,
// and emits a human-readable report followed by a fenced machine-readable
// JSON block. Exit status: 0 all checks passed, 1 a check failed, 2 bad
// input or hypothesis violation.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ederiv/claims.hpp"
#include "ederiv/errors.hpp"
#include "ederiv/image.hpp"
#include "ederiv/mzlab.hpp"
#include "ederiv/normalize.hpp"
#include "ederiv/parser.hpp"
#include "ederiv/resonance.hpp"
#include "ederiv/session.hpp"

using nlohmann::json;
using namespace ederiv;

namespace {

constexpr const char* kReportBegin = "=== BEGIN EDERIV-REPORT-JSON ===";
constexpr const char* kReportEnd = "=== END EDERIV-REPORT-JSON ===";

void emit_report(const json& j) {
    std::cout << kReportBegin << "\n" << j.dump(2) << "\n" << kReportEnd << "\n";
}

struct CommonArgs {
    std::string session_path;
    unsigned conductor = 0;   // 0 = take from session / default
    unsigned variables = 0;
    std::optional<std::uint32_t> degree;
    std::optional<std::uint32_t> slack;
    std::optional<std::uint32_t> power;
    std::optional<std::uint32_t> multiplier;

    std::optional<SessionSpec> session;

    void load() {
        if (!session_path.empty()) session = SessionSpec::from_file(session_path);
    }
    FieldPtr field() const {
        if (conductor > 0) return CyclotomicField::create(conductor);
        if (session) return session->field();
        return CyclotomicField::create(1);
    }
    std::uint32_t degree_or(std::uint32_t fallback) const {
        if (degree) return *degree;
        if (session && session->options.degree) return *session->options.degree;
        return fallback;
    }
    std::uint32_t power_or(std::uint32_t fallback) const {
        if (power) return *power;
        if (session && session->options.power) return *session->options.power;
        return fallback;
    }
    std::uint32_t multiplier_or(std::uint32_t fallback) const {
        if (multiplier) return *multiplier;
        if (session && session->options.multiplier)
            return *session->options.multiplier;
        return fallback;
    }
    std::optional<std::uint32_t> slack_opt() const {
        if (slack) return slack;
        if (session && session->options.slack) return session->options.slack;
        return std::nullopt;
    }
    MapVariant require_map() const {
        if (!session)
            throw InputError("this command needs a session file (--session)");
        auto m = session->build_map();
        if (!m) throw InputError("the session file does not define a map");
        return *m;
    }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--session,-s", args.session_path, "session JSON file");
    cmd->add_option("--conductor,-N", args.conductor,
                    "cyclotomic conductor (overrides session)");
    cmd->add_option("--variables,-n", args.variables, "number of variables");
    cmd->add_option("--degree,-d", args.degree, "degree bound");
    cmd->add_option("--slack", args.slack, "extra preimage degree for filtered images");
    cmd->add_option("--power,-M", args.power, "power bound");
    cmd->add_option("--multiplier,-B", args.multiplier, "multiplier degree bound");
}

json map_json(const MapVariant& m) {
    json j;
    if (std::holds_alternative<EDerivation>(m)) {
        j["kind"] = "endomorphism";
        json imgs = json::array();
        for (const auto& p : std::get<EDerivation>(m).phi.images) imgs.push_back(p.str());
        j["polynomials"] = imgs;
    } else {
        j["kind"] = "derivation";
        json cs = json::array();
        for (const auto& p : std::get<Derivation>(m).coeffs) cs.push_back(p.str());
        j["polynomials"] = cs;
    }
    return j;
}

json verdict_json(const MembershipVerdict& v) {
    json j;
    j["status"] = v.status_name();
    j["residue"] = v.residue.str();
    if (v.witness) j["witness"] = v.witness->str();
    return j;
}

int run_member(CommonArgs& args, const std::string& poly_src) {
    const MapVariant map = args.require_map();
    const RingPtr ring = map_ring(map);
    const Polynomial q = parse_polynomial(poly_src, ring);
    const std::uint32_t d = args.degree_or(
        q.degree() < 0 ? 1 : static_cast<std::uint32_t>(q.degree()));
    const ImageBasis basis(map, d, args.slack_opt());
    const auto verdict = member(basis, q);

    std::cout << "membership of " << q.str() << " (degree bound " << d;
    if (!basis.degree_preserving()) std::cout << ", slack " << basis.slack();
    std::cout << ")\n";
    std::cout << "verdict: " << verdict.status_name() << "\n";
    bool witness_valid = true;
    if (verdict.status == MembershipVerdict::Status::In) {
        std::cout << "witness: " << verdict.witness->str() << "\n";
        witness_valid = apply_map(map, *verdict.witness) == q;
        std::cout << "witness validates: " << (witness_valid ? "yes" : "NO") << "\n";
    } else {
        std::cout << "residue: " << verdict.residue.str() << "\n";
    }

    json rep;
    rep["command"] = "member";
    rep["map"] = map_json(map);
    rep["query"] = q.str();
    rep["degree"] = d;
    rep["slack"] = basis.slack();
    rep["verdict"] = verdict_json(verdict);
    rep["witness_valid"] = witness_valid;
    emit_report(rep);
    return witness_valid ? 0 : 1;
}

int run_image(CommonArgs& args) {
    const MapVariant map = args.require_map();
    const std::uint32_t d = args.degree_or(4);
    const ImageBasis basis(map, d, args.slack_opt());

    json rep;
    rep["command"] = "image";
    rep["map"] = map_json(map);
    rep["degree"] = d;
    rep["degree_preserving"] = basis.degree_preserving();
    rep["slack"] = basis.slack();
    std::cout << (basis.degree_preserving()
                      ? "per-degree image slices (exact)"
                      : "filtered image slices (contains the image of the "
                        "low-degree part; may undershoot)")
              << "\n";
    json degrees = json::array();
    for (std::uint32_t e = 0; e <= d; ++e) {
        json slice;
        slice["degree"] = e;
        slice["rank"] = basis.rank_at(e);
        slice["dimension"] = slice_dimension(map_ring(map)->nvars, e);
        std::cout << "degree " << e << ": rank " << basis.rank_at(e) << " of "
                  << slice_dimension(map_ring(map)->nvars, e) << "\n";
        degrees.push_back(slice);
    }
    json rows = json::array();
    for (const auto& r : basis.rows_up_to_degree(d)) rows.push_back(r.str());
    rep["slices"] = degrees;
    rep["basis"] = rows;
    emit_report(rep);
    return 0;
}

int run_ideal_test(CommonArgs& args, const std::vector<std::string>& gens) {
    const MapVariant map = args.require_map();
    const RingPtr ring = map_ring(map);
    if (gens.empty()) throw InputError("ideal-test needs at least one --generator");
    std::vector<Polynomial> generators;
    for (const auto& g : gens) generators.push_back(parse_polynomial(g, ring));
    const std::uint32_t d = args.degree_or(4);
    const ImageBasis basis(map, d, args.slack_opt());
    const auto report = ideal_slice_test(basis, generators);

    std::cout << "ideal slice test up to degree " << d << ": "
              << (report.pass ? "pass" : "FAIL") << "\n";
    if (!report.pass) std::cout << report.detail << "\n";

    json rep;
    rep["command"] = "ideal-test";
    rep["map"] = map_json(map);
    rep["degree"] = d;
    json gj = json::array();
    for (const auto& g : generators) gj.push_back(g.str());
    rep["generators"] = gj;
    rep["pass"] = report.pass;
    if (report.first_failure) rep["first_failure_degree"] = *report.first_failure;
    rep["detail"] = report.detail;
    emit_report(rep);
    return report.pass ? 0 : 1;
}

int run_compare(CommonArgs& args, const std::string& other_path) {
    const MapVariant a = args.require_map();
    const SessionSpec other = SessionSpec::from_file(other_path);
    const auto b = other.build_map();
    if (!b) throw InputError("the second session file does not define a map");
    const std::uint32_t d = args.degree_or(4);
    const ImageBasis ba(a, d, args.slack_opt());
    const ImageBasis bb(*b, d, args.slack_opt());
    const auto report = compare_images(ba, bb);

    std::cout << "image comparison up to degree " << d << ": "
              << (report.pass ? "equal" : "DIFFER") << "\n";
    if (!report.pass) std::cout << report.detail << "\n";

    json rep;
    rep["command"] = "compare";
    rep["map_a"] = map_json(a);
    rep["map_b"] = map_json(*b);
    rep["degree"] = d;
    rep["equal"] = report.pass;
    if (report.first_failure) rep["first_discrepancy_degree"] = *report.first_failure;
    rep["detail"] = report.detail;
    emit_report(rep);
    return report.pass ? 0 : 1;
}

int run_normalize(CommonArgs& args) {
    const MapVariant map = args.require_map();
    json rep;
    rep["command"] = "normalize";
    rep["map"] = map_json(map);

    PolyAutomorphism sigma = PolyAutomorphism::identity(map_ring(map));
    MapVariant normalized = map;
    NormalizationCertificate cert;
    if (std::holds_alternative<Derivation>(map)) {
        auto norm = linearize_triangular_derivation(std::get<Derivation>(map));
        sigma = norm.sigma;
        normalized = MapVariant{norm.normalized};
        cert = norm.certificate;
    } else {
        const EDerivation& delta = std::get<EDerivation>(map);
        const bool affine2 = map_ring(map)->nvars == 2 &&
                             is_filtration_preserving(map);
        if (affine2) {
            auto norm = normalize_affine_dim2(delta);
            sigma = norm.sigma;
            normalized = MapVariant{norm.normalized};
            cert = norm.certificate;
        } else {
            auto norm = shift_to_origin(delta);
            sigma = norm.sigma;
            normalized = MapVariant{norm.normalized};
            cert = norm.certificate;
        }
    }

    std::cout << "certificate: " << cert.kind << "\n";
    std::cout << "sigma:\n";
    const RingPtr ring = map_ring(map);
    for (std::size_t i = 0; i < ring->nvars; ++i)
        std::cout << "  x" << i + 1 << " -> " << sigma.forward().images[i].str() << "\n";
    std::cout << "sigma^-1:\n";
    for (std::size_t i = 0; i < ring->nvars; ++i)
        std::cout << "  x" << i + 1 << " -> " << sigma.inverse().images[i].str() << "\n";
    std::cout << "normalized map:\n";
    const auto& polys = std::holds_alternative<EDerivation>(normalized)
                            ? std::get<EDerivation>(normalized).phi.images
                            : std::get<Derivation>(normalized).coeffs;
    for (std::size_t i = 0; i < polys.size(); ++i)
        std::cout << "  x" << i + 1 << " -> " << polys[i].str() << "\n";
    for (const auto& note : cert.notes) std::cout << "note: " << note << "\n";

    json sj = json::array(), ij = json::array();
    for (const auto& pimg : sigma.forward().images) sj.push_back(pimg.str());
    for (const auto& pimg : sigma.inverse().images) ij.push_back(pimg.str());
    rep["sigma"] = sj;
    rep["sigma_inverse"] = ij;
    rep["normalized"] = map_json(normalized);
    json cj;
    cj["kind"] = cert.kind;
    json eig = json::array();
    for (const auto& s : cert.eigenvalues) eig.push_back(s.str());
    cj["eigenvalues"] = eig;
    json consts = json::array();
    for (const auto& s : cert.constants) consts.push_back(s.str());
    cj["constants"] = consts;
    json cpolys = json::array();
    for (const auto& cp : cert.coefficient_polys) cpolys.push_back(cp.str());
    cj["coefficient_polys"] = cpolys;
    if (cert.principal_generator)
        cj["principal_generator"] = cert.principal_generator->str();
    cj["notes"] = cert.notes;
    rep["certificate"] = cj;

    const bool exact = conjugate(map, sigma) == normalized;
    rep["conjugation_exact"] = exact;
    std::cout << "conjugation identity: " << (exact ? "exact" : "FAILED") << "\n";
    emit_report(rep);
    return exact ? 0 : 1;
}

int run_radical_scan(CommonArgs& args, const std::vector<std::string>& extra) {
    const MapVariant map = args.require_map();
    const RingPtr ring = map_ring(map);
    const std::uint32_t d = args.degree_or(3);
    const std::uint32_t M = args.power_or(6);
    std::vector<Polynomial> extras;
    for (const auto& s : extra) extras.push_back(parse_polynomial(s, ring));
    const auto scan = radical_scan(map, d, M, kRadicalDegreeCap, extras);

    json rep;
    rep["command"] = "radical-scan";
    rep["map"] = map_json(map);
    rep["degree"] = d;
    rep["power"] = M;
    rep["truncated"] = scan.any_truncation;
    json results = json::array();
    for (const auto& r : scan.results) {
        json e;
        e["candidate"] = r.candidate.str();
        e["verdict"] = r.verdict == RadicalScan::Verdict::Evidence      ? "in-radical-evidence"
                       : r.verdict == RadicalScan::Verdict::Excluded    ? "excluded"
                                                                        : "inconclusive";
        if (r.failing_power) e["failing_power"] = *r.failing_power;
        e["tested_up_to"] = r.tested_up_to;
        if (r.truncated) e["truncated"] = true;
        results.push_back(e);
        std::cout << r.candidate.str() << ": " << e["verdict"].get<std::string>();
        if (r.failing_power) std::cout << " at m = " << *r.failing_power;
        std::cout << "\n";
    }
    if (scan.any_truncation)
        std::cout << "note: scan truncated at power degree cap " << scan.hard_cap << "\n";
    rep["results"] = results;
    emit_report(rep);
    return 0;
}

int run_mz_check(CommonArgs& args) {
    const MapVariant map = args.require_map();
    const std::uint32_t d = args.degree_or(2);
    const std::uint32_t M = args.power_or(6);
    const std::uint32_t B = args.multiplier_or(2);
    const auto report = mz_spot_check(map, d, M, B);

    std::cout << "Mathieu-Zhao tail spot check (a up to degree " << d << ", b up to degree "
              << B << ", window m = " << B + 1 << ".." << M << ")\n";
    if (report.empty_premise)
        std::cout << "premise set empty: no monomial has all powers in the image\n";
    else
        std::cout << "premise monomials: " << report.premise_count
                  << ", pairs checked: " << report.pairs_checked
                  << ", undecided: " << report.undecided << "\n";
    std::cout << (report.pass ? "pass" : "FAIL: " + report.first_violation) << "\n";

    json rep;
    rep["command"] = "mz-check";
    rep["map"] = map_json(map);
    rep["degree"] = d;
    rep["power"] = M;
    rep["multiplier"] = B;
    rep["empty_premise"] = report.empty_premise;
    rep["premise_count"] = report.premise_count;
    rep["pairs_checked"] = report.pairs_checked;
    rep["undecided"] = report.undecided;
    rep["pass"] = report.pass;
    rep["first_violation"] = report.first_violation;
    emit_report(rep);
    return report.pass ? 0 : 1;
}

int run_verify(CommonArgs& args, const std::string& claim,
               const std::vector<std::string>& lambdas,
               const std::vector<std::string>& generators, bool exploratory) {
    ClaimParams params;
    if (args.session) params = args.session->claim_params();
    if (args.conductor > 0) params.field = CyclotomicField::create(args.conductor);
    if (!params.field) params.field = CyclotomicField::create(1);
    if (args.variables > 0) params.nvars = args.variables;
    if (args.degree) params.degree = *args.degree;
    if (args.power) params.power = *args.power;
    if (args.multiplier) params.multiplier = *args.multiplier;
    if (!lambdas.empty()) params.lambdas = lambdas;
    if (!generators.empty()) params.generators = generators;
    params.exploratory = exploratory;

    std::string id = claim;
    if (id.empty() && args.session && args.session->options.claim)
        id = *args.session->options.claim;
    if (id.empty()) throw InputError("verify needs --claim or a session claim option");

    const auto report = verify_claim(id, params);
    std::cout << "claim " << report.id << ": " << report.instantiation << "\n";
    if (report.exploratory) std::cout << "(exploratory run: hypothesis gate overridden)\n";
    for (const auto& c : report.checks) {
        std::cout << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) std::cout << " -- " << c.detail;
        std::cout << "\n";
    }
    std::cout << (report.pass() ? "claim checks passed" : "claim checks FAILED") << "\n";

    json rep;
    rep["command"] = "verify";
    rep["claim"] = report.id;
    rep["instantiation"] = report.instantiation;
    rep["exploratory"] = report.exploratory;
    json checks = json::array();
    for (const auto& c : report.checks) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    rep["checks"] = checks;
    rep["pass"] = report.pass();
    emit_report(rep);
    return report.pass() ? 0 : 1;
}

int run_explore(CommonArgs& args, const std::string& lambda) {
    const FieldPtr field = args.field();
    const Scalar lam = parse_scalar(lambda.empty() ? "1" : lambda, field);
    const std::uint32_t d = args.degree_or(4);
    const std::uint32_t M = args.power_or(6);
    const auto report = conjecture45_explore(lam, d, M);

    std::cout << "radical explorer for the 3-variable chain, lambda = " << lam.str()
              << ", degree <= " << d << ", powers <= " << M << "\n";
    std::cout << "monomials scanned: " << report.scanned << "\n";
    std::cout << "cone minus evidence (must be empty): " << report.cone_minus_evidence.size()
              << "\n";
    std::cout << "evidence minus cone (open direction): "
              << report.evidence_minus_cone.size() << "\n";
    for (const auto& m : report.evidence_minus_cone) std::cout << "  " << m.str() << "\n";

    json rep;
    rep["command"] = "explore-conj45";
    rep["lambda"] = lam.str();
    rep["degree"] = d;
    rep["power"] = M;
    json emc = json::array(), cme = json::array();
    for (const auto& m : report.evidence_minus_cone) emc.push_back(m.str());
    for (const auto& m : report.cone_minus_evidence) cme.push_back(m.str());
    rep["evidence_minus_cone"] = emc;
    rep["cone_minus_evidence"] = cme;
    rep["cone_contained"] = report.cone_contained();
    emit_report(rep);
    return report.cone_contained() ? 0 : 1;
}

int run_resonance(CommonArgs& args, const std::vector<std::string>& lambdas,
                  unsigned bound, bool structured) {
    if (lambdas.empty()) throw InputError("resonance needs at least one --lambda");
    const FieldPtr field = args.field();
    std::vector<Scalar> vals;
    for (const auto& s : lambdas) vals.push_back(parse_scalar(s, field));

    json rep;
    rep["command"] = "resonance";
    json lj = json::array();
    for (const auto& v : vals) lj.push_back(v.str());
    rep["lambdas"] = lj;

    std::optional<std::vector<std::uint32_t>> witness;
    if (structured) {
        std::vector<FactoredEigenvalue> parts;
        for (const auto& v : vals) {
            const auto f = to_factored(v);
            if (!f)
                throw InputError("eigenvalue " + v.str() +
                                 " is not expressible as q * z^j with positive rational q");
            parts.push_back(*f);
        }
        witness = resonance_exists_structured(field, parts);
        rep["mode"] = "structured";
        std::cout << "structured resonance decision (global): ";
    } else {
        witness = resonance_exists_bounded(vals, bound);
        rep["mode"] = "bounded";
        rep["bound"] = bound;
        std::cout << "bounded resonance search (bound " << bound
                  << "; absence is evidence only): ";
    }
    if (witness) {
        std::string w = "(";
        json wj = json::array();
        for (std::size_t i = 0; i < witness->size(); ++i) {
            w += (i ? "," : "") + std::to_string((*witness)[i]);
            wj.push_back((*witness)[i]);
        }
        w += ")";
        std::cout << "witness " << w << "\n";
        rep["witness"] = wj;
    } else {
        std::cout << (structured ? "certified absence" : "no witness within bound") << "\n";
    }
    rep["resonant"] = witness.has_value();
    emit_report(rep);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degree-truncated images of E-derivations and derivations, "
                 "normalizing automorphisms, and Mathieu-Zhao space experiments over "
                 "Q(zeta_N)"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* c_norm = app.add_subcommand("normalize", "construct a conjugating automorphism");
    add_common(c_norm, args);

    auto* c_image = app.add_subcommand("image", "degree-truncated image bases");
    add_common(c_image, args);

    auto* c_member = app.add_subcommand("member", "image membership with witness");
    add_common(c_member, args);
    std::string member_poly;
    c_member->add_option("--poly,-p", member_poly, "query polynomial")->required();

    auto* c_ideal = app.add_subcommand("ideal-test", "image equals ideal, degree by degree");
    add_common(c_ideal, args);
    std::vector<std::string> ideal_gens;
    c_ideal->add_option("--generator,-g", ideal_gens, "ideal generator (repeatable)");

    auto* c_cmp = app.add_subcommand("compare", "compare two image truncations");
    add_common(c_cmp, args);
    std::string other_session;
    c_cmp->add_option("--other", other_session, "second session file")->required();

    auto* c_rad = app.add_subcommand("radical-scan", "bounded radical membership scan");
    add_common(c_rad, args);
    std::vector<std::string> rad_extra;
    c_rad->add_option("--candidate", rad_extra, "extra candidate polynomial (repeatable)");

    auto* c_mz = app.add_subcommand("mz-check", "Mathieu-Zhao tail spot check");
    add_common(c_mz, args);

    auto* c_verify = app.add_subcommand("verify", "run a registered verification case");
    add_common(c_verify, args);
    std::string claim_id;
    std::vector<std::string> claim_lambdas, claim_generators;
    bool exploratory = false;
    c_verify->add_option("--claim,-c", claim_id, "registered case id");
    c_verify->add_option("--lambda,-l", claim_lambdas, "eigenvalue parameter (repeatable)");
    c_verify->add_option("--generator,-g", claim_generators,
                         "radical generator (repeatable)");
    c_verify->add_flag("--exploratory", exploratory,
                       "run outside the hypothesis gate and mark the report");

    auto* c_explore = app.add_subcommand("explore-conj45", "radical explorer for the chain map");
    add_common(c_explore, args);
    std::string explore_lambda;
    c_explore->add_option("--lambda,-l", explore_lambda, "eigenvalue (default 1)");

    auto* c_res = app.add_subcommand("resonance", "multiplicative resonance decision");
    add_common(c_res, args);
    std::vector<std::string> res_lambdas;
    unsigned res_bound = 8;
    bool res_structured = false;
    c_res->add_option("--lambda,-l", res_lambdas, "eigenvalue (repeatable)")->required();
    c_res->add_option("--bound,-b", res_bound, "exponent bound for the bounded search");
    c_res->add_flag("--structured", res_structured,
                    "decide globally via factored form q * z^j");

    CLI11_PARSE(app, argc, argv);

    try {
        args.load();
        if (c_member->parsed()) return run_member(args, member_poly);
        if (c_image->parsed()) return run_image(args);
        if (c_ideal->parsed()) return run_ideal_test(args, ideal_gens);
        if (c_cmp->parsed()) return run_compare(args, other_session);
        if (c_norm->parsed()) return run_normalize(args);
        if (c_rad->parsed()) return run_radical_scan(args, rad_extra);
        if (c_mz->parsed()) return run_mz_check(args);
        if (c_verify->parsed())
            return run_verify(args, claim_id, claim_lambdas, claim_generators, exploratory);
        if (c_explore->parsed()) return run_explore(args, explore_lambda);
        if (c_res->parsed()) return run_resonance(args, res_lambdas, res_bound, res_structured);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ResonantObstruction& e) {
        std::cerr << "resonant obstruction: " << e.what() << "\n";
        return 2;
    } catch (const NormalizationImpossible& e) {
        std::cerr << "normalization impossible: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedField& e) {
        std::cerr << "unsupported field: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
