#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "infhecke/center.hpp"
#include "infhecke/derivations.hpp"
#include "infhecke/errors.hpp"
#include "infhecke/expr.hpp"
#include "infhecke/oracle.hpp"
#include "infhecke/render.hpp"
#include "infhecke/structure.hpp"

namespace {

using namespace infhecke;

struct Common {
    std::string zText = "0";
    std::string format = "plain";
    std::size_t maxBasisSize = 1287;
};

void addCommon(CLI::App* sub, Common& c) {
    sub->add_option("--z", c.zText, "deformation parameter z as a polynomial in D (default 0)");
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    sub->add_option("--max-basis-size", c.maxBasisSize,
                    "resource guard for oracle basis sizes");
}

DeltaPoly parseZ(const Common& c) { return evaluateDelta(parse(c.zText)); }

std::string fmtPoly(const NcPoly& p, const Common& c, const DeltaPoly& z) {
    if (c.format == "latex") return renderLatex(p);
    if (c.format == "json") return polyJson(p, z).dump();
    return renderPlain(p);
}

std::string fmtDelta(const DeltaPoly& q, const Common& c) {
    return c.format == "latex" ? renderLatex(q) : renderPlain(q);
}

int cmdNf(const Common& c, const std::string& exprText) {
    DeltaPoly z = parseZ(c);
    Algebra algebra(z);
    NcPoly p = evaluate(parse(exprText), algebra);
    std::cout << fmtPoly(p, c, z) << "\n";
    return 0;
}

int cmdComm(const Common& c, const std::string& aText, const std::string& bText) {
    DeltaPoly z = parseZ(c);
    Algebra algebra(z);
    NcPoly p = algebra.commutator(evaluate(parse(aText), algebra),
                                  evaluate(parse(bText), algebra));
    std::cout << fmtPoly(p, c, z) << "\n";
    return 0;
}

int cmdCenter(const Common& c) {
    DeltaPoly z = parseZ(c);
    Algebra algebra(z);
    CentralElementResult r = centralElement(algebra);
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["z"] = renderPlain(z);
        j["omega"] = renderPlain(r.omega);
        j["tz"] = nlohmann::ordered_json{{"terms", termsJson(r.tz)}};
        std::cout << j.dump() << "\n";
        return 0;
    }
    const bool latex = c.format == "latex";
    // Structured form first (the Delta-part stays in D), then the PBW form.
    std::string t = latex ? "ey^{2} + hxy - fx^{2}" : "ey^2 + hxy - fx^2";
    if (!z.isZero()) t += " - 1/2 h (" + fmtDelta(z, c) + ")";
    DeltaPoly minusOmega = -r.omega;
    if (!minusOmega.isZero()) t += " + (" + fmtDelta(minusOmega, c) + ")";
    std::cout << "t_z = " << t << "\n";
    std::cout << "omega = " << fmtDelta(r.omega, c) << "\n";
    std::cout << "normal form: " << (latex ? renderLatex(r.tz) : renderPlain(r.tz)) << "\n";
    return 0;
}

int cmdVerifyCenter(const Common& c) {
    DeltaPoly z = parseZ(c);
    Algebra algebra(z);
    CentralElementResult r = centralElement(algebra);
    auto bad = verifyCentral(r.tz, algebra);
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["z"] = renderPlain(z);
        j["central"] = bad.empty();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& [g, p] : bad)
            arr.push_back({{"generator", std::string(1, genName(g))}, {"terms", termsJson(p)}});
        j["violations"] = arr;
        std::cout << j.dump() << "\n";
    } else if (bad.empty()) {
        std::cout << "verified: [t_z, g] = 0 for all g in {e,f,h,x,y}\n";
    } else {
        for (const auto& [g, p] : bad)
            std::cout << "[t_z, " << genName(g) << "] = " << renderPlain(p) << "\n";
    }
    return bad.empty() ? 0 : 1;
}

int cmdFnGn(const Common& c, unsigned n) {
    if (c.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (unsigned k = 1; k <= n; ++k) {
            auto [f, g] = fnGn(k);
            rows.push_back({{"n", k}, {"f", renderPlain(f)}, {"g", renderPlain(g)}});
        }
        std::cout << nlohmann::ordered_json{{"rows", rows}}.dump() << "\n";
        return 0;
    }
    for (unsigned k = 1; k <= n; ++k) {
        auto [f, g] = fnGn(k);
        if (c.format == "latex")
            std::cout << "f_{" << k << "} = " << renderLatex(f) << ", g_{" << k
                      << "} = " << renderLatex(g) << "\n";
        else
            std::cout << k << ": f = " << renderPlain(f) << ", g = " << renderPlain(g) << "\n";
    }
    return 0;
}

int cmdCentralizer(const Common& c, int maxDegree, bool fullCenter) {
    DeltaPoly z = parseZ(c);
    Algebra algebra(z);
    OracleLimits limits{c.maxBasisSize};
    std::vector<NcPoly> basis = fullCenter ? centerBrute(maxDegree, algebra, limits)
                                           : gCentralizer(maxDegree, algebra, limits);

    // Containment one way: the monomials Delta^i t_z^j (t_z^j alone for the
    // full center) of total degree <= maxDegree lie in the kernel span.
    // (Equality can genuinely fail: combinations like
    // t_z^2 - 1/2 Delta^2 t_z + ... drop in total degree.)
    const NcPoly tz = centralElement(algebra).tz;
    std::vector<NcPoly> monomialSpan;
    for (int j = 0;; ++j) {
        NcPoly tzj = algebra.pow(tz, unsigned(j));
        if (!tzj.isZero() && maxTotalDegree(tzj) > maxDegree) break;
        for (int i = 0;; ++i) {
            NcPoly v = algebra.multiply(expandDelta(DeltaPoly::power(unsigned(i))), tzj);
            if (maxTotalDegree(v) > maxDegree) break;
            monomialSpan.push_back(std::move(v));
            if (fullCenter) break;  // constants only: i = 0
        }
    }
    SpanVerdict verdict = compareSpan(monomialSpan, basis);
    bool monomialsInside =
        verdict == SpanVerdict::Equal || verdict == SpanVerdict::FirstInSecond;

    // Containment the other way, through the rewriting engine: every kernel
    // element is a polynomial in t_z over C[Delta], with constant
    // coefficients when the full center was requested.
    bool inCenterAlgebra = true;
    for (const NcPoly& p : basis) {
        try {
            NcPoly rebuilt;
            for (const auto& term : expressInCenter(p, algebra)) {
                if (fullCenter && !term.gamma.isConstant()) inCenterAlgebra = false;
                rebuilt += algebra.multiply(expandDelta(term.gamma),
                                            algebra.pow(tz, term.power));
            }
            if (!(rebuilt == p)) inCenterAlgebra = false;
        } catch (const std::exception&) {
            inCenterAlgebra = false;
        }
    }
    const bool verified = monomialsInside && inCenterAlgebra;

    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["z"] = renderPlain(z);
        j["max_degree"] = maxDegree;
        j["mode"] = fullCenter ? "center" : "g-centralizer";
        j["dimension"] = basis.size();
        j["monomial_span_dimension"] = spanRank(monomialSpan);
        j["span_verdict"] = spanVerdictName(verdict);
        j["in_center_algebra"] = inCenterAlgebra;
        j["verified"] = verified;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : basis) arr.push_back(termsJson(p));
        j["basis"] = arr;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (fullCenter ? "center" : "g-centralizer") << " at degree <= "
                  << maxDegree << " (z = " << fmtDelta(z, c) << ")\n";
        std::cout << "dimension = " << basis.size() << "\n";
        std::cout << (fullCenter ? "t_z^j" : "D^i t_z^j") << " monomial span dimension = "
                  << spanRank(monomialSpan) << " (" << spanVerdictName(verdict) << ")\n";
        std::cout << "every basis element is a polynomial in t_z over "
                  << (fullCenter ? "constants" : "C[D]") << ": "
                  << (inCenterAlgebra ? "yes" : "NO") << "\n";
        std::cout << "verdict = " << (verified ? "verified" : "FAILED") << "\n";
        for (const auto& p : basis)
            std::cout << "  " << (c.format == "latex" ? renderLatex(p) : renderPlain(p)) << "\n";
    }
    return verified ? 0 : 1;
}

int cmdMaximal(const Common& c, int maxDegree) {
    DeltaPoly z = parseZ(c);
    Algebra algebra(z);
    Weight1Report rep = weight1MaximalBasis(maxDegree, algebra, OracleLimits{c.maxBasisSize});
    if (c.format == "json") {
        nlohmann::ordered_json j;
        j["max_degree"] = rep.maxDegree;
        j["kernel_dimension"] = rep.kernelBasis.size();
        j["generated_dimension"] = spanRank(rep.generatedBasis);
        j["verdict"] = spanVerdictName(rep.verdict);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "weight-1 maximal vectors at degree <= " << rep.maxDegree << "\n";
        std::cout << "oracle kernel dimension = " << rep.kernelBasis.size() << "\n";
        std::cout << "generated span dimension = " << spanRank(rep.generatedBasis) << "\n";
        std::cout << "verdict = " << spanVerdictName(rep.verdict) << "\n";
    }
    return rep.verdict == SpanVerdict::Equal ? 0 : 1;
}

int cmdDerivationCheck(const Common& c, bool euler, const std::string& imagesFile) {
    DeltaPoly z = parseZ(c);
    Algebra algebra(z);
    DerivationSpec d;
    if (euler) {
        d.image(Gen::X) = NcPoly::gen(Gen::X);
        d.image(Gen::Y) = NcPoly::gen(Gen::Y);
    } else {
        std::ifstream in(imagesFile);
        if (!in) throw std::invalid_argument("cannot open images file: " + imagesFile);
        nlohmann::json j = nlohmann::json::parse(in);
        for (Gen g : kGens) {
            std::string key(1, genName(g));
            if (j.contains(key))
                d.image(g) = evaluate(parse(j.at(key).get<std::string>()), algebra);
        }
    }
    auto violations = checkDerivation(d, algebra);
    if (c.format == "json") {
        nlohmann::ordered_json out;
        out["z"] = renderPlain(z);
        out["derivation"] = violations.empty();
        auto arr = nlohmann::ordered_json::array();
        for (const auto& v : violations)
            arr.push_back({{"relation", v.relation}, {"defect", termsJson(v.defect)}});
        out["violations"] = arr;
        std::cout << out.dump() << "\n";
    } else if (violations.empty()) {
        std::cout << "derivation: all defining relations satisfied\n";
    } else {
        for (const auto& v : violations)
            std::cout << "violated " << v.relation << ": defect = " << renderPlain(v.defect)
                      << "\n";
    }
    return violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic computation in the infinitesimal Hecke algebra H_z of sl2"};
    app.require_subcommand(1);

    Common c;

    std::string nfExpr;
    CLI::App* nf = app.add_subcommand("nf", "PBW normal form of an expression");
    nf->add_option("expr", nfExpr, "expression")->required();
    addCommon(nf, c);

    std::string commA, commB;
    CLI::App* comm = app.add_subcommand("comm", "commutator of two expressions");
    comm->add_option("expr1", commA)->required();
    comm->add_option("expr2", commB)->required();
    addCommon(comm, c);

    CLI::App* center = app.add_subcommand("center", "print t_z and omega_z");
    addCommon(center, c);

    CLI::App* verify = app.add_subcommand("verify-center", "check [t_z, g] = 0 symbolically");
    addCommon(verify, c);

    unsigned fngnN = 1;
    CLI::App* fngn = app.add_subcommand("fngn", "table of (f_k, g_k)");
    fngn->add_option("--n", fngnN, "largest row")->required();
    addCommon(fngn, c);

    int centDegree = 4;
    bool fullCenter = false;
    CLI::App* centralizer = app.add_subcommand("centralizer", "oracle centralizer/center bases");
    centralizer->add_option("--max-degree", centDegree, "total-degree bound")->required();
    centralizer->add_flag("--full-center", fullCenter, "joint kernel of all five ad operators");
    addCommon(centralizer, c);

    int maxDegree = 3;
    CLI::App* maximal = app.add_subcommand("maximal", "weight-1 maximal vector report (z = 0)");
    maximal->add_option("--max-degree", maxDegree, "total-degree bound")->required();
    addCommon(maximal, c);

    bool euler = false;
    std::string imagesFile;
    CLI::App* deriv = app.add_subcommand("derivation-check", "Leibniz check of generator images");
    deriv->add_flag("--euler", euler, "the Euler images x -> x, y -> y");
    deriv->add_option("--images", imagesFile, "JSON file of generator images");
    addCommon(deriv, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (nf->parsed()) return cmdNf(c, nfExpr);
        if (comm->parsed()) return cmdComm(c, commA, commB);
        if (center->parsed()) return cmdCenter(c);
        if (verify->parsed()) return cmdVerifyCenter(c);
        if (fngn->parsed()) return cmdFnGn(c, fngnN);
        if (centralizer->parsed()) return cmdCentralizer(c, centDegree, fullCenter);
        if (maximal->parsed()) return cmdMaximal(c, maxDegree);
        if (deriv->parsed()) {
            if (int(euler) + int(!imagesFile.empty()) != 1)
                throw std::invalid_argument("derivation-check needs exactly one of --euler / --images");
            return cmdDerivationCheck(c, euler, imagesFile);
        }
    } catch (const SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
