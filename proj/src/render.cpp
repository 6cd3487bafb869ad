#include "infhecke/render.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <vector>

namespace infhecke {

namespace {

// Display order: x-block terms first, then y-block, matching how the
// commutator tables are written ("2hx - 3x + 4ey"); inside a block, higher
// degree first, then h before f before e ("h^2 + 4fe + 2h").
bool displayLess(const Monomial& a, const Monomial& b) {
    int da = a.totalDegree(), db = b.totalDegree();
    return std::tie(a.x, a.y, da, a.h, a.f, a.e) > std::tie(b.x, b.y, db, b.h, b.f, b.e);
}

std::string monoString(const Monomial& m, bool latex) {
    std::string s;
    for (Gen g : kGens) {
        std::uint32_t k = m.exponent(g);
        if (k == 0) continue;
        s += genName(g);
        if (k > 1) s += latex ? ("^{" + std::to_string(k) + "}") : ("^" + std::to_string(k));
    }
    return s;
}

std::string coeffString(const Rational& c, bool latex) {
    if (!latex || c.get_den() == 1) return ratStr(c);
    Rational a = abs(c);
    std::string s = c < 0 ? "-" : "";
    return s + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string renderNc(const NcPoly& p, bool latex) {
    if (p.isZero()) return "0";
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return displayLess(a.first, b.first); });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool neg = c < 0;
        Rational a = abs(c);
        std::string body = monoString(m, latex);
        std::string coeff;
        if (body.empty() || a != 1) coeff = coeffString(a, latex);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += coeff + body;
    }
    return out;
}

std::string renderDelta(const DeltaPoly& q, bool latex) {
    if (q.isZero()) return "0";
    const std::string var = latex ? "\\Delta" : "D";
    std::string out;
    bool first = true;
    for (int k = q.degree(); k >= 0; --k) {
        Rational c = q.coeff(unsigned(k));
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational a = abs(c);
        std::string body;
        if (k >= 1) body = var;
        if (k >= 2) body += latex ? ("^{" + std::to_string(k) + "}") : ("^" + std::to_string(k));
        std::string coeff;
        if (body.empty() || a != 1) coeff = coeffString(a, latex);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? "-" : "+";
        }
        out += coeff + body;
    }
    return out;
}

}  // namespace

std::string renderPlain(const NcPoly& p) { return renderNc(p, false); }
std::string renderLatex(const NcPoly& p) { return renderNc(p, true); }
std::string renderPlain(const DeltaPoly& q) { return renderDelta(q, false); }
std::string renderLatex(const DeltaPoly& q) { return renderDelta(q, true); }

nlohmann::ordered_json termsJson(const NcPoly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["f"] = m.f;
        t["h"] = m.h;
        t["e"] = m.e;
        t["y"] = m.y;
        t["x"] = m.x;
        t["coeff"] = ratStr(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

nlohmann::ordered_json polyJson(const NcPoly& p, const DeltaPoly& z) {
    nlohmann::ordered_json j;
    j["z"] = renderPlain(z);
    j["terms"] = termsJson(p);
    return j;
}

}  // namespace infhecke
