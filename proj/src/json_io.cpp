#include "qbethe/json_io.hpp"

namespace qbethe {

json to_json(const LMonomial& m) {
    json arr = json::array();
    for (const auto& [key, e] : m.xexp()) {
        arr.push_back({{"node", key.first},
                       {"base", key.second.base},
                       {"qexp", key.second.qexp},
                       {"exp", e}});
    }
    for (const auto& [node, b] : m.yexp()) {
        arr.push_back({{"ynode", node}, {"num", b.num}, {"den", b.den}});
    }
    return arr;
}

LMonomial lmonomial_from_json(const json& j) {
    LMonomial m;
    for (const auto& entry : j) {
        if (entry.contains("ynode")) {
            m.mul_y(entry.at("ynode").get<int>(),
                    Rational(entry.at("num").get<long long>(), entry.at("den").get<long long>()));
        } else {
            m.mul_x(entry.at("node").get<int>(),
                    SpectralPoint(entry.at("base").get<std::string>(), entry.at("qexp").get<int>()),
                    entry.at("exp").get<int>());
        }
    }
    return m;
}

json to_json(const QChar& x) {
    json terms = json::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back({{"monomial", to_json(m)}, {"coeff", c.to_string()}});
    json j;
    j["head"] = to_json(x.head());
    if (x.depth() == kDepthInf)
        j["depth"] = "inf";
    else
        j["depth"] = x.depth();
    j["terms"] = terms;
    return j;
}

QChar qchar_from_json(const json& j) {
    int depth = kDepthInf;
    if (!j.at("depth").is_string()) depth = j.at("depth").get<int>();
    QChar x(lmonomial_from_json(j.at("head")), depth);
    for (const auto& t : j.at("terms"))
        x.add_term(lmonomial_from_json(t.at("monomial")), BigInt(t.at("coeff").get<std::string>()));
    return x;
}

json to_json(const CollapsedChar& c) {
    json terms = json::array();
    for (const auto& [beta, coeff] : c.terms)
        terms.push_back({{"alpha_coords", beta}, {"coeff", coeff.to_string()}});
    json j;
    j["head"] = to_json(c.head);
    if (c.depth == kDepthInf)
        j["depth"] = "inf";
    else
        j["depth"] = c.depth;
    j["terms"] = terms;
    return j;
}

json to_json(const DominanceResult& r, const RootData& rd) {
    json j;
    j["dominant"] = r.dominant;
    if (r.witness) {
        json yf = json::array(), xf = json::array();
        for (const auto& [node, pt, e] : r.witness->y_factors)
            yf.push_back({{"node", node}, {"base", pt.base}, {"qexp", pt.qexp}, {"exp", e}});
        for (const auto& [node, pt, e] : r.witness->x_factors)
            xf.push_back({{"node", node}, {"base", pt.base}, {"qexp", pt.qexp}, {"exp", e}});
        j["witness"] = {{"Y", yf},
                        {"X", xf},
                        {"reassembled", to_json(r.witness->reassemble(rd))}};
    }
    return j;
}

json to_json(const TQReport& r) {
    auto term_list = [](const std::map<LMonomial, BigInt>& terms) {
        json arr = json::array();
        for (const auto& [m, c] : terms)
            arr.push_back({{"monomial", to_json(m)}, {"coeff", c.to_string()}});
        return arr;
    };
    return json{{"type", r.type},
                {"i", r.node},
                {"depth", r.depth},
                {"exact_equal", r.exact_equal},
                {"conjectural_barchi", r.conjectural_barchi},
                {"lhs_terms", term_list(r.lhs)},
                {"rhs_terms", term_list(r.rhs)},
                {"diff_terms", term_list(r.diff)}};
}

}  // namespace qbethe
