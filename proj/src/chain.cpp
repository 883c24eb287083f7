#include "qbethe/chain.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace qbethe {

bool ChainSpec::is_a1() const {
    for (const auto& f : factors)
        if (f.node != 1) return false;
    return twist.size() == 1;
}

Complex ChainSpec::twist_p(const RootData& rd, int i) const {
    if (static_cast<int>(twist.size()) != rd.rank())
        throw std::invalid_argument("ChainSpec: twist length does not match rank");
    Complex p = 1.0;
    for (int j = 1; j <= rd.rank(); ++j) {
        int c = rd.cartan(j, i);
        for (int k = 0; k < std::abs(c); ++k) p = c > 0 ? p * twist[j - 1] : p / twist[j - 1];
    }
    return p;
}

void ChainSpec::validate_q() const {
    if (std::abs(q) < 1e-12) throw std::invalid_argument("ChainSpec: q must be nonzero");
    Complex qm = 1.0;
    for (int m = 1; m <= 24; ++m) {
        qm *= q;
        if (std::abs(qm - Complex(1.0)) < 1e-9)
            throw std::invalid_argument("ChainSpec: q is a root of unity (order " +
                                        std::to_string(m) + ")");
    }
}

void ChainSpec::validate() const {
    if (factors.empty()) throw std::invalid_argument("ChainSpec: at least one factor required");
    validate_q();
    for (const auto& t : twist)
        if (std::abs(t) < 1e-12) throw std::invalid_argument("ChainSpec: twist must be nonzero");
    for (const auto& f : factors)
        if (std::abs(f.b) < 1e-12)
            throw std::invalid_argument("ChainSpec: inhomogeneity must be nonzero");
}

std::pair<PolyU, PolyU> ChainSpec::ad_polynomials(const RootData& rd, int i) const {
    Complex qi = std::pow(q, rd.symmetrizer(i));
    PolyU a = PolyU::one(), d = PolyU::one();
    for (const auto& f : factors) {
        if (f.node != i) continue;
        a = a * PolyU({-f.b, qi});
        d = d * PolyU({-qi * f.b, Complex(1.0)});
    }
    return {a, d};
}

std::string ChainSpec::to_json_string() const {
    nlohmann::json j;
    j["q"] = {q.real(), q.imag()};
    j["twist"] = nlohmann::json::array();
    for (const auto& t : twist) j["twist"].push_back({t.real(), t.imag()});
    j["factors"] = nlohmann::json::array();
    for (const auto& f : factors)
        j["factors"].push_back({{"node", f.node}, {"b", {f.b.real(), f.b.imag()}}});
    j["seed"] = seed;
    return j.dump();
}

ChainSpec ChainSpec::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ChainSpec c;
    c.q = Complex(j.at("q")[0].get<double>(), j.at("q")[1].get<double>());
    for (const auto& t : j.at("twist"))
        c.twist.push_back(Complex(t[0].get<double>(), t[1].get<double>()));
    for (const auto& f : j.at("factors")) {
        ChainFactor cf;
        cf.node = f.at("node").get<int>();
        cf.b = Complex(f.at("b")[0].get<double>(), f.at("b")[1].get<double>());
        c.factors.push_back(cf);
    }
    if (j.contains("seed")) c.seed = j.at("seed").get<uint64_t>();
    c.validate();
    return c;
}

ChainSpec ChainSpec::default_a1(int length) {
    ChainSpec c;
    c.q = Complex(0.8, 0.0);
    // p = \tilde p^2 for A1; pick the principal square root of 0.6 + 0.5i
    c.twist = {std::sqrt(Complex(0.6, 0.5))};
    c.factors.assign(length, ChainFactor{1, Complex(1.0, 0.0)});
    c.seed = 20240601;
    return c;
}

}  // namespace qbethe
