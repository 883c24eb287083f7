#include "qbethe/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qbethe/char_constructors.hpp"

namespace qbethe {

namespace {

long long binomial(int n, int k) {
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

// chi_q(N^+_{1,u}) in A1 is the 2-dimensional evaluation character; the
// eigenvalue substitution sends its two monomials to the two summands of the
// TQ relation. Verified symbolically on the exact side.
bool two_term_substitution_check() {
    RootData rd("A1");
    SpectralPoint u("u", 0);
    QChar chi = nplus_char(1, u, rd, 4);
    if (chi.terms().size() != 2) return false;
    LMonomial first, second;  // X_{1,uq^{-2}} X_{1,u}^{-1} and X_{1,uq^2} X_{1,u}^{-1}
    first.mul_x(1, u.shifted(-2), 1);
    first.mul_x(1, u, -1);
    second.mul_x(1, u.shifted(2), 1);
    second.mul_x(1, u, -1);
    return chi.terms().count(first) == 1 && chi.terms().count(second) == 1;
}

}  // namespace

SpectrumReport spectrum_report(const ChainSpec& chain) {
    if (!chain.is_a1())
        throw std::invalid_argument("spectrum_report: chain must be type A1");
    int length = chain.length();
    if (length > 8) throw std::invalid_argument("spectrum_report: L capped at 8");

    RootData rd("A1");
    auto [a, d] = chain.ad_polynomials(rd, 1);
    Complex p = chain.twist_p(rd, 1);
    Complex q = chain.q;

    SpectrumReport rep;
    rep.seed = chain.seed;
    rep.sector_counts.assign(length + 1, 0);
    rep.distinct_states.assign(length + 1, 0);
    rep.near_string_states.assign(length + 1, 0);
    rep.expected_counts.resize(length + 1);
    for (int n = 0; n <= length; ++n) rep.expected_counts[n] = static_cast<int>(binomial(length, n));

    auto modes = diagonalize_and_interpolate(chain);

    // held-out points for the Q-vs-interpolation comparison
    std::vector<Complex> check_points = {Complex(0.531, 0.214), Complex(-0.87, 0.349),
                                         Complex(1.73, -0.605)};

    std::vector<std::vector<std::vector<Complex>>> roots_by_sector(length + 1);
    bool all_rows_ok = true;
    for (const auto& mode : modes) {
        SpectrumRow row;
        row.sector = mode.sector;
        row.lambda = mode.lambda;
        row.heldout_residual = mode.heldout_residual;
        ++rep.sector_counts[mode.sector];

        QRecovery rec = recover_q(mode.lambda, a, d, p, mode.sector, q);
        row.q_poly = rec.q_poly;
        row.tq_residual = rec.residual;
        row.roots = rec.q_poly.roots();

        bool ok = rec.ok && mode.heldout_residual < 1e-8 &&
                  static_cast<int>(row.roots.size()) == mode.sector;

        BetheState st;
        st.roots[1] = row.roots;
        st.q_polys[1] = rec.q_poly;
        auto res = check_bae(st, chain, rd, true);
        row.bae_residuals = res[1];
        for (const auto& zeta : row.roots) {
            Complex num1 = a.eval(zeta) * rec.q_poly.eval(zeta / (q * q));
            Complex num2 = p * d.eval(zeta) * rec.q_poly.eval(zeta * q * q);
            double denom = std::abs(num1) + std::abs(num2);
            row.root_tq_residuals.push_back(std::abs(num1 + num2) / std::max(denom, 1e-30));
        }
        for (const auto& zeta : row.roots) {
            double mag = 0;
            Complex pw = 1, val = 0;
            for (const auto& qc : rec.q_poly.coeffs()) {
                val += qc * pw;
                mag += std::abs(qc * pw);
                pw *= zeta;
            }
            row.root_eval_residuals.push_back(std::abs(val) / std::max(mag, 1e-30));
        }
        for (size_t i = 0; i < row.roots.size(); ++i)
            for (size_t j = 0; j < row.roots.size(); ++j)
                if (i != j && std::abs(row.roots[i] / row.roots[j] - q * q) < 1e-4)
                    row.near_string = true;
        for (double r : row.root_eval_residuals) ok = ok && r < 1e-10;

        std::map<int, PolyU> qp{{1, rec.q_poly}};
        double mismatch = 0, scale = 0;
        for (const auto& u : check_points) {
            try {
                Complex from_q = eigenvalue_from_q(qp, chain, rd, 1, u);
                Complex interp = mode.lambda.eval(u);
                mismatch = std::max(mismatch, std::abs(from_q - interp));
                scale = std::max(scale, std::abs(interp));
            } catch (const std::runtime_error&) {
                ok = false;
            }
        }
        row.lambda_mismatch = mismatch / std::max(scale, 1e-30);
        ok = ok && row.lambda_mismatch < 1e-8;

        if (row.near_string) ++rep.near_string_states[mode.sector];
        if (ok && mode.sector > 0) roots_by_sector[mode.sector].push_back(row.roots);
        row.ok = ok;
        all_rows_ok = all_rows_ok && ok;
        rep.rows.push_back(std::move(row));
    }

    // completeness: deduplicate root sets per sector (solve_bae seeded by the
    // recovered roots confirms each is a genuine Bethe state)
    double scale = 0;
    for (const auto& f : chain.factors) scale = std::max(scale, std::abs(f.b));
    scale = std::max(scale, 1.0);
    rep.distinct_states[0] = 1;
    for (int n = 1; n <= length; ++n) {
        std::vector<std::vector<Complex>> dedup;
        for (const auto& rs : roots_by_sector[n]) {
            bool dup = false;
            for (const auto& prev : dedup) {
                double dist = 0;
                for (size_t k = 0; k < rs.size(); ++k)
                    dist = std::max(dist, std::abs(rs[k] - prev[k]));
                if (dist < 1e-6 * scale) dup = true;
            }
            if (!dup) dedup.push_back(rs);
        }
        rep.distinct_states[n] = static_cast<int>(dedup.size());
    }

    rep.sector_counts_ok = rep.sector_counts == rep.expected_counts;
    rep.completeness_ok = rep.distinct_states == rep.expected_counts;
    rep.substitution_two_terms_ok = two_term_substitution_check();
    rep.all_ok = all_rows_ok && rep.sector_counts_ok && rep.completeness_ok &&
                 rep.substitution_two_terms_ok;
    return rep;
}

std::string SpectrumReport::to_json_string() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["sector"] = row.sector;
        r["Q_coeffs"] = nlohmann::json::array();
        for (const auto& c : row.q_poly.coeffs()) r["Q_coeffs"].push_back({c.real(), c.imag()});
        r["roots"] = nlohmann::json::array();
        for (const auto& z : row.roots) r["roots"].push_back({z.real(), z.imag()});
        r["bae_residuals"] = row.bae_residuals;
        r["root_tq_residuals"] = row.root_tq_residuals;
        r["root_eval_residuals"] = row.root_eval_residuals;
        r["near_string"] = row.near_string;
        r["heldout_residual"] = row.heldout_residual;
        r["tq_residual"] = row.tq_residual;
        r["lambda_mismatch"] = row.lambda_mismatch;
        r["ok"] = row.ok;
        j["rows"].push_back(r);
    }
    j["sector_counts"] = sector_counts;
    j["distinct_states"] = distinct_states;
    j["near_string_states"] = near_string_states;
    j["expected_counts"] = expected_counts;
    j["sector_counts_ok"] = sector_counts_ok;
    j["completeness_ok"] = completeness_ok;
    j["substitution_two_terms_ok"] = substitution_two_terms_ok;
    j["all_ok"] = all_ok;
    return j.dump(2);
}

std::string SpectrumReport::to_text() const {
    std::ostringstream os;
    os << "sector  degQ  heldout      tq_resid     max_bae      max_root     mismatch     ok\n";
    for (const auto& row : rows) {
        double max_bae = 0;
        for (double r : row.bae_residuals) max_bae = std::max(max_bae, r);
        double max_root = 0;
        for (double r : row.root_tq_residuals) max_root = std::max(max_root, r);
        os << "  " << row.sector << "     " << row.q_poly.degree() << "    ";
        auto num = [&](double v) {
            std::ostringstream t;
            t.precision(3);
            t << std::scientific << v;
            std::string s = t.str();
            s.resize(13, ' ');
            return s;
        };
        os << num(row.heldout_residual) << num(row.tq_residual) << num(max_bae) << num(max_root)
           << num(row.lambda_mismatch) << (row.ok ? "yes" : "NO") << "\n";
    }
    os << "sector counts:";
    for (int c : sector_counts) os << " " << c;
    int n_strings = 0;
    for (int c : near_string_states) n_strings += c;
    if (n_strings) os << "; near-string states: " << n_strings;
    os << " (expected";
    for (int c : expected_counts) os << " " << c;
    os << ")\ncompleteness: " << (completeness_ok ? "ok" : "FAILED")
       << ", two-term substitution: " << (substitution_two_terms_ok ? "ok" : "FAILED")
       << ", all: " << (all_ok ? "ok" : "FAILED") << "\n";
    return os.str();
}

}  // namespace qbethe
