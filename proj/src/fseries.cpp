#include "qbethe/fseries.hpp"

#include <cmath>
#include <stdexcept>

namespace qbethe {

namespace {

Complex q_number(int m, Complex v) {  // [m]_v
    return (std::pow(v, m) - std::pow(v, -m)) / (v - 1.0 / v);
}

}  // namespace

Complex hr_fundamental(int i, Complex b, int r, int node, Complex q, const RootData& rd) {
    if (r == 0) throw std::invalid_argument("hr_fundamental: r must be nonzero");
    if (node != i) return 0.0;
    Complex qi = std::pow(q, rd.symmetrizer(i));
    if (r > 0) return std::pow(b, r) * q_number(r, qi) / static_cast<double>(r);
    int rr = -r;
    return q_number(rr, qi) / (static_cast<double>(rr) * std::pow(b, rr));
}

Complex hr_mplus(int i, Complex a, int r, int node, Complex q, const RootData& rd) {
    if (r <= 0) throw std::invalid_argument("hr_mplus: positive mode required");
    if (node != i) return 0.0;
    Complex qi = std::pow(q, rd.symmetrizer(i));
    return -std::pow(a, r) / (static_cast<double>(r) * (qi - 1.0 / qi));
}

Series series_mul(const Series& a, const Series& b) {
    size_t n = std::min(a.size(), b.size());
    Series c(n, Complex(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n && j < b.size(); ++j)
            if (i < a.size()) c[i + j] += a[i] * b[j];
    return c;
}

Series series_inverse(const Series& a) {
    if (a.empty() || a[0] == Complex(0))
        throw std::invalid_argument("series_inverse: zero constant term");
    Series inv(a.size(), Complex(0));
    inv[0] = 1.0 / a[0];
    for (size_t n = 1; n < a.size(); ++n) {
        Complex s = 0;
        for (size_t k = 1; k <= n; ++k) s += (k < a.size() ? a[k] : Complex(0)) * inv[n - k];
        inv[n] = -s / a[0];
    }
    return inv;
}

Series series_exp(const Series& a) {
    if (!a.empty() && a[0] != Complex(0))
        throw std::invalid_argument("series_exp: nonzero constant term");
    Series e(a.size(), Complex(0));
    if (a.empty()) return e;
    e[0] = 1.0;
    // e' = a' e, coefficientwise
    for (size_t n = 1; n < a.size(); ++n) {
        Complex s = 0;
        for (size_t k = 1; k <= n; ++k) s += static_cast<double>(k) * a[k] * e[n - k];
        e[n] = s / static_cast<double>(n);
    }
    return e;
}

Series series_scale_arg(const Series& a, Complex s) {
    Series r = a;
    Complex pw = 1.0;
    for (auto& v : r) {
        v *= pw;
        pw *= s;
    }
    return r;
}

Series series_from_poly(const PolyU& p, int order) {
    Series s(order + 1, Complex(0));
    for (int k = 0; k <= std::min(order, p.degree()); ++k) s[k] = p.coeffs()[k];
    return s;
}

FSeries f_series_mplus(int i, const ChainSpec& chain, const RootData& rd, int depth) {
    chain.validate_q();
    int n = rd.rank();
    Complex q = chain.q;

    Series expo(depth + 1, Complex(0));
    for (int r = 1; r <= depth; ++r) {
        Complex qr = std::pow(q, r);
        // Btilde(q^r) = inverse of [d_k C_{k,j}]_{q^r}
        Matrix bmat(n, n);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                bmat(k, j) = q_number(rd.symmetrizer(k + 1) * rd.cartan(k + 1, j + 1), qr);
        Matrix btilde = inverse(bmat);

        Complex total = 0;
        for (int k = 1; k <= n; ++k) {
            Complex hv = hr_mplus(i, Complex(1.0), r, k, q, rd);
            if (hv == Complex(0)) continue;
            for (int j = 1; j <= n; ++j) {
                Complex hw = 0;
                Complex qj = std::pow(q, rd.symmetrizer(j));
                for (const auto& f : chain.factors)
                    if (f.node == j) hw += hr_fundamental(j, f.b, -r, j, q, rd);
                if (hw == Complex(0)) continue;
                Complex qk = std::pow(q, rd.symmetrizer(k));
                total += -static_cast<double>(r) * btilde(k - 1, j - 1) / (qr - 1.0 / qr) *
                         (qk - 1.0 / qk) * (qj - 1.0 / qj) * hv * hw;
            }
        }
        expo[r] = total;
    }
    FSeries out;
    out.series = series_exp(expo);
    out.weight_prefactor_tag = "q^{-(wt v0(M+_" + std::to_string(i) + ",1), wt w0)}";
    return out;
}

double verify_f_identity(const ChainSpec& chain, const RootData& rd, int i, int depth) {
    auto [a, d] = chain.ad_polynomials(rd, i);
    Series lhs = series_mul(series_from_poly(d, depth), series_inverse(series_from_poly(a, depth)));

    Series rhs(depth + 1, Complex(0));
    rhs[0] = 1.0;
    for (int j = 1; j <= rd.rank(); ++j) {
        if (rd.cartan(j, i) == 0) continue;
        FSeries f = f_series_mplus(j, chain, rd, depth);
        Complex qji = std::pow(chain.q, rd.qij_exponent(j, i));
        rhs = series_mul(rhs, series_scale_arg(f.series, qji));
        rhs = series_mul(rhs, series_inverse(series_scale_arg(f.series, 1.0 / qji)));
    }
    // ratio of the symbolic weight prefactors: q_i^{#(node-i factors)}
    int mi = 0;
    for (const auto& f : chain.factors)
        if (f.node == i) ++mi;
    Complex qi = std::pow(chain.q, rd.symmetrizer(i));
    Complex constant = std::pow(qi, mi);

    double err = 0;
    for (int k = 0; k <= depth; ++k) err = std::max(err, std::abs(lhs[k] - constant * rhs[k]));
    return err;
}

}  // namespace qbethe
