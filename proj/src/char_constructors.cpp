#include "qbethe/char_constructors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qbethe {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    for (int part : parts)
        if (part < 0) throw std::invalid_argument("Partition: negative part");
}

int Partition::boxes() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::dual() const {
    std::vector<int> d;
    if (parts.empty()) return Partition(d);
    d.assign(parts[0], 0);
    for (int j = 0; j < parts[0]; ++j)
        for (int part : parts)
            if (part > j) ++d[j];
    return Partition(d);
}

namespace {

// Visit every semistandard tableau of shape lambda with entries <= max_entry,
// filling row by row.
void foreach_ssyt(const Partition& lambda, int max_entry,
                  const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    int rows = static_cast<int>(lambda.parts.size());
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(lambda.parts[r], 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == rows) {
            visit(t);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lambda.parts[r]) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);           // rows weakly increase
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);       // columns strictly increase
        for (int v = lo; v <= max_entry; ++v) {
            t[r][c] = v;
            fill(nr, nc);
        }
        t[r][c] = 0;
    };
    if (rows == 0) {
        visit(t);
        return;
    }
    fill(0, 0);
}

}  // namespace

long long count_ssyt(const Partition& lambda, int max_entry) {
    long long n = 0;
    foreach_ssyt(lambda, max_entry, [&](const std::vector<std::vector<int>>&) { ++n; });
    return n;
}

QChar eval_module_char_slN(const Partition& lambda, const SpectralPoint& a, int n,
                           const RootData& rd) {
    if (rd.family() != 'A' || rd.rank() != n)
        throw std::invalid_argument("eval_module_char_slN: root data must be A_n");
    if (static_cast<int>(lambda.parts.size()) > n)
        throw std::invalid_argument("eval_module_char_slN: partition has more than n parts");

    Partition dual = lambda.dual();
    LMonomial head;
    for (int j = 1; j <= (lambda.parts.empty() ? 0 : lambda.parts[0]); ++j) {
        int col_len = dual.parts[j - 1];
        head = head * canonical_Y(col_len, a.shifted(2 * j - col_len - 1), rd);
    }
    QChar out(head, kDepthInf);
    foreach_ssyt(lambda, n + 1, [&](const std::vector<std::vector<int>>& t) {
        LMonomial m = head;
        for (size_t r = 0; r < t.size(); ++r) {
            for (size_t c = 0; c < t[r].size(); ++c) {
                int content = static_cast<int>(c) - static_cast<int>(r);
                for (int s = static_cast<int>(r) + 1; s <= t[r][c] - 1; ++s)
                    m = m * canonical_A(s, a.shifted(2 * content + s), rd, -1);
            }
        }
        out.add_term(m, BigInt(1));
    });
    return out;
}

namespace {

// Plane partitions over the strip {1..i} x Z_{>=1}, height <= h, total size
// <= budget, visited column by column (each column weakly decreasing and
// componentwise <= the previous one; the first all-zero column ends the
// support).
void foreach_plane_partition(int strip_width, int h, int budget,
                             const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::vector<std::vector<int>> cols;
    std::vector<int> c(strip_width, 0);

    std::function<void(const std::vector<int>&, int)> next_column;
    std::function<void(const std::vector<int>&, int, int, int)> fill_column;

    fill_column = [&](const std::vector<int>& bound, int row, int used, int left) {
        if (row == strip_width) {
            if (used == 0) return;
            cols.push_back(c);
            next_column(c, left - used);
            cols.pop_back();
            return;
        }
        int cap = std::min(row == 0 ? h : c[row - 1], std::min(bound[row], left - used));
        for (int v = cap; v >= 0; --v) {
            c[row] = v;
            if (v == 0) {
                // the rest of the column is forced to zero
                for (int rr = row; rr < strip_width; ++rr) c[rr] = 0;
                if (used > 0) {
                    cols.push_back(c);
                    next_column(c, left - used);
                    cols.pop_back();
                }
            } else {
                fill_column(bound, row + 1, used + v, left);
            }
        }
        c[row] = 0;
    };

    next_column = [&](const std::vector<int>& bound, int left) {
        visit(cols);
        if (left > 0) fill_column(bound, 0, 0, left);
    };

    std::vector<int> top(strip_width, h);
    next_column(top, budget);
}

}  // namespace

QChar parabolic_verma_char_slN(int i, const SpectralPoint& a, int n, int depth,
                               const RootData& rd, const std::string& k_tag) {
    if (rd.family() != 'A' || rd.rank() != n)
        throw std::invalid_argument("parabolic_verma_char_slN: root data must be A_n");
    if (i < 1 || i > n) throw std::out_of_range("parabolic_verma_char_slN: node out of range");
    if (depth < 0 || depth == kDepthInf)
        throw std::invalid_argument("parabolic_verma_char_slN: finite depth required");

    LMonomial head;
    head.mul_x(i, SpectralPoint(a.base + "*q^" + k_tag, a.qexp), 1);
    head.mul_x(i, a, -1);

    int h = n + 1 - i;
    QChar out(head, depth);
    foreach_plane_partition(i, h, depth, [&](const std::vector<std::vector<int>>& cols) {
        LMonomial m = head;
        for (size_t jc = 0; jc < cols.size(); ++jc) {
            int j = static_cast<int>(jc) + 1;
            for (int lr = 0; lr < i; ++lr) {
                int l = lr + 1;
                for (int s = 0; s < cols[jc][lr]; ++s)
                    m = m * canonical_A(i - l + 1 + s, a.shifted(-2 * j + l + s + 1), rd, -1);
            }
        }
        out.add_term(m, BigInt(1));
    });
    return out;
}

QChar mminus_char(int i, const SpectralPoint& a, int n, int depth, const RootData& rd) {
    if (rd.family() != 'A')
        throw std::invalid_argument("mminus_char: closed form available in type A only");
    QChar verma = parabolic_verma_char_slN(i, a, n, depth, rd);
    LMonomial shift = LMonomial::X(i, SpectralPoint(a.base + "*q^K", a.qexp), -1);
    QChar out(verma.head() * shift, depth);
    for (const auto& [m, c] : verma.terms()) out.add_term(m * shift, c);
    return out;
}

bool barchi_is_proved(const RootData& rd) {
    switch (rd.family()) {
        case 'A':
        case 'B':
        case 'C':
        case 'D':
        case 'G':
            return true;
        default:
            return false;
    }
}

QChar barchi(int i, const RootData& rd, int depth) {
    if (depth < 0 || depth == kDepthInf)
        throw std::invalid_argument("barchi: finite depth required");
    int n = rd.rank();
    // DP over beta in Q^+ (simple-root coordinates), height <= depth
    std::map<std::vector<int>, BigInt> acc;
    acc[std::vector<int>(n, 0)] = BigInt(1);
    for (const auto& alpha : rd.positive_roots()) {
        int mult = rd.coweight_pairing(i, alpha);
        if (mult <= 0) continue;
        int ht = std::accumulate(alpha.begin(), alpha.end(), 0);
        std::map<std::vector<int>, BigInt> next;
        for (const auto& [beta, coeff] : acc) {
            int bht = std::accumulate(beta.begin(), beta.end(), 0);
            for (int k = 0; bht + k * ht <= depth; ++k) {
                // binom(k + mult - 1, mult - 1): multiplicity of q^{-k alpha}
                // in the geometric factor (1 - q^{-alpha})^{-mult}
                long long binom = 1;
                for (int t = 1; t <= mult - 1; ++t) binom = binom * (k + t) / t;
                std::vector<int> b2 = beta;
                for (int t = 0; t < n; ++t) b2[t] += k * alpha[t];
                auto it = next.try_emplace(b2, BigInt()).first;
                it->second += coeff * BigInt(binom);
            }
        }
        acc = std::move(next);
    }
    QChar out(LMonomial(), depth);
    for (const auto& [beta, coeff] : acc) {
        LMonomial m;
        for (int t = 0; t < n; ++t)
            if (beta[t] != 0) m = m * canonical_qalpha(t + 1, rd, -beta[t]);
        out.add_term(m, coeff);
    }
    return out;
}

QChar mplus_char(int i, const SpectralPoint& a, const RootData& rd, int depth) {
    QChar bc = barchi(i, rd, depth);
    LMonomial x = LMonomial::X(i, a);
    QChar out(x, depth);
    for (const auto& [m, c] : bc.terms()) out.add_term(x * m, c);
    return out;
}

LMonomial nplus_head(int i, const SpectralPoint& a, const RootData& rd) {
    LMonomial m = LMonomial::X(i, a, -1);
    for (int j = 1; j <= rd.rank(); ++j) {
        int e = rd.qij_exponent(j, i);
        if (rd.cartan(j, i) != 0) m.mul_x(j, a.shifted(-e), 1);
    }
    return m;
}

QChar nplus_char(int i, const SpectralPoint& a, const RootData& rd, int depth) {
    LMonomial head = nplus_head(i, a, rd);
    QChar base(head, kDepthInf);
    base.add_term(head, BigInt(1));
    base.add_term(head * canonical_A(i, a, rd, -1), BigInt(1));
    QChar out = truncate(base, depth, rd);
    for (int j = 1; j <= rd.rank(); ++j)
        if (rd.cartan(j, i) < 0) out = multiply(out, barchi(j, rd, depth), depth, rd);
    return out;
}

QChar fundamental_top_terms(int i, const SpectralPoint& a, const RootData& rd) {
    int di = rd.symmetrizer(i);
    LMonomial head = canonical_Y(i, a, rd);
    QChar out(head, 2);
    out.add_term(head, BigInt(1));
    LMonomial first = head * canonical_A(i, a.shifted(di), rd, -1);
    out.add_term(first, BigInt(1));
    for (int j = 1; j <= rd.rank(); ++j) {
        if (rd.cartan(j, i) >= 0) continue;
        int e = rd.qij_exponent(j, i);
        out.add_term(first * canonical_A(j, a.shifted(di - e), rd, -1), BigInt(1));
    }
    return out;
}

QChar sl2_string_char(const SpectralPoint& a, const SpectralPoint& b, const RootData& rd) {
    if (rd.type_label() != "A1")
        throw std::invalid_argument("sl2_string_char: root data must be A1");
    if (a.base != b.base)
        throw std::invalid_argument("sl2_string_char: finite string needs a common base");
    int diff = b.qexp - a.qexp;  // a = b q^{-2s+2}
    if (diff < 0 || diff % 2 != 0)
        throw std::invalid_argument("sl2_string_char: (a,b) is not a finite string");
    int s = diff / 2 + 1;

    LMonomial head = LMonomial::X(1, a) * LMonomial::X(1, b, -1);
    QChar out(head, kDepthInf);
    LMonomial m = head;
    out.add_term(m, BigInt(1));
    for (int r = 1; r <= s - 1; ++r) {
        m = m * canonical_A(1, b.shifted(-2 * (r - 1)), rd, -1);
        out.add_term(m, BigInt(1));
    }
    return out;
}

QChar sl2_string_char_infinite(const SpectralPoint& a, const SpectralPoint& b, int depth,
                               const RootData& rd) {
    if (rd.type_label() != "A1")
        throw std::invalid_argument("sl2_string_char_infinite: root data must be A1");
    if (depth < 0 || depth == kDepthInf)
        throw std::invalid_argument("sl2_string_char_infinite: finite depth required");
    LMonomial head = LMonomial::X(1, a) * LMonomial::X(1, b, -1);
    QChar out(head, depth);
    LMonomial m = head;
    out.add_term(m, BigInt(1));
    for (int r = 1; r <= depth; ++r) {
        m = m * canonical_A(1, b.shifted(-2 * (r - 1)), rd, -1);
        out.add_term(m, BigInt(1));
    }
    return out;
}

int spectral_class_count(const QChar& x) {
    std::set<std::map<LMonomial::XKey, int>> classes;
    for (const auto& [m, c] : x.terms()) classes.insert((m / x.head()).xexp());
    return static_cast<int>(classes.size());
}

LiftChar slN_string_lift(int i, const SpectralPoint& a, int s, int n, int depth,
                         const RootData& rd) {
    if (rd.family() != 'A' || rd.rank() != n)
        throw std::invalid_argument("slN_string_lift: root data must be A_n");
    if (i < 1 || i > n) throw std::out_of_range("slN_string_lift: node out of range");
    if (s < 1) throw std::invalid_argument("slN_string_lift: string size must be >= 1");

    LMonomial head;
    if (i - 1 >= 1) head.mul_x(i - 1, a.shifted(2), 1);
    if (i + 1 <= n) head.mul_x(i + 1, a.shifted(2), 1);
    for (int p = 0; p < s; ++p) head = head * canonical_Y(i, a.shifted(-2 * p), rd);

    QChar ess(head, kDepthInf);
    LMonomial m = head;
    ess.add_term(m, BigInt(1));
    for (int j = 1; j <= s; ++j) {
        m = m * canonical_A(i, a.shifted(-2 * j + 3), rd, -1);
        ess.add_term(m, BigInt(1));
    }
    QChar out = truncate(ess, depth, rd);
    if (i - 1 >= 1) out = multiply(out, barchi(i - 1, rd, depth), depth, rd);
    if (i + 1 <= n) out = multiply(out, barchi(i + 1, rd, depth), depth, rd);
    return {out, s + 1};
}

LiftChar sl3_example(const SpectralPoint& a, int which, int depth, const RootData& rd) {
    if (rd.type_label() != "A2")
        throw std::invalid_argument("sl3_example: root data must be A2");
    if (which == 1) return slN_string_lift(1, a, 2, 2, depth, rd);
    if (which != 2) throw std::invalid_argument("sl3_example: which must be 1 or 2");

    // Head Y_{1,aq^{-2}} Y_{1,a} X_{2,a}. The essential part keeps the five
    // tableau classes of the 6-dimensional evaluation module that avoid
    // A^{-1}_{2,a}; that index collides with the X_{2,a} factor and the
    // corresponding l-weight drops out of the irreducible submodule.
    LMonomial head = canonical_Y(1, a.shifted(-2), rd) * canonical_Y(1, a, rd);
    head.mul_x(2, a, 1);

    LMonomial a1q = canonical_A(1, a.shifted(1), rd, -1);
    LMonomial a1qm = canonical_A(1, a.shifted(-1), rd, -1);
    LMonomial a2q2 = canonical_A(2, a.shifted(2), rd, -1);

    QChar ess(head, kDepthInf);
    ess.add_term(head, BigInt(1));
    ess.add_term(head * a1q, BigInt(1));
    ess.add_term(head * a1q * a2q2, BigInt(1));
    ess.add_term(head * a1q * a1qm, BigInt(1));
    ess.add_term(head * a1q * a1qm * a2q2, BigInt(1));

    QChar out = multiply(truncate(ess, depth, rd), barchi(2, rd, depth), depth, rd);
    return {out, 5};
}

}  // namespace qbethe
