#include "orbita/poly.hpp"

#include <algorithm>

namespace orbita {

UniPoly::UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigInt& UniPoly::coeff(size_t i) const {
    static const BigInt zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

BigInt UniPoly::content() const {
    BigInt g = 0;
    for (const auto& a : c_) g = gcd(g, a);
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) throw std::invalid_argument("primitive_part: zero polynomial");
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    std::vector<BigInt> out;
    out.reserve(c_.size());
    for (const auto& a : c_) out.push_back(a / g);
    return UniPoly(std::move(out));
}

BigInt UniPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat UniPoly::eval(const BigRat& x) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

BinaryForm::BinaryForm(unsigned degree, std::vector<BigInt> coeffs)
    : d_(degree), c_(std::move(coeffs)) {
    if (c_.size() != static_cast<size_t>(d_) + 1)
        throw std::invalid_argument("BinaryForm: need exactly d+1 coefficients");
}

bool BinaryForm::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const BigInt& a) { return a == 0; });
}

BigInt BinaryForm::eval(const BigInt& x, const BigInt& y) const {
    BigInt acc = 0;
    BigInt xp = 1;
    std::vector<BigInt> ypow(d_ + 1);
    ypow[0] = 1;
    for (size_t i = 1; i <= d_; ++i) ypow[i] = ypow[i - 1] * y;
    for (size_t i = 0; i <= d_; ++i) {
        // term c[d-i] * x^i * y^{d-i}
        acc += c_[d_ - i] * xp * ypow[d_ - i];
        xp *= x;
    }
    return acc;
}

BigInt BinaryForm::l1_norm() const {
    BigInt s = 0;
    for (const auto& a : c_) s += ::abs(a);
    return s;
}

UniPoly BinaryForm::dehomogenize() const {
    // coeff of z^k is c[d-k]
    std::vector<BigInt> out(d_ + 1);
    for (size_t k = 0; k <= d_; ++k) out[k] = c_[d_ - k];
    return UniPoly(std::move(out));
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

static std::vector<std::vector<BigInt>> sylvester_matrix(const BinaryForm& F,
                                                         const BinaryForm& G) {
    const unsigned d = F.degree();
    const size_t n = 2 * d;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n, BigInt(0)));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j <= d; ++j) {
            m[i][i + j] = F.coeff(j);
            m[d + i][i + j] = G.coeff(j);
        }
    }
    return m;
}

BigInt resultant(const BinaryForm& F, const BinaryForm& G) {
    if (F.degree() != G.degree())
        throw std::invalid_argument("resultant: degree mismatch");
    if (F.degree() < 1)
        throw std::invalid_argument("resultant: degree must be >= 1");
    return bareiss_determinant(sylvester_matrix(F, G));
}

std::vector<BigRat> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    UniPoly q = p.primitive_part();
    std::vector<BigRat> roots;
    // strip factor z^k
    size_t low = 0;
    while (low < q.coeffs().size() && q.coeffs()[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        std::vector<BigInt> shifted(q.coeffs().begin() + low, q.coeffs().end());
        q = UniPoly(std::move(shifted));
    }
    if (q.degree() >= 1) {
        const BigInt& a0 = q.coeffs().front();
        const BigInt& an = q.coeffs().back();
        for (const BigInt& num : divisors(a0)) {
            for (const BigInt& den : divisors(an)) {
                if (gcd(num, den) != 1) continue;
                BigRat r(num, den);
                r.canonicalize();
                if (q.eval(r) == 0) roots.push_back(r);
                BigRat neg = -r;
                if (q.eval(neg) == 0) roots.push_back(neg);
            }
        }
    } else if (q.degree() == 0 && roots.empty()) {
        // nonzero constant: no roots
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Multiply two binary forms (degrees add).
static BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b) {
    unsigned d = a.degree() + b.degree();
    std::vector<BigInt> c(d + 1, BigInt(0));
    for (size_t i = 0; i <= a.degree(); ++i)
        for (size_t j = 0; j <= b.degree(); ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    return BinaryForm(d, std::move(c));
}

static BinaryForm bf_add(const BinaryForm& a, const BinaryForm& b) {
    std::vector<BigInt> c(a.degree() + 1);
    for (size_t i = 0; i <= a.degree(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return BinaryForm(a.degree(), std::move(c));
}

// Solve the 2d x 2d coefficient system  p*F + q*G = rhs  over Q by Gaussian
// elimination, where p, q have degree d-1. rhs is given as the 2d coefficient
// slots of a form of degree 2d-1.
static std::pair<BinaryForm, BinaryForm> solve_cofactor_system(
    const BinaryForm& F, const BinaryForm& G, const std::vector<BigInt>& rhs) {
    const unsigned d = F.degree();
    const size_t n = 2 * d;
    // Row k: coefficient of x^{2d-1-k} y^k. Column j < d: p_j; column d+j: q_j.
    std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n + 1, BigRat(0)));
    for (size_t k = 0; k < n; ++k) {
        for (size_t j = 0; j < d; ++j) {
            if (k >= j && k - j <= d) {
                m[k][j] = BigRat(F.coeff(k - j));
                m[k][d + j] = BigRat(G.coeff(k - j));
            }
        }
        m[k][n] = BigRat(rhs[k]);
    }
    // Gaussian elimination with partial (first nonzero) pivoting.
    for (size_t col = 0, row = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw domain_error("solve_sylvester_cofactors: singular system (not a morphism)");
        std::swap(m[row], m[piv]);
        BigRat inv = m[row][col];
        for (size_t j = col; j <= n; ++j) m[row][j] /= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            BigRat f = m[i][col];
            for (size_t j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
    }
    std::vector<BigInt> pc(d), qc(d);
    for (size_t j = 0; j < d; ++j) {
        BigRat pv = m[j][n], qv = m[d + j][n];
        if (pv.get_den() != 1 || qv.get_den() != 1)
            throw domain_error("solve_sylvester_cofactors: non-integral solution");
        pc[j] = pv.get_num();
        qc[j] = qv.get_num();
    }
    return {BinaryForm(d - 1, std::move(pc)), BinaryForm(d - 1, std::move(qc))};
}

SylvesterCofactors solve_sylvester_cofactors(const BinaryForm& F, const BinaryForm& G) {
    if (F.degree() != G.degree())
        throw std::invalid_argument("solve_sylvester_cofactors: degree mismatch");
    const unsigned d = F.degree();
    if (d < 1) throw std::invalid_argument("solve_sylvester_cofactors: degree must be >= 1");
    BigInt res = resultant(F, G);
    if (res == 0) throw domain_error("solve_sylvester_cofactors: resultant is zero (not a morphism)");

    std::vector<BigInt> rhs_x(2 * d, BigInt(0)), rhs_y(2 * d, BigInt(0));
    rhs_x[0] = res;          // Res * x^{2d-1}
    rhs_y[2 * d - 1] = res;  // Res * y^{2d-1}
    auto [px, qx] = solve_cofactor_system(F, G, rhs_x);
    auto [py, qy] = solve_cofactor_system(F, G, rhs_y);

    // Verify both identities by expansion.
    auto check = [&](const BinaryForm& p, const BinaryForm& q, size_t slot) {
        BinaryForm lhs = bf_add(bf_mul(p, F), bf_mul(q, G));
        for (size_t i = 0; i < 2 * d; ++i) {
            BigInt want = (i == slot) ? res : BigInt(0);
            if (lhs.coeff(i) != want)
                throw domain_error("solve_sylvester_cofactors: identity check failed");
        }
    };
    check(px, qx, 0);
    check(py, qy, 2 * d - 1);
    return SylvesterCofactors{std::move(px), std::move(qx), std::move(py), std::move(qy), std::move(res)};
}

} // namespace orbita
