#include "orbita/projective.hpp"

#include <algorithm>
#include <numeric>

namespace orbita {

ProjPoint ProjPoint::from_integers(const std::vector<BigInt>& coords) {
    if (coords.empty()) throw std::invalid_argument("ProjPoint: empty coordinates");
    BigInt g = 0;
    for (const auto& c : coords) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("ProjPoint: all coordinates zero");
    ProjPoint p;
    p.x_.reserve(coords.size());
    for (const auto& c : coords) p.x_.push_back(c / g);
    for (const auto& c : p.x_) {
        if (c != 0) {
            if (c < 0)
                for (auto& v : p.x_) v = -v;
            break;
        }
    }
    return p;
}

ProjPoint ProjPoint::from_rationals(const std::vector<BigRat>& coords) {
    BigInt lcm = 1;
    for (const auto& c : coords) {
        BigInt den = c.get_den();
        lcm = lcm / gcd(lcm, den) * den;
    }
    std::vector<BigInt> ints;
    ints.reserve(coords.size());
    for (const auto& c : coords) ints.push_back(c.get_num() * (lcm / c.get_den()));
    return from_integers(ints);
}

BigInt ProjPoint::height() const {
    BigInt h = 0;
    for (const auto& c : x_) h = std::max(h, BigInt(::abs(c)));
    return h;
}

std::string ProjPoint::str() const {
    std::string s = "[";
    for (size_t i = 0; i < x_.size(); ++i) {
        if (i) s += ":";
        s += x_[i].get_str();
    }
    return s + "]";
}

HomogForm::HomogForm(int nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw std::invalid_argument("HomogForm: need at least one variable");
}

void HomogForm::add_term(const Exponents& e, const BigInt& coeff) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("HomogForm: exponent arity mismatch");
    unsigned total = std::accumulate(e.begin(), e.end(), 0u);
    if (total != degree_)
        throw std::invalid_argument("HomogForm: term degree mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt HomogForm::eval(const std::vector<BigInt>& x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("HomogForm::eval: arity mismatch");
    BigInt acc = 0;
    for (const auto& [e, c] : terms_) {
        BigInt t = c;
        for (int i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        }
        acc += t;
    }
    return acc;
}

BigInt HomogForm::l1_norm() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += ::abs(c);
    return s;
}

HomogForm HomogForm::operator*(const HomogForm& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("HomogForm: arity mismatch");
    HomogForm out(nvars_, degree_ + o.degree_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    }
    return out;
}

HomogForm HomogForm::operator+(const HomogForm& o) const {
    if (nvars_ != o.nvars_ || degree_ != o.degree_)
        throw std::invalid_argument("HomogForm: shape mismatch in addition");
    HomogForm out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

HomogForm HomogForm::pow(unsigned k) const {
    HomogForm acc(nvars_, 0);
    acc.add_term(Exponents(nvars_, 0), 1);
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

BinaryForm HomogForm::to_binary() const {
    if (nvars_ != 2) throw std::invalid_argument("to_binary: form is not binary");
    std::vector<BigInt> c(degree_ + 1, BigInt(0));
    for (const auto& [e, coeff] : terms_) c[e[1]] = coeff; // index = y-exponent
    return BinaryForm(degree_, std::move(c));
}

HomogForm HomogForm::from_binary(const BinaryForm& f) {
    HomogForm out(2, f.degree());
    for (unsigned i = 0; i <= f.degree(); ++i)
        out.add_term({f.degree() - i, i}, f.coeff(i));
    return out;
}

Morphism Morphism::create(std::vector<HomogForm> forms) {
    if (forms.size() < 2)
        throw std::invalid_argument("Morphism: need at least two component forms");
    const int nv = forms.front().nvars();
    const unsigned d = forms.front().degree();
    if (nv != static_cast<int>(forms.size()))
        throw std::invalid_argument("Morphism: variable count must equal component count");
    for (const auto& f : forms) {
        if (f.nvars() != nv || f.degree() != d)
            throw std::invalid_argument("Morphism: components must share variables and degree");
    }
    if (d < 2) throw domain_error("Morphism: degree must be >= 2");
    Morphism m(std::move(forms));
    if (m.dim() == 1) {
        BigInt res = resultant(m.forms_[0].to_binary(), m.forms_[1].to_binary());
        if (res == 0) throw domain_error("Morphism: resultant is zero (not a morphism of P^1)");
        m.res_ = std::move(res);
    }
    return m;
}

const BigInt& Morphism::resultant_p1() const {
    if (!res_) throw std::logic_error("resultant_p1: only available on P^1");
    return *res_;
}

ProjPoint Morphism::evaluate(const ProjPoint& p) const {
    if (p.dim() != dim())
        throw std::invalid_argument("Morphism::evaluate: dimension mismatch");
    std::vector<BigInt> img;
    img.reserve(forms_.size());
    bool all_zero = true;
    for (const auto& f : forms_) {
        img.push_back(f.eval(p.coords()));
        if (img.back() != 0) all_zero = false;
    }
    if (all_zero) throw domain_error("Morphism::evaluate: point lies in the base locus");
    return ProjPoint::from_integers(img);
}

ProjPoint Morphism::iterate(const ProjPoint& p, unsigned long k) const {
    ProjPoint q = p;
    for (unsigned long i = 0; i < k; ++i) q = evaluate(q);
    return q;
}

BigInt Morphism::max_l1_norm() const {
    BigInt m = 0;
    for (const auto& f : forms_) m = std::max(m, f.l1_norm());
    return m;
}

static HomogForm substitute(const HomogForm& outer, const std::vector<HomogForm>& inner) {
    const unsigned inner_deg = inner.front().degree();
    HomogForm acc(inner.front().nvars(), outer.degree() * inner_deg);
    for (const auto& [e, c] : outer.terms()) {
        HomogForm term(inner.front().nvars(), 0);
        term.add_term(HomogForm::Exponents(inner.front().nvars(), 0), c);
        for (size_t i = 0; i < inner.size(); ++i) {
            if (e[i] > 0) term = term * inner[i].pow(e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

Morphism Morphism::power(unsigned k, size_t max_bits) const {
    if (k == 0) throw std::invalid_argument("Morphism::power: k must be >= 1");
    std::vector<HomogForm> acc = forms_;
    for (unsigned i = 1; i < k; ++i) {
        std::vector<HomogForm> next;
        next.reserve(forms_.size());
        for (const auto& f : forms_) next.push_back(substitute(f, acc));
        acc = std::move(next);
        for (const auto& f : acc) {
            for (const auto& [e, c] : f.terms()) {
                if (mpz_sizeinbase(c.get_mpz_t(), 2) > max_bits)
                    throw domain_error("Morphism::power: coefficient bit budget exceeded");
            }
        }
    }
    return Morphism::create(std::move(acc));
}

std::vector<ProjPoint> preimages_p1(const Morphism& f, const ProjPoint& q) {
    if (f.dim() != 1 || q.dim() != 1)
        throw std::invalid_argument("preimages_p1: P^1 only");
    const BigInt& a = q.coords()[0];
    const BigInt& b = q.coords()[1];
    BinaryForm F = f.forms()[0].to_binary();
    BinaryForm G = f.forms()[1].to_binary();
    // roots of b*F - a*G
    const unsigned d = F.degree();
    std::vector<BigInt> c(d + 1);
    for (size_t i = 0; i <= d; ++i) c[i] = b * F.coeff(i) - a * G.coeff(i);
    BinaryForm h(d, std::move(c));
    std::vector<ProjPoint> out;
    if (h.coeff(0) == 0) out.push_back(ProjPoint::from_integers({BigInt(1), BigInt(0)}));
    UniPoly p = h.dehomogenize();
    if (!p.is_zero()) {
        for (const BigRat& r : rational_roots(p))
            out.push_back(ProjPoint::from_integers({r.get_num(), r.get_den()}));
    }
    // forward re-verification; also drops spurious roots if any
    std::erase_if(out, [&](const ProjPoint& pt) { return f.evaluate(pt) != q; });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace orbita
