#include "eisenworks/hompoly.hpp"

#include "eisenworks/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace eisenworks {

HomPoly::HomPoly(int degree, PolyBasis basis)
    : degree_(degree), basis_(basis) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

void HomPoly::add_term(int r, int s, const SvScalar& c) {
    if (r < 0 || s < 0 || r + s != degree_)
        throw std::invalid_argument("exponent pair off the degree diagonal");
    auto key = std::make_pair(r, s);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SvScalar HomPoly::coefficient(int r, int s) const {
    auto it = terms_.find({r, s});
    return it == terms_.end() ? SvScalar() : it->second;
}

bool HomPoly::operator==(const HomPoly& o) const {
    return degree_ == o.degree_ && basis_ == o.basis_ && terms_ == o.terms_;
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("adding forms of different type");
    HomPoly out = *this;
    for (const auto& [rs, c] : o.terms_) out.add_term(rs.first, rs.second, c);
    return out;
}

HomPoly HomPoly::operator-(const HomPoly& o) const {
    if (degree_ != o.degree_ || basis_ != o.basis_)
        throw std::invalid_argument("subtracting forms of different type");
    HomPoly out = *this;
    for (const auto& [rs, c] : o.terms_) out.add_term(rs.first, rs.second, -c);
    return out;
}

HomPoly HomPoly::operator*(const SvScalar& c) const {
    HomPoly out(degree_, basis_);
    for (const auto& [rs, v] : terms_) out.add_term(rs.first, rs.second, v * c);
    return out;
}

HomPoly HomPoly::converted(PolyBasis target) const {
    HomPoly out = *this;
    out.basis_ = target;
    return out;
}

int HomPoly::implicit_two_pi_i_power(int s) const {
    return basis_ == PolyBasis::Betti ? -s : 0;
}

std::string HomPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [rs, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (rs.first > 0) out << "*X^" << rs.first;
        if (rs.second > 0) out << "*Y^" << rs.second;
    }
    return out.str();
}

HomPoly HomPoly::monomial(int r, int s, PolyBasis basis, const SvScalar& c) {
    HomPoly p(r + s, basis);
    p.add_term(r, s, c);
    return p;
}

Mat2 Mat2::identity(PolyBasis basis) {
    return {basis, SvScalar(1), SvScalar(0), SvScalar(0), SvScalar(1)};
}

Mat2 Mat2::S(PolyBasis basis) {
    return {basis, SvScalar(0), SvScalar(-1), SvScalar(1), SvScalar(0)};
}

Mat2 Mat2::T(PolyBasis basis) {
    return {basis, SvScalar(1), SvScalar(1), SvScalar(0), SvScalar(1)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    if (basis != o.basis)
        throw std::invalid_argument("matrix basis mismatch in product");
    return {basis, a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
}

namespace {
SvScalar sv_pow(const SvScalar& x, int n) {
    SvScalar acc(1);
    for (int i = 0; i < n; ++i) acc *= x;
    return acc;
}
} // namespace

HomPoly sl2_act(const HomPoly& p, const Mat2& g) {
    if (p.basis() != g.basis)
        throw std::invalid_argument("acting with a matrix in the wrong basis");
    HomPoly out(p.degree(), p.basis());
    for (const auto& [rs, coeff] : p.terms()) {
        auto [r, s] = rs;
        // (aX+bY)^r (cX+dY)^s expanded by double binomial
        for (int i = 0; i <= r; ++i) {
            SvScalar left = Rational(binomial(r, i)) * sv_pow(g.a, i) *
                            sv_pow(g.b, r - i);
            for (int j = 0; j <= s; ++j) {
                SvScalar right = Rational(binomial(s, j)) * sv_pow(g.c, j) *
                                 sv_pow(g.d, s - j);
                out.add_term(i + j, r + s - i - j, coeff * left * right);
            }
        }
    }
    return out;
}

HomPoly hompoly_mul(const HomPoly& p, const HomPoly& q) {
    if (p.basis() != q.basis())
        throw std::invalid_argument("multiplying forms in different bases");
    HomPoly out(p.degree() + q.degree(), p.basis());
    for (const auto& [rs1, c1] : p.terms())
        for (const auto& [rs2, c2] : q.terms())
            out.add_term(rs1.first + rs2.first, rs1.second + rs2.second,
                         c1 * c2);
    return out;
}

HomPoly delta_k(const HomPoly& p, const HomPoly& q, int k) {
    if (p.basis() != q.basis())
        throw std::invalid_argument("pairing forms in different bases");
    if (k < 0) throw std::invalid_argument("negative pairing order");
    int out_deg = p.degree() + q.degree() - 2 * k;
    if (k > p.degree() || k > q.degree())
        return HomPoly(out_deg < 0 ? 0 : out_deg, p.basis());

    // tensor terms ((r1,s1),(r2,s2)) -> coefficient
    using TKey = std::pair<std::pair<int, int>, std::pair<int, int>>;
    std::map<TKey, SvScalar> cur;
    for (const auto& [rs1, c1] : p.terms())
        for (const auto& [rs2, c2] : q.terms())
            cur[{rs1, rs2}] = c1 * c2;

    for (int step = 0; step < k; ++step) {
        std::map<TKey, SvScalar> next;
        for (const auto& [key, c] : cur) {
            auto [m1, m2] = key;
            auto [r1, s1] = m1;
            auto [r2, s2] = m2;
            if (r1 > 0 && s2 > 0) {
                TKey t{{r1 - 1, s1}, {r2, s2 - 1}};
                next[t] += Rational(r1 * s2) * c;
            }
            if (s1 > 0 && r2 > 0) {
                TKey t{{r1, s1 - 1}, {r2 - 1, s2}};
                next[t] -= Rational(s1 * r2) * c;
            }
        }
        cur = std::move(next);
    }

    HomPoly out(out_deg, p.basis());
    for (const auto& [key, c] : cur) {
        if (c.is_zero()) continue;
        out.add_term(key.first.first + key.second.first,
                     key.first.second + key.second.second, c);
    }
    return out;
}

} // namespace eisenworks
