#include "eisenworks/biseries.hpp"

#include "eisenworks/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace eisenworks {

BiSeries::BiSeries(int r, int s, long trunc)
    : r_(r), s_(s), trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("negative truncation order");
    if ((r + s) % 2 != 0)
        throw std::invalid_argument("odd total modular weight");
}

void BiSeries::add_term(int k, long m, long n, const SvScalar& c) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative q exponent");
    if (m > trunc_ || n > trunc_) return;
    auto key = std::make_tuple(k, m, n);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SvScalar BiSeries::coefficient(int k, long m, long n) const {
    auto it = terms_.find({k, m, n});
    return it == terms_.end() ? SvScalar() : it->second;
}

BiSeries BiSeries::operator+(const BiSeries& o) const {
    if (r_ != o.r_ || s_ != o.s_)
        throw std::invalid_argument("adding series of different weights");
    BiSeries out(r_, s_, std::min(trunc_, o.trunc_));
    for (const auto& [kmn, c] : terms_)
        out.add_term(std::get<0>(kmn), std::get<1>(kmn), std::get<2>(kmn), c);
    for (const auto& [kmn, c] : o.terms_)
        out.add_term(std::get<0>(kmn), std::get<1>(kmn), std::get<2>(kmn), c);
    return out;
}

BiSeries BiSeries::operator-(const BiSeries& o) const { return *this + (-o); }

BiSeries BiSeries::operator-() const {
    BiSeries out(r_, s_, trunc_);
    for (const auto& [kmn, c] : terms_)
        out.add_term(std::get<0>(kmn), std::get<1>(kmn), std::get<2>(kmn), -c);
    return out;
}

BiSeries BiSeries::operator*(const SvScalar& c) const {
    BiSeries out(r_, s_, trunc_);
    for (const auto& [kmn, v] : terms_)
        out.add_term(std::get<0>(kmn), std::get<1>(kmn), std::get<2>(kmn),
                     v * c);
    return out;
}

bool BiSeries::operator==(const BiSeries& o) const {
    return r_ == o.r_ && s_ == o.s_ && trunc_ == o.trunc_ &&
           terms_ == o.terms_;
}

BiSeries BiSeries::with_weights(int r, int s) const {
    BiSeries out(r, s, trunc_);
    out.terms_ = terms_;
    return out;
}

BiSeries BiSeries::conjugate() const {
    BiSeries out(s_, r_, trunc_);
    for (const auto& [kmn, c] : terms_)
        out.add_term(std::get<0>(kmn), std::get<2>(kmn), std::get<1>(kmn), c);
    return out;
}

int BiSeries::pole_order() const {
    int p = 0;
    for (const auto& [kmn, c] : terms_) p = std::max(p, -std::get<0>(kmn));
    return p;
}

bool BiSeries::in_pole_filtration(int a) const {
    for (const auto& [kmn, c] : terms_)
        if (std::get<0>(kmn) < -a) return false;
    return true;
}

std::string BiSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [kmn, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        auto [k, m, n] = kmn;
        if (k != 0) out << "*L^" << k;
        if (m > 0) out << "*q^" << m;
        if (n > 0) out << "*qbar^" << n;
    }
    return out.str();
}

BiSeries BiSeries::monomial(int k, long m, long n, int r, int s, long trunc,
                            const SvScalar& c) {
    BiSeries f(r, s, trunc);
    f.add_term(k, m, n, c);
    return f;
}

BiSeries BiSeries::L_power(int k, long trunc) {
    return monomial(k, 0, 0, -k, -k, trunc);
}

BiSeries eisenstein_q(int k, long trunc) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("Eisenstein weight must be even and >= 4");
    BiSeries g(k, 0, trunc);
    g.add_term(0, 0, 0, SvScalar(-bernoulli(k) / Rational(2 * k)));
    for (long m = 1; m <= trunc; ++m)
        g.add_term(0, m, 0, SvScalar(Rational(divisor_sigma(k - 1, m))));
    return g;
}

BiSeries maass(const BiSeries& f, MaassDir dir) {
    int r = f.weight_r(), s = f.weight_s();
    bool raise = dir == MaassDir::Raise;
    BiSeries out(raise ? r + 1 : r - 1, raise ? s - 1 : s + 1, f.trunc());
    for (const auto& [kmn, c] : f.terms()) {
        auto [k, m, n] = kmn;
        Rational diag(raise ? k + r : k + s);
        if (diag != 0) out.add_term(k, m, n, Rational(diag) * c);
        long shift = raise ? 2 * m : 2 * n;
        if (shift != 0) out.add_term(k + 1, m, n, Rational(shift) * c);
    }
    return out;
}

BiSeries laplacian(const BiSeries& f) {
    int r = f.weight_r(), s = f.weight_s();
    BiSeries first =
        -maass(maass(f, MaassDir::Raise), MaassDir::Lower) +
        f * SvScalar(Rational(r) * Rational(s - 1));
    BiSeries second =
        -maass(maass(f, MaassDir::Lower), MaassDir::Raise) +
        f * SvScalar(Rational(s) * Rational(r - 1));
    if (first != second)
        throw std::logic_error("Laplacian formulas disagree on this series");
    return first;
}

BiSeries multiply(const BiSeries& f, const BiSeries& g) {
    BiSeries out(f.weight_r() + g.weight_r(), f.weight_s() + g.weight_s(),
                 std::min(f.trunc(), g.trunc()));
    for (const auto& [kmn1, c1] : f.terms()) {
        auto [k1, m1, n1] = kmn1;
        if (m1 > out.trunc() || n1 > out.trunc()) continue;
        for (const auto& [kmn2, c2] : g.terms()) {
            auto [k2, m2, n2] = kmn2;
            if (m1 + m2 > out.trunc() || n1 + n2 > out.trunc()) continue;
            out.add_term(k1 + k2, m1 + m2, n1 + n2, c1 * c2);
        }
    }
    return out;
}

} // namespace eisenworks
