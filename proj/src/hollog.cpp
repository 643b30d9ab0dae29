#include "eisenworks/hollog.hpp"

#include "eisenworks/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace eisenworks {

HolLogSeries::HolLogSeries(long trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("negative truncation order");
}

int HolLogSeries::log_degree() const {
    int d = 0;
    for (const auto& [ij, c] : terms_) d = std::max(d, ij.second);
    return d;
}

void HolLogSeries::add_term(long i, int j, const SvScalar& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative series exponent");
    if (i > trunc_) return;
    auto key = std::make_pair(i, j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SvScalar HolLogSeries::coefficient(long i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? SvScalar() : it->second;
}

HolLogSeries HolLogSeries::operator+(const HolLogSeries& o) const {
    HolLogSeries out(std::min(trunc_, o.trunc_));
    for (const auto& [ij, c] : terms_) out.add_term(ij.first, ij.second, c);
    for (const auto& [ij, c] : o.terms_) out.add_term(ij.first, ij.second, c);
    return out;
}

HolLogSeries HolLogSeries::operator-(const HolLogSeries& o) const {
    return *this + (-o);
}

HolLogSeries HolLogSeries::operator*(const HolLogSeries& o) const {
    HolLogSeries out(std::min(trunc_, o.trunc_));
    for (const auto& [ij1, c1] : terms_) {
        if (ij1.first > out.trunc_) continue;
        for (const auto& [ij2, c2] : o.terms_) {
            if (ij1.first + ij2.first > out.trunc_) continue;
            out.add_term(ij1.first + ij2.first, ij1.second + ij2.second,
                         c1 * c2);
        }
    }
    return out;
}

HolLogSeries HolLogSeries::operator*(const SvScalar& c) const {
    HolLogSeries out(trunc_);
    for (const auto& [ij, v] : terms_) out.add_term(ij.first, ij.second, v * c);
    return out;
}

HolLogSeries HolLogSeries::operator-() const {
    HolLogSeries out(trunc_);
    for (const auto& [ij, v] : terms_) out.add_term(ij.first, ij.second, -v);
    return out;
}

bool HolLogSeries::operator==(const HolLogSeries& o) const {
    return trunc_ == o.trunc_ && terms_ == o.terms_;
}

HolLogSeries HolLogSeries::log_derivative() const {
    HolLogSeries out(trunc_);
    for (const auto& [ij, c] : terms_) {
        auto [i, j] = ij;
        if (i > 0) out.add_term(i, j, Rational(i) * c);
        if (j > 0) out.add_term(i, j - 1, Rational(j) * c);
    }
    return out;
}

std::string HolLogSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [ij, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (ij.first > 0) out << "*q^" << ij.first;
        if (ij.second > 0) out << "*logq^" << ij.second;
    }
    return out.str();
}

HolLogSeries HolLogSeries::one(long trunc) { return monomial(0, 0, trunc); }

HolLogSeries HolLogSeries::monomial(long i, int j, long trunc,
                                    const SvScalar& c) {
    HolLogSeries h(trunc);
    h.add_term(i, j, c);
    return h;
}

HolLogSeries reg_primitive(const HolLogSeries& h) {
    HolLogSeries out(h.trunc());
    for (const auto& [ij, c] : h.terms()) {
        auto [i, j] = ij;
        if (i == 0) {
            out.add_term(0, j + 1, c.div_rational(Rational(j + 1)));
            continue;
        }
        // int q^i (log q)^j dq/q = q^i sum_t (-1)^t j!/(j-t)! (log q)^(j-t) / i^(t+1)
        Rational factor(1, i);
        for (int t = 0; t <= j; ++t) {
            out.add_term(i, j - t, c * factor);
            factor *= Rational(-(j - t), i);
        }
    }
    return out;
}

} // namespace eisenworks
