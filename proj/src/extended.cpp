#include "eisenworks/extended.hpp"

#include "eisenworks/rational.hpp"

#include <sstream>

namespace eisenworks {

ExtendedSeries::ExtendedSeries(int r, int s, long trunc)
    : r_(r), s_(s), trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("negative truncation order");
    if ((r + s) % 2 != 0)
        throw std::invalid_argument("odd total modular weight");
}

void ExtendedSeries::add_term(int a, int b, long m, long n, const SvScalar& c) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative q exponent");
    if (b < 0) throw std::invalid_argument("negative power of the D symbol");
    if (m > trunc_ || n > trunc_) return;
    auto key = std::make_tuple(a, b, m, n);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SvScalar ExtendedSeries::coefficient(int a, int b, long m, long n) const {
    auto it = terms_.find({a, b, m, n});
    return it == terms_.end() ? SvScalar() : it->second;
}

ExtendedSeries ExtendedSeries::operator+(const ExtendedSeries& o) const {
    if (r_ != o.r_ || s_ != o.s_)
        throw std::invalid_argument("adding series of different weights");
    ExtendedSeries out(r_, s_, std::min(trunc_, o.trunc_));
    for (const auto& [k, c] : terms_)
        out.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k),
                     std::get<3>(k), c);
    for (const auto& [k, c] : o.terms_)
        out.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k),
                     std::get<3>(k), c);
    return out;
}

ExtendedSeries ExtendedSeries::operator-(const ExtendedSeries& o) const {
    return *this + (-o);
}

ExtendedSeries ExtendedSeries::operator-() const {
    ExtendedSeries out(r_, s_, trunc_);
    for (const auto& [k, c] : terms_)
        out.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k),
                     std::get<3>(k), -c);
    return out;
}

ExtendedSeries ExtendedSeries::operator*(const ExtendedSeries& o) const {
    ExtendedSeries out(r_ + o.r_, s_ + o.s_, std::min(trunc_, o.trunc_));
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            long m = std::get<2>(k1) + std::get<2>(k2);
            long n = std::get<3>(k1) + std::get<3>(k2);
            if (m > out.trunc_ || n > out.trunc_) continue;
            out.add_term(std::get<0>(k1) + std::get<0>(k2),
                         std::get<1>(k1) + std::get<1>(k2), m, n, c1 * c2);
        }
    }
    return out;
}

ExtendedSeries ExtendedSeries::operator*(const SvScalar& c) const {
    ExtendedSeries out(r_, s_, trunc_);
    for (const auto& [k, v] : terms_)
        out.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k),
                     std::get<3>(k), v * c);
    return out;
}

bool ExtendedSeries::operator==(const ExtendedSeries& o) const {
    return r_ == o.r_ && s_ == o.s_ && trunc_ == o.trunc_ &&
           terms_ == o.terms_;
}

ExtendedSeries ExtendedSeries::with_weights(int r, int s) const {
    ExtendedSeries out(r, s, trunc_);
    out.terms_ = terms_;
    return out;
}

std::string ExtendedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.to_string() << ")";
        if (std::get<0>(k) != 0) out << "*L^" << std::get<0>(k);
        if (std::get<1>(k) != 0) out << "*D^" << std::get<1>(k);
        if (std::get<2>(k) > 0) out << "*q^" << std::get<2>(k);
        if (std::get<3>(k) > 0) out << "*qbar^" << std::get<3>(k);
    }
    return out.str();
}

namespace {

// (L +- D/2)^j expanded over the (a,b) grid
void add_log_power(ExtendedSeries& out, long m, long n, int j, bool plus,
                   const SvScalar& c) {
    for (int t = 0; t <= j; ++t) {
        Rational w = Rational(binomial(j, t)) / Rational(BigInt(1) << t);
        if (!plus && t % 2 == 1) w = -w;
        out.add_term(j - t, t, m, n, c * w);
    }
}

} // namespace

ExtendedSeries ExtendedSeries::from_hol(const HolLogSeries& h, int r, int s) {
    ExtendedSeries out(r, s, h.trunc());
    for (const auto& [ij, c] : h.terms())
        add_log_power(out, ij.first, 0, ij.second, true, c);
    return out;
}

ExtendedSeries ExtendedSeries::from_hol_conjugate(const HolLogSeries& h, int r,
                                                  int s) {
    ExtendedSeries out(r, s, h.trunc());
    for (const auto& [ij, c] : h.terms())
        add_log_power(out, 0, ij.first, ij.second, false, c);
    return out;
}

ExtendedSeries ExtendedSeries::from_biseries(const BiSeries& f) {
    ExtendedSeries out(f.weight_r(), f.weight_s(), f.trunc());
    for (const auto& [kmn, c] : f.terms())
        out.add_term(std::get<0>(kmn), 0, std::get<1>(kmn), std::get<2>(kmn),
                     c);
    return out;
}

ExtendedSeries ExtendedSeries::log_q(int r, int s, long trunc) {
    ExtendedSeries out(r, s, trunc);
    out.add_term(1, 0, 0, 0, SvScalar(1));
    out.add_term(0, 1, 0, 0, SvScalar(Rational(1, 2)));
    return out;
}

ExtendedSeries ExtendedSeries::log_qbar(int r, int s, long trunc) {
    ExtendedSeries out(r, s, trunc);
    out.add_term(1, 0, 0, 0, SvScalar(1));
    out.add_term(0, 1, 0, 0, SvScalar(Rational(-1, 2)));
    return out;
}

ExtendedSeries ExtendedSeries::L_power(int a, int r, int s, long trunc) {
    ExtendedSeries out(r, s, trunc);
    out.add_term(a, 0, 0, 0, SvScalar(1));
    return out;
}

ExtendedSeries ExtendedSeries::constant(const SvScalar& c, int r, int s,
                                        long trunc) {
    ExtendedSeries out(r, s, trunc);
    out.add_term(0, 0, 0, 0, c);
    return out;
}

BiSeries reduce_to_L(const ExtendedSeries& f) {
    BiSeries out(f.weight_r(), f.weight_s(), f.trunc());
    for (const auto& [k, c] : f.terms()) {
        if (std::get<1>(k) > 0)
            throw NonModularResidue(
                "coefficient survives on (log q - log qbar)^" +
                std::to_string(std::get<1>(k)) + " at q^" +
                std::to_string(std::get<2>(k)) + " qbar^" +
                std::to_string(std::get<3>(k)) + ": " + c.to_string());
        out.add_term(std::get<0>(k), std::get<2>(k), std::get<3>(k), c);
    }
    return out;
}

} // namespace eisenworks
