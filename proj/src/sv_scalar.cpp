#include "eisenworks/sv_scalar.hpp"

#include "eisenworks/numerics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eisenworks {

bool is_sv_generator_tag(std::uint16_t tag) {
    return tag == 3 || tag == 5 || tag == 7 || tag == 9 || tag == 11 ||
           tag == 353;
}

int sv_tag_weight(std::uint16_t tag) {
    if (!is_sv_generator_tag(tag))
        throw std::invalid_argument("unknown scalar generator tag");
    return tag == 353 ? 11 : static_cast<int>(tag);
}

std::string sv_tag_name(std::uint16_t tag) {
    if (!is_sv_generator_tag(tag))
        throw std::invalid_argument("unknown scalar generator tag");
    return "zsv" + std::to_string(tag);
}

std::uint16_t sv_tag_from_name(const std::string& name) {
    if (name.rfind("zsv", 0) != 0)
        throw std::invalid_argument("bad generator name '" + name + "'");
    int v = std::stoi(name.substr(3));
    if (v < 0 || v > 65535 || !is_sv_generator_tag(static_cast<std::uint16_t>(v)))
        throw std::invalid_argument("bad generator name '" + name + "'");
    return static_cast<std::uint16_t>(v);
}

SvScalar::SvScalar(const Rational& r) {
    if (r != 0) terms_[{}] = r;
}

SvScalar::SvScalar(long n) {
    if (n != 0) terms_[{}] = Rational(n);
}

SvScalar SvScalar::generator(std::uint16_t tag) {
    if (!is_sv_generator_tag(tag))
        throw std::invalid_argument("unknown scalar generator tag");
    SvScalar s;
    s.terms_[{tag}] = 1;
    return s;
}

void SvScalar::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

SvScalar& SvScalar::operator+=(const SvScalar& o) {
    for (const auto& [m, c] : o.terms_) terms_[m] += c;
    prune();
    return *this;
}

SvScalar& SvScalar::operator-=(const SvScalar& o) {
    for (const auto& [m, c] : o.terms_) terms_[m] -= c;
    prune();
    return *this;
}

SvScalar SvScalar::operator+(const SvScalar& o) const {
    SvScalar r = *this;
    r += o;
    return r;
}

SvScalar SvScalar::operator-(const SvScalar& o) const {
    SvScalar r = *this;
    r -= o;
    return r;
}

SvScalar SvScalar::operator-() const {
    SvScalar r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SvScalar SvScalar::operator*(const SvScalar& o) const {
    SvScalar r;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            SvMonomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            std::sort(m.begin(), m.end());
            r.terms_[m] += ca * cb;
        }
    }
    r.prune();
    return r;
}

SvScalar& SvScalar::operator*=(const SvScalar& o) {
    *this = *this * o;
    return *this;
}

SvScalar SvScalar::div_rational(const Rational& r) const {
    if (r == 0) throw std::invalid_argument("division by zero");
    SvScalar out = *this;
    for (auto& [m, c] : out.terms_) c /= r;
    return out;
}

bool SvScalar::is_rational() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational SvScalar::rational_part() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational SvScalar::as_rational() const {
    if (!is_rational())
        throw std::domain_error("scalar is not rational: " + to_string());
    return rational_part();
}

int SvScalar::weight() const {
    int w = 0;
    for (const auto& [m, c] : terms_) {
        int mw = 0;
        for (auto tag : m) mw += sv_tag_weight(tag);
        w = std::max(w, mw);
    }
    return w;
}

Rational SvScalar::coefficient(const SvMonomial& m) const {
    SvMonomial key = m;
    std::sort(key.begin(), key.end());
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string SvScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << (c >= 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational a = c >= 0 ? c : Rational(-c);
        bool wrote_coeff = false;
        if (a != 1 || m.empty()) {
            out << to_fraction_string(a);
            wrote_coeff = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (wrote_coeff || i > 0) out << "*";
            out << sv_tag_name(m[i]);
        }
    }
    return out.str();
}

SvScalar operator*(const Rational& r, const SvScalar& s) {
    return SvScalar(r) * s;
}

SvScalar zsv(int odd_weight) {
    if (odd_weight < 3 || odd_weight > 11 || odd_weight % 2 == 0)
        throw std::invalid_argument("zsv generators are odd weights 3..11");
    return SvScalar::generator(static_cast<std::uint16_t>(odd_weight));
}

SvScalar zsv353() { return SvScalar::generator(353); }

double sv_generator_value(std::uint16_t tag, int precision) {
    if (precision < 1 || precision > 15)
        throw std::invalid_argument("precision must be between 1 and 15");
    if (!is_sv_generator_tag(tag))
        throw std::invalid_argument("unknown scalar generator tag");
    if (tag != 353) return 2.0 * zeta(static_cast<double>(tag));
    // zsv(3,5,3) = 2 mzv(3,5,3) - 2 zeta(3) mzv(3,5) - 10 zeta(3)^2 zeta(5)
    double z3 = zeta(3.0), z5 = zeta(5.0);
    return 2.0 * mzv_depth3(3, 5, 3) - 2.0 * z3 * mzv_depth2(3, 5) -
           10.0 * z3 * z3 * z5;
}

double sv_eval(const SvScalar& s, int precision) {
    if (precision < 1 || precision > 15)
        throw std::invalid_argument("precision must be between 1 and 15");
    double acc = 0.0;
    for (const auto& [m, c] : s.terms()) {
        double v = to_double(c);
        for (auto tag : m) v *= sv_generator_value(tag, precision);
        acc += v;
    }
    return acc;
}

} // namespace eisenworks
