#include "eisenworks/raeis.hpp"

#include "eisenworks/rational.hpp"

#include <string>

namespace eisenworks {

VectorModularForm::VectorModularForm(int weight, long trunc)
    : weight_(weight), trunc_(trunc) {
    if (weight < 0 || weight % 2 != 0)
        throw std::invalid_argument("total weight must be even and >= 0");
    for (int r = 0; r <= weight; ++r)
        comps_.emplace(std::make_pair(r, weight - r),
                       BiSeries(r, weight - r, trunc));
}

const BiSeries& VectorModularForm::component(int r, int s) const {
    auto it = comps_.find({r, s});
    if (it == comps_.end())
        throw std::invalid_argument("no component at that bidegree");
    return it->second;
}

void VectorModularForm::set_component(int r, int s, const BiSeries& f) {
    auto it = comps_.find({r, s});
    if (it == comps_.end())
        throw std::invalid_argument("no component at that bidegree");
    if (f.weight_r() != r || f.weight_s() != s)
        throw std::invalid_argument("component weights disagree with its key");
    it->second = f;
}

bool VectorModularForm::operator==(const VectorModularForm& o) const {
    return weight_ == o.weight_ && trunc_ == o.trunc_ && comps_ == o.comps_;
}

std::map<std::pair<int, int>, std::map<int, Rational>>
eis_pure_mode_chain(int w, long l) {
    if (l < 1) throw std::invalid_argument("mode index must be positive");
    std::map<std::pair<int, int>, std::map<int, Rational>> chain;
    // top component: (k+w) x^(k) + 2l x^(k-1) = [k=1] sigma forces
    // x^(0) = sigma/2l and then a terminating downward recursion
    std::map<int, Rational> top;
    Rational cur(1, 2 * l);
    top[0] = cur;
    for (int j = 0; j < w; ++j) {
        cur *= Rational(-(w - j), 2 * l);
        top[-(j + 1)] = cur;
    }
    chain[{w, 0}] = top;
    // descend with the conjugate equations, which at a pure q-mode read
    // (k+s) x_{r,s}^(k) = (s+1) x_{r-1,s+1}^(k)
    for (int r = w; r >= 1; --r) {
        int s = w - r;
        std::map<int, Rational> next;
        for (const auto& [k, v] : chain[{r, s}]) {
            Rational out = v * Rational(k + s, s + 1);
            if (out != 0) next[k] = out;
        }
        chain[{r - 1, s + 1}] = std::move(next);
    }
    return chain;
}

VectorModularForm build_real_eisenstein(int w, long trunc) {
    if (w < 2 || w % 2 != 0)
        throw std::invalid_argument("weight must be even and >= 2");
    VectorModularForm F(w, trunc);

    Rational alpha = -bernoulli(w + 2) /
                     Rational(BigInt(2) * (w + 1) * (w + 2));
    Rational pure_factor = Rational(factorial(w), BigInt(1) << w);
    for (int r = 0; r <= w; ++r) {
        int s = w - r;
        BiSeries f(r, s, trunc);
        f.add_term(1, 0, 0, SvScalar(alpha));
        Rational beta = pure_factor * Rational(binomial(w, r), 4);
        if (s % 2 == 1) beta = -beta;
        f.add_term(-w, 0, 0, beta * zsv(w + 1));

        for (long l = 1; l <= trunc; ++l) {
            Rational sigma(divisor_sigma(w + 1, l));
            auto chain = eis_pure_mode_chain(w, l);
            for (const auto& [k, v] : chain[{r, s}])
                f.add_term(k, l, 0, SvScalar(sigma * v));
            // qbar modes come from the mirror component
            for (const auto& [k, v] : chain[{s, r}])
                f.add_term(k, 0, l, SvScalar(sigma * v));
        }
        F.set_component(r, s, f);
    }
    verify_eisenstein_system(F);
    return F;
}

void verify_eisenstein_system(const VectorModularForm& F) {
    int w = F.weight();
    long N = F.trunc();
    BiSeries LG = multiply(BiSeries::L_power(1, N), eisenstein_q(w + 2, N));
    if (maass(F.component(w, 0), MaassDir::Raise) != LG)
        throw InconsistentSystem("holomorphic source equation fails at (" +
                                 std::to_string(w) + ",0)");
    if (maass(F.component(0, w), MaassDir::Lower) != LG.conjugate())
        throw InconsistentSystem(
            "antiholomorphic source equation fails at (0," +
            std::to_string(w) + ")");
    for (int r = 0; r <= w; ++r) {
        int s = w - r;
        if (s >= 1) {
            BiSeries lhs = maass(F.component(r, s), MaassDir::Raise);
            BiSeries rhs = F.component(r + 1, s - 1) * SvScalar(r + 1);
            if (lhs != rhs)
                throw InconsistentSystem("raising chain fails at (" +
                                         std::to_string(r) + "," +
                                         std::to_string(s) + ")");
        }
        if (r >= 1) {
            BiSeries lhs = maass(F.component(r, s), MaassDir::Lower);
            BiSeries rhs = F.component(r - 1, s + 1) * SvScalar(s + 1);
            if (lhs != rhs)
                throw InconsistentSystem("lowering chain fails at (" +
                                         std::to_string(r) + "," +
                                         std::to_string(s) + ")");
        }
    }
}

namespace {

ExtendedSeries ext_pow(const ExtendedSeries& x, int n, long trunc) {
    ExtendedSeries acc = ExtendedSeries::constant(SvScalar(1), 0, 0, trunc);
    for (int i = 0; i < n; ++i) acc = acc * x;
    return acc;
}

} // namespace

XYPoly vector_to_xy(const VectorModularForm& F) {
    long N = F.trunc();
    int w = F.weight();
    ExtendedSeries lq = ExtendedSeries::log_q(0, 0, N);
    ExtendedSeries lqb = ExtendedSeries::log_qbar(0, 0, N);
    XYPoly out;
    for (int r = 0; r <= w; ++r) {
        int s = w - r;
        ExtendedSeries base =
            ExtendedSeries::from_biseries(F.component(r, s)).with_weights(0, 0);
        // U^r = sum_a C(r,a) X^a (-log q Y)^(r-a), V^s likewise with +log qbar
        for (int a = 0; a <= r; ++a) {
            ExtendedSeries ua = ext_pow(-lq, r - a, N) *
                                SvScalar(Rational(binomial(r, a)));
            for (int b = 0; b <= s; ++b) {
                ExtendedSeries vb = ext_pow(lqb, s - b, N) *
                                    SvScalar(Rational(binomial(s, b)));
                ExtendedSeries piece = base * ua * vb;
                auto key = std::make_pair(a + b, w - a - b);
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(key, piece);
                else
                    it->second = it->second + piece;
            }
        }
    }
    return out;
}

std::map<std::pair<int, int>, ExtendedSeries> xy_to_uv(const XYPoly& P, int w,
                                                       long trunc) {
    // X = (log qbar U + log q V)/2L, Y = (V - U)/2L
    ExtendedSeries lq = ExtendedSeries::log_q(0, 0, trunc);
    ExtendedSeries lqb = ExtendedSeries::log_qbar(0, 0, trunc);
    ExtendedSeries halfLinv =
        ExtendedSeries::L_power(-1, 0, 0, trunc) * SvScalar(Rational(1, 2));
    std::map<std::pair<int, int>, ExtendedSeries> out;
    for (const auto& [ij, coeff] : P) {
        auto [i, j] = ij;
        if (i + j != w)
            throw std::invalid_argument("input not homogeneous of the weight");
        // X^i: binomial in (lqb U) and (lq V); Y^j: binomial in V and -U
        for (int a = 0; a <= i; ++a) {
            ExtendedSeries xa = ext_pow(lqb, a, trunc) *
                                ext_pow(lq, i - a, trunc) *
                                SvScalar(Rational(binomial(i, a)));
            for (int b = 0; b <= j; ++b) {
                SvScalar sign((b % 2 == 0) ? Rational(binomial(j, b))
                                           : -Rational(binomial(j, b)));
                // U-degree a + b, V-degree (i-a) + (j-b)
                ExtendedSeries piece = coeff.with_weights(0, 0) * xa *
                                       ext_pow(halfLinv, i + j, trunc) * sign;
                auto key = std::make_pair(a + b, w - a - b);
                auto it = out.find(key);
                if (it == out.end())
                    out.emplace(key, piece);
                else
                    it->second = it->second + piece;
            }
        }
    }
    return out;
}

VectorModularForm components_from_xy(const XYPoly& P, int w, long trunc) {
    VectorModularForm F(w, trunc);
    auto uv = xy_to_uv(P, w, trunc);
    for (const auto& [rs, coeff] : uv) {
        BiSeries f = reduce_to_L(coeff.with_weights(rs.first, rs.second));
        F.set_component(rs.first, rs.second, f);
    }
    return F;
}

} // namespace eisenworks
