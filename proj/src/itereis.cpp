#include "eisenworks/itereis.hpp"

#include "eisenworks/biseries.hpp"
#include "eisenworks/extended.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace eisenworks {

std::string EisLetter::to_string() const {
    std::ostringstream os;
    os << "e" << weight << "[X^" << (weight - 2 - m) << " Y^" << m << "]";
    return os.str();
}

std::string EpsLetter::to_string() const {
    std::ostringstream os;
    os << "eps" << weight << "^(" << depth << ")";
    return os.str();
}

int m_degree(const EisLetter& l) { return -1 - l.m; }
int m_degree(const EpsLetter& l) { return -1 - l.depth; }

namespace {

template <class Letter>
std::string word_name(const std::vector<Letter>& w) {
    if (w.empty()) return "(empty)";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += w[i].to_string();
    }
    return s;
}

// G_k as a log-free q-expansion
HolLogSeries hol_eisenstein(int k, long trunc) {
    HolLogSeries g(trunc);
    const BiSeries e = eisenstein_q(k, trunc);
    for (const auto& [key, c] : e.terms())
        g.add_term(std::get<1>(key), 0, c);
    return g;
}

// C(2n, m) (-log q)^m G_{2n+2}(q), the one-form coefficient of the letter
HolLogSeries letter_form(const EisLetter& l, long trunc) {
    int twon = l.weight - 2;
    Rational c(binomial(twon, l.m));
    if (l.m % 2 != 0) c = -c;
    return hol_eisenstein(l.weight, trunc) *
           HolLogSeries::monomial(0, l.m, trunc, SvScalar(c));
}

// scale attached to the letter (2n+2, m) under the change of alphabet
Rational mu_factor(int twon, int m) {
    return Rational(BigInt(2) * factorial(twon - m),
                    factorial(twon) * factorial(twon));
}

DerivationTheta minus_eps0() { return epsilon0() * SvScalar(-1); }

} // namespace

GroupSeries<EisLetter> build_I(int maxlen, int maxweight, long trunc) {
    if (maxlen < 0 || maxlen > 3)
        throw std::invalid_argument(
            "build_I: length bound must be between 0 and 3");
    if (maxweight % 2 != 0)
        throw std::invalid_argument("build_I: weight bound must be even");

    std::vector<std::pair<EisLetter, HolLogSeries>> forms;
    for (int w = 4; w <= maxweight; w += 2)
        for (int m = 0; m <= w - 2; ++m)
            forms.emplace_back(EisLetter{w, m},
                               letter_form(EisLetter{w, m}, trunc));

    GroupSeries<EisLetter> I(trunc);
    I.set_coefficient({}, HolLogSeries::one(trunc));

    std::vector<std::pair<std::vector<EisLetter>, HolLogSeries>> layer;
    layer.emplace_back(std::vector<EisLetter>{}, HolLogSeries::one(trunc));
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<std::pair<std::vector<EisLetter>, HolLogSeries>> next;
        next.reserve(layer.size() * forms.size());
        for (const auto& [tail, ct] : layer) {
            for (const auto& [l, form] : forms) {
                std::vector<EisLetter> word;
                word.reserve(tail.size() + 1);
                word.push_back(l);
                word.insert(word.end(), tail.begin(), tail.end());
                HolLogSeries c = -reg_primitive(form * ct);
                I.set_coefficient(word, c);
                next.emplace_back(std::move(word), std::move(c));
            }
        }
        layer = std::move(next);
    }
    return I;
}

CheckReport shuffle_check(const GroupSeries<EisLetter>& I) {
    if (I.max_length() < 2)
        throw std::invalid_argument(
            "shuffle_check: series was not built to length 2");

    CheckReport rep;
    if (I.coefficient({}) != HolLogSeries::one(I.trunc()))
        rep.violations.push_back("empty word does not carry 1");

    std::vector<EisLetter> letters;
    for (const auto& [w, c] : I.coefficients())
        if (w.size() == 1) letters.push_back(w[0]);

    for (std::size_t i = 0; i < letters.size(); ++i) {
        for (std::size_t j = i; j < letters.size(); ++j) {
            const EisLetter u = letters[i];
            const EisLetter v = letters[j];
            HolLogSeries lhs = I.coefficient({u}) * I.coefficient({v});
            HolLogSeries rhs = I.coefficient({u, v}) + I.coefficient({v, u});
            if (lhs != rhs)
                rep.violations.push_back(u.to_string() + " | " +
                                         v.to_string());
        }
    }
    return rep;
}

GroupSeries<EpsLetter> mu_map(const GroupSeries<EisLetter>& I) {
    GroupSeries<EpsLetter> J(I.trunc(), I.conjugated());
    for (const auto& [word, c] : I.coefficients()) {
        Rational factor(1);
        std::vector<EpsLetter> image;
        image.reserve(word.size());
        bool dead = false;
        for (const auto& l : word) {
            int twon = l.weight - 2;
            if (l.m > twon) {  // the letter maps to zero
                dead = true;
                break;
            }
            factor *= mu_factor(twon, l.m);
            image.push_back(EpsLetter{l.weight, l.m});
        }
        // injective on letters, so distinct words never land on one image
        if (!dead) J.set_coefficient(image, c * SvScalar(factor));
    }
    return J;
}

CheckReport verify_dJ(const GroupSeries<EpsLetter>& J, long trunc) {
    if (trunc != J.trunc())
        throw std::invalid_argument(
            "verify_dJ: stated truncation does not match the series");
    if (J.conjugated())
        throw std::invalid_argument("verify_dJ: expected an untwisted series");

    std::map<int, HolLogSeries> g_cache;
    auto fresh_g = [&](int weight) -> const HolLogSeries& {
        auto it = g_cache.find(weight);
        if (it == g_cache.end())
            it = g_cache.emplace(weight, hol_eisenstein(weight, trunc)).first;
        return it->second;
    };

    CheckReport rep;
    for (const auto& [word, cw] : J.coefficients()) {
        if (word.empty()) {
            if (!cw.log_derivative().is_zero())
                rep.violations.push_back("(empty)");
            continue;
        }
        const EpsLetter lead = word.front();
        std::vector<EpsLetter> tail(word.begin() + 1, word.end());
        int twon = lead.weight - 2;
        BigInt num = (lead.depth % 2 == 0) ? 2 : -2;
        Rational f(num, factorial(twon) * factorial(lead.depth));
        HolLogSeries rhs =
            fresh_g(lead.weight) *
            HolLogSeries::monomial(0, lead.depth, trunc, SvScalar(f)) *
            J.coefficient(tail);
        if (!(cw.log_derivative() + rhs).is_zero())
            rep.violations.push_back(word_name(word));
    }
    return rep;
}

JeqvLengthOne jeqv_length1(int w, long trunc) {
    if (w < 2 || w % 2 != 0)
        throw std::invalid_argument(
            "jeqv_length1: weight must be even and positive");

    auto J = mu_map(build_I(1, w + 2, trunc));
    auto Jsv = sv_twist(J);

    // Scale relating the dual generator to the top of the depth string.
    // They are proportional since the string spans an irreducible; matching
    // one coefficient and then insisting on exact equality re-proves that
    // here for this weight.
    DerivationTheta top = epsilon(w + 2, EpsilonVariant::Lowest);
    for (int i = 0; i < w; ++i) top = der_bracket(minus_eps0(), top);
    const DerivationTheta dual = epsilon(w + 2, EpsilonVariant::Dual);
    if (top.is_zero())
        throw InconsistentSystem("jeqv_length1: depth string collapsed early");
    const LieElement& probe = top.on_a.is_zero() ? top.on_b : top.on_a;
    const LieElement& probe_dual = top.on_a.is_zero() ? dual.on_b : dual.on_a;
    const auto& lead_term = *probe.word_expansion().begin();
    auto it_dual = probe_dual.word_expansion().find(lead_term.first);
    if (it_dual == probe_dual.word_expansion().end())
        throw InconsistentSystem(
            "jeqv_length1: dual generator misses the probe word");
    Rational lambda =
        it_dual->second.as_rational() / lead_term.second.as_rational();
    if (!(top * SvScalar(lambda) == dual))
        throw InconsistentSystem(
            "jeqv_length1: dual generator is not proportional to the "
            "depth-string top");

    XYPoly P;
    for (int m = 0; m <= w; ++m) {
        std::vector<EpsLetter> word{EpsLetter{w + 2, m}};
        ExtendedSeries f =
            ExtendedSeries::from_hol(J.coefficient(word), 0, 0) -
            ExtendedSeries::from_hol_conjugate(Jsv.coefficient(word), 0, 0);
        if (m == w)
            f = f - ExtendedSeries::constant(zsv(w + 1) * SvScalar(lambda), 0,
                                             0, trunc);
        P.emplace(std::make_pair(w - m, m),
                  f * SvScalar(Rational(1) / mu_factor(w, m)));
    }

    JeqvLengthOne out{components_from_xy(P, w, trunc), SvScalar()};

    const VectorModularForm E = build_real_eisenstein(w, trunc);
    Rational ratio;
    bool found = false;
    for (const auto& [key, ce] : E.component(w, 0).terms()) {
        if (!ce.is_rational() || ce.is_zero()) continue;
        SvScalar cf = out.family.component(w, 0).coefficient(
            std::get<0>(key), std::get<1>(key), std::get<2>(key));
        if (!cf.is_rational())
            throw InconsistentSystem(
                "jeqv_length1: scalar-valued coefficient expected at the "
                "probe key");
        ratio = cf.as_rational() / ce.as_rational();
        found = true;
        break;
    }
    if (!found)
        throw InconsistentSystem("jeqv_length1: no usable probe coefficient");
    for (int r = 0; r <= w; ++r)
        if (!(out.family.component(r, w - r) ==
              E.component(r, w - r) * SvScalar(ratio)))
            throw InconsistentSystem(
                "jeqv_length1: family is not a single multiple of the "
                "Eisenstein family");
    out.scalar = SvScalar(ratio);
    return out;
}

std::map<EpsLetter, Rational> n_plus(int maxweight) {
    std::map<EpsLetter, Rational> out;
    for (int wt = 4; wt <= maxweight; wt += 2) {
        int twon = wt - 2;
        Rational c = bernoulli(wt) / Rational(2 * wt) *
                     Rational(BigInt(2), factorial(twon));
        out.emplace(EpsLetter{wt, 0}, c);
    }
    return out;
}

DerivationTheta eps_letter_value(const EpsLetter& l) {
    if (l.weight < 4 || l.weight % 2 != 0)
        throw std::invalid_argument(
            "eps_letter_value: weight must be even and at least 4");
    if (l.depth < 0)
        throw std::invalid_argument("eps_letter_value: negative depth");
    DerivationTheta d = epsilon(l.weight, EpsilonVariant::Lowest);
    for (int i = 0; i < l.depth; ++i) d = der_bracket(minus_eps0(), d);
    return d;
}

LieElement eval_word(const std::vector<EpsLetter>& word, const LieElement& x) {
    LieElement res = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        res = der_apply(eps_letter_value(*it), res);
    return res;
}

} // namespace eisenworks
