#include "eisenworks/pls.hpp"

#include <sstream>
#include <stdexcept>

namespace eisenworks {

namespace {

void check_same_vars(const MultiPoly& x, const MultiPoly& y) {
    if (x.nvars() != y.nvars())
        throw std::invalid_argument("polynomials over different variable counts");
}

// Scales a linear form to primitive integer coefficients with positive
// lead; returns (scale, primitive) with form = scale * primitive.
std::pair<Rational, std::vector<Rational>> canonical_form(const std::vector<Rational>& form) {
    BigInt l = 1;
    for (const auto& c : form)
        if (c != 0)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
    BigInt g = 0;
    int lead_sign = 0;
    for (const auto& c : form) {
        BigInt n = boost::multiprecision::numerator(c * Rational(l));
        if (n != 0 && lead_sign == 0)
            lead_sign = n > 0 ? 1 : -1;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(n));
    }
    if (lead_sign == 0)
        throw std::domain_error("denominator factor vanishes under substitution");
    Rational unit = Rational(BigInt(lead_sign) * g) / Rational(l);
    std::vector<Rational> prim;
    prim.reserve(form.size());
    for (const auto& c : form)
        prim.push_back(c / unit);
    return {unit, prim};
}

MultiPoly form_to_poly(const std::vector<Rational>& form) {
    MultiPoly p(int(form.size()));
    for (std::size_t i = 0; i < form.size(); ++i)
        if (form[i] != 0)
            p += MultiPoly::variable(int(i) + 1, int(form.size())) * form[i];
    return p;
}

// One term of a defining equation: the variable substitution applied to
// the function, given as one linear form per variable.
using Substitution = std::vector<std::vector<Rational>>;

MultiPoly equation_residue(const RatFn& f, const std::vector<Substitution>& terms) {
    const int r = f.depth;
    const auto base_factors = denominator_factors(r);

    struct TermData {
        MultiPoly numerator;
        Rational scale;
        std::map<std::vector<Rational>, int> factors; // primitive -> multiplicity
    };
    std::vector<TermData> data;
    std::map<std::vector<Rational>, int> common; // primitive -> max multiplicity
    for (const auto& subst : terms) {
        TermData t{f.numerator.substitute(subst, r), Rational(1), {}};
        for (const auto& factor : base_factors) {
            std::vector<Rational> image(r, Rational(0));
            for (int v = 0; v < r; ++v)
                if (factor[v] != 0)
                    for (int j = 0; j < r; ++j)
                        image[j] += factor[v] * subst[v][j];
            auto [scale, prim] = canonical_form(image);
            t.scale *= scale;
            ++t.factors[prim];
        }
        for (const auto& [prim, mult] : t.factors)
            if (common[prim] < mult)
                common[prim] = mult;
        data.push_back(std::move(t));
    }

    MultiPoly residue(r);
    for (const auto& t : data) {
        MultiPoly part = t.numerator * (Rational(1) / t.scale);
        for (const auto& [prim, mult] : common) {
            auto it = t.factors.find(prim);
            int deficit = mult - (it == t.factors.end() ? 0 : it->second);
            for (int k = 0; k < deficit; ++k)
                part = part * form_to_poly(prim);
        }
        residue += part;
    }
    return residue;
}

std::vector<Rational> unit_form(int i, int r) {
    std::vector<Rational> f(r, Rational(0));
    f[i - 1] = 1;
    return f;
}

std::vector<Rational> sum_form(std::initializer_list<int> is, int r) {
    std::vector<Rational> f(r, Rational(0));
    for (int i : is)
        f[i - 1] = 1;
    return f;
}

} // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0)
        throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(const Rational& c, int nvars) {
    MultiPoly p(nvars);
    if (c != 0)
        p.terms_[std::vector<int>(nvars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int i, int nvars) {
    if (i < 1 || i > nvars)
        throw std::invalid_argument("variable index out of range");
    std::vector<int> e(nvars, 0);
    e[i - 1] = 1;
    return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const std::vector<int>& exps, const Rational& c) {
    for (int e : exps)
        if (e < 0)
            throw std::invalid_argument("negative exponent");
    MultiPoly p(int(exps.size()));
    if (c != 0)
        p.terms_[exps] = c;
    return p;
}

Rational MultiPoly::coefficient(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::homogeneous_slice(int degree) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e)
            d += x;
        if (d == degree)
            out.terms_[e] = c;
    }
    return out;
}

void MultiPoly::add(const std::vector<int>& e, const Rational& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_)
        out.terms_[e] = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_)
        add(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_)
        add(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    check_same_vars(x, y);
    MultiPoly out(x.nvars_);
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            std::vector<int> e(x.nvars_);
            for (int i = 0; i < x.nvars_; ++i)
                e[i] = ex[i] + ey[i];
            out.add(e, cx * cy);
        }
    return out;
}

MultiPoly operator*(const MultiPoly& x, const Rational& c) {
    MultiPoly out(x.nvars_);
    if (c == 0)
        return out;
    for (const auto& [e, xc] : x.terms_)
        out.terms_[e] = xc * c;
    return out;
}

MultiPoly MultiPoly::substitute(const std::vector<std::vector<Rational>>& forms,
                                int new_nvars) const {
    if (int(forms.size()) != nvars_)
        throw std::invalid_argument("substitution needs one form per variable");
    std::vector<MultiPoly> fp;
    fp.reserve(forms.size());
    for (const auto& form : forms) {
        if (int(form.size()) != new_nvars)
            throw std::invalid_argument("linear form over wrong variable count");
        MultiPoly p(new_nvars);
        for (int j = 0; j < new_nvars; ++j)
            if (form[j] != 0)
                p += MultiPoly::variable(j + 1, new_nvars) * form[j];
        fp.push_back(std::move(p));
    }
    MultiPoly out(new_nvars);
    for (const auto& [e, c] : terms_) {
        MultiPoly acc = MultiPoly::constant(c, new_nvars);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k)
                acc = acc * fp[i];
        out += acc;
    }
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0)
                v = -v;
        }
        first = false;
        bool any_var = false;
        std::ostringstream mon;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (any_var)
                mon << "*";
            mon << "x" << (i + 1);
            if (e[i] > 1)
                mon << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            os << v;
        } else {
            if (v != 1)
                os << v << "*";
            os << mon.str();
        }
    }
    return os.str();
}

std::vector<std::vector<Rational>> denominator_factors(int depth) {
    if (depth < 1)
        throw std::invalid_argument("depth must be positive");
    std::vector<std::vector<Rational>> fs;
    fs.push_back(unit_form(1, depth));
    for (int i = 1; i < depth; ++i) {
        std::vector<Rational> f(depth, Rational(0));
        f[i - 1] = 1;
        f[i] = -1;
        fs.push_back(std::move(f));
    }
    if (depth > 1)
        fs.push_back(unit_form(depth, depth));
    return fs;
}

std::string RatFn::to_string() const {
    std::ostringstream os;
    os << "(" << numerator.to_string() << ") / (";
    auto fs = denominator_factors(depth);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        if (k)
            os << "*";
        os << "(" << form_to_poly(fs[k]).to_string() << ")";
    }
    os << ")";
    return os.str();
}

RatFn rho_words(const std::map<Word, SvScalar>& words, int r, RhoConvention conv) {
    if (r <= 0)
        throw std::invalid_argument("rho needs positive depth");
    MultiPoly num(r);
    for (const auto& [w, c] : words) {
        if (w.count_b() != r)
            continue;
        if (conv == RhoConvention::RequireLeadingB && w.letter(0) == 0)
            continue;
        std::vector<int> runs(r + 1, 0);
        int idx = 0;
        for (int i = 0; i < w.len; ++i) {
            if (w.letter(i))
                ++idx;
            else
                ++runs[idx];
        }
        std::vector<int> exps(runs.begin() + 1, runs.end());
        num += MultiPoly::monomial(exps, c.as_rational());
    }
    return RatFn{r, std::move(num)};
}

RatFn rho(const LieElement& x, int r, RhoConvention conv) {
    return rho_words(x.word_expansion(), r, conv);
}

LdsReport check_lds(const RatFn& f) {
    if (f.depth != 2 && f.depth != 3)
        throw std::invalid_argument("double-shuffle equations implemented for depths 2 and 3");

    std::vector<std::pair<std::string, std::vector<Substitution>>> equations;
    if (f.depth == 2) {
        equations.emplace_back(
            "antisymmetry",
            std::vector<Substitution>{{unit_form(1, 2), unit_form(2, 2)},
                                      {unit_form(2, 2), unit_form(1, 2)}});
        equations.emplace_back(
            "stuffle",
            std::vector<Substitution>{{unit_form(1, 2), sum_form({1, 2}, 2)},
                                      {unit_form(2, 2), sum_form({1, 2}, 2)}});
    } else {
        equations.emplace_back(
            "shuffle",
            std::vector<Substitution>{
                {unit_form(1, 3), unit_form(2, 3), unit_form(3, 3)},
                {unit_form(2, 3), unit_form(1, 3), unit_form(3, 3)},
                {unit_form(2, 3), unit_form(3, 3), unit_form(1, 3)}});
        equations.emplace_back(
            "stuffle",
            std::vector<Substitution>{
                {unit_form(1, 3), sum_form({1, 2}, 3), sum_form({1, 2, 3}, 3)},
                {unit_form(2, 3), sum_form({1, 2}, 3), sum_form({1, 2, 3}, 3)},
                {unit_form(2, 3), sum_form({2, 3}, 3), sum_form({1, 2, 3}, 3)}});
    }

    LdsReport report;
    for (const auto& [name, terms] : equations) {
        MultiPoly residue = equation_residue(f, terms);
        if (!residue.is_zero())
            report.residues.emplace_back(name, std::move(residue));
    }
    return report;
}

} // namespace eisenworks
