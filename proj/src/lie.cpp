#include "eisenworks/lie.hpp"

#include <bit>
#include <sstream>

namespace eisenworks {

namespace {

// True lexicographic order with a < b; a proper prefix sorts first.
bool lex_less(const Word& u, const Word& v) {
    int n = std::min(u.len, v.len);
    for (int i = 0; i < n; ++i) {
        int cu = u.letter(i), cv = v.letter(i);
        if (cu != cv)
            return cu < cv;
    }
    return u.len < v.len;
}

Word suffix(const Word& w, int i) {
    int l = w.len - i;
    return {w.bits & ((std::uint64_t(1) << l) - 1), l};
}

Word prefix(const Word& w, int i) { return {w.bits >> (w.len - i), i}; }

// Splits a Lyndon word of length >= 2 as uv with v its least proper
// suffix; both halves are Lyndon and [u,v] is the basis bracketing.
std::pair<Word, Word> standard_factorization(const Word& w) {
    int best = 1;
    for (int i = 2; i < w.len; ++i)
        if (lex_less(suffix(w, i), suffix(w, best)))
            best = i;
    return {prefix(w, best), suffix(w, best)};
}

// Expansion of the basis bracketing of a Lyndon word in the word
// algebra. Triangular: the word itself appears with coefficient 1 and
// everything else is lexicographically larger of the same bidegree.
const std::map<Word, BigInt>& lyndon_expansion(const Word& w) {
    static std::map<Word, std::map<Word, BigInt>> cache;
    auto it = cache.find(w);
    if (it != cache.end())
        return it->second;
    std::map<Word, BigInt> exp;
    if (w.len == 1) {
        exp[w] = 1;
    } else {
        auto [u, v] = standard_factorization(w);
        const auto& eu = lyndon_expansion(u);
        const auto& ev = lyndon_expansion(v);
        for (const auto& [wu, cu] : eu)
            for (const auto& [wv, cv] : ev) {
                exp[concat(wu, wv)] += cu * cv;
                exp[concat(wv, wu)] -= cu * cv;
            }
        for (auto e = exp.begin(); e != exp.end();)
            e = e->second == 0 ? exp.erase(e) : std::next(e);
    }
    return cache.emplace(w, std::move(exp)).first->second;
}

void accumulate(std::map<Word, SvScalar>& m, const Word& w, const SvScalar& c) {
    auto [it, inserted] = m.try_emplace(w, c);
    if (inserted)
        return;
    it->second = it->second + c;
    if (it->second.is_zero())
        m.erase(it);
}

std::map<Word, SvScalar> word_bracket_map(const std::map<Word, SvScalar>& tx,
                                          const std::map<Word, SvScalar>& ty) {
    std::map<Word, SvScalar> out;
    for (const auto& [wx, cx] : tx)
        for (const auto& [wy, cy] : ty) {
            SvScalar c = cx * cy;
            if (c.is_zero())
                continue;
            accumulate(out, concat(wx, wy), c);
            accumulate(out, concat(wy, wx), -c);
        }
    return out;
}

// Peels the least word repeatedly; for a genuine Lie element it is
// always Lyndon and subtracting its basis expansion only touches larger
// words of the same length.
std::map<Word, SvScalar> lyndon_reduce(std::map<Word, SvScalar> rem) {
    std::map<Word, SvScalar> out;
    while (!rem.empty()) {
        auto [w, c] = *rem.begin();
        if (!is_lyndon(w))
            throw std::invalid_argument("not a Lie element: word " + w.to_string() +
                                        " survives reduction");
        out[w] = c;
        for (const auto& [ew, ec] : lyndon_expansion(w))
            accumulate(rem, ew, -(Rational(ec) * c));
    }
    return out;
}

// The substitution a -> -b, b -> a on the word algebra.
LieElement substitute_sigma(const LieElement& x) {
    std::map<Word, SvScalar> out;
    for (const auto& [w, c] : x.word_expansion()) {
        std::uint64_t mask = (std::uint64_t(1) << w.len) - 1;
        Word nw{~w.bits & mask, w.len};
        accumulate(out, nw, w.count_a() % 2 ? -c : c);
    }
    return LieElement::from_word_expansion(out);
}

void normalize_relation(std::vector<Rational>& v) {
    BigInt l = 1;
    for (const auto& x : v)
        if (x != 0)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    BigInt g = 0;
    int lead_sign = 0;
    for (auto& x : v) {
        x *= Rational(l);
        BigInt n = boost::multiprecision::numerator(x);
        if (n != 0 && lead_sign == 0)
            lead_sign = n > 0 ? 1 : -1;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(n));
    }
    if (g == 0)
        return;
    Rational scale = Rational(BigInt(lead_sign)) / Rational(g);
    for (auto& x : v)
        x *= scale;
}

} // namespace

Word Word::from_string(const std::string& s) {
    if (s.size() > 63)
        throw std::length_error("word too long");
    Word w;
    for (char ch : s) {
        if (ch != 'a' && ch != 'b')
            throw std::invalid_argument("word letters must be 'a' or 'b'");
        w.bits = (w.bits << 1) | (ch == 'b' ? 1u : 0u);
        ++w.len;
    }
    return w;
}

int Word::count_b() const { return std::popcount(bits); }

std::string Word::to_string() const {
    std::string s;
    for (int i = 0; i < len; ++i)
        s += letter(i) ? 'b' : 'a';
    return s;
}

bool is_lyndon(const Word& w) {
    if (w.len == 0)
        return false;
    for (int i = 1; i < w.len; ++i)
        if (!lex_less(w, suffix(w, i)))
            return false;
    return true;
}

LieElement LieElement::raw(std::map<Word, SvScalar> m) {
    LieElement x;
    x.words_ = std::move(m);
    return x;
}

LieElement LieElement::basis(const Word& w) {
    if (!is_lyndon(w))
        throw std::invalid_argument("not a Lyndon word: " + w.to_string());
    LieElement x;
    for (const auto& [ew, ec] : lyndon_expansion(w))
        x.words_[ew] = SvScalar(Rational(ec));
    return x;
}

LieElement LieElement::from_word_expansion(const std::map<Word, SvScalar>& t) {
    std::map<Word, SvScalar> pruned;
    for (const auto& [w, c] : t)
        if (!c.is_zero())
            pruned[w] = c;
    lyndon_reduce(pruned);
    return raw(std::move(pruned));
}

std::map<Word, SvScalar> LieElement::lyndon_terms() const { return lyndon_reduce(words_); }

SvScalar LieElement::coefficient(const Word& lyndon_word) const {
    auto t = lyndon_terms();
    auto it = t.find(lyndon_word);
    return it == t.end() ? SvScalar(0) : it->second;
}

bool LieElement::is_homogeneous() const {
    if (words_.empty())
        return true;
    auto d = words_.begin()->first.bidegree();
    for (const auto& [w, c] : words_)
        if (w.bidegree() != d)
            return false;
    return true;
}

std::pair<int, int> LieElement::bidegree() const {
    if (words_.empty())
        throw std::domain_error("zero element has no bidegree");
    if (!is_homogeneous())
        throw std::domain_error("element is not bidegree homogeneous");
    return words_.begin()->first.bidegree();
}

LieElement LieElement::homogeneous_slice(int deg_a, int deg_b) const {
    LieElement out;
    for (const auto& [w, c] : words_)
        if (w.bidegree() == std::make_pair(deg_a, deg_b))
            out.words_[w] = c;
    return out;
}

void LieElement::add(const Word& w, const SvScalar& c) { accumulate(words_, w, c); }

LieElement LieElement::operator-() const {
    LieElement out;
    for (const auto& [w, c] : words_)
        out.words_[w] = -c;
    return out;
}

LieElement& LieElement::operator+=(const LieElement& o) {
    for (const auto& [w, c] : o.words_)
        add(w, c);
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
    for (const auto& [w, c] : o.words_)
        add(w, -c);
    return *this;
}

LieElement operator*(const LieElement& x, const SvScalar& c) {
    LieElement out;
    if (c.is_zero())
        return out;
    for (const auto& [w, xc] : x.words_) {
        SvScalar p = xc * c;
        if (!p.is_zero())
            out.words_[w] = p;
    }
    return out;
}

std::string LieElement::to_string() const {
    auto t = lyndon_terms();
    if (t.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : t) {
        if (!first)
            os << " + ";
        os << "(" << c.to_string() << ")*" << w.to_string();
        first = false;
    }
    return os.str();
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    return LieElement::raw(word_bracket_map(x.words_, y.words_));
}

DerivationTheta::DerivationTheta(LieElement va, LieElement vb)
    : on_a(std::move(va)), on_b(std::move(vb)) {
    std::map<Word, SvScalar> one_a{{Word::letter_a(), SvScalar(1)}};
    std::map<Word, SvScalar> one_b{{Word::letter_b(), SvScalar(1)}};
    auto theta_image = word_bracket_map(on_a.word_expansion(), one_b);
    for (const auto& [w, c] : word_bracket_map(one_a, on_b.word_expansion()))
        accumulate(theta_image, w, c);
    if (!theta_image.empty())
        throw std::invalid_argument("derivation does not annihilate [a,b]");
}

std::pair<int, int> DerivationTheta::bidegree_shift() const {
    if (is_zero())
        throw std::domain_error("zero derivation has no bidegree shift");
    std::pair<int, int> s{0, 0};
    bool have = false;
    if (!on_a.is_zero()) {
        auto d = on_a.bidegree();
        s = {d.first - 1, d.second};
        have = true;
    }
    if (!on_b.is_zero()) {
        auto d = on_b.bidegree();
        std::pair<int, int> s2{d.first, d.second - 1};
        if (have && s2 != s)
            throw std::domain_error("derivation is not bidegree homogeneous");
        s = s2;
    }
    return s;
}

DerivationTheta operator+(const DerivationTheta& d, const DerivationTheta& e) {
    return {d.on_a + e.on_a, d.on_b + e.on_b};
}

DerivationTheta operator-(const DerivationTheta& d, const DerivationTheta& e) {
    return {d.on_a - e.on_a, d.on_b - e.on_b};
}

DerivationTheta operator*(const DerivationTheta& d, const SvScalar& c) {
    return {d.on_a * c, d.on_b * c};
}

LieElement der_apply(const DerivationTheta& d, const LieElement& x) {
    const auto& ta = d.on_a.word_expansion();
    const auto& tb = d.on_b.word_expansion();
    std::map<Word, SvScalar> out;
    for (const auto& [w, c] : x.word_expansion()) {
        for (int i = 0; i < w.len; ++i) {
            const auto& repl = w.letter(i) ? tb : ta;
            if (repl.empty())
                continue;
            Word pre = prefix(w, i);
            Word suf = suffix(w, i + 1);
            for (const auto& [rw, rc] : repl)
                accumulate(out, concat(concat(pre, rw), suf), c * rc);
        }
    }
    return LieElement::raw(std::move(out));
}

DerivationTheta der_bracket(const DerivationTheta& d1, const DerivationTheta& d2) {
    return {der_apply(d1, d2.on_a) - der_apply(d2, d1.on_a),
            der_apply(d1, d2.on_b) - der_apply(d2, d1.on_b)};
}

DerivationTheta epsilon0() { return {LieElement(), -LieElement::a()}; }

DerivationTheta epsilon0_dual() { return {LieElement::b(), LieElement()}; }

DerivationTheta epsilon(int index, EpsilonVariant variant) {
    if (index < 2 || index % 2 != 0)
        throw std::invalid_argument("epsilon index must be even and at least 2");
    const LieElement a = LieElement::a();
    std::vector<LieElement> adb(index + 1);
    adb[0] = LieElement::b();
    for (int i = 1; i <= index; ++i)
        adb[i] = bracket(a, adb[i - 1]);
    LieElement va = adb[index];
    LieElement vb;
    for (int i = 0; i <= index - 1; ++i) {
        LieElement t = bracket(adb[i], adb[index - 1 - i]) * SvScalar(Rational(1, 2));
        vb += i % 2 ? -t : t;
    }
    if (variant == EpsilonVariant::Dual)
        return {va, vb};
    return {substitute_sigma(vb), -substitute_sigma(va)};
}

std::vector<DerivationTheta> epsilon_string(int index) {
    std::vector<DerivationTheta> s{epsilon(index, EpsilonVariant::Lowest)};
    const DerivationTheta e0 = epsilon0();
    for (int i = 1; i <= index - 2; ++i)
        s.push_back(der_bracket(e0, s.back()));
    return s;
}

namespace {

RankResult rank_of_span_view(const std::vector<const DerivationTheta*>& ds) {
    bool have = false;
    std::pair<int, int> shift{0, 0};
    for (const auto* d : ds) {
        if (d->is_zero())
            continue;
        std::pair<int, int> s;
        try {
            s = d->bidegree_shift();
        } catch (const std::domain_error&) {
            throw std::invalid_argument("rank_of_span requires bidegree-homogeneous inputs");
        }
        if (have && s != shift)
            throw std::invalid_argument("rank_of_span requires inputs of equal bidegree");
        shift = s;
        have = true;
    }

    // Sequential elimination on sparse rows, one row per input, with an
    // identity augment so vanishing rows read off exact relations.
    using Key = std::pair<int, Word>;
    const int n = int(ds.size());
    struct Pivot {
        Key key;
        std::map<Key, Rational> row;
        std::vector<Rational> aug;
    };
    std::vector<Pivot> pivots;

    RankResult out;
    for (int i = 0; i < n; ++i) {
        std::map<Key, Rational> row;
        for (const auto& [w, c] : ds[i]->on_a.word_expansion())
            row[{0, w}] = c.as_rational();
        for (const auto& [w, c] : ds[i]->on_b.word_expansion())
            row[{1, w}] = c.as_rational();
        std::vector<Rational> aug(n, Rational(0));
        aug[i] = 1;

        for (const auto& p : pivots) {
            auto hit = row.find(p.key);
            if (hit == row.end())
                continue;
            Rational f = hit->second;
            for (const auto& [k, v] : p.row) {
                auto [it, inserted] = row.try_emplace(k, Rational(0));
                it->second -= f * v;
                if (it->second == 0)
                    row.erase(it);
            }
            for (int j = 0; j < n; ++j)
                aug[j] -= f * p.aug[j];
        }

        if (row.empty()) {
            normalize_relation(aug);
            out.kernel.push_back(std::move(aug));
            continue;
        }
        Rational lead = row.begin()->second;
        Key key = row.begin()->first;
        for (auto& [k, v] : row)
            v /= lead;
        for (auto& v : aug)
            v /= lead;
        pivots.push_back({key, std::move(row), std::move(aug)});
    }
    out.rank = int(pivots.size());
    return out;
}

} // namespace

RankResult rank_of_span(const std::vector<DerivationTheta>& ds) {
    std::vector<const DerivationTheta*> view;
    view.reserve(ds.size());
    for (const auto& d : ds)
        view.push_back(&d);
    return rank_of_span_view(view);
}

DimensionTable dimension_table(int max_bracket_length, int max_weight) {
    if (max_bracket_length < 1 || max_bracket_length > 3)
        throw std::invalid_argument(
            "dimension_table: bracket length beyond 3 needs upwards of 10^8 word "
            "operations; requested length " + std::to_string(max_bracket_length));
    if (max_weight < 2 || max_weight > 16)
        throw std::invalid_argument(
            "dimension_table: weight window must lie in 2..16; weight 18 alone "
            "needs ~10^7 bracket terms");

    struct Gen {
        DerivationTheta d;
        int weight;
        std::pair<int, int> shift;
    };
    std::vector<Gen> all;
    std::vector<int> bracketable; // indices into all
    for (int w = 2; w <= max_weight; w += 2)
        for (auto& d : epsilon_string(w)) {
            Gen g{std::move(d), w, {0, 0}};
            g.shift = g.d.bidegree_shift();
            // The index-2 derivation commutes with the whole family, so
            // it contributes nothing but zero columns to longer brackets.
            if (w >= 4)
                bracketable.push_back(int(all.size()));
            all.push_back(std::move(g));
        }

    // Shifts are additive, so group the bracket plans by cell up front
    // and materialise one cell at a time; the bigger products never
    // coexist in memory.
    std::map<std::tuple<int, int, int>, std::vector<const DerivationTheta*>> singles;
    for (const auto& g : all)
        singles[{1, g.shift.first, g.shift.second}].push_back(&g.d);

    std::vector<std::pair<int, int>> pair_list; // indices into all
    std::map<std::tuple<int, int, int>, std::vector<int>> pair_cells;
    if (max_bracket_length >= 2)
        for (std::size_t i = 0; i < bracketable.size(); ++i)
            for (std::size_t j = i + 1; j < bracketable.size(); ++j) {
                const Gen& gi = all[bracketable[i]];
                const Gen& gj = all[bracketable[j]];
                if (gi.weight + gj.weight > max_weight)
                    continue;
                pair_cells[{2, gi.shift.first + gj.shift.first,
                            gi.shift.second + gj.shift.second}]
                    .push_back(int(pair_list.size()));
                pair_list.emplace_back(bracketable[i], bracketable[j]);
            }

    std::map<std::tuple<int, int, int>, std::vector<std::pair<int, int>>> triple_cells;
    if (max_bracket_length >= 3)
        for (std::size_t p = 0; p < pair_list.size(); ++p) {
            const Gen& gi = all[pair_list[p].first];
            const Gen& gj = all[pair_list[p].second];
            if (gi.weight + gj.weight + 4 > max_weight)
                continue;
            for (int k : bracketable) {
                const Gen& gk = all[k];
                if (gi.weight + gj.weight + gk.weight > max_weight)
                    continue;
                triple_cells[{3,
                              gi.shift.first + gj.shift.first + gk.shift.first,
                              gi.shift.second + gj.shift.second + gk.shift.second}]
                    .emplace_back(int(p), k);
            }
        }

    DimensionTable tab;
    for (const auto& [key, ptrs] : singles)
        tab.cells[key] = DimensionCell{int(ptrs.size()), rank_of_span_view(ptrs).rank};
    for (const auto& [key, idxs] : pair_cells) {
        std::vector<DerivationTheta> ds;
        ds.reserve(idxs.size());
        for (int p : idxs)
            ds.push_back(der_bracket(all[pair_list[p].first].d, all[pair_list[p].second].d));
        tab.cells[key] = DimensionCell{int(ds.size()), rank_of_span(ds).rank};
    }
    for (const auto& [key, idxs] : triple_cells) {
        std::vector<DerivationTheta> ds;
        ds.reserve(idxs.size());
        for (const auto& [p, k] : idxs) {
            DerivationTheta inner =
                der_bracket(all[pair_list[p].first].d, all[pair_list[p].second].d);
            ds.push_back(der_bracket(inner, all[k].d));
        }
        tab.cells[key] = DimensionCell{int(ds.size()), rank_of_span(ds).rank};
    }
    return tab;
}

} // namespace eisenworks
