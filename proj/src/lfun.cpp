#include "eisenworks/lfun.hpp"

#include "eisenworks/numerics.hpp"
#include "eisenworks/raeis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eisenworks {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// compensated (Kahan) accumulator; summation order is fixed by the
// callers, so identical inputs give identical bits
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

SvScalar stream_at(const LSeriesData& d, int k, long l) {
    auto it = d.bands.find(k);
    if (it == d.bands.end()) return SvScalar();
    if (l < 0 || l >= static_cast<long>(it->second.size())) return SvScalar();
    return it->second[l];
}

void band_add(LSeriesData& dst, int k, long l, const SvScalar& c) {
    auto& v = dst.bands[k];
    if (v.empty()) v.assign(dst.terms + 1, SvScalar());
    v[l] += c;
}

std::complex<double> cpow_l(long l, std::complex<double> e) {
    return std::exp(e * std::log(static_cast<double>(l)));
}

} // namespace

LSeriesData dirichlet_data(const BiSeries& f, long terms) {
    if (terms < 0) throw std::invalid_argument("cutoff must be nonnegative");
    if (terms > f.trunc())
        throw std::invalid_argument("cutoff exceeds the source truncation");
    LSeriesData d;
    d.alpha = f.weight_r();
    d.beta = f.weight_s();
    d.terms = terms;
    for (const auto& [key, c] : f.terms()) {
        long l = std::get<1>(key) + std::get<2>(key);
        if (l < 1 || l > terms || c.is_zero()) continue;
        band_add(d, std::get<0>(key), l, c);
    }
    return d;
}

LSeriesData eis_dirichlet_data(int w, int r, int s, long terms) {
    if (w < 2 || w % 2 != 0)
        throw std::invalid_argument("weight must be even and >= 2");
    if (r < 0 || s < 0 || r + s != w)
        throw std::invalid_argument("component weights must be nonnegative and sum to w");
    if (terms < 1) throw std::invalid_argument("cutoff must be positive");
    LSeriesData d;
    d.alpha = r;
    d.beta = s;
    d.terms = terms;
    for (long l = 1; l <= terms; ++l) {
        SvScalar sigma{Rational(divisor_sigma(w + 1, l))};
        auto chain = eis_pure_mode_chain(w, l);
        for (const auto& [k, v] : chain[{r, s}])
            band_add(d, k, l, sigma * SvScalar(v));
        // the qbar^l mode of (r,s) is the q^l mode of the mirror component
        for (const auto& [k, v] : chain[{s, r}])
            band_add(d, k, l, sigma * SvScalar(v));
    }
    return d;
}

LambdaValue lambda_completed(const LSeriesData& data, std::complex<double> s) {
    double re = s.real();
    double w = data.alpha + data.beta;
    if (re < w + 3.0)
        throw std::invalid_argument(
            "Re(s) below the direct-summation regime; no continuation here");
    LambdaValue out;
    if (data.bands.empty() || data.terms < 1) return out;
    int k_min = data.bands.begin()->first;
    if (re + k_min <= 0.0)
        throw std::invalid_argument(
            "lowest band falls outside the convergent Mellin strip");

    std::complex<double> prefactor = std::exp(-s * std::log(kTwoPi));
    double tail = 0.0;
    Kahan total_re, total_im;
    for (const auto& [k, stream] : data.bands) {
        Kahan sum_re, sum_im;
        double growth = 0.0; // max |c(l)| / l^(w + k) over the range
        for (long l = 1; l <= data.terms && l < static_cast<long>(stream.size());
             ++l) {
            if (stream[l].is_zero()) continue;
            double c = sv_eval(stream[l], 15);
            std::complex<double> term =
                c * cpow_l(l, -(s + static_cast<double>(k)));
            sum_re.add(term.real());
            sum_im.add(term.imag());
            growth = std::max(growth,
                              std::abs(c) / std::pow(static_cast<double>(l),
                                                     w + k));
        }
        double sign = (k % 2 != 0) ? -1.0 : 1.0;
        std::complex<double> gamma = gamma_fn(s + static_cast<double>(k));
        std::complex<double> band_value =
            sign * prefactor * gamma *
            std::complex<double>(sum_re.sum, sum_im.sum);
        total_re.add(band_value.real());
        total_im.add(band_value.imag());
        // divisor-sum growth model with safety factor 2: beyond the cutoff
        // assume |c(l)| <= 2 growth l^(w+k), so the dropped part of this
        // band is at most the integral bound below
        tail += std::abs(prefactor) * std::abs(gamma) * 2.0 * growth *
                std::pow(static_cast<double>(data.terms), w + 1.0 - re) /
                (re - w - 1.0);
    }
    out.value = {total_re.sum, total_im.sum};
    out.tail_bound = tail;
    return out;
}

LambdaValue lambda_completed(const BiSeries& f, std::complex<double> s,
                             long terms) {
    return lambda_completed(dirichlet_data(f, terms), s);
}

std::complex<double> lambda_eis_closed_form(int w, int r, int s,
                                            std::complex<double> x) {
    if (w < 2 || w % 2 != 0)
        throw std::invalid_argument("weight must be even and >= 2");
    if (r < 0 || s < 0 || r + s != w)
        throw std::invalid_argument("component weights must be nonnegative and sum to w");
    auto chain = eis_pure_mode_chain(w, 1);
    std::map<int, Rational> gamma_mix = chain[{r, s}];
    for (const auto& [k, v] : chain[{s, r}]) gamma_mix[k] += v;
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [k, v] : gamma_mix) {
        double sign = (k % 2 != 0) ? -1.0 : 1.0;
        acc += sign * to_double(v) * gamma_fn(x + static_cast<double>(k));
    }
    return std::exp(-x * std::log(kTwoPi)) * zeta(x + 1.0) *
           zeta(x - static_cast<double>(w)) * acc;
}

std::complex<double> lambda_g_closed_form(int k, std::complex<double> x) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("weight must be even and >= 2");
    return std::exp(-x * std::log(kTwoPi)) * gamma_fn(x) * zeta(x) *
           zeta(x - static_cast<double>(k - 1));
}

DLambdaReport dlambda_residue(const LSeriesData& f, const LSeriesData& g,
                              int w) {
    if (f.terms != g.terms)
        throw std::invalid_argument("stream cutoffs must match");
    DLambdaReport report;
    for (long l = 1; l <= f.terms; ++l) {
        int k_min = 0, k_max = 0;
        bool any = false;
        auto scan = [&](const LSeriesData& d) {
            for (const auto& [k, stream] : d.bands) {
                if (l >= static_cast<long>(stream.size()) ||
                    stream[l].is_zero())
                    continue;
                if (!any) {
                    k_min = k_max = k;
                    any = true;
                } else {
                    k_min = std::min(k_min, k);
                    k_max = std::max(k_max, k);
                }
            }
        };
        scan(f);
        scan(g);
        if (!any) continue;

        // accumulate the coefficient of Gamma(s + k_min) l^(-(s + k_min)),
        // a polynomial in formal s, band by band
        std::vector<SvScalar> cell(static_cast<size_t>(k_max - k_min) + 2);
        for (int k = k_min; k <= k_max; ++k) {
            SvScalar fk = stream_at(f, k, l);
            SvScalar gk = stream_at(g, k, l);
            if (fk.is_zero() && gk.is_zero()) continue;
            // g_k + (2s - w) f_k
            std::vector<SvScalar> p{gk + SvScalar(Rational(-w)) * fk,
                                    SvScalar(2) * fk};
            // Gamma(s+k) = Gamma(s+k_min) prod_{j=k_min}^{k-1} (s+j), and
            // l^(-(s+k)) picks up l^(k_min-k); the sign is (-1)^(k-k_min)
            for (int j = k_min; j < k; ++j) {
                std::vector<SvScalar> q(p.size() + 1);
                for (size_t i = 0; i < p.size(); ++i) {
                    q[i] += SvScalar(Rational(j)) * p[i];
                    q[i + 1] += p[i];
                }
                p = std::move(q);
            }
            Rational scale(1, 1);
            for (int j = k_min; j < k; ++j) scale /= Rational(-l);
            for (size_t i = 0; i < p.size(); ++i)
                cell[i] += SvScalar(scale) * p[i];
        }

        std::string line;
        for (size_t i = 0; i < cell.size(); ++i) {
            if (cell[i].is_zero()) continue;
            if (!line.empty()) line += ", ";
            line += "s^" + std::to_string(i) + ": " + cell[i].to_string();
        }
        if (!line.empty())
            report.residues.push_back("l=" + std::to_string(l) + " -> " +
                                      line);
    }
    return report;
}

DLambdaReport verify_dlambda_identity(const BiSeries& f) {
    long terms = f.trunc();
    LSeriesData fd = dirichlet_data(f, terms);
    LSeriesData gd = dirichlet_data(maass(f, MaassDir::Raise), terms);
    LSeriesData ld = dirichlet_data(maass(f, MaassDir::Lower), terms);
    for (const auto& [k, stream] : ld.bands)
        for (long l = 1; l < static_cast<long>(stream.size()); ++l)
            if (!stream[l].is_zero()) band_add(gd, k, l, stream[l]);
    gd.terms = terms;
    return dlambda_residue(fd, gd, f.weight_r() + f.weight_s());
}

std::vector<Rational> det_Mw(int w) {
    if (w < 0 || w % 2 != 0)
        throw std::invalid_argument("order must be even and nonnegative");
    // continuant recursion on leading principal minors: the size-j minor
    // is (2s-w) D_{j-1} - (j-1)(w-j+2) D_{j-2}
    std::vector<Rational> prev{Rational(1)};
    std::vector<Rational> cur{Rational(-w), Rational(2)};
    for (int j = 2; j <= w + 1; ++j) {
        std::vector<Rational> next(cur.size() + 1);
        for (size_t i = 0; i < cur.size(); ++i) {
            next[i] += Rational(-w) * cur[i];
            next[i + 1] += Rational(2) * cur[i];
        }
        Rational off = Rational(j - 1) * Rational(w - j + 2);
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= off * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

double xi_completed(double s) {
    return std::pow(kTwoPi / 2.0, -s / 2.0) * gamma_fn(s / 2.0) *
           zeta(s);
}

XiReport xi_identity_check(int k, double s, long terms) {
    if (k != 1)
        throw std::invalid_argument(
            "only k = 1 is within direct summing reach");
    LambdaValue lam = lambda_completed(eis_dirichlet_data(2 * k, k, k, terms),
                                       {s, 0.0});
    double factor = std::pow(-4.0 * (kTwoPi / 2.0), k);
    XiReport rep;
    rep.lhs = factor * lam.value.real();
    rep.rhs = to_double(Rational(factorial(2 * k - 1), factorial(k - 1))) *
              xi_completed(s + 1.0) * xi_completed(s - 2.0 * k);
    rep.tail_bound = std::abs(factor) * lam.tail_bound;
    rep.rel_discrepancy =
        std::abs(rep.lhs - rep.rhs) / std::max(std::abs(rep.rhs), 1e-300);
    return rep;
}

} // namespace eisenworks
