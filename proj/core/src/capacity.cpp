#include "metrocap/capacity.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace metrocap {

namespace {

BigInt block_weight(const IrrepEntry &e) { return e.dim * e.eff_mult; }

void require_labels_match(std::size_t p_size, const Decomposition &decomp) {
    if (p_size != decomp.entries.size()) {
        throw std::invalid_argument("block_state_mi: distribution has " + std::to_string(p_size) +
                                    " entries, decomposition has " + std::to_string(decomp.entries.size()));
    }
}

}  // namespace

double in_base(double nats, LogBase base) { return base == LogBase::Two ? nats / kLn2 : nats; }

std::string to_string(LogBase base) { return base == LogBase::Two ? "2" : "e"; }

LogBase parse_log_base(const std::string &text) {
    if (text == "e" || text == "E" || text == "natural") {
        return LogBase::Natural;
    }
    if (text == "2" || text == "two") {
        return LogBase::Two;
    }
    throw std::invalid_argument("unknown log base '" + text + "' (expected e or 2)");
}

CapacityReport capacity(const Decomposition &decomp) {
    CapacityReport r;
    r.model = decomp.model;
    r.n = decomp.n;
    r.t = decomp.t;
    r.l = decomp.l;

    BigInt total = 0;
    for (const auto &e : decomp.entries) {
        total += block_weight(e);
    }
    if (total == 0) {
        throw std::invalid_argument("capacity: empty decomposition");
    }
    r.support = total;
    r.value_nats = log_big(total);
    r.optimal_p.reserve(decomp.entries.size());
    for (const auto &e : decomp.entries) {
        Rational p(block_weight(e), total);
        p.canonicalize();
        r.optimal_p.push_back({e.label, p});
    }
    return r;
}

double block_state_mi(const std::vector<Rational> &p, const Decomposition &decomp) {
    require_labels_match(p.size(), decomp);
    Rational sum = 0;
    for (const auto &q : p) {
        if (sgn(q) < 0) {
            throw std::invalid_argument("block_state_mi: negative probability");
        }
        sum += q;
    }
    if (sum != 1) {
        throw std::invalid_argument("block_state_mi: distribution sums to " + to_fraction(sum) + ", not 1");
    }
    // Each term is p * log(w / p); group by the exact ratio w / p.
    std::map<Rational, Rational> by_ratio;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0) {
            continue;
        }
        Rational ratio = Rational(block_weight(decomp.entries[i])) / p[i];
        ratio.canonicalize();
        by_ratio[ratio] += p[i];
    }
    double out = 0.0;
    for (const auto &[ratio, mass] : by_ratio) {
        if (mass == 1) {
            out += log_rational(ratio);
        } else {
            out += mass.get_d() * log_rational(ratio);
        }
    }
    return out;
}

double block_state_mi(const std::vector<double> &p, const Decomposition &decomp) {
    require_labels_match(p.size(), decomp);
    double sum = 0.0;
    for (double q : p) {
        if (!(q >= 0.0)) {
            throw std::invalid_argument("block_state_mi: negative or NaN probability");
        }
        sum += q;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("block_state_mi: distribution is not normalized");
    }
    double out = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        out += p[i] * (log_big(block_weight(decomp.entries[i])) - std::log(p[i]));
    }
    return out;
}

InputStateSpec optimal_input(const Decomposition &decomp) {
    const CapacityReport r = capacity(decomp);
    InputStateSpec spec;
    spec.blocks.reserve(decomp.entries.size());
    for (std::size_t i = 0; i < decomp.entries.size(); ++i) {
        const auto &e = decomp.entries[i];
        InputBlock b;
        b.label = e.label;
        b.p = r.optimal_p[i].p;
        b.dim = e.dim;
        b.eff_mult = e.eff_mult;
        b.descriptor = "maximally entangled on U_lambda (dim " + to_decimal(e.dim) + ") x C^" + to_decimal(e.eff_mult);
        spec.blocks.push_back(std::move(b));
    }
    return spec;
}

double mp_capacity(int n, int t) {
    if (n < 0 || t < 1) {
        throw std::invalid_argument("mp_capacity: need n >= 0 and t >= 1");
    }
    return log_big(binomial(static_cast<unsigned long>(n + t - 1), static_cast<unsigned long>(t - 1)));
}

BigInt su_dimension_square_sum(int n, int t) {
    BigInt sum = 0;
    for (const auto &lambda : enumerate_partitions(n, t)) {
        const BigInt d = weyl_dimension(lambda, t);
        sum += d * d;
    }
    return sum;
}

double su_capacity(int n, int t) { return log_big(su_dimension_square_sum(n, t)); }

BigInt su2_closed_form(int n) {
    if (n < 1) {
        throw std::invalid_argument("su2_closed_form: n must be positive");
    }
    if (n % 2 == 0) {
        const BigInt m = n / 2;
        return (m + 1) * (2 * m + 1) * (2 * m + 3) / 3;
    }
    const BigInt m = (n + 1) / 2;
    return 2 * m * (m + 1) * (2 * m + 1) / 3;
}

double su2_asymptote_residual(int n) {
    if (n < 1) {
        throw std::invalid_argument("su2_asymptote_residual: n must be positive");
    }
    // log(S) - 3 log n + log 6 = log(6 S / n^3), evaluated exactly then logged.
    Rational ratio(6 * su_dimension_square_sum(n, 2), BigInt(n) * n * n);
    ratio.canonicalize();
    return std::abs(log_rational(ratio));
}

std::vector<Partition> gapped_partitions(int n, int t, const Rational &a) {
    if (a < 2 || a > 3) {
        throw std::invalid_argument("gapped_partitions: a must lie in [2, 3]");
    }
    if (t < 2) {
        throw std::invalid_argument("gapped_partitions: t must be at least 2");
    }
    Rational gap = Rational(n) / (a * t);
    gap.canonicalize();
    if (gap.get_den() != 1 || sgn(gap) <= 0) {
        throw std::invalid_argument("gapped_partitions: n / (a t) = " + to_fraction(gap) +
                                    " is not a positive integer");
    }
    const int g = static_cast<int>(gap.get_num().get_si());
    std::vector<Partition> out;
    for (auto &lambda : enumerate_partitions(n, t)) {
        bool ok = true;
        for (int k = 0; k + 1 < t && ok; ++k) {
            ok = lambda[k] - lambda[k + 1] >= g;
        }
        if (ok) {
            out.push_back(std::move(lambda));
        }
    }
    return out;
}

LowerBound su_lower_bound_detail(int n, int t, const Rational &a) {
    LowerBound lb;
    lb.gapped_count = gapped_partitions(n, t, a).size();
    lb.per_pair_scale = Rational(n) / (a * t * t);
    lb.per_pair_scale.canonicalize();
    if (lb.gapped_count == 0) {
        throw std::invalid_argument("su_lower_bound: gapped set is empty");
    }
    Rational total = lb.per_pair_scale;
    mpz_pow_ui(total.get_num_mpz_t(), lb.per_pair_scale.get_num_mpz_t(), static_cast<unsigned long>(t * (t - 1)));
    mpz_pow_ui(total.get_den_mpz_t(), lb.per_pair_scale.get_den_mpz_t(), static_cast<unsigned long>(t * (t - 1)));
    total *= static_cast<unsigned long>(lb.gapped_count);
    total.canonicalize();
    lb.value_nats = log_rational(total);
    return lb;
}

double su_lower_bound(int n, int t, const Rational &a) { return su_lower_bound_detail(n, t, a).value_nats; }

double symmetric_subspace_mi(int n, int t) { return 2.0 * mp_capacity(n, t); }

double fano_bound(double mi, double eps) {
    if (!(eps >= 0.0) || eps >= 1.0) {
        throw std::invalid_argument("fano_bound: eps must lie in [0, 1)");
    }
    if (mi < 0.0) {
        throw std::invalid_argument("fano_bound: mutual information must be non-negative");
    }
    return (kLn2 + mi) / (1.0 - eps);
}

double scaling_fit(const std::vector<std::pair<double, double>> &points) {
    if (points.size() < 3) {
        throw std::invalid_argument("scaling_fit: need at least 3 points");
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto &[n, v] : points) {
        if (!(n > 0.0)) {
            throw std::invalid_argument("scaling_fit: n must be positive");
        }
        mean_x += std::log(n);
        mean_y += v;
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto &[n, v] : points) {
        const double dx = std::log(n) - mean_x;
        sxx += dx * dx;
        sxy += dx * (v - mean_y);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("scaling_fit: n values must be distinct");
    }
    return sxy / sxx;
}

int parameter_count(Model model, int t) { return model == Model::MultiPhase ? t - 1 : t * t - 1; }

std::vector<SweepRow> capacity_sweep(Model model, int t, ReferenceDim l, int n_start, int n_stop, int stride) {
    if (n_start < 1 || n_stop < n_start || stride < 1) {
        throw std::invalid_argument("capacity_sweep: need 1 <= start <= stop and stride >= 1");
    }
    std::vector<SweepRow> rows;
    const double half_params = 0.5 * parameter_count(model, t);
    for (int n = n_start; n <= n_stop; n += stride) {
        SweepRow row;
        row.n = n;
        if (model == Model::MultiPhase) {
            // One-dimensional blocks: eff_mult is 1 for every l.
            row.capacity_nats = mp_capacity(n, t);
        } else if (l.is_unbounded()) {
            row.capacity_nats = su_capacity(n, t);
        } else {
            row.capacity_nats = capacity(decompose(model, n, t, l)).value_nats;
        }
        row.baseline_nats = half_params * std::log(static_cast<double>(n));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace metrocap
