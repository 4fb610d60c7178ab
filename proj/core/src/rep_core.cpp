#include "metrocap/rep_core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace metrocap {

namespace {

void require_t(int t, const char *where) {
    if (t < 1) {
        throw std::invalid_argument(std::string(where) + ": t must be at least 1");
    }
}

void require_n(int n, const char *where) {
    if (n < 0) {
        throw std::invalid_argument(std::string(where) + ": n must be non-negative");
    }
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

void partitions_rec(int remaining, int max_part, int slot, std::vector<int> &rows,
                    std::vector<Partition> &out) {
    const int t = static_cast<int>(rows.size());
    if (slot == t) {
        if (remaining == 0) {
            out.emplace_back(rows);
        }
        return;
    }
    const int slots_left = t - slot;
    // The current row must be large enough that the remaining rows (each at
    // most this one) can absorb what is left.
    const int lo = (remaining + slots_left - 1) / slots_left;
    for (int part = std::min(remaining, max_part); part >= lo; --part) {
        rows[slot] = part;
        partitions_rec(remaining - part, part, slot + 1, rows, out);
    }
    rows[slot] = 0;
}

void weights_rec(int remaining, int slot, std::vector<int> &counts, std::vector<WeightVector> &out) {
    const int t = static_cast<int>(counts.size());
    if (slot == t - 1) {
        counts[slot] = remaining;
        out.emplace_back(counts);
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        counts[slot] = c;
        weights_rec(remaining - c, slot + 1, counts, out);
    }
}

}  // namespace

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 0) {
            throw std::invalid_argument("Partition: negative row length");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw std::invalid_argument("Partition: rows must be non-increasing");
        }
    }
    n_ = std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::vector<int> Partition::ascending() const { return {rows_.rbegin(), rows_.rend()}; }

WeightVector::WeightVector(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_) {
        if (c < 0) {
            throw std::invalid_argument("WeightVector: negative count");
        }
    }
    n_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::string to_string(Model m) {
    switch (m) {
        case Model::MultiPhase:
            return "mp";
        case Model::SpecialUnitary:
            return "su";
    }
    throw std::invalid_argument("unsupported model tag");
}

Model parse_model(const std::string &text) {
    const std::string s = lower(text);
    if (s == "mp" || s == "multiphase") {
        return Model::MultiPhase;
    }
    if (s == "su" || s == "specialunitary") {
        return Model::SpecialUnitary;
    }
    throw std::invalid_argument("unknown model '" + text + "' (expected mp or su)");
}

ReferenceDim ReferenceDim::of(std::uint64_t l) {
    if (l == 0) {
        throw std::invalid_argument("reference dimension must be positive");
    }
    ReferenceDim r;
    r.value_ = l;
    return r;
}

ReferenceDim ReferenceDim::parse(const std::string &text) {
    const std::string s = lower(text);
    if (s == "inf" || s == "unbounded") {
        return unbounded();
    }
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument("reference dimension must be a positive integer or 'inf', got '" + text + "'");
    }
    return of(std::stoull(s));
}

std::uint64_t ReferenceDim::value() const {
    if (!value_) {
        throw std::logic_error("ReferenceDim::value on unbounded reference");
    }
    return *value_;
}

std::string ReferenceDim::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

BigInt Decomposition::total_dimension() const {
    BigInt total = 0;
    for (const auto &e : entries) {
        total += e.dim * e.mult;
    }
    return total;
}

std::vector<Partition> enumerate_partitions(int n, int t) {
    require_n(n, "enumerate_partitions");
    require_t(t, "enumerate_partitions");
    std::vector<Partition> out;
    std::vector<int> rows(static_cast<std::size_t>(t), 0);
    partitions_rec(n, n, 0, rows, out);
    return out;
}

BigInt count_partitions(int n, int t) {
    require_n(n, "count_partitions");
    require_t(t, "count_partitions");
    // Parts of size at most t (conjugate count), standard coin DP.
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= t; ++part) {
        for (int s = part; s <= n; ++s) {
            ways[s] += ways[s - part];
        }
    }
    return ways[n];
}

BigInt weyl_dimension(const Partition &lambda) { return weyl_dimension(lambda, lambda.t()); }

BigInt weyl_dimension(const Partition &lambda, int t) {
    require_t(t, "weyl_dimension");
    std::vector<int> rows = lambda.rows();
    if (static_cast<int>(rows.size()) > t) {
        if (std::any_of(rows.begin() + t, rows.end(), [](int r) { return r != 0; })) {
            throw std::invalid_argument("weyl_dimension: partition has more than t non-zero rows");
        }
        rows.resize(static_cast<std::size_t>(t));
    }
    rows.resize(static_cast<std::size_t>(t), 0);

    // Product over row pairs j < k of (lambda_j - lambda_k + k - j) / (k - j).
    BigInt num = 1;
    BigInt den = 1;
    for (int j = 0; j < t; ++j) {
        for (int k = j + 1; k < t; ++k) {
            num *= rows[j] - rows[k] + k - j;
            den *= k - j;
        }
    }
    BigInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

BigInt multiplicity_su(const Partition &lambda, int n) {
    if (lambda.n() != n) {
        throw std::invalid_argument("multiplicity_su: partition has " + std::to_string(lambda.n()) +
                                    " boxes, expected " + std::to_string(n));
    }
    const auto &rows = lambda.rows();
    const int first = rows.empty() ? 0 : rows.front();
    // Column lengths of the conjugate diagram.
    std::vector<int> cols(static_cast<std::size_t>(first), 0);
    for (int r : rows) {
        for (int c = 0; c < r; ++c) {
            ++cols[c];
        }
    }
    BigInt hooks = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            hooks *= (rows[i] - j - 1) + (cols[j] - static_cast<int>(i) - 1) + 1;
        }
    }
    BigInt out;
    const BigInt nfact = factorial(static_cast<unsigned long>(n));
    mpz_divexact(out.get_mpz_t(), nfact.get_mpz_t(), hooks.get_mpz_t());
    return out;
}

std::vector<WeightVector> enumerate_weights(int n, int t) {
    require_n(n, "enumerate_weights");
    require_t(t, "enumerate_weights");
    std::vector<WeightVector> out;
    std::vector<int> counts(static_cast<std::size_t>(t), 0);
    weights_rec(n, 0, counts, out);
    return out;
}

BigInt multiplicity_mp(const WeightVector &w) {
    BigInt den = 1;
    for (int c : w.counts()) {
        den *= factorial(static_cast<unsigned long>(c));
    }
    BigInt out;
    const BigInt nfact = factorial(static_cast<unsigned long>(w.n()));
    mpz_divexact(out.get_mpz_t(), nfact.get_mpz_t(), den.get_mpz_t());
    return out;
}

Decomposition decompose(Model model, int n, int t, ReferenceDim l) {
    require_n(n, "decompose");
    require_t(t, "decompose");
    Decomposition d;
    d.model = model;
    d.n = n;
    d.t = t;
    d.l = l;

    auto effective = [&l](const BigInt &dim, const BigInt &mult) -> BigInt {
        if (l.is_unbounded()) {
            return dim;
        }
        BigInt scaled = mult * BigInt(std::to_string(l.value()));
        return scaled < dim ? scaled : dim;
    };

    switch (model) {
        case Model::SpecialUnitary: {
            for (const auto &lambda : enumerate_partitions(n, t)) {
                IrrepEntry e;
                e.label = lambda.rows();
                e.dim = weyl_dimension(lambda, t);
                e.mult = multiplicity_su(lambda, n);
                e.eff_mult = effective(e.dim, e.mult);
                d.entries.push_back(std::move(e));
            }
            return d;
        }
        case Model::MultiPhase: {
            for (const auto &w : enumerate_weights(n, t)) {
                IrrepEntry e;
                e.label = w.counts();
                e.dim = 1;
                e.mult = multiplicity_mp(w);
                e.eff_mult = effective(e.dim, e.mult);
                d.entries.push_back(std::move(e));
            }
            return d;
        }
    }
    throw std::invalid_argument("decompose: unsupported model tag");
}

}  // namespace metrocap
