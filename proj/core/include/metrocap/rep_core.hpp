#pragma once

// Irreducible decompositions of n-fold tensor representations for the two
// unitary models handled by this library:
//
//   * MultiPhase      the torus {diag(1, e^{i th_1}, ..., e^{i th_{t-1}})},
//                     whose irreps in (C^t)^{(x)n} are one-dimensional and
//                     labelled by weight vectors (n_0, ..., n_{t-1});
//   * SpecialUnitary  SU(t), whose irreps are labelled by Young diagrams with
//                     at most t rows and n boxes (Schur-Weyl duality).
//
// Everything here is exact integer arithmetic.

#include "metrocap/numeric.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace metrocap {

/// Young diagram with exactly t rows (zero padded), rows non-increasing.
class Partition {
  public:
    /// Validates ordering and non-negativity; n is the row sum.
    explicit Partition(std::vector<int> rows);

    const std::vector<int> &rows() const { return rows_; }
    int t() const { return static_cast<int>(rows_.size()); }
    int n() const { return n_; }
    int operator[](std::size_t i) const { return rows_[i]; }

    /// Rows in non-decreasing order (the convention used by the Weyl product).
    std::vector<int> ascending() const;

    auto operator<=>(const Partition &) const = default;
    bool operator==(const Partition &) const = default;

  private:
    std::vector<int> rows_;
    int n_ = 0;
};

/// Torus weight (n_0, ..., n_{t-1}) with sum n.
class WeightVector {
  public:
    explicit WeightVector(std::vector<int> counts);

    const std::vector<int> &counts() const { return counts_; }
    int t() const { return static_cast<int>(counts_.size()); }
    int n() const { return n_; }

    auto operator<=>(const WeightVector &) const = default;
    bool operator==(const WeightVector &) const = default;

  private:
    std::vector<int> counts_;
    int n_ = 0;
};

enum class Model { MultiPhase, SpecialUnitary };

std::string to_string(Model m);
/// Accepts "mp"/"multiphase" and "su"/"specialunitary" (case-insensitive).
Model parse_model(const std::string &text);

/// Dimension l of the reference system attached to the input.
/// The unbounded value stands for "l >= d/n_lambda for every block".
class ReferenceDim {
  public:
    static ReferenceDim unbounded() { return ReferenceDim(); }
    static ReferenceDim of(std::uint64_t l);
    /// "inf" or a positive integer.
    static ReferenceDim parse(const std::string &text);

    bool is_unbounded() const { return !value_.has_value(); }
    std::uint64_t value() const;
    std::string to_string() const;

    bool operator==(const ReferenceDim &) const = default;

  private:
    ReferenceDim() = default;
    std::optional<std::uint64_t> value_;
};

struct IrrepEntry {
    /// Partition rows (SpecialUnitary) or weight counts (MultiPhase).
    std::vector<int> label;
    BigInt dim;
    BigInt mult;
    /// min(l * mult, dim); equals dim when l is unbounded.
    BigInt eff_mult;
};

struct Decomposition {
    Model model = Model::SpecialUnitary;
    int n = 0;
    int t = 0;
    ReferenceDim l = ReferenceDim::unbounded();
    std::vector<IrrepEntry> entries;

    /// Sum of dim * mult over all blocks; t^n for a complete decomposition.
    BigInt total_dimension() const;
};

/// All partitions of n into at most t parts, lexicographically descending.
std::vector<Partition> enumerate_partitions(int n, int t);

/// Number of partitions of n into at most t parts, without materialising them.
BigInt count_partitions(int n, int t);

/// Dimension of the SU(t) irrep with highest weight lambda.
BigInt weyl_dimension(const Partition &lambda);
BigInt weyl_dimension(const Partition &lambda, int t);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
/// Throws std::invalid_argument if lambda does not have n boxes.
BigInt multiplicity_su(const Partition &lambda, int n);

/// All weight vectors of length t summing to n, lexicographically descending.
std::vector<WeightVector> enumerate_weights(int n, int t);

/// Multinomial n! / (n_0! ... n_{t-1}!).
BigInt multiplicity_mp(const WeightVector &w);

Decomposition decompose(Model model, int n, int t, ReferenceDim l);

}  // namespace metrocap
