#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "gfrob/linalg.hpp"
#include "gfrob/multipoly.hpp"
#include "gfrob/rational.hpp"

namespace gfrob {

// Homogeneous linear form sum_v coeff[v] * x_v (no constant term), sparse.
class LinearForm {
public:
    void add(int var, const Rational& c);
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational eval(const std::vector<Rational>& point) const;
    MultiPoly to_poly(int num_vars) const;
    bool operator==(const LinearForm& o) const = default;

private:
    std::map<int, Rational> coeffs_;
};

// Matrix whose entries are linear forms over one shared variable set.
// Rows, columns and variables carry integer labels (basis indices in this
// project); entries are addressed by position and absent entries are zero.
class LinearFormMatrix {
public:
    LinearFormMatrix(std::vector<int> row_labels, std::vector<int> col_labels, std::vector<int> var_labels)
        : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), var_labels_(std::move(var_labels)) {}

    size_t rows() const { return row_labels_.size(); }
    size_t cols() const { return col_labels_.size(); }
    bool is_square() const { return rows() == cols(); }
    int num_vars() const { return static_cast<int>(var_labels_.size()); }

    const std::vector<int>& row_labels() const { return row_labels_; }
    const std::vector<int>& col_labels() const { return col_labels_; }
    const std::vector<int>& var_labels() const { return var_labels_; }

    void set(size_t r, size_t c, LinearForm f);
    const LinearForm& at(size_t r, size_t c) const;
    size_t nonzero_count() const { return entries_.size(); }
    const std::map<std::pair<size_t, size_t>, LinearForm>& entries() const { return entries_; }

    // Submatrix by row/col positions, same variable set.
    LinearFormMatrix submatrix(const std::vector<size_t>& row_pos, const std::vector<size_t>& col_pos) const;

private:
    std::vector<int> row_labels_, col_labels_, var_labels_;
    std::map<std::pair<size_t, size_t>, LinearForm> entries_;
};

// Exact determinant polynomial; the 0x0 determinant is the constant 1.
// Uses minor expansion along the sparsest row for matrices with at most 25%
// nonzero entries, fraction-free Bareiss elimination over the polynomial
// ring otherwise. Throws NotSquare.
MultiPoly symbolic_det(const LinearFormMatrix& m);

// Entrywise evaluation. Throws VariableMismatch unless alpha covers every
// variable. Commutes with symbolic_det.
RationalMatrix eval_at(const LinearFormMatrix& m, const std::vector<Rational>& alpha);

enum class Strategy { Auto, Randomized, Symbolic };

struct PitOptions {
    Strategy strategy = Strategy::Auto;
    uint64_t seed = 0;
    int trials = 4;
    int64_t sample_bound = 65536;
};

struct InvertibilityResult {
    bool invertible = false;
    std::vector<Rational> witness; // over the matrix's variable set, set iff invertible
    Rational det_value;            // determinant at the witness, nonzero iff invertible
};

// Decides whether det(m) is not identically zero; exact in all strategies.
// Randomized path samples integer points from [1, sample_bound]^k and checks
// the determinant exactly; if every trial fails (or strategy is Symbolic) the
// decision falls back to the symbolic determinant, and a Yes then derives a
// deterministic witness from it. Throws NotSquare.
InvertibilityResult is_generically_invertible(const LinearFormMatrix& m, const PitOptions& opt = {});

// Deterministic point where p does not vanish; p must be nonzero. Coordinates
// are chosen variable by variable, each the smallest value in 1..deg+1 that
// keeps the partial evaluation nonzero.
std::vector<Rational> nonvanishing_point(const MultiPoly& p);

// One sampled coordinate vector; entries are drawn in variable order as
// 1 + rng() % bound so that runs are reproducible from the seed.
std::vector<Rational> sample_point(std::mt19937_64& rng, size_t k, int64_t bound);

} // namespace gfrob
