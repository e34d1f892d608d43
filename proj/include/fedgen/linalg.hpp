#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fedgen/errors.hpp"

namespace fedgen {

/// Dense 2-D real matrix, row-major. The sole numeric carrier of the project.
/// Values are immutable-after-construction by convention: public operations
/// return new matrices; the few *_inplace helpers are single-owner mutations.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;  // length rows*cols, row-major

    Matrix() = default;
    Matrix(int r, int c);
    Matrix(int r, int c, std::initializer_list<double> values);

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    double* row_ptr(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const double* row_ptr(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

    std::size_t size() const { return data.size(); }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, double s);
Matrix transpose(const Matrix& a);
Matrix zeros(int rows, int cols);

/// dst += coeff * src. Shapes must match.
void axpy_inplace(Matrix& dst, const Matrix& src, double coeff);

bool all_finite(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Deterministic 64-bit generator (xoshiro256** seeded through splitmix64).
/// Identical seed gives an identical draw sequence on every platform; all
/// distributions below are hand-rolled so no library variance leaks in.
/// Single-owner: never share one instance across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();
    /// Uniform integer in [0, n), unbiased. n must be > 0.
    std::uint64_t uniform_below(std::uint64_t n);
    /// Normal(mean, stddev^2) via Box-Muller with a cached spare.
    double normal(double mean, double stddev);
    /// Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 handled by boosting.
    double gamma(double shape);

    /// Deterministic in-place Fisher-Yates (std::shuffle is not portable).
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Derives an independent stream seed from a base seed and a tag path,
/// e.g. mix_seed({seed, STREAM_CLIENT, round, client_id}). Used to keep
/// selection, init, data and per-client training streams separate.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

// Stream tags for mix_seed. Values are arbitrary but fixed forever.
inline constexpr std::uint64_t kStreamCorpus = 0xC0;
inline constexpr std::uint64_t kStreamPartition = 0xDA;
inline constexpr std::uint64_t kStreamInit = 0x1A;
inline constexpr std::uint64_t kStreamSelect = 0x5E;
inline constexpr std::uint64_t kStreamClient = 0xC1;
inline constexpr std::uint64_t kStreamEval = 0xEA;
inline constexpr std::uint64_t kStreamPretrain = 0xBB;

Matrix gaussian_init(Rng& rng, int rows, int cols, double stddev);

/// Probability vector of length dim drawn from Dir(alpha, ..., alpha),
/// implemented as normalized Gamma(alpha, 1) draws.
/// alpha must be > 0; entries are non-negative and sum to 1 within 1e-12.
std::vector<double> dirichlet_sample(Rng& rng, double alpha, int dim);

/// Index drawn from the categorical distribution given by non-negative
/// weights (need not be normalized).
int categorical_sample(Rng& rng, const std::vector<double>& weights);

// Raw row-major kernels shared with the model's training engine.
// c (m x n), a (m x k), b (k x n); "t" suffixes take the transposed view.
namespace kernels {
void mm_nn(double* c, const double* a, const double* b, int m, int k, int n, bool accumulate);
// c = a^T * b with a stored (k x m)
void mm_tn(double* c, const double* a, const double* b, int m, int k, int n, bool accumulate);
// c = a * b^T with b stored (n x k)
void mm_nt(double* c, const double* a, const double* b, int m, int k, int n, bool accumulate);
}  // namespace kernels

}  // namespace fedgen
