#pragma once

// Ground-truth machinery: dense matrices, tensor-product operator models for
// the Boolean and monotone embeddings, a Jacobi eigensolver, and rule-based
// evaluators for mixed moments of cyclic-Boolean / cyclic-monotone words.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclic_spectra/graph.hpp"
#include "cyclic_spectra/rational.hpp"
#include "cyclic_spectra/transforms.hpp"

namespace cyclic_spectra {

template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    /// Rank-one projection onto coordinate 0.
    static DenseMatrix vacuum_projection(std::size_t n) {
        DenseMatrix m(n);
        m(0, 0) = T(1);
        return m;
    }
    template <class U>
    static DenseMatrix from(const std::vector<std::vector<U>>& rows) {
        DenseMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix is not square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = T(rows[i][j]);
        }
        return m;
    }

    std::size_t n() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch");
        const std::size_t n = x.n_;
        DenseMatrix r(n);
        const T zero(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const T& xik = x(i, k);
                if (xik == zero) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    const T& ykj = y(k, j);
                    if (ykj == zero) continue;
                    r(i, j) += xik * ykj;
                }
            }
        return r;
    }
    friend DenseMatrix operator+(DenseMatrix x, const DenseMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("dimension mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    friend DenseMatrix kron(const DenseMatrix& x, const DenseMatrix& y) {
        DenseMatrix r(x.n_ * y.n_);
        const T zero(0);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t j = 0; j < x.n_; ++j) {
                if (x(i, j) == zero) continue;
                for (std::size_t k = 0; k < y.n_; ++k)
                    for (std::size_t l = 0; l < y.n_; ++l)
                        if (!(y(k, l) == zero)) r(i * y.n_ + k, j * y.n_ + l) = x(i, j) * y(k, l);
            }
        return r;
    }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

using RatMatrix = DenseMatrix<Rational>;
using RealMatrix = DenseMatrix<double>;

RatMatrix to_rational(const IntMatrix& a);
RealMatrix to_real(const IntMatrix& a);

/// Tensor product of finite-dimensional spaces with the vacuum vector e_0 in each factor.
class OperatorModel {
public:
    explicit OperatorModel(std::vector<std::size_t> dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t total_dim() const { return total_; }

    /// P (x) ... (x) A (x) ... (x) P   (i is 0-based)
    RatMatrix boolean_embed(std::size_t i, const RatMatrix& a) const;
    /// I (x) ... (x) I (x) A (x) P (x) ... (x) P
    RatMatrix monotone_embed(std::size_t i, const RatMatrix& a) const;
    /// <M e_0, e_0> for the tensor vacuum e_0 (x) ... (x) e_0, which is coordinate 0.
    static Rational vacuum(const RatMatrix& m) { return m(0, 0); }

private:
    RatMatrix embed(std::size_t i, const RatMatrix& a, bool monotone) const;
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
};

/// Cyclic Jacobi rotations until off-diagonal norm < 1e-12 ||M||_F; eigenvalues
/// clustered at 1e-8.
SpectrumReport eigensolve(const RealMatrix& m);
std::vector<double> jacobi_eigenvalues(RealMatrix m);

Rational trace_moment(const RatMatrix& m, unsigned k);
Rational vacuum_moment(const RatMatrix& m, std::size_t root, unsigned k);
BigInt trace_moment(const IntMatrix& m, unsigned k);
BigInt vacuum_moment(const IntMatrix& m, std::size_t root, unsigned k);
double trace_moment_from_spectrum(const SpectrumReport& s, unsigned k);

/// Moment tables for one algebra: phi[k] = phi(a^k), omega[k] = omega(a^k), index 0 unused.
struct MomentTable {
    std::vector<Rational> phi;
    std::vector<Rational> omega;
};

struct Letter {
    std::size_t algebra = 0;
    unsigned power = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

using MixedWord = std::vector<Letter>;

enum class Functional { phi, omega };

/// Merges equal neighbours; for omega also merges the last letter into the first.
MixedWord reduce_word(MixedWord w, Functional f);

Rational eval_cyclic_boolean_word(const MixedWord& w, const std::vector<MomentTable>& tables, Functional f);

enum class PeelOrder { leftmost, rightmost };
Rational eval_cyclic_monotone_word(const MixedWord& w, const std::vector<MomentTable>& tables, Functional f,
                                   PeelOrder order = PeelOrder::leftmost);

}  // namespace cyclic_spectra
