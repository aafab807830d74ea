#include "cyclic_spectra/charpoly.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace cyclic_spectra {

namespace {

using u64 = std::uint64_t;

void check_square(const IntMatrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

bool is_prime(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Characteristic polynomial mod p (p < 2^31), coefficients low to high.
std::vector<u64> charpoly_mod_p(const IntMatrix& a, u64 p) {
    const std::size_t n = a.size();
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t v = a[i][j] % static_cast<std::int64_t>(p);
            h[i][j] = static_cast<u64>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
        }

    // Reduce to upper Hessenberg form by similarity transforms.
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h[piv][m - 1] == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            std::swap(h[piv], h[m]);
            for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][m]);
        }
        const u64 inv = pow_mod(h[m][m - 1], p - 2, p);
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h[i][m - 1] == 0) continue;
            const u64 f = h[i][m - 1] * inv % p;
            // row_i -= f * row_m
            for (std::size_t j = 0; j < n; ++j)
                if (h[m][j]) h[i][j] = (h[i][j] + (p - f) * h[m][j]) % p;
            // col_m += f * col_i
            for (std::size_t r = 0; r < n; ++r)
                if (h[r][i]) h[r][m] = (h[r][m] + f * h[r][i]) % p;
        }
    }

    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t kk = k - 1;
        std::vector<u64> cur(k + 1, 0);
        const auto& prev = polys[k - 1];
        for (std::size_t t = 0; t < prev.size(); ++t) {
            cur[t + 1] = (cur[t + 1] + prev[t]) % p;
            cur[t] = (cur[t] + (p - h[kk][kk]) * prev[t]) % p;
        }
        u64 prod = 1;
        for (std::size_t i = kk; i-- > 0;) {
            prod = prod * h[i + 1][i] % p;
            if (prod == 0) break;
            const u64 coef = h[i][kk] * prod % p;
            if (coef == 0) continue;
            const auto& q = polys[i];
            for (std::size_t t = 0; t < q.size(); ++t) cur[t] = (cur[t] + (p - coef) * q[t]) % p;
        }
        polys[k] = std::move(cur);
    }
    return polys[n];
}

}  // namespace

Polynomial charpoly_faddeev_leverrier(const IntMatrix& a) {
    check_square(a);
    const std::size_t n = a.size();
    std::vector<std::vector<BigInt>> A(n, std::vector<BigInt>(n)), M(n, std::vector<BigInt>(n)), AM;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = static_cast<long>(a[i][j]);
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    // M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k
    for (std::size_t k = 1; k <= n; ++k) {
        AM.assign(n, std::vector<BigInt>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (A[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (M[l][j] != 0) AM[i][j] += A[i][l] * M[l][j];
            }
        for (std::size_t i = 0; i < n; ++i) AM[i][i] += c[n - k + 1];
        M.swap(AM);
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (A[i][l] != 0) tr += A[i][l] * M[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return Polynomial::from_integers(c);
}

Polynomial charpoly_modular(const IntMatrix& a) {
    check_square(a);
    const std::size_t n = a.size();
    if (n == 0) return Polynomial::constant(Rational(1));
    long double rho = 0;
    for (const auto& row : a) {
        long double s = 0;
        for (auto v : row) s += std::fabs(static_cast<long double>(v));
        rho = std::max(rho, s);
    }
    const long double bits_needed = static_cast<long double>(n) * std::log2(1.0L + rho) + 2;

    BigInt modulus = 1;
    std::vector<BigInt> coeffs(n + 1, 0);
    u64 p = (u64{1} << 31) - 1;
    while (mpz_sizeinbase(modulus.get_mpz_t(), 2) < bits_needed + 1) {
        while (!is_prime(p)) --p;
        const auto r = charpoly_mod_p(a, p);
        // Garner step: x = c + M * ((r - c) * M^{-1} mod p)
        BigInt minv, pz = static_cast<unsigned long>(p);
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t k = 0; k <= n; ++k) {
            BigInt t = (BigInt(static_cast<unsigned long>(r[k])) - coeffs[k]) * minv;
            mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
            coeffs[k] += modulus * t;
        }
        modulus *= pz;
        --p;
    }
    const BigInt half = modulus / 2;
    for (auto& c : coeffs)
        if (c > half) c -= modulus;
    return Polynomial::from_integers(coeffs);
}

Polynomial charpoly(const IntMatrix& a) {
    if (a.size() > kMaxExactDimension)
        throw std::invalid_argument("exact characteristic polynomial limited to " +
                                    std::to_string(kMaxExactDimension) + " vertices");
    return charpoly_modular(a);
}

}  // namespace cyclic_spectra
