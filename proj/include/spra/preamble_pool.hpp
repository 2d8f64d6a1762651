#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace spra {

// Orthonormal constant-modulus preamble pool. The columns are the unitary
// DFT basis scaled to unit norm, so every entry has magnitude 1/sqrt(N) and
// distinct columns are orthogonal for any N >= 2. Pool size equals sequence
// length (L = N).
struct PreamblePool {
    int length = 0;            // N, symbols per preamble
    int size = 0;              // L, number of preambles (= N)
    Eigen::MatrixXcd columns;  // N x L, column l is preamble c_l
};

inline PreamblePool build_pool(int length) {
    if (length < 2) throw std::invalid_argument("build_pool: length must be >= 2");
    PreamblePool pool;
    pool.length = length;
    pool.size = length;
    pool.columns.resize(length, length);
    const double scale = 1.0 / std::sqrt(static_cast<double>(length));
    const double step = -2.0 * 3.14159265358979323846 / static_cast<double>(length);
    for (int l = 0; l < length; ++l) {
        for (int n = 0; n < length; ++n) {
            // exp(-2*pi*i*n*l/N) / sqrt(N); the phase index is reduced mod N
            // to keep the argument small for large pools.
            const double arg = step * static_cast<double>((static_cast<long long>(n) * l) % length);
            pool.columns(n, l) = std::complex<double>(std::cos(arg), std::sin(arg)) * scale;
        }
    }
    return pool;
}

// The family of S-preamble index sets: all B-element subsets of
// {0, ..., L-1} in lexicographic order, stored flat with stride B.
struct SIndexFamily {
    int pool_size = 0;         // L
    int order = 0;             // B (1 or 2)
    std::vector<int> indices;  // count() * order entries, each set sorted

    int count() const {
        return order > 0 ? static_cast<int>(indices.size()) / order : 0;
    }
    std::span<const int> set(int q) const {
        return {indices.data() + static_cast<std::size_t>(q) * order,
                static_cast<std::size_t>(order)};
    }
};

inline SIndexFamily enumerate_ssets(int pool_size, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("enumerate_ssets: unsupported superposition order");
    if (order > pool_size)
        throw std::invalid_argument("enumerate_ssets: order exceeds pool size");
    SIndexFamily family;
    family.pool_size = pool_size;
    family.order = order;
    if (order == 1) {
        family.indices.resize(pool_size);
        for (int l = 0; l < pool_size; ++l) family.indices[l] = l;
    } else {
        family.indices.reserve(static_cast<std::size_t>(pool_size) * (pool_size - 1));
        for (int a = 0; a < pool_size; ++a) {
            for (int b = a + 1; b < pool_size; ++b) {
                family.indices.push_back(a);
                family.indices.push_back(b);
            }
        }
    }
    return family;
}

// L x Q biadjacency matrix of the preamble/S-preamble bipartite graph:
// phi(l, q) = 1 iff preamble l is a component of S-preamble q. Every column
// sums to B; for B = 2 every row sums to L-1.
struct TransferMatrix {
    Eigen::MatrixXd phi;
};

inline TransferMatrix build_transfer_matrix(const SIndexFamily& family) {
    TransferMatrix transfer;
    transfer.phi = Eigen::MatrixXd::Zero(family.pool_size, family.count());
    for (int q = 0; q < family.count(); ++q)
        for (int l : family.set(q)) transfer.phi(l, q) = 1.0;
    return transfer;
}

// s_q = sum of the component preambles of one index set.
inline Eigen::VectorXcd spreamble_waveform(const PreamblePool& pool,
                                           std::span<const int> index_set) {
    Eigen::VectorXcd s = Eigen::VectorXcd::Zero(pool.length);
    for (int l : index_set) {
        if (l < 0 || l >= pool.size)
            throw std::invalid_argument("spreamble_waveform: preamble index out of range");
        s += pool.columns.col(l);
    }
    return s;
}

}  // namespace spra
