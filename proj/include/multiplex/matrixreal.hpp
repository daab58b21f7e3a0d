#pragma once

#include "multiplex/weyl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace multiplex {

/// Dense N x N integer matrix; the self-test harness for sl(N, R) relations.
class IntMatrix {
public:
    explicit IntMatrix(int n);

    static IntMatrix unit(int n, int i, int j); // e_{ij}, 1-based

    int size() const { return n_; }
    std::int64_t& operator()(int i, int j);
    std::int64_t operator()(int i, int j) const;

    std::int64_t trace() const;
    IntMatrix transpose() const;
    bool is_zero() const;

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(std::int64_t s) const;
    IntMatrix operator-() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int n_;
    std::vector<std::int64_t> a_;
};

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b);

/// theta X = -X^T.
IntMatrix cartan_involution(const IntMatrix& x);

struct SlBasis {
    std::vector<IntMatrix> k_basis;    // X_ij = e_ij - e_ji, i < j
    std::vector<IntMatrix> p_symmetric; // Y_ij = e_ij + e_ji, i < j
    std::vector<IntMatrix> cartan;     // H_j = e_jj - e_{j+1,j+1}
    std::vector<IntMatrix> raising;    // X+_j = e_{j,j+1}
    std::vector<IntMatrix> lowering;   // X-_j = e_{j+1,j}
};

SlBasis build_basis(int matrix_size);

struct TripleCheck {
    int j = 0;
    bool bracket = false; // [X+_j, X-_j] = H_j
    bool raise = false;   // [H_j, X+_j] = 2 X+_j
    bool lower = false;   // [H_j, X-_j] = -2 X-_j
    bool passed() const { return bracket && raise && lower; }
};

std::vector<TripleCheck> check_sl2_triples(int matrix_size);

/// [K, K] lands in the antisymmetric matrices (so(N)).
bool check_k_closure(int matrix_size);

struct ParabolicDecomposition {
    int m_dim = 0;
    int a_dim = 0;
    int n_dim = 0;
};

ParabolicDecomposition parabolic_dimensions(const ParabolicSpec& spec);

/// Counts over the explicit matrix basis (block-upper e_ij, block traceless diagonal part)
/// rather than the closed forms; used to cross-check parabolic_dimensions.
ParabolicDecomposition count_parabolic_dimensions(const ParabolicSpec& spec);

} // namespace multiplex
