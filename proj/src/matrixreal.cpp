#include "multiplex/matrixreal.hpp"

#include "multiplex/errors.hpp"

#include <algorithm>

namespace multiplex {

IntMatrix::IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
    if (n < 1) throw DomainError("matrix size must be positive");
}

IntMatrix IntMatrix::unit(int n, int i, int j) {
    IntMatrix m(n);
    m(i, j) = 1;
    return m;
}

std::int64_t& IntMatrix::operator()(int i, int j) {
    return a_.at(static_cast<std::size_t>((i - 1) * n_ + (j - 1)));
}

std::int64_t IntMatrix::operator()(int i, int j) const {
    return a_.at(static_cast<std::size_t>((i - 1) * n_ + (j - 1)));
}

std::int64_t IntMatrix::trace() const {
    std::int64_t t = 0;
    for (int i = 1; i <= n_; ++i) t += (*this)(i, i);
    return t;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::int64_t v) { return v == 0; });
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    IntMatrix r(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_.at(i);
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (o.n_ != n_) throw DomainError("matrix size mismatch");
    IntMatrix r(n_);
    for (int i = 1; i <= n_; ++i)
        for (int k = 1; k <= n_; ++k) {
            const std::int64_t aik = (*this)(i, k);
            if (aik == 0) continue;
            for (int j = 1; j <= n_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator*(std::int64_t s) const {
    IntMatrix r(*this);
    for (auto& v : r.a_) v *= s;
    return r;
}

IntMatrix IntMatrix::operator-() const { return *this * -1; }

IntMatrix commutator(const IntMatrix& a, const IntMatrix& b) { return a * b - b * a; }

IntMatrix cartan_involution(const IntMatrix& x) { return -x.transpose(); }

SlBasis build_basis(int matrix_size) {
    if (matrix_size < 2) throw DomainError("matrix size must be at least 2");
    const int n = matrix_size;
    SlBasis b;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            b.k_basis.push_back(IntMatrix::unit(n, i, j) - IntMatrix::unit(n, j, i));
            b.p_symmetric.push_back(IntMatrix::unit(n, i, j) + IntMatrix::unit(n, j, i));
        }
    for (int j = 1; j < n; ++j) {
        b.cartan.push_back(IntMatrix::unit(n, j, j) - IntMatrix::unit(n, j + 1, j + 1));
        b.raising.push_back(IntMatrix::unit(n, j, j + 1));
        b.lowering.push_back(IntMatrix::unit(n, j + 1, j));
    }
    return b;
}

std::vector<TripleCheck> check_sl2_triples(int matrix_size) {
    const SlBasis b = build_basis(matrix_size);
    std::vector<TripleCheck> out;
    for (std::size_t j = 0; j < b.cartan.size(); ++j) {
        const auto& h = b.cartan[j];
        const auto& xp = b.raising[j];
        const auto& xm = b.lowering[j];
        TripleCheck c;
        c.j = static_cast<int>(j) + 1;
        c.bracket = commutator(xp, xm) == h;
        c.raise = commutator(h, xp) == xp * 2;
        c.lower = commutator(h, xm) == xm * -2;
        out.push_back(c);
    }
    return out;
}

bool check_k_closure(int matrix_size) {
    const SlBasis b = build_basis(matrix_size);
    for (const auto& x : b.k_basis)
        for (const auto& y : b.k_basis) {
            const IntMatrix z = commutator(x, y);
            if (z.transpose() != -z) return false;
        }
    return true;
}

ParabolicDecomposition parabolic_dimensions(const ParabolicSpec& spec) {
    const int n = spec.matrix_size;
    const int k = spec.removed_index;
    ParabolicDecomposition d;
    d.m_dim = (k * k - 1) + ((n - k) * (n - k) - 1);
    d.a_dim = 1;
    d.n_dim = k * (n - k);
    return d;
}

ParabolicDecomposition count_parabolic_dimensions(const ParabolicSpec& spec) {
    const int n = spec.matrix_size;
    const int k = spec.removed_index;
    auto block = [k](int i) { return i <= k ? 0 : 1; };
    ParabolicDecomposition d;
    // Off-diagonal units e_ij: same block -> m, upper block corner -> n.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (block(i) == block(j)) ++d.m_dim;
            else if (block(i) < block(j)) ++d.n_dim;
        }
    // Cartan H_j: inside a block -> m; H_k straddles the blocks and spans a.
    for (int j = 1; j < n; ++j) {
        if (block(j) == block(j + 1)) ++d.m_dim;
        else ++d.a_dim;
    }
    return d;
}

} // namespace multiplex
