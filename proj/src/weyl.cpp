#include "multiplex/weyl.hpp"

#include "multiplex/errors.hpp"

#include <algorithm>
#include <numeric>

namespace multiplex {

WeylElement::WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (int v : perm_) {
        if (v < 1 || v > static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(v - 1)]) {
            throw DomainError("not a permutation of {1.." + std::to_string(perm_.size()) + "}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

WeylElement WeylElement::identity(int matrix_size) {
    std::vector<int> p(static_cast<std::size_t>(matrix_size));
    std::iota(p.begin(), p.end(), 1);
    return WeylElement(std::move(p));
}

int WeylElement::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < perm_.size(); ++i)
        for (std::size_t j = i + 1; j < perm_.size(); ++j)
            if (perm_[i] > perm_[j]) ++inv;
    return inv;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
    if (rhs.matrix_size() != matrix_size()) throw DomainError("Weyl elements of different rank");
    std::vector<int> out(perm_.size());
    for (int i = 1; i <= matrix_size(); ++i) out[static_cast<std::size_t>(i - 1)] = image(rhs.image(i));
    return WeylElement(std::move(out));
}

WeylElement WeylElement::inverse() const {
    std::vector<int> out(perm_.size());
    for (int i = 1; i <= matrix_size(); ++i) out[static_cast<std::size_t>(image(i) - 1)] = i;
    return WeylElement(std::move(out));
}

std::vector<Label> WeylElement::act(const std::vector<Label>& x) const {
    if (static_cast<int>(x.size()) != matrix_size()) throw DomainError("vector length does not match N");
    std::vector<Label> y(x.size());
    for (int i = 1; i <= matrix_size(); ++i) {
        y[static_cast<std::size_t>(image(i) - 1)] = x[static_cast<std::size_t>(i - 1)];
    }
    return y;
}

Signature WeylElement::act(const Signature& sig) const {
    return from_epsilon(act(to_epsilon(sig)));
}

ParabolicSpec::ParabolicSpec(int n, int k) : matrix_size(n), removed_index(k) {
    if (n < 2) throw DomainError("matrix size must be at least 2, got " + std::to_string(n));
    if (k < 1 || k > n - 1) {
        throw DomainError("removed index " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
    }
}

std::vector<WeylElement> weyl_group(int matrix_size) {
    if (matrix_size < 1) throw DomainError("matrix size must be positive");
    if (matrix_size > kMaxWeylEnumeration) {
        throw CapacityError("Weyl group enumeration is capped at N = " +
                            std::to_string(kMaxWeylEnumeration) + ", got N = " +
                            std::to_string(matrix_size));
    }
    std::vector<int> p(static_cast<std::size_t>(matrix_size));
    std::iota(p.begin(), p.end(), 1);
    std::vector<WeylElement> out;
    out.reserve(factorial(matrix_size));
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t parabolic_subgroup_order(const ParabolicSpec& spec) {
    return factorial(spec.removed_index) * factorial(spec.matrix_size - spec.removed_index);
}

std::uint64_t multiplet_size(const ParabolicSpec& spec) {
    return factorial(spec.matrix_size) / parabolic_subgroup_order(spec);
}

WeylElement longest_element(int matrix_size) {
    std::vector<int> p(static_cast<std::size_t>(matrix_size));
    for (int i = 1; i <= matrix_size; ++i) p[static_cast<std::size_t>(i - 1)] = matrix_size + 1 - i;
    return WeylElement(std::move(p));
}

std::vector<Rational> restricted_reflection(const std::vector<Rational>& mu,
                                            const std::vector<Rational>& lambda) {
    if (mu.size() != lambda.size()) throw DomainError("vectors of different dimension");
    Rational ll = 0, lm = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        ll += lambda[i] * lambda[i];
        lm += lambda[i] * mu[i];
    }
    if (ll == Rational(0)) throw DomainError("reflection in the zero vector");
    const Rational coeff = 2 * lm / ll;
    std::vector<Rational> out(mu);
    for (std::size_t i = 0; i < mu.size(); ++i) out[i] -= coeff * lambda[i];
    return out;
}

bool is_m_dominant(const ParabolicSpec& spec, const Signature& sig) {
    for (int i = 1; i <= sig.rank(); ++i) {
        if (spec.is_m_index(i) && sig[i] <= 0) return false;
    }
    return true;
}

} // namespace multiplex
