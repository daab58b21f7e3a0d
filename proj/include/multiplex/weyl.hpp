#pragma once

#include "multiplex/rational.hpp"
#include "multiplex/rootsys.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace multiplex {

/// Element of W(sl(N)) = S_N acting on the epsilon basis: eps_i -> eps_{perm[i]}.
class WeylElement {
public:
    explicit WeylElement(std::vector<int> perm); // one-line notation on {1..N}

    static WeylElement identity(int matrix_size);

    int matrix_size() const { return static_cast<int>(perm_.size()); }
    int image(int i) const { return perm_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& one_line() const { return perm_; }

    /// Inversion count.
    int length() const;

    WeylElement operator*(const WeylElement& rhs) const; // (a*b)(i) = a(b(i))
    WeylElement inverse() const;

    std::vector<Label> act(const std::vector<Label>& x) const;
    /// Shifted action on Lambda + rho, i.e. the linear action on the stored signature.
    Signature act(const Signature& sig) const;

    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

private:
    std::vector<int> perm_;
};

/// Maximal parabolic of sl(N): simple root alpha_k removed, M-blocks {1..k-1} and {k+1..N-1}.
struct ParabolicSpec {
    int matrix_size = 0;
    int removed_index = 0;

    ParabolicSpec() = default;
    ParabolicSpec(int n, int k); // throws DomainError

    int rank() const { return matrix_size - 1; }
    bool is_m_index(int i) const { return i != removed_index; }
    // 2k = N: Langlands/Knapp-Stein pairing stays inside the multiplet.
    bool self_associate() const { return 2 * removed_index == matrix_size; }

    friend bool operator==(const ParabolicSpec&, const ParabolicSpec&) = default;
};

inline constexpr int kMaxWeylEnumeration = 10;

/// All N! elements in lexicographic one-line order. N <= kMaxWeylEnumeration.
std::vector<WeylElement> weyl_group(int matrix_size);

std::uint64_t factorial(int n);
std::uint64_t parabolic_subgroup_order(const ParabolicSpec& spec);
std::uint64_t multiplet_size(const ParabolicSpec& spec);

WeylElement longest_element(int matrix_size);

/// s_lambda(mu) = mu - 2 (lambda, mu) / (lambda, lambda) * lambda.
std::vector<Rational> restricted_reflection(const std::vector<Rational>& mu,
                                            const std::vector<Rational>& lambda);

/// Labels at M-indices (i != k) all strictly positive.
bool is_m_dominant(const ParabolicSpec& spec, const Signature& sig);

} // namespace multiplex
