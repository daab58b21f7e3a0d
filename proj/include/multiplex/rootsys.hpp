#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace multiplex {

using Label = std::int64_t;

/// Positive root of A_{N-1}, the simple-root interval alpha_p + ... + alpha_q.
struct Root {
    int p = 1;
    int q = 1;

    bool is_simple() const { return p == q; }
    int length() const { return q - p + 1; }
    bool contains(int i) const { return p <= i && i <= q; }

    friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& r);

/// Harish-Chandra labels (Lambda + rho, alpha_i^vee), i = 1..N-1.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<Label> labels) : labels_(std::move(labels)) {}

    int rank() const { return static_cast<int>(labels_.size()); }
    // 1-based, matching the simple-root numbering.
    Label operator[](int i) const { return labels_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<Label>& labels() const { return labels_; }

    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    std::vector<Label> labels_;
};

std::string to_string(const Signature& s);

struct RootSystem {
    int matrix_size = 0;
    int rank = 0;
    // Simple roots first, then by interval length, lexicographic within a length.
    std::vector<Root> positive_roots;
};

RootSystem build_root_system(int matrix_size);

/// m_beta = n_p + ... + n_q.
Label hc_param(const Signature& sig, const Root& beta);

/// (beta, alpha_i^vee) in {-1, 0, 1, 2}.
int cartan_pairing(const Root& beta, int i);

/// Signature of Lambda - m_beta * beta (shifted Weyl reflection).
Signature dot_reflect(const Signature& sig, const Root& beta);

// Epsilon-basis model of Lambda + rho: x_N = 0, n_i = x_i - x_{i+1}.
std::vector<Label> to_epsilon(const Signature& sig);
Signature from_epsilon(const std::vector<Label>& x);

} // namespace multiplex
