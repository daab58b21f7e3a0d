#include "multiplex/rootsys.hpp"

#include "multiplex/errors.hpp"

#include <sstream>

namespace multiplex {

namespace {

void check_root(const Root& beta, int rank) {
    if (beta.p < 1 || beta.p > beta.q || beta.q > rank) {
        throw DomainError("root " + to_string(beta) + " is not a positive root of rank " +
                          std::to_string(rank));
    }
}

} // namespace

std::string to_string(const Root& r) {
    return "[" + std::to_string(r.p) + "," + std::to_string(r.q) + "]";
}

std::string to_string(const Signature& s) {
    std::ostringstream os;
    os << '{';
    for (int i = 1; i <= s.rank(); ++i) {
        if (i > 1) os << ',';
        os << s[i];
    }
    os << '}';
    return os.str();
}

RootSystem build_root_system(int matrix_size) {
    if (matrix_size < 2) {
        throw DomainError("matrix size must be at least 2, got " + std::to_string(matrix_size));
    }
    RootSystem rs;
    rs.matrix_size = matrix_size;
    rs.rank = matrix_size - 1;
    for (int len = 1; len <= rs.rank; ++len) {
        for (int p = 1; p + len - 1 <= rs.rank; ++p) {
            rs.positive_roots.push_back(Root{p, p + len - 1});
        }
    }
    return rs;
}

Label hc_param(const Signature& sig, const Root& beta) {
    check_root(beta, sig.rank());
    Label m = 0;
    for (int i = beta.p; i <= beta.q; ++i) m += sig[i];
    return m;
}

int cartan_pairing(const Root& beta, int i) {
    if (beta.p < 1 || beta.p > beta.q || i < 1) {
        throw DomainError("invalid root " + to_string(beta) + " or index " + std::to_string(i));
    }
    return int(i == beta.p) + int(i == beta.q) - int(i == beta.p - 1) - int(i == beta.q + 1);
}

Signature dot_reflect(const Signature& sig, const Root& beta) {
    const Label m = hc_param(sig, beta);
    std::vector<Label> out = sig.labels();
    for (int i = 1; i <= sig.rank(); ++i) {
        out[static_cast<std::size_t>(i - 1)] -= m * cartan_pairing(beta, i);
    }
    return Signature(std::move(out));
}

std::vector<Label> to_epsilon(const Signature& sig) {
    const int n = sig.rank() + 1;
    std::vector<Label> x(static_cast<std::size_t>(n), 0);
    for (int i = n - 1; i >= 1; --i) {
        x[static_cast<std::size_t>(i - 1)] = x[static_cast<std::size_t>(i)] + sig[i];
    }
    return x;
}

Signature from_epsilon(const std::vector<Label>& x) {
    std::vector<Label> labels;
    labels.reserve(x.size() > 0 ? x.size() - 1 : 0);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) labels.push_back(x[i] - x[i + 1]);
    return Signature(std::move(labels));
}

} // namespace multiplex
