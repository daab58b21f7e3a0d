#include "multiplex/multiplet.hpp"

#include "multiplex/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <functional>
#include <tuple>
#include <stdexcept>
#include <utility>

namespace multiplex {

namespace {

template <typename E, std::size_t N>
E enum_from(std::string_view s, const std::array<std::pair<E, std::string_view>, N>& table,
            std::string_view what) {
    for (const auto& [e, name] : table)
        if (name == s) return e;
    throw DomainError("unknown " + std::string(what) + " '" + std::string(s) + "'");
}

constexpr std::array<std::pair<MultipletKind, std::string_view>, 3> kKinds{{
    {MultipletKind::main, "main"},
    {MultipletKind::reduced, "reduced"},
    {MultipletKind::singlet, "singlet"},
}};
constexpr std::array<std::pair<OperatorKind, std::string_view>, 3> kOperators{{
    {OperatorKind::simple_power_differential, "simple-power-differential"},
    {OperatorKind::general_differential, "general-differential"},
    {OperatorKind::degenerate_ks_differential, "degenerate-KS-differential"},
}};
constexpr std::array<std::pair<PairRelation, std::string_view>, 3> kRelations{{
    {PairRelation::weyl_shift, "weyl-shift"},
    {PairRelation::flip, "flip"},
    {PairRelation::self_dual, "self-dual"},
}};
constexpr std::array<std::pair<DegenerationKind, std::string_view>, 2> kDegenerations{{
    {DegenerationKind::inherited_differential, "inherited-differential"},
    {DegenerationKind::degenerate_ks, "degenerate-KS"},
}};

template <typename E, std::size_t N>
std::string_view name_of(E e, const std::array<std::pair<E, std::string_view>, N>& table) {
    for (const auto& [v, name] : table)
        if (v == e) return name;
    throw std::logic_error("unnamed enum value");
}

int inversions_ascending(const std::vector<Label>& y) {
    int inv = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = i + 1; j < y.size(); ++j)
            if (y[i] < y[j]) ++inv;
    return inv;
}

std::vector<Label> slice(const Signature& s, int from, int to) { // inclusive, 1-based
    std::vector<Label> out;
    for (int i = from; i <= to; ++i) out.push_back(s[i]);
    return out;
}

} // namespace

std::string_view to_string(MultipletKind k) { return name_of(k, kKinds); }
std::string_view to_string(OperatorKind k) { return name_of(k, kOperators); }
std::string_view to_string(PairRelation r) { return name_of(r, kRelations); }
std::string_view to_string(DegenerationKind k) { return name_of(k, kDegenerations); }
MultipletKind multiplet_kind_from_string(std::string_view s) { return enum_from(s, kKinds, "multiplet kind"); }
OperatorKind operator_kind_from_string(std::string_view s) { return enum_from(s, kOperators, "operator kind"); }
PairRelation pair_relation_from_string(std::string_view s) { return enum_from(s, kRelations, "pair relation"); }
DegenerationKind degeneration_kind_from_string(std::string_view s) {
    return enum_from(s, kDegenerations, "degeneration kind");
}

std::optional<int> Multiplet::find(const Signature& sig) const {
    for (const auto& v : vertices)
        if (v.signature == sig) return v.id;
    return std::nullopt;
}

Rational conformal_factor(const ParabolicSpec& spec, const Signature& sig) {
    if (sig.rank() != spec.rank()) throw DomainError("signature length does not match N-1");
    Label total = sig[spec.removed_index];
    for (Label n : sig.labels()) total += n;
    return Rational(-total, 2);
}

Rational conformal_shift(const ParabolicSpec& spec, const Root& beta, Label degree) {
    int pairing = cartan_pairing(beta, spec.removed_index);
    for (int i = 1; i <= spec.rank(); ++i) pairing += cartan_pairing(beta, i);
    return Rational(degree * pairing, 2);
}

std::int64_t m_rep_dimension(const std::vector<Label>& block_labels) {
    for (Label p : block_labels) {
        if (p <= 0) throw DomainError("M-label must be a positive integer, got " + std::to_string(p));
    }
    Rational dim = 1;
    const std::size_t r = block_labels.size();
    for (std::size_t i = 0; i < r; ++i) {
        Label sum = 0;
        for (std::size_t j = i; j < r; ++j) {
            sum += block_labels[j];
            dim *= Rational(sum, static_cast<Label>(j - i + 1));
        }
    }
    if (dim.denominator() != 1) throw std::logic_error("Weyl dimension formula gave a fraction");
    return dim.numerator();
}

Multiplet generate_multiplet(const ParabolicSpec& spec, const std::vector<Label>& labels) {
    const int n = spec.matrix_size;
    if (static_cast<int>(labels.size()) != spec.rank()) {
        throw DomainError("expected " + std::to_string(spec.rank()) + " labels, got " +
                          std::to_string(labels.size()));
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0) {
            throw DomainError("label m" + std::to_string(i + 1) + " = " + std::to_string(labels[i]) +
                              " is negative");
        }
    }
    if (n > kMaxWeylEnumeration) {
        throw CapacityError("multiplet generation enumerates W(sl(N)); capped at N = " +
                            std::to_string(kMaxWeylEnumeration));
    }

    const Signature input(labels);
    const std::vector<Label> x = to_epsilon(input);

    // Full dot-orbit through the epsilon permutation model, filtered by m-dominance.
    std::map<Signature, int> found; // signature -> coset length
    std::uint64_t visited = 0;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Label> y(x.size());
    do {
        for (std::size_t i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(perm[i])] = x[i];
        ++visited;
        Signature s = from_epsilon(y);
        if (is_m_dominant(spec, s)) found.emplace(std::move(s), inversions_ascending(y));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (visited != factorial(n)) throw std::logic_error("orbit walk did not cover the Weyl group");
    if (found.empty()) {
        throw DomainError("no m-dominant signature in the orbit of " + to_string(input) +
                          ": the labels admit no finite-dimensional inducing M-representation");
    }

    std::vector<std::pair<int, Signature>> ordered;
    for (auto& [sig, len] : found) ordered.emplace_back(len, sig);
    std::sort(ordered.begin(), ordered.end());

    Multiplet mult;
    mult.spec = spec;
    mult.inducing_labels = labels;
    const int k = spec.removed_index;
    for (auto& [len, sig] : ordered) {
        MultipletVertex v;
        v.id = static_cast<int>(mult.vertices.size());
        v.c = conformal_factor(spec, sig);
        v.m_left = slice(sig, 1, k - 1);
        v.m_right = slice(sig, k + 1, n - 1);
        v.coset_length = len;
        v.signature = std::move(sig);
        mult.vertices.push_back(std::move(v));
    }

    const bool all_positive = std::all_of(labels.begin(), labels.end(), [](Label l) { return l > 0; });
    if (mult.vertices.size() == 1) mult.kind = MultipletKind::singlet;
    else mult.kind = all_positive ? MultipletKind::main : MultipletKind::reduced;

    if (spec.self_associate()) {
        const std::vector<int> partner = ks_pairing(mult);
        for (auto& v : mult.vertices) v.ks_partner = partner[static_cast<std::size_t>(v.id)];
        for (const auto& v : mult.vertices) {
            const int p = *v.ks_partner;
            if (p < v.id) continue;
            KsPair pair{v.id, p, PairRelation::weyl_shift};
            if (p == v.id) pair.relation = PairRelation::self_dual;
            else if (v.c == Rational(0)) pair.relation = PairRelation::flip;
            mult.ks_pairs.push_back(pair);
        }
    }

    mult.arrows = generate_arrows(mult);
    if (mult.vertices.size() == 2) mult.degenerations.push_back(classify_degenerations(mult));
    return mult;
}

std::vector<int> ks_pairing(const Multiplet& mult) {
    const ParabolicSpec& spec = mult.spec;
    if (!spec.self_associate()) {
        throw DomainError("Knapp-Stein pairing needs a self-associate parabolic (2k = N); got N = " +
                          std::to_string(spec.matrix_size) + ", k = " + std::to_string(spec.removed_index));
    }
    const WeylElement w0 = longest_element(spec.matrix_size);
    const auto k = static_cast<std::ptrdiff_t>(spec.removed_index);
    std::vector<int> partner;
    for (const auto& v : mult.vertices) {
        std::vector<Label> y = w0.act(to_epsilon(v.signature));
        // m-dominant representative of the W_m-coset.
        std::sort(y.begin(), y.begin() + k, std::greater<>());
        std::sort(y.begin() + k, y.end(), std::greater<>());
        const auto p = mult.find(from_epsilon(y));
        if (!p) throw std::logic_error("no Knapp-Stein partner for " + to_string(v.signature));
        partner.push_back(*p);
    }
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (partner[static_cast<std::size_t>(partner[i])] != static_cast<int>(i)) {
            throw std::logic_error("Knapp-Stein pairing is not an involution");
        }
    }
    return partner;
}

std::vector<Arrow> generate_arrows(const Multiplet& mult) {
    const RootSystem rs = build_root_system(mult.spec.matrix_size);
    std::vector<Arrow> arrows;
    for (const auto& v : mult.vertices) {
        for (const Root& beta : rs.positive_roots) {
            const Label m = hc_param(v.signature, beta);
            if (m <= 0) continue;
            const auto target = mult.find(dot_reflect(v.signature, beta));
            if (!target) continue;
            arrows.push_back(Arrow{v.id, *target, beta, m,
                                   beta.is_simple() ? OperatorKind::simple_power_differential
                                                    : OperatorKind::general_differential});
        }
    }
    std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
        return std::tuple(a.source, a.target, a.root.length(), a.root) <
               std::tuple(b.source, b.target, b.root.length(), b.root);
    });
    return arrows;
}

Degeneration classify_degenerations(const Multiplet& mult) {
    if (mult.vertices.size() != 2) {
        throw DomainError("doublet classification needs exactly 2 vertices, got " +
                          std::to_string(mult.vertices.size()));
    }
    const auto& a = mult.vertices[0];
    const auto& b = mult.vertices[1];
    const bool a_minus = a.c < b.c || (a.c == b.c && a.signature < b.signature);
    const auto& minus = a_minus ? a : b;
    const auto& plus = a_minus ? b : a;

    Degeneration d;
    d.minus = minus.id;
    d.plus = plus.id;
    for (const Arrow& arrow : mult.arrows) {
        const bool joins = (arrow.source == minus.id && arrow.target == plus.id) ||
                           (arrow.source == plus.id && arrow.target == minus.id);
        if (!joins) continue;
        d.kind = DegenerationKind::inherited_differential;
        d.root = arrow.root;
        d.degree = arrow.degree;
        return d;
    }
    d.kind = DegenerationKind::degenerate_ks;
    d.exponent = plus.c;
    if (mult.spec.matrix_size == 4 && minus.m_left == minus.m_right && plus.c.denominator() == 1) {
        d.dalembertian_power = plus.c.numerator();
    }
    return d;
}

std::vector<Arrow> covering_arrows(const Multiplet& mult) {
    const std::size_t nv = mult.vertices.size();
    // Parallel arrows collapse to the shortest, then lexicographically first, root.
    std::map<std::pair<int, int>, Arrow> best;
    for (const Arrow& a : mult.arrows) {
        auto [it, inserted] = best.try_emplace({a.source, a.target}, a);
        if (!inserted && std::pair(a.root.length(), a.root) <
                             std::pair(it->second.root.length(), it->second.root)) {
            it->second = a;
        }
    }
    std::vector<std::vector<int>> succ(nv);
    for (const auto& [key, a] : best) succ[static_cast<std::size_t>(key.first)].push_back(key.second);

    auto reachable_from = [&](int start) {
        std::vector<bool> seen(nv, false);
        std::vector<int> stack{start};
        seen[static_cast<std::size_t>(start)] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : succ[static_cast<std::size_t>(u)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    };

    std::vector<Arrow> out;
    for (const auto& [key, a] : best) {
        bool redundant = false;
        for (int s : succ[static_cast<std::size_t>(key.first)]) {
            if (s == key.second) continue;
            if (reachable_from(s)[static_cast<std::size_t>(key.second)]) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(a);
    }
    return out;
}

} // namespace multiplex
