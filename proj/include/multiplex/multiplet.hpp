#pragma once

#include "multiplex/rational.hpp"
#include "multiplex/rootsys.hpp"
#include "multiplex/weyl.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multiplex {

enum class MultipletKind { main, reduced, singlet };
enum class OperatorKind { simple_power_differential, general_differential, degenerate_ks_differential };
enum class PairRelation { weyl_shift, flip, self_dual };
enum class DegenerationKind { inherited_differential, degenerate_ks };

std::string_view to_string(MultipletKind k);
std::string_view to_string(OperatorKind k);
std::string_view to_string(PairRelation r);
std::string_view to_string(DegenerationKind k);
MultipletKind multiplet_kind_from_string(std::string_view s);
OperatorKind operator_kind_from_string(std::string_view s);
PairRelation pair_relation_from_string(std::string_view s);
DegenerationKind degeneration_kind_from_string(std::string_view s);

struct MultipletVertex {
    int id = 0;
    Signature signature;
    Rational c;                      // conformal factor, a half-integer
    std::vector<Label> m_left;       // labels 1..k-1
    std::vector<Label> m_right;      // labels k+1..N-1
    std::optional<int> ks_partner;   // only for self-associate parabolics
    int coset_length = 0;

    friend bool operator==(const MultipletVertex&, const MultipletVertex&) = default;
};

struct Arrow {
    int source = 0;
    int target = 0;
    Root root;
    Label degree = 0;
    OperatorKind operator_kind = OperatorKind::simple_power_differential;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct KsPair {
    int a = 0; // a <= b
    int b = 0;
    PairRelation relation = PairRelation::weyl_shift;

    friend bool operator==(const KsPair&, const KsPair&) = default;
};

/// Doublet classification: how the "-" member maps to the "+" member.
struct Degeneration {
    DegenerationKind kind = DegenerationKind::inherited_differential;
    int minus = 0;
    int plus = 0;
    std::optional<Root> root;          // inherited: the connecting reflection
    std::optional<Label> degree;
    std::optional<Rational> exponent;  // degenerate: c of the "+" member
    std::optional<Label> dalembertian_power;

    friend bool operator==(const Degeneration&, const Degeneration&) = default;
};

struct Multiplet {
    ParabolicSpec spec;
    std::vector<Label> inducing_labels;
    MultipletKind kind = MultipletKind::main;
    std::vector<MultipletVertex> vertices; // ids are positions
    std::vector<Arrow> arrows;
    std::vector<KsPair> ks_pairs;
    std::vector<Degeneration> degenerations;

    const MultipletVertex& vertex(int id) const { return vertices.at(static_cast<std::size_t>(id)); }
    std::optional<int> find(const Signature& sig) const;

    friend bool operator==(const Multiplet&, const Multiplet&) = default;
};

/// c = -(n_k + sum_i n_i) / 2.
Rational conformal_factor(const ParabolicSpec& spec, const Signature& sig);

/// Weyl dimension formula for an sl(n) irrep given by n-1 positive HC labels.
std::int64_t m_rep_dimension(const std::vector<Label>& block_labels);

/// Orbit, m-dominance filter, derived fields, arrows, pairing, doublet classification.
Multiplet generate_multiplet(const ParabolicSpec& spec, const std::vector<Label>& labels);

/// Partner id per vertex (index = vertex id). Throws DomainError unless 2k = N.
std::vector<int> ks_pairing(const Multiplet& mult);

/// Every single-reflection embedding between vertices of the multiplet.
std::vector<Arrow> generate_arrows(const Multiplet& mult);

/// Requires exactly two vertices.
Degeneration classify_degenerations(const Multiplet& mult);

/// Transitive reduction of the arrow digraph.
std::vector<Arrow> covering_arrows(const Multiplet& mult);

/// Delta c across an arrow along beta with degree m: m * ((beta, a_k) + sum_i (beta, a_i)) / 2.
Rational conformal_shift(const ParabolicSpec& spec, const Root& beta, Label degree);

} // namespace multiplex
