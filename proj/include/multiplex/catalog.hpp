#pragma once

#include "multiplex/multiplet.hpp"
#include "multiplex/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace multiplex {

/// Rational-affine form in the formal labels m1..m9.
class LinearForm {
public:
    static constexpr int kMaxLabel = 9;

    LinearForm() = default;
    static LinearForm constant(Rational c);
    static LinearForm label(int i);

    Rational evaluate(const std::vector<Label>& labels) const;
    Label evaluate_integer(const std::vector<Label>& labels) const; // throws DomainError if fractional
    int max_label() const;

    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator-() const;
    LinearForm operator*(const Rational& s) const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;

private:
    Rational constant_{0};
    std::vector<Rational> coeff_ = std::vector<Rational>(kMaxLabel, Rational(0));
};

/// Grammar: sums/differences of m<i>, integers, parenthesised groups, "INT*" and "/INT".
LinearForm parse_expression(const std::string& text);

struct Erratum {
    std::string field;   // sig, c, embed
    std::string literal; // source text as printed
};

struct EmbedRecord {
    std::string from; // chi entries: source id; pm entries: empty (minus -> plus)
    Root root;
    LinearForm degree;
};

enum class EntryKind { chi, pm };

struct FixtureEntry {
    EntryKind kind = EntryKind::chi;
    std::string id;
    std::optional<std::vector<LinearForm>> signature;
    std::optional<std::vector<LinearForm>> left;  // pm only (derived from sig when given)
    std::optional<std::vector<LinearForm>> right;
    std::optional<LinearForm> c; // chi: its own c; pm: c of the "-" member
    std::vector<EmbedRecord> embeds;
    std::optional<std::string> pair;
    std::optional<PairRelation> tag;
    bool unordered = false;
    std::optional<LinearForm> degenerate_exponent;
    std::vector<Erratum> errata;
    int line = 0;
};

struct FixtureBlock {
    std::string label;
    std::vector<int> zero; // labels forced to 0 for this block
    std::vector<FixtureEntry> entries;
};

struct FixtureTable {
    std::string name;
    int matrix_size = 0;
    int removed_index = 0;
    bool partial = false;
    std::vector<std::string> notes;
    std::vector<FixtureBlock> blocks;

    ParabolicSpec spec() const { return ParabolicSpec(matrix_size, removed_index); }
    std::size_t errata_count() const;
};

FixtureTable parse_fixture(const std::string& text, const std::string& origin = "<fixture>");
FixtureTable load_fixture(const std::filesystem::path& path);

/// MULTIPLEX_FIXTURE_DIR if set, otherwise the build-time default.
std::filesystem::path fixture_directory();
std::vector<std::string> fixture_names(const std::filesystem::path& dir = fixture_directory());
FixtureTable load_named_fixture(const std::string& name,
                                const std::filesystem::path& dir = fixture_directory());

// Concrete expectations at one label assignment.
struct ExpectedVertex {
    std::string id;
    std::optional<Signature> signature;
    std::optional<std::vector<Label>> m_left;
    std::optional<std::vector<Label>> m_right;
    std::optional<Rational> c;
};

struct ExpectedEmbedding {
    std::string from;
    std::string to;
    Root root;
    Label degree = 0;
};

struct ExpectedPair {
    std::string a;
    std::string b;
    std::optional<PairRelation> tag;
    bool unordered = false; // compare {labels} and {c} as sets, not member by member
};

struct ExpectedDegeneration {
    std::string minus;
    std::string plus;
    Rational exponent;
};

struct ExpectedFragment {
    std::vector<Label> labels;
    std::vector<ExpectedVertex> vertices;
    std::vector<ExpectedEmbedding> embeddings;
    std::vector<ExpectedPair> pairs;
    std::vector<ExpectedDegeneration> degenerations;
};

/// Evaluates one block at `labels` (zeros of the block must already be applied).
ExpectedFragment evaluate_fixture(const FixtureTable& table, const FixtureBlock& block,
                                  const std::vector<Label>& labels);
ExpectedFragment evaluate_fixture(const FixtureTable& table, const std::vector<Label>& labels);

struct Mismatch {
    std::vector<Label> labels;
    std::string block;
    std::string entry;
    std::string field;
    std::string expected;
    std::string actual;
};

struct CheckCount {
    int matched = 0;
    int total = 0;
};

struct VerifyReport {
    std::string fixture;
    std::vector<std::vector<Label>> assignments;
    CheckCount signatures;  // fixture vertex records found in the generated multiplet
    CheckCount embeddings;
    CheckCount pairs;
    CheckCount conformal;   // c values
    CheckCount completeness; // generated vertices accounted for (complete fixtures)
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;

    bool ok() const { return mismatches.empty(); }
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20240611;

/// All-ones plus five seeded assignments in 1..20.
std::vector<std::vector<Label>> default_assignments(int rank, std::uint64_t seed = kDefaultVerifySeed);

VerifyReport verify(const FixtureTable& table, const std::vector<std::vector<Label>>& assignments);
VerifyReport verify(const FixtureTable& table, std::uint64_t seed = kDefaultVerifySeed);

} // namespace multiplex
