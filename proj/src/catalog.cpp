#include "multiplex/catalog.hpp"

#include "multiplex/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#ifndef MULTIPLEX_DEFAULT_FIXTURE_DIR
#define MULTIPLEX_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace multiplex {

// ---------------------------------------------------------------- LinearForm

LinearForm LinearForm::constant(Rational c) {
    LinearForm f;
    f.constant_ = c;
    return f;
}

LinearForm LinearForm::label(int i) {
    if (i < 1 || i > kMaxLabel) throw FixtureError("label index m" + std::to_string(i) + " out of range");
    LinearForm f;
    f.coeff_[static_cast<std::size_t>(i - 1)] = 1;
    return f;
}

Rational LinearForm::evaluate(const std::vector<Label>& labels) const {
    Rational v = constant_;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == Rational(0)) continue;
        if (i >= labels.size()) {
            throw DomainError("expression uses m" + std::to_string(i + 1) + " but only " +
                              std::to_string(labels.size()) + " labels were given");
        }
        v += coeff_[i] * labels[i];
    }
    return v;
}

Label LinearForm::evaluate_integer(const std::vector<Label>& labels) const {
    const Rational v = evaluate(labels);
    if (v.denominator() != 1) throw DomainError("signature entry evaluates to non-integer " + format_rational(v));
    return v.numerator();
}

int LinearForm::max_label() const {
    for (int i = kMaxLabel; i >= 1; --i)
        if (coeff_[static_cast<std::size_t>(i - 1)] != Rational(0)) return i;
    return 0;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    LinearForm r(*this);
    r.constant_ += o.constant_;
    for (std::size_t i = 0; i < coeff_.size(); ++i) r.coeff_[i] += o.coeff_[i];
    return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator-() const { return *this * Rational(-1); }

LinearForm LinearForm::operator*(const Rational& s) const {
    LinearForm r(*this);
    r.constant_ *= s;
    for (auto& c : r.coeff_) c *= s;
    return r;
}

// ---------------------------------------------------------------- expressions

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    LinearForm parse() {
        LinearForm f = expr();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw FixtureError("bad expression '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::int64_t integer() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected integer");
        std::int64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_++] - '0');
        }
        return v;
    }

    static bool is_constant(const LinearForm& f) { return f.max_label() == 0; }

    LinearForm expr() {
        LinearForm f = term();
        while (true) {
            if (eat('+')) f = f + term();
            else if (eat('-')) f = f - term();
            else return f;
        }
    }

    LinearForm term() {
        LinearForm f = unary();
        while (true) {
            if (eat('*')) {
                LinearForm g = unary();
                if (is_constant(f)) f = g * f.evaluate({});
                else if (is_constant(g)) f = f * g.evaluate({});
                else fail("product of two label expressions");
            } else if (eat('/')) {
                const std::int64_t d = integer();
                if (d == 0) fail("division by zero");
                f = f * Rational(1, d);
            } else {
                return f;
            }
        }
    }

    LinearForm unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        if (eat('(')) {
            LinearForm f = expr();
            if (!eat(')')) fail("missing ')'");
            return f;
        }
        if (eat('m')) {
            // One digit per label; the shorthand m_{ij} for sums is spelled out.
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected label index");
            const int i = s_[pos_++] - '0';
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                fail("label index must be a single digit (write m1+m2 for m_{12})");
            }
            if (i < 1) fail("labels start at m1");
            return LinearForm::label(i);
        }
        return LinearForm::constant(Rational(integer()));
    }

    std::string s_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<LinearForm> parse_list(const std::string& s) {
    std::vector<LinearForm> out;
    if (s == "-") return out;
    for (const auto& part : split_commas(s)) out.push_back(parse_expression(part));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s == "-") return out;
    for (const auto& part : split_commas(s)) out.push_back(std::stoi(part));
    return out;
}

Root parse_root(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) throw FixtureError("root must be written p..q, got '" + s + "'");
    return Root{std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

// Whitespace-separated tokens; "..." is one token with the quotes removed.
std::vector<std::string> tokenize(const std::string& line, int lineno) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '"') {
            const auto end = line.find('"', i + 1);
            if (end == std::string::npos) throw FixtureError("line " + std::to_string(lineno) + ": unterminated quote");
            out.push_back(line.substr(i + 1, end - i - 1));
            i = end + 1;
            continue;
        }
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

class LineReader {
public:
    LineReader(std::vector<std::string> toks, int lineno, std::string origin)
        : toks_(std::move(toks)), lineno_(lineno), origin_(std::move(origin)) {}

    bool done() const { return pos_ >= toks_.size(); }
    const std::string& peek() const { return toks_.at(pos_); }
    std::string next(const std::string& what) {
        if (done()) fail("missing " + what);
        return toks_[pos_++];
    }
    void expect(const std::string& kw) {
        const std::string t = next("'" + kw + "'");
        if (t != kw) fail("expected '" + kw + "', got '" + t + "'");
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw FixtureError(origin_ + ":" + std::to_string(lineno_) + ": " + why);
    }
    int line() const { return lineno_; }

private:
    std::vector<std::string> toks_;
    std::size_t pos_ = 0;
    int lineno_;
    std::string origin_;
};

template <typename F>
auto wrap(LineReader& r, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const FixtureError& e) {
        r.fail(e.what());
    } catch (const std::exception& e) {
        r.fail(e.what());
    }
}

FixtureEntry parse_entry(LineReader& r, EntryKind kind) {
    FixtureEntry e;
    e.kind = kind;
    e.line = r.line();
    e.id = r.next("entry id");
    while (!r.done()) {
        const std::string key = r.next("field");
        if (key == "sig") {
            const std::string v = r.next("signature");
            e.signature = wrap(r, [&] { return parse_list(v); });
        } else if (key == "c") {
            const std::string v = r.next("c expression");
            e.c = wrap(r, [&] { return parse_expression(v); });
        } else if (key == "left" && kind == EntryKind::pm) {
            const std::string v = r.next("left labels");
            e.left = wrap(r, [&] { return parse_list(v); });
        } else if (key == "right" && kind == EntryKind::pm) {
            const std::string v = r.next("right labels");
            e.right = wrap(r, [&] { return parse_list(v); });
        } else if (key == "embed") {
            EmbedRecord em;
            if (kind == EntryKind::chi) {
                r.expect("from");
                em.from = r.next("embed source");
            }
            r.expect("root");
            const std::string root = r.next("root");
            em.root = wrap(r, [&] { return parse_root(root); });
            r.expect("deg");
            const std::string deg = r.next("degree");
            em.degree = wrap(r, [&] { return parse_expression(deg); });
            e.embeds.push_back(std::move(em));
        } else if (key == "pair" && kind == EntryKind::chi) {
            e.pair = r.next("pair id");
        } else if (key == "tag" && kind == EntryKind::pm) {
            const std::string v = r.next("tag");
            e.tag = wrap(r, [&] { return pair_relation_from_string(v); });
        } else if (key == "unordered" && kind == EntryKind::pm) {
            e.unordered = true;
        } else if (key == "degenerate" && kind == EntryKind::pm) {
            const std::string v = r.next("exponent");
            e.degenerate_exponent = wrap(r, [&] { return parse_expression(v); });
        } else if (key == "errata") {
            Erratum er;
            er.field = r.next("errata field");
            er.literal = r.next("errata literal text");
            e.errata.push_back(std::move(er));
        } else {
            r.fail("unknown field '" + key + "'");
        }
    }
    if (!e.signature && kind == EntryKind::chi) r.fail("chi entry without sig");
    if (kind == EntryKind::pm) {
        if (!e.c) r.fail("pm entry without c");
        if (!e.signature && (!e.left || !e.right)) r.fail("pm entry needs sig or left/right");
    }
    return e;
}

void validate(const FixtureTable& t, const std::string& origin) {
    const int rank = t.matrix_size - 1;
    const int k = t.removed_index;
    auto check_form = [&](const LinearForm& f, const FixtureEntry& e) {
        if (f.max_label() > rank) {
            throw FixtureError(origin + ":" + std::to_string(e.line) + ": expression uses m" +
                               std::to_string(f.max_label()) + " beyond rank " + std::to_string(rank));
        }
    };
    for (const auto& b : t.blocks) {
        std::set<std::string> ids;
        for (const auto& e : b.entries) {
            if (!ids.insert(e.id).second) {
                throw FixtureError(origin + ":" + std::to_string(e.line) + ": duplicate id " + e.id);
            }
            if (e.signature) {
                if (static_cast<int>(e.signature->size()) != rank) {
                    throw FixtureError(origin + ":" + std::to_string(e.line) + ": signature needs " +
                                       std::to_string(rank) + " entries");
                }
                for (const auto& f : *e.signature) check_form(f, e);
            }
            if (e.left && static_cast<int>(e.left->size()) != k - 1) {
                throw FixtureError(origin + ":" + std::to_string(e.line) + ": left block needs " +
                                   std::to_string(k - 1) + " labels");
            }
            if (e.right && static_cast<int>(e.right->size()) != rank - k) {
                throw FixtureError(origin + ":" + std::to_string(e.line) + ": right block needs " +
                                   std::to_string(rank - k) + " labels");
            }
            if (e.c) check_form(*e.c, e);
            for (const auto& em : e.embeds) {
                check_form(em.degree, e);
                if (em.root.p < 1 || em.root.p > em.root.q || em.root.q > rank) {
                    throw FixtureError(origin + ":" + std::to_string(e.line) + ": root " +
                                       to_string(em.root) + " outside the root system");
                }
            }
        }
        for (const auto& e : b.entries) {
            for (const auto& em : e.embeds) {
                if (!em.from.empty() && !ids.count(em.from)) {
                    throw FixtureError(origin + ":" + std::to_string(e.line) + ": unknown embed source " + em.from);
                }
            }
            if (e.pair && !ids.count(*e.pair)) {
                throw FixtureError(origin + ":" + std::to_string(e.line) + ": unknown pair id " + *e.pair);
            }
        }
        for (int z : b.zero) {
            if (z < 1 || z > rank) throw FixtureError(origin + ": zero label index " + std::to_string(z) + " out of range");
        }
    }
}

} // namespace

LinearForm parse_expression(const std::string& text) { return ExprParser(text).parse(); }

std::size_t FixtureTable::errata_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks)
        for (const auto& e : b.entries) n += e.errata.size();
    return n;
}

FixtureTable parse_fixture(const std::string& text, const std::string& origin) {
    FixtureTable table;
    bool have_header = false;
    std::vector<int> default_zero;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        LineReader r(tokenize(raw, lineno), lineno, origin);
        const std::string kw = r.next("keyword");
        if (kw == "table") {
            if (have_header) r.fail("second table header");
            table.name = r.next("table name");
            r.expect("N");
            table.matrix_size = wrap(r, [&] { return std::stoi(r.next("N")); });
            r.expect("k");
            table.removed_index = wrap(r, [&] { return std::stoi(r.next("k")); });
            wrap(r, [&] { return table.spec(); });
            while (!r.done()) {
                const std::string opt = r.next("table option");
                if (opt == "zero") {
                    const std::string v = r.next("zero list");
                    default_zero = wrap(r, [&] { return parse_int_list(v); });
                } else if (opt == "partial") {
                    table.partial = true;
                } else {
                    r.fail("unknown table option '" + opt + "'");
                }
            }
            have_header = true;
            continue;
        }
        if (!have_header) r.fail("content before the table header");
        if (kw == "note") {
            table.notes.push_back(r.next("note text"));
        } else if (kw == "block") {
            FixtureBlock b;
            b.label = r.next("block label");
            while (!r.done()) {
                const std::string opt = r.next("block option");
                if (opt != "zero") r.fail("unknown block option '" + opt + "'");
                const std::string v = r.next("zero list");
                b.zero = wrap(r, [&] { return parse_int_list(v); });
            }
            table.blocks.push_back(std::move(b));
        } else if (kw == "chi" || kw == "pm") {
            if (table.blocks.empty()) {
                FixtureBlock b;
                b.label = table.name;
                b.zero = default_zero;
                table.blocks.push_back(std::move(b));
            }
            table.blocks.back().entries.push_back(parse_entry(r, kw == "chi" ? EntryKind::chi : EntryKind::pm));
        } else {
            r.fail("unknown keyword '" + kw + "'");
        }
    }
    if (!have_header) throw FixtureError(origin + ": missing table header");
    validate(table, origin);
    return table;
}

FixtureTable load_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), path.filename().string());
}

std::filesystem::path fixture_directory() {
    if (const char* env = std::getenv("MULTIPLEX_FIXTURE_DIR"); env && *env) return env;
    return MULTIPLEX_DEFAULT_FIXTURE_DIR;
}

std::vector<std::string> fixture_names(const std::filesystem::path& dir) {
    std::vector<std::string> names;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() == ".fix") names.push_back(entry.path().stem().string());
    }
    std::sort(names.begin(), names.end());
    return names;
}

FixtureTable load_named_fixture(const std::string& name, const std::filesystem::path& dir) {
    const auto path = dir / (name + ".fix");
    if (!std::filesystem::exists(path)) throw FixtureError("unknown fixture '" + name + "'");
    FixtureTable t = load_fixture(path);
    if (t.name != name) throw FixtureError(path.string() + ": header names table '" + t.name + "'");
    return t;
}

// ---------------------------------------------------------------- evaluation

namespace {

std::vector<Label> eval_all(const std::vector<LinearForm>& forms, const std::vector<Label>& labels) {
    std::vector<Label> out;
    for (const auto& f : forms) out.push_back(f.evaluate_integer(labels));
    return out;
}

} // namespace

ExpectedFragment evaluate_fixture(const FixtureTable& table, const FixtureBlock& block,
                                  const std::vector<Label>& labels) {
    const int rank = table.matrix_size - 1;
    const int k = table.removed_index;
    if (static_cast<int>(labels.size()) != rank) {
        throw DomainError("fixture " + table.name + " needs " + std::to_string(rank) + " labels, got " +
                          std::to_string(labels.size()));
    }
    ExpectedFragment frag;
    frag.labels = labels;
    for (const auto& e : block.entries) {
        if (e.kind == EntryKind::chi) {
            ExpectedVertex v;
            v.id = e.id;
            v.signature = Signature(eval_all(*e.signature, labels));
            if (e.c) v.c = e.c->evaluate(labels);
            frag.vertices.push_back(std::move(v));
            for (const auto& em : e.embeds) {
                frag.embeddings.push_back({em.from, e.id, em.root, em.degree.evaluate_integer(labels)});
            }
            if (e.pair) {
                const bool seen = std::any_of(frag.pairs.begin(), frag.pairs.end(), [&](const ExpectedPair& p) {
                    return (p.a == *e.pair && p.b == e.id) || (p.a == e.id && p.b == *e.pair);
                });
                if (!seen) frag.pairs.push_back({e.id, *e.pair, std::nullopt, false});
            }
            continue;
        }

        std::vector<Label> left, right;
        std::optional<Signature> sig;
        if (e.signature) {
            sig = Signature(eval_all(*e.signature, labels));
            for (int i = 1; i < k; ++i) left.push_back((*sig)[i]);
            for (int i = k + 1; i <= rank; ++i) right.push_back((*sig)[i]);
        } else {
            left = eval_all(*e.left, labels);
            right = eval_all(*e.right, labels);
        }
        const Rational c = e.c->evaluate(labels);
        const bool self = e.tag == PairRelation::self_dual;
        const std::string minus = self ? e.id : e.id + "-";
        const std::string plus = self ? e.id : e.id + "+";

        frag.vertices.push_back(ExpectedVertex{minus, sig, left, right, c});
        if (!self) frag.vertices.push_back(ExpectedVertex{plus, std::nullopt, right, left, -c});
        frag.pairs.push_back(ExpectedPair{minus, plus, e.tag, e.unordered});
        for (const auto& em : e.embeds) {
            frag.embeddings.push_back({minus, plus, em.root, em.degree.evaluate_integer(labels)});
        }
        if (e.degenerate_exponent) {
            frag.degenerations.push_back({minus, plus, e.degenerate_exponent->evaluate(labels)});
        }
    }
    return frag;
}

ExpectedFragment evaluate_fixture(const FixtureTable& table, const std::vector<Label>& labels) {
    if (table.blocks.size() != 1) {
        throw DomainError("fixture " + table.name + " has " + std::to_string(table.blocks.size()) +
                          " blocks; evaluate one block at a time");
    }
    return evaluate_fixture(table, table.blocks.front(), labels);
}

// ---------------------------------------------------------------- verification

namespace {

std::string join(const std::vector<Label>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string labels_text(const std::vector<Label>& l, const std::vector<Label>& r) {
    return "(" + join(l) + ";" + join(r) + ")";
}

class BlockChecker {
public:
    BlockChecker(VerifyReport& report, const FixtureTable& table, const FixtureBlock& block,
                 const ExpectedFragment& frag, const Multiplet& mult)
        : report_(report), table_(table), block_(block), frag_(frag), mult_(mult) {}

    void run() {
        std::set<std::string> unordered_members;
        for (const auto& p : frag_.pairs) {
            if (p.unordered) {
                unordered_members.insert(p.a);
                unordered_members.insert(p.b);
            }
        }
        for (const auto& v : frag_.vertices) {
            if (!unordered_members.count(v.id)) match_vertex(v);
        }
        for (const auto& p : frag_.pairs) {
            if (p.unordered) match_unordered(p);
        }
        for (const auto& e : frag_.embeddings) check_embedding(e);
        for (const auto& p : frag_.pairs) check_pair(p);
        for (const auto& d : frag_.degenerations) check_degeneration(d);
        if (!table_.partial) check_complete();
    }

private:
    void mismatch(const std::string& entry, const std::string& field, std::string expected, std::string actual) {
        report_.mismatches.push_back(
            Mismatch{frag_.labels, block_.label, entry, field, std::move(expected), std::move(actual)});
    }

    std::vector<int> by_labels(const std::vector<Label>& l, const std::vector<Label>& r) const {
        std::vector<int> out;
        for (const auto& v : mult_.vertices)
            if (v.m_left == l && v.m_right == r) out.push_back(v.id);
        return out;
    }

    void check_c(const ExpectedVertex& ev, int id) {
        if (!ev.c) return;
        ++report_.conformal.total;
        const Rational got = mult_.vertex(id).c;
        if (got == *ev.c) ++report_.conformal.matched;
        else mismatch(ev.id, "c", format_rational(*ev.c), format_rational(got));
    }

    void match_vertex(const ExpectedVertex& ev) {
        ++report_.signatures.total;
        std::optional<int> id;
        if (ev.signature) {
            id = mult_.find(*ev.signature);
            if (!id) {
                mismatch(ev.id, "sig", to_string(*ev.signature), "not generated");
                return;
            }
            const auto& v = mult_.vertex(*id);
            if ((ev.m_left && *ev.m_left != v.m_left) || (ev.m_right && *ev.m_right != v.m_right)) {
                mismatch(ev.id, "m-labels", labels_text(*ev.m_left, *ev.m_right), labels_text(v.m_left, v.m_right));
            }
        } else {
            const auto cands = by_labels(*ev.m_left, *ev.m_right);
            if (cands.empty()) {
                mismatch(ev.id, "m-labels", labels_text(*ev.m_left, *ev.m_right), "not generated");
                return;
            }
            id = cands.front();
            for (int c : cands)
                if (ev.c && mult_.vertex(c).c == *ev.c) id = c;
        }
        ++report_.signatures.matched;
        matched_[ev.id] = *id;
        check_c(ev, *id);
    }

    void match_unordered(const ExpectedPair& p) {
        const ExpectedVertex* a = find_expected(p.a);
        const ExpectedVertex* b = find_expected(p.b);
        report_.signatures.total += 2;
        const auto ca = by_labels(*a->m_left, *a->m_right);
        const auto cb = by_labels(*b->m_left, *b->m_right);
        if (ca.size() != 1 || cb.size() != 1) {
            mismatch(p.a, "m-labels", labels_text(*a->m_left, *a->m_right) + " and swap",
                     std::to_string(ca.size()) + "/" + std::to_string(cb.size()) + " candidates");
            return;
        }
        report_.signatures.matched += 2;
        matched_[p.a] = ca.front();
        matched_[p.b] = cb.front();
        report_.conformal.total += 2;
        std::multiset<Rational> want{*a->c, *b->c};
        std::multiset<Rational> got{mult_.vertex(ca.front()).c, mult_.vertex(cb.front()).c};
        if (want == got) {
            report_.conformal.matched += 2;
        } else {
            mismatch(p.a, "c (unordered)", format_rational(*a->c) + "," + format_rational(*b->c),
                     format_rational(mult_.vertex(ca.front()).c) + "," + format_rational(mult_.vertex(cb.front()).c));
        }
    }

    const ExpectedVertex* find_expected(const std::string& id) const {
        for (const auto& v : frag_.vertices)
            if (v.id == id) return &v;
        throw std::logic_error("expected vertex " + id + " missing");
    }

    std::optional<int> resolved(const std::string& id) const {
        const auto it = matched_.find(id);
        if (it == matched_.end()) return std::nullopt;
        return it->second;
    }

    void check_embedding(const ExpectedEmbedding& e) {
        ++report_.embeddings.total;
        const auto from = resolved(e.from);
        const auto to = resolved(e.to);
        const std::string want = e.from + " -> " + e.to + " root " + to_string(e.root) + " deg " + std::to_string(e.degree);
        if (!from || !to) {
            mismatch(e.to, "embed", want, "endpoint not matched");
            return;
        }
        for (const auto& a : mult_.arrows) {
            if (a.source == *from && a.target == *to && a.root == e.root && a.degree == e.degree) {
                ++report_.embeddings.matched;
                return;
            }
        }
        std::string got = "no such arrow";
        for (const auto& a : mult_.arrows) {
            if (a.source == *from && a.target == *to) {
                got = "arrow via " + to_string(a.root) + " deg " + std::to_string(a.degree);
            }
        }
        mismatch(e.to, "embed", want, got);
    }

    void check_pair(const ExpectedPair& p) {
        ++report_.pairs.total;
        const auto a = resolved(p.a);
        const auto b = resolved(p.b);
        if (!a || !b) {
            mismatch(p.a, "pair", p.a + " <-> " + p.b, "member not matched");
            return;
        }
        const auto partner = mult_.vertex(*a).ks_partner;
        if (!partner || *partner != *b) {
            mismatch(p.a, "pair", "partner " + to_string(mult_.vertex(*b).signature),
                     partner ? to_string(mult_.vertex(*partner).signature) : "none");
            return;
        }
        if (p.tag) {
            const auto lo = std::min(*a, *b), hi = std::max(*a, *b);
            for (const auto& kp : mult_.ks_pairs) {
                if (kp.a == lo && kp.b == hi && kp.relation != *p.tag) {
                    mismatch(p.a, "pair tag", std::string(to_string(*p.tag)), std::string(to_string(kp.relation)));
                    return;
                }
            }
        }
        ++report_.pairs.matched;
    }

    void check_degeneration(const ExpectedDegeneration& d) {
        const auto minus = resolved(d.minus);
        const auto plus = resolved(d.plus);
        const std::string want = "degenerate-KS exponent " + format_rational(d.exponent);
        if (mult_.degenerations.empty() || !minus || !plus) {
            mismatch(d.minus, "degeneration", want, "none");
            return;
        }
        const auto& got = mult_.degenerations.front();
        if (got.kind != DegenerationKind::degenerate_ks || got.minus != *minus || got.plus != *plus ||
            got.exponent != d.exponent) {
            mismatch(d.minus, "degeneration", want,
                     std::string(to_string(got.kind)) +
                         (got.exponent ? " exponent " + format_rational(*got.exponent) : std::string()));
        }
    }

    void check_complete() {
        std::set<int> hit;
        for (const auto& [id, v] : matched_) hit.insert(v);
        for (const auto& v : mult_.vertices) {
            ++report_.completeness.total;
            if (hit.count(v.id)) ++report_.completeness.matched;
            else mismatch("-", "completeness", "listed in fixture", "extra vertex " + to_string(v.signature));
        }
    }

    VerifyReport& report_;
    const FixtureTable& table_;
    const FixtureBlock& block_;
    const ExpectedFragment& frag_;
    const Multiplet& mult_;
    std::map<std::string, int> matched_;
};

} // namespace

std::vector<std::vector<Label>> default_assignments(int rank, std::uint64_t seed) {
    std::vector<std::vector<Label>> out;
    out.emplace_back(static_cast<std::size_t>(rank), 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Label> dist(1, 20);
    for (int t = 0; t < 5; ++t) {
        std::vector<Label> a(static_cast<std::size_t>(rank));
        for (auto& v : a) v = dist(rng);
        out.push_back(std::move(a));
    }
    return out;
}

VerifyReport verify(const FixtureTable& table, const std::vector<std::vector<Label>>& assignments) {
    VerifyReport report;
    report.fixture = table.name;
    for (const auto& note : table.notes) report.notes.push_back("note: " + note);
    for (const auto& b : table.blocks)
        for (const auto& e : b.entries)
            for (const auto& er : e.errata) {
                report.notes.push_back("erratum " + e.id + " " + er.field + ": source text \"" + er.literal +
                                       "\" skipped (errata); checked under the documented interpretation");
            }

    const ParabolicSpec spec = table.spec();
    for (const auto& base : assignments) {
        if (static_cast<int>(base.size()) != spec.rank()) {
            throw DomainError("fixture " + table.name + " needs " + std::to_string(spec.rank()) +
                              " labels, got " + std::to_string(base.size()));
        }
        report.assignments.push_back(base);
        for (const auto& block : table.blocks) {
            std::vector<Label> labels = base;
            for (int z : block.zero) labels[static_cast<std::size_t>(z - 1)] = 0;
            const ExpectedFragment frag = evaluate_fixture(table, block, labels);
            const Multiplet mult = generate_multiplet(spec, labels);
            BlockChecker(report, table, block, frag, mult).run();
        }
    }
    return report;
}

VerifyReport verify(const FixtureTable& table, std::uint64_t seed) {
    return verify(table, default_assignments(table.matrix_size - 1, seed));
}

} // namespace multiplex
