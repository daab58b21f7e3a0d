#include "multiplex/render.hpp"

#include "multiplex/errors.hpp"

#include <json.hpp>

#include <iomanip>
#include <map>
#include <sstream>

namespace multiplex {

namespace {

using nlohmann::json;

std::string join(const std::vector<Label>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string m_labels(const MultipletVertex& v) { return "(" + join(v.m_left) + ";" + join(v.m_right) + ")"; }

std::string header(const Multiplet& m, std::size_t n_arrows) {
    std::ostringstream os;
    os << "sl(" << m.spec.matrix_size << ",R), removed index " << m.spec.removed_index << ", labels "
       << join(m.inducing_labels) << ": " << to_string(m.kind) << " multiplet, " << m.vertices.size()
       << " vertices, " << n_arrows << " arrows";
    return os.str();
}

} // namespace

std::string render_table(const Multiplet& mult, const std::vector<Arrow>& arrows) {
    std::ostringstream os;
    os << header(mult, arrows.size()) << "\n";
    std::size_t sig_w = 9, lab_w = 8;
    for (const auto& v : mult.vertices) {
        sig_w = std::max(sig_w, to_string(v.signature).size());
        lab_w = std::max(lab_w, m_labels(v).size());
    }
    os << std::left << std::setw(4) << "id" << "  " << std::setw(static_cast<int>(sig_w)) << "signature" << "  "
       << std::setw(6) << "c" << "  " << std::setw(static_cast<int>(lab_w)) << "M-labels" << "  " << std::setw(7)
       << "partner" << "  " << "length\n";
    for (const auto& v : mult.vertices) {
        os << std::left << std::setw(4) << v.id << "  " << std::setw(static_cast<int>(sig_w)) << to_string(v.signature)
           << "  " << std::setw(6) << format_rational(v.c, true) << "  " << std::setw(static_cast<int>(lab_w))
           << m_labels(v) << "  " << std::setw(7) << (v.ks_partner ? std::to_string(*v.ks_partner) : "-") << "  "
           << v.coset_length << "\n";
    }
    if (!arrows.empty()) {
        os << "arrows\n";
        for (const auto& a : arrows) {
            os << "  " << a.source << " -> " << a.target << "  root " << to_string(a.root) << "  m=" << a.degree
               << "  " << to_string(a.operator_kind) << "\n";
        }
    }
    if (!mult.ks_pairs.empty()) {
        os << "pairs\n";
        for (const auto& p : mult.ks_pairs) os << "  " << p.a << " <-> " << p.b << "  " << to_string(p.relation) << "\n";
    }
    for (const auto& d : mult.degenerations) {
        os << "doublet " << d.minus << " -> " << d.plus << ": " << to_string(d.kind);
        if (d.root) os << " via " << to_string(*d.root) << ", m=" << *d.degree;
        if (d.exponent) os << ", exponent c+ = " << format_rational(*d.exponent);
        if (d.dalembertian_power) os << ", d'Alembertian power " << *d.dalembertian_power;
        os << "\n";
    }
    return os.str();
}

std::string render_json(const Multiplet& mult) {
    json j;
    j["algebra"] = {{"series", "A"}, {"matrix_size", mult.spec.matrix_size}};
    j["parabolic"] = {{"removed_index", mult.spec.removed_index}};
    j["inducing_labels"] = mult.inducing_labels;
    j["kind"] = std::string(to_string(mult.kind));
    j["vertices"] = json::array();
    for (const auto& v : mult.vertices) {
        const Rational twice = v.c * 2;
        json jv = {{"id", v.id},
                   {"signature", v.signature.labels()},
                   {"c", {{"num", twice.numerator()}, {"den", 2}}},
                   {"m_left", v.m_left},
                   {"m_right", v.m_right},
                   {"coset_length", v.coset_length}};
        jv["ks_partner"] = v.ks_partner ? json(*v.ks_partner) : json(nullptr);
        j["vertices"].push_back(std::move(jv));
    }
    j["arrows"] = json::array();
    for (const auto& a : mult.arrows) {
        j["arrows"].push_back({{"from", a.source},
                               {"to", a.target},
                               {"root", {a.root.p, a.root.q}},
                               {"degree", a.degree},
                               {"operator_kind", std::string(to_string(a.operator_kind))}});
    }
    j["pairs"] = json::array();
    for (const auto& p : mult.ks_pairs) {
        j["pairs"].push_back({{"a", p.a}, {"b", p.b}, {"relation", std::string(to_string(p.relation))}});
    }
    j["degenerations"] = json::array();
    for (const auto& d : mult.degenerations) {
        json jd = {{"kind", std::string(to_string(d.kind))}, {"minus", d.minus}, {"plus", d.plus}};
        jd["root"] = d.root ? json({d.root->p, d.root->q}) : json(nullptr);
        jd["degree"] = d.degree ? json(*d.degree) : json(nullptr);
        jd["exponent"] = d.exponent ? json({{"num", (*d.exponent * 2).numerator()}, {"den", 2}}) : json(nullptr);
        jd["dalembertian_power"] = d.dalembertian_power ? json(*d.dalembertian_power) : json(nullptr);
        j["degenerations"].push_back(std::move(jd));
    }
    return j.dump(2) + "\n";
}

namespace {

Rational half_integer(const json& j) {
    const auto num = j.at("num").get<std::int64_t>();
    const auto den = j.at("den").get<std::int64_t>();
    if (den != 2) throw DomainError("c must be stored over denominator 2");
    return Rational(num, den);
}

Root root_of(const json& j) {
    if (!j.is_array() || j.size() != 2) throw DomainError("root must be [p, q]");
    return Root{j[0].get<int>(), j[1].get<int>()};
}

} // namespace

Multiplet parse_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        if (j.at("algebra").at("series").get<std::string>() != "A") throw DomainError("only the A series is supported");
        Multiplet m;
        m.spec = ParabolicSpec(j.at("algebra").at("matrix_size").get<int>(),
                               j.at("parabolic").at("removed_index").get<int>());
        m.inducing_labels = j.at("inducing_labels").get<std::vector<Label>>();
        m.kind = multiplet_kind_from_string(j.at("kind").get<std::string>());
        for (const auto& jv : j.at("vertices")) {
            MultipletVertex v;
            v.id = jv.at("id").get<int>();
            v.signature = Signature(jv.at("signature").get<std::vector<Label>>());
            v.c = half_integer(jv.at("c"));
            v.m_left = jv.at("m_left").get<std::vector<Label>>();
            v.m_right = jv.at("m_right").get<std::vector<Label>>();
            if (!jv.at("ks_partner").is_null()) v.ks_partner = jv.at("ks_partner").get<int>();
            v.coset_length = jv.at("coset_length").get<int>();
            if (v.id != static_cast<int>(m.vertices.size())) throw DomainError("vertex ids must be 0..n-1 in order");
            m.vertices.push_back(std::move(v));
        }
        for (const auto& ja : j.at("arrows")) {
            m.arrows.push_back(Arrow{ja.at("from").get<int>(), ja.at("to").get<int>(), root_of(ja.at("root")),
                                     ja.at("degree").get<Label>(),
                                     operator_kind_from_string(ja.at("operator_kind").get<std::string>())});
        }
        for (const auto& jp : j.at("pairs")) {
            m.ks_pairs.push_back(KsPair{jp.at("a").get<int>(), jp.at("b").get<int>(),
                                        pair_relation_from_string(jp.at("relation").get<std::string>())});
        }
        if (j.contains("degenerations")) {
            for (const auto& jd : j.at("degenerations")) {
                Degeneration d;
                d.kind = degeneration_kind_from_string(jd.at("kind").get<std::string>());
                d.minus = jd.at("minus").get<int>();
                d.plus = jd.at("plus").get<int>();
                if (!jd.at("root").is_null()) d.root = root_of(jd.at("root"));
                if (!jd.at("degree").is_null()) d.degree = jd.at("degree").get<Label>();
                if (!jd.at("exponent").is_null()) d.exponent = half_integer(jd.at("exponent"));
                if (!jd.at("dalembertian_power").is_null()) d.dalembertian_power = jd.at("dalembertian_power").get<Label>();
                m.degenerations.push_back(d);
            }
        }
        return m;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed multiplet JSON: ") + e.what());
    }
}

std::string render_dot(const Multiplet& mult, const std::vector<Arrow>& arrows) {
    std::ostringstream os;
    os << "digraph multiplet {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=box];\n";
    std::map<Rational, std::vector<int>> by_c;
    for (const auto& v : mult.vertices) {
        os << "  v" << v.id << " [label=\"" << to_string(v.signature) << "\\nc=" << format_rational(v.c) << "\"];\n";
        by_c[v.c].push_back(v.id);
    }
    for (const auto& [c, ids] : by_c) {
        os << "  { rank=same;";
        for (int id : ids) os << " v" << id << ";";
        os << " }\n";
    }
    for (const auto& a : arrows) {
        os << "  v" << a.source << " -> v" << a.target << " [label=\"α_{" << a.root.p << ".." << a.root.q
           << "}, m=" << a.degree << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_report(const VerifyReport& r) {
    std::ostringstream os;
    os << "fixture " << r.fixture << ": " << (r.ok() ? "OK" : "MISMATCH") << "\n";
    os << "assignments (" << r.assignments.size() << "):\n";
    for (const auto& a : r.assignments) os << "  " << join(a) << "\n";
    const auto n = std::max<std::size_t>(r.assignments.size(), 1);
    auto line = [&](const char* what, const CheckCount& c) {
        os << "  " << std::left << std::setw(13) << what << c.matched << "/" << c.total;
        if (c.total > 0 && c.total % n == 0) os << "  (" << c.total / n << " per assignment)";
        os << "\n";
    };
    os << "checks:\n";
    line("signatures", r.signatures);
    line("embeddings", r.embeddings);
    line("pairs", r.pairs);
    line("c values", r.conformal);
    line("completeness", r.completeness);
    for (const auto& note : r.notes) os << note << "\n";
    if (!r.mismatches.empty()) {
        os << "mismatches (" << r.mismatches.size() << "):\n";
        for (const auto& m : r.mismatches) {
            os << "  [" << join(m.labels) << "] " << m.block << " " << m.entry << " " << m.field
               << ": expected " << m.expected << ", actual " << m.actual << "\n";
        }
    }
    return os.str();
}

} // namespace multiplex
