#include "multiplex/cli.hpp"

#include "multiplex/catalog.hpp"
#include "multiplex/errors.hpp"
#include "multiplex/matrixreal.hpp"
#include "multiplex/multiplet.hpp"
#include "multiplex/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>

namespace multiplex::cli {

namespace {

// Thrown for malformed flag values that CLI11 cannot see (e.g. "1,x,2").
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Label> parse_labels(const std::string& text) {
    std::vector<Label> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        Label v = 0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (tok.empty() || ec != std::errc() || ptr != last) throw UsageError("--labels: '" + tok + "' is not an integer");
        if (v < 0) throw DomainError("--labels: label " + tok + " is negative");
        out.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

void emit(const std::string& body, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("--out: cannot open '" + path + "'");
    f << body;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiplets of sl(N,R) induced from a maximal parabolic", "multiplex"};
    app.require_subcommand(1);

    int n = 0, k = 0;
    std::string labels_text, format = "table", arrows_mode = "all", out_path, fixture;
    std::uint64_t seed = kDefaultVerifySeed;
    bool check_brackets = false;

    auto* compute = app.add_subcommand("compute", "Generate a multiplet");
    compute->add_option("--matrix-size", n, "N")->required();
    compute->add_option("--remove", k, "removed simple root index k")->required();
    compute->add_option("--labels", labels_text, "comma-separated non-negative labels")->required();
    compute->add_option("--format", format, "table|json|dot")->check(CLI::IsMember({"table", "json", "dot"}));
    compute->add_option("--arrows", arrows_mode, "all|covering")->check(CLI::IsMember({"all", "covering"}));
    compute->add_option("--out", out_path, "output file (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify", "Check a fixture table against the generator");
    verify_cmd->add_option("--fixture", fixture, "fixture name")->required();
    verify_cmd->add_option("--labels", labels_text, "single label assignment instead of the defaults");
    verify_cmd->add_option("--seed", seed, "seed for the default assignments");

    auto* size = app.add_subcommand("size", "Number of members of a generic main multiplet");
    size->add_option("--matrix-size", n, "N")->required();
    size->add_option("--remove", k, "k")->required();

    auto* dims = app.add_subcommand("dims", "Dimensions of m, a, n");
    dims->add_option("--matrix-size", n, "N")->required();
    dims->add_option("--remove", k, "k")->required();
    dims->add_flag("--check-brackets", check_brackets, "verify the sl(2)-triple brackets");

    app.add_subcommand("fixtures", "List available fixtures");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (compute->parsed()) {
            const ParabolicSpec spec(n, k);
            const Multiplet mult = generate_multiplet(spec, parse_labels(labels_text));
            const std::vector<Arrow> arrows = arrows_mode == "covering" ? covering_arrows(mult) : mult.arrows;
            std::string body;
            if (format == "json") {
                Multiplet shown = mult;
                shown.arrows = arrows;
                body = render_json(shown);
            } else if (format == "dot") {
                body = render_dot(mult, arrows);
            } else {
                body = render_table(mult, arrows);
            }
            emit(body, out_path, out);
            return kSuccess;
        }
        if (verify_cmd->parsed()) {
            FixtureTable table;
            try {
                table = load_named_fixture(fixture);
            } catch (const FixtureError& e) {
                err << "error: " << e.what() << "\n" << verify_cmd->help();
                return kUsage;
            }
            const VerifyReport report =
                labels_text.empty() ? verify(table, seed) : verify(table, {parse_labels(labels_text)});
            out << render_report(report);
            return report.ok() ? kSuccess : kMismatch;
        }
        if (size->parsed()) {
            out << multiplet_size(ParabolicSpec(n, k)) << "\n";
            return kSuccess;
        }
        if (dims->parsed()) {
            const ParabolicSpec spec(n, k);
            const auto d = parabolic_dimensions(spec);
            out << "m: " << d.m_dim << "  a: " << d.a_dim << "  n: " << d.n_dim << "\n";
            if (!check_brackets) return kSuccess;
            bool all = true;
            for (const auto& t : check_sl2_triples(n)) {
                out << "triple j=" << t.j << ": " << (t.passed() ? "pass" : "FAIL") << "\n";
                all = all && t.passed();
            }
            const bool closed = check_k_closure(n);
            out << "k closure: " << (closed ? "pass" : "FAIL") << "\n";
            return all && closed ? kSuccess : kMismatch;
        }
        for (const auto& name : fixture_names()) out << name << "\n";
        return kSuccess;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
}

} // namespace multiplex::cli
