#include "multiplex/errors.hpp"
#include "multiplex/render.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <random>
#include <regex>

using namespace multiplex;

namespace {

std::size_t count_lines_matching(const std::string& text, const std::regex& re) {
    std::size_t n = 0;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (std::regex_search(line, re)) ++n;
    return n;
}

} // namespace

TEST(Json, RoundTripRandomized) {
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<int> size(2, 7), lab(0, 9);
    int done = 0;
    while (done < 60) {
        const int n = size(rng);
        const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
        std::vector<Label> labels(static_cast<std::size_t>(n - 1));
        for (auto& l : labels) l = lab(rng);
        Multiplet m;
        try {
            m = generate_multiplet(ParabolicSpec(n, k), labels);
        } catch (const DomainError&) {
            continue; // no m-dominant member
        }
        EXPECT_EQ(parse_json(render_json(m)), m);
        ++done;
    }
}

TEST(Json, Schema) {
    const auto m = generate_multiplet(ParabolicSpec(4, 2), {1, 0, 1});
    const auto j = nlohmann::json::parse(render_json(m));
    EXPECT_EQ(j["algebra"]["series"], "A");
    EXPECT_EQ(j["algebra"]["matrix_size"], 4);
    EXPECT_EQ(j["parabolic"]["removed_index"], 2);
    EXPECT_EQ(j["kind"], "reduced");
    EXPECT_EQ(j["vertices"][0]["c"]["den"], 2);
    EXPECT_EQ(j["vertices"][0]["c"]["num"], -2);
    EXPECT_EQ(j["pairs"][0]["relation"], "weyl-shift");
    EXPECT_EQ(j["degenerations"][0]["dalembertian_power"], 1);
    const auto n = nlohmann::json::parse(render_json(generate_multiplet(ParabolicSpec(4, 1), {1, 1, 1})));
    EXPECT_TRUE(n["vertices"][0]["ks_partner"].is_null());
}

TEST(Json, RejectsMalformed) {
    EXPECT_THROW(parse_json("{"), DomainError);
    EXPECT_THROW(parse_json("{}"), DomainError);
    auto j = nlohmann::json::parse(render_json(generate_multiplet(ParabolicSpec(4, 2), {1, 1, 1})));
    j["vertices"][0]["c"]["den"] = 3;
    EXPECT_THROW(parse_json(j.dump()), DomainError);
}

TEST(Dot, CountsAndLabels) {
    for (const auto& [n, labels] : std::vector<std::pair<int, std::vector<Label>>>{
             {4, {1, 1, 1}}, {6, {1, 1, 1, 1, 1}}, {6, {0, 2, 1, 3, 0}}, {8, {1, 2, 1, 1, 3, 1, 1}}}) {
        const auto m = generate_multiplet(ParabolicSpec(n, n / 2), labels);
        for (const auto& arrows : {m.arrows, covering_arrows(m)}) {
            const std::string dot = render_dot(m, arrows);
            EXPECT_EQ(count_lines_matching(dot, std::regex(R"(^\s*v\d+ \[label=)")), m.vertices.size());
            EXPECT_EQ(count_lines_matching(dot, std::regex(R"(->)")), arrows.size());
            EXPECT_EQ(count_lines_matching(dot, std::regex(R"(label="α_\{\d+\.\.\d+\}, m=\d+")")), arrows.size());
            EXPECT_EQ(std::count(dot.begin(), dot.end(), '{') - std::count(dot.begin(), dot.end(), '}'), 0);
            EXPECT_NE(dot.find("rankdir=BT"), std::string::npos);
        }
    }
}

TEST(Dot, Sl6HasTwentyNodes) {
    const auto m = generate_multiplet(ParabolicSpec(6, 3), {1, 1, 1, 1, 1});
    EXPECT_EQ(count_lines_matching(render_dot(m, m.arrows), std::regex(R"(^\s*v\d+ \[label=)")), 20u);
}

TEST(Table, ConformalColumnAndAnnotations) {
    const auto m = generate_multiplet(ParabolicSpec(4, 2), {1, 1, 1});
    const std::string t = render_table(m, m.arrows);
    EXPECT_NE(t.find("6 vertices"), std::string::npos);
    for (const char* c : {" -2 ", " -1 ", " +1 ", " +2 "}) EXPECT_NE(t.find(c), std::string::npos) << c;
    const auto d = generate_multiplet(ParabolicSpec(4, 2), {2, 0, 2});
    EXPECT_NE(render_table(d, d.arrows).find("d'Alembertian power 2"), std::string::npos);
    const auto h = generate_multiplet(ParabolicSpec(4, 1), {1, 1, 1});
    EXPECT_NE(render_table(h, h.arrows).find("-1/2"), std::string::npos);
}

TEST(Rational, Formatting) {
    EXPECT_EQ(format_rational(Rational(-3, 2)), "-3/2");
    EXPECT_EQ(format_rational(Rational(1, 2), true), "+1/2");
    EXPECT_EQ(format_rational(Rational(0), true), "0");
    EXPECT_EQ(format_rational(Rational(4, 2)), "2");
}
