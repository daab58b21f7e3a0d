#include "multiplex/errors.hpp"
#include "multiplex/weyl.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace multiplex;

TEST(WeylGroup, Orders) {
    EXPECT_EQ(weyl_group(2).size(), 2u);
    EXPECT_EQ(weyl_group(4).size(), 24u);
    EXPECT_EQ(weyl_group(6).size(), 720u);
    const auto w = weyl_group(5);
    EXPECT_EQ(std::set<WeylElement>(w.begin(), w.end()).size(), 120u);
    EXPECT_TRUE(std::is_sorted(w.begin(), w.end()));
}

TEST(WeylGroup, CapacityErrorNamesTheCap) {
    try {
        weyl_group(kMaxWeylEnumeration + 1);
        FAIL() << "expected CapacityError";
    } catch (const CapacityError& e) {
        EXPECT_NE(std::string(e.what()).find(std::to_string(kMaxWeylEnumeration)), std::string::npos);
    }
}

TEST(WeylElement, RejectsNonPermutations) {
    EXPECT_THROW(WeylElement({1, 1, 2}), DomainError);
    EXPECT_THROW(WeylElement({0, 1}), DomainError);
    EXPECT_THROW(WeylElement({1, 2, 4}), DomainError);
}

TEST(WeylElement, GroupLaws) {
    const auto w = weyl_group(4);
    const auto e = WeylElement::identity(4);
    for (const auto& a : w) {
        EXPECT_EQ(a * a.inverse(), e);
        EXPECT_EQ(a.inverse().length(), a.length());
        for (const auto& b : w) {
            const auto ab = a * b;
            for (int i = 1; i <= 4; ++i) EXPECT_EQ(ab.image(i), a.image(b.image(i)));
        }
    }
}

TEST(WeylElement, ActionIsCompatibleWithComposition) {
    const std::vector<Label> x{9, 4, 2, 0};
    for (const auto& a : weyl_group(4))
        for (const auto& b : weyl_group(4)) EXPECT_EQ((a * b).act(x), a.act(b.act(x)));
}

TEST(LongestElement, Examples) {
    EXPECT_EQ(longest_element(2).one_line(), (std::vector<int>{2, 1}));
    const auto w0 = longest_element(4);
    EXPECT_EQ(w0.one_line(), (std::vector<int>{4, 3, 2, 1}));
    EXPECT_EQ(w0.length(), 6);
    for (int n = 2; n <= 8; ++n) {
        EXPECT_EQ(longest_element(n) * longest_element(n), WeylElement::identity(n));
        int max_len = 0;
        for (const auto& w : weyl_group(std::min(n, 6))) max_len = std::max(max_len, w.length());
        if (n <= 6) EXPECT_EQ(longest_element(n).length(), max_len);
    }
}

TEST(Parabolic, Orders) {
    EXPECT_EQ(parabolic_subgroup_order(ParabolicSpec(4, 2)), 4u);
    EXPECT_EQ(parabolic_subgroup_order(ParabolicSpec(6, 3)), 36u);
    EXPECT_EQ(parabolic_subgroup_order(ParabolicSpec(8, 4)), 576u);
    EXPECT_EQ(multiplet_size(ParabolicSpec(4, 2)), 6u);
    EXPECT_EQ(multiplet_size(ParabolicSpec(6, 3)), 20u);
    EXPECT_EQ(multiplet_size(ParabolicSpec(8, 4)), 70u);
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k) {
            const ParabolicSpec s(n, k);
            EXPECT_EQ(multiplet_size(s) * parabolic_subgroup_order(s), factorial(n));
        }
}

TEST(Parabolic, InvalidSpecs) {
    EXPECT_THROW(ParabolicSpec(4, 0), DomainError);
    EXPECT_THROW(ParabolicSpec(4, 4), DomainError);
    EXPECT_THROW(ParabolicSpec(1, 1), DomainError);
}

// Each coset W_m w holds exactly one element whose image of a strictly dominant
// epsilon vector is m-dominant.
TEST(Parabolic, OneMDominantRepresentativePerCoset) {
    for (int n = 2; n <= 8; ++n) {
        std::vector<Label> x(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = 3 * (n - i) + (n - i) * (n - i);
        for (int k = 1; k < n; ++k) {
            const ParabolicSpec spec(n, k);
            std::map<std::set<int>, int> hits;
            for (const auto& w : weyl_group(n)) {
                std::set<int> key; // W_m w is determined by the inputs sent into the first block
                for (int i = 1; i <= n; ++i)
                    if (w.image(i) <= k) key.insert(i);
                auto& h = hits[key];
                if (is_m_dominant(spec, from_epsilon(w.act(x)))) ++h;
            }
            EXPECT_EQ(hits.size(), multiplet_size(spec));
            for (const auto& [key, h] : hits) EXPECT_EQ(h, 1) << "N=" << n << " k=" << k;
        }
    }
}

TEST(RestrictedReflection, Laws) {
    const std::vector<Rational> lam{Rational(1), Rational(-1), Rational(0)};
    const std::vector<Rational> mu{Rational(3, 2), Rational(2), Rational(-5)};
    std::vector<Rational> neg;
    for (const auto& v : lam) neg.push_back(-v);
    EXPECT_EQ(restricted_reflection(lam, lam), neg);
    EXPECT_EQ(restricted_reflection(restricted_reflection(mu, lam), lam), mu);
    const std::vector<Rational> perp{Rational(1), Rational(1), Rational(7)};
    EXPECT_EQ(restricted_reflection(perp, lam), perp);
    EXPECT_THROW(restricted_reflection(mu, std::vector<Rational>(3, Rational(0))), DomainError);
}

TEST(MDominance, IgnoresRemovedIndex) {
    const ParabolicSpec s(4, 2);
    EXPECT_TRUE(is_m_dominant(s, Signature({1, -5, 1})));
    EXPECT_FALSE(is_m_dominant(s, Signature({0, 1, 1})));
    EXPECT_FALSE(is_m_dominant(s, Signature({1, 1, -1})));
}
