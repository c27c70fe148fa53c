#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace krm;

namespace {

const std::vector<LieType> kSmall{{Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
                                  {Family::C, 2}, {Family::C, 3}, {Family::D, 3}, {Family::D, 4}};

std::string name(const LieType& t) { return std::string(1, family_char(t.family)) + std::to_string(t.rank); }

} // namespace

TEST(Letters, TotalOrderKeys) {
    int n = 3;
    Column c{-1, 0, 2, -3, 3, 1, -2};
    sort_letters(c, n);
    EXPECT_EQ(c, (Column{1, 2, 3, 0, -3, -2, -1}));
    EXPECT_TRUE(letter_less(3, 0, n));
    EXPECT_TRUE(letter_less(0, -3, n));
}

TEST(CircularOrder, MatchesRotatedList) {
    for (const LieType& t : kSmall) {
        std::vector<int> letters;
        for (int a = 1; a <= t.rank; ++a) {
            letters.push_back(a);
            if (t.family != Family::A) letters.push_back(-a);
        }
        for (int base : letters)
            for (int x : letters) EXPECT_EQ(circ_rank(t.family, t.rank, base, x), oracle::rotated_rank(t, base, x)) << name(t);
    }
}

TEST(CircularOrder, IsTotalFromEveryBase) {
    for (const LieType& t : kSmall) {
        std::vector<int> letters;
        for (int a = 1; a <= t.rank; ++a) {
            letters.push_back(a);
            if (t.family != Family::A) letters.push_back(-a);
        }
        for (int base : letters) {
            std::set<int> ranks;
            for (int x : letters) ranks.insert(circ_rank(t.family, t.rank, base, x));
            EXPECT_EQ(ranks.size(), letters.size());
            EXPECT_EQ(*ranks.begin(), 0);
            for (int x : letters)
                for (int c : letters)
                    EXPECT_EQ(circ_upto(t.family, t.rank, base, x, c),
                              x != base && (circ_between(t.family, t.rank, base, x, c) || x == c));
        }
    }
}

TEST(Elements, CountsAndValidity) {
    EXPECT_EQ(all_elements({Family::A, 4}).size(), 24u);
    EXPECT_EQ(all_elements({Family::B, 3}).size(), 48u);
    EXPECT_EQ(all_elements({Family::C, 2}).size(), 8u);
    EXPECT_EQ(all_elements({Family::D, 4}).size(), 192u);
    for (const LieType& t : kSmall)
        for (const Window& w : all_elements(t)) EXPECT_TRUE(valid_window(t, w));
    EXPECT_FALSE(valid_window({Family::A, 3}, {1, -2, 3}));
    EXPECT_FALSE(valid_window({Family::B, 3}, {1, 1, 3}));
}

TEST(Roots, PositiveRootsMatchVectors) {
    for (const LieType& t : kSmall) {
        std::vector<std::vector<int>> mine, ref = oracle::positive_root_vectors(t);
        for (const Root& r : positive_roots(t)) mine.push_back(root_vector(t, r));
        std::sort(mine.begin(), mine.end());
        std::sort(ref.begin(), ref.end());
        EXPECT_EQ(mine, ref) << name(t);
    }
}

TEST(Roots, ParseAndFormat) {
    for (const char* s : {"(2,3)", "(1,-4)", "(3,-3)"}) EXPECT_EQ(root_string(parse_root(s)), s);
    EXPECT_TRUE(parse_root("(2,-1)").same_root(parse_root("(1,-2)")));
    EXPECT_FALSE(parse_root("(2,1)") == parse_root("(1,2)"));
    EXPECT_THROW(parse_root("(0,1)"), std::invalid_argument);
    EXPECT_THROW(parse_root("2,3"), std::invalid_argument);
}

TEST(Reflections, AgreeWithVectorFormula) {
    for (const LieType& t : kSmall)
        for (const Window& w : all_elements(t))
            for (const Root& r : positive_roots(t))
                EXPECT_EQ(apply_reflection(w, r), oracle::times_reflection(w, oracle::vec_of(t, r))) << name(t);
}

TEST(Reflections, InvolutionAndParity) {
    for (const LieType& t : kSmall)
        for (const Window& w : all_elements(t))
            for (const Root& r : positive_roots(t)) {
                Window v = apply_reflection(w, r);
                EXPECT_EQ(apply_reflection(v, r), w);
                EXPECT_EQ(std::abs(length(v, t) - length(w, t)) % 2, 1);
            }
}

TEST(Reflections, OutOfRangeThrows) {
    EXPECT_THROW(apply_reflection(identity_window(3), Root::delta(2, 4)), std::out_of_range);
    EXPECT_THROW(apply_reflection(identity_window(3), Root::sigma(2, 2)), std::out_of_range);
}

TEST(Length, MatchesBfs) {
    for (const LieType& t : kSmall) {
        auto bfs = oracle::bfs_lengths(t);
        EXPECT_EQ(bfs.size(), all_elements(t).size()) << name(t);
        for (const auto& [w, d] : bfs) EXPECT_EQ(length(w, t), d) << name(t) << " " << format_window(w);
    }
}

TEST(Length, LongestElement) {
    EXPECT_EQ(length({4, 3, 2, 1}, {Family::A, 4}), 6);
    EXPECT_EQ(length({-1, -2, -3}, {Family::B, 3}), 9);
    EXPECT_EQ(length({-1, -2, -3, -4}, {Family::D, 4}), 12);
}

TEST(Rho, PairingMatchesHalfSum) {
    for (const LieType& t : kSmall)
        for (const Root& r : positive_roots(t)) {
            int want = oracle::rho_coroot(t, oracle::vec_of(t, r));
            EXPECT_EQ(rho_pairing(r, t), want) << name(t) << " " << root_string(r);
            EXPECT_GE(rho_pairing(r, t), 1);
        }
}

TEST(Rho, RootOutsideTypeThrows) {
    EXPECT_THROW(rho_pairing(Root::diag(1), {Family::D, 4}), std::invalid_argument);
    EXPECT_THROW(rho_pairing(Root::sigma(1, 2), {Family::A, 3}), std::invalid_argument);
}

TEST(Io, WindowRoundtrip) {
    Window w = parse_window("-3 1 2");
    EXPECT_EQ(w, (Window{-3, 1, 2}));
    EXPECT_EQ(format_window(w), "-3 1 2");
    EXPECT_THROW(parse_window("1 0 2"), std::invalid_argument);
    EXPECT_THROW(parse_window("1 1"), std::invalid_argument);
    EXPECT_THROW(parse_window("1 x"), std::invalid_argument);
}

TEST(Io, FillingRoundtrip) {
    auto f = parse_filling("2,3|-1,2|1");
    EXPECT_EQ(f.size(), 3u);
    EXPECT_EQ(format_filling(f), "2,3|-1,2|1");
    EXPECT_EQ(format_positions({1, 2, 3, 5}), "{1,2,3,5}");
    EXPECT_THROW(parse_column("1,2a"), std::invalid_argument);
}
