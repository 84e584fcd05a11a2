#include <gtest/gtest.h>

#include "test_util.hpp"
#include "xyz/errors.hpp"
#include "xyz/io.hpp"

using namespace xyz;
using xyz::testing::random_matrix;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_matrix(text, "m.txt");
    } catch (const ParseError& e) {
        return e.line();
    }
    return SIZE_MAX;
}

}  // namespace

TEST(parse_matrix, plain_format_with_comments_and_spaces) {
    BitMatrix h = parse_matrix("# comment\n2 3\n\n1 1 0\n011\n");
    EXPECT_EQ(h, BitMatrix::from_rows(std::vector<std::string>{"110", "011"}));
}

TEST(parse_matrix, circulant_shorthand) {
    EXPECT_EQ(parse_matrix("circ 5: 0,1,-1"), circulant_of({0, 1, -1}, 5));
    EXPECT_EQ(parse_matrix("circ 4: 0, 1\n"), circulant_of({0, 1}, 4));
}

TEST(parse_matrix, errors_carry_line_numbers) {
    EXPECT_EQ(error_line("2 2\n10\n1x\n"), 3u);
    EXPECT_EQ(error_line("2 2\n10\n"), 2u);
    EXPECT_EQ(error_line("# c\n2 two\n10\n01\n"), 2u);
    EXPECT_EQ(error_line("1 2\n101\n"), 2u);
    EXPECT_EQ(error_line("1 2\n1\n"), 2u);
    EXPECT_EQ(error_line("1 2\n10\n11\n"), 3u);
    EXPECT_EQ(error_line("circ 3 0,1\n"), 1u);
    EXPECT_EQ(error_line(""), 0u);
    try {
        parse_matrix("2 2\n10\n1x\n", "m.txt");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(std::string(e.what()).rfind("m.txt:3:", 0), 0u);
    }
    // Parse errors are input errors.
    EXPECT_THROW(parse_matrix("x"), InputError);
}

TEST(format_matrix, round_trip) {
    std::mt19937_64 rng(60);
    for (int t = 0; t < 20; ++t) {
        BitMatrix h = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
        EXPECT_EQ(parse_matrix(format_matrix(h)), h);
    }
    EXPECT_EQ(format_matrix(BitMatrix::identity(2)), "2 2\n10\n01\n");
}

TEST(parse_cyclic, examples_and_errors) {
    CyclicSpec s = parse_cyclic("# chamon-like\n3 4 5\nP1: 0,1\nP3: 0,-1\nP2: 0, 2\n");
    EXPECT_EQ(s.n, (Shape3{3, 4, 5}));
    EXPECT_EQ(s.p[0], (std::vector<long>{0, 1}));
    EXPECT_EQ(s.p[1], (std::vector<long>{0, 2}));
    EXPECT_EQ(s.p[2], (std::vector<long>{0, -1}));
    EXPECT_THROW(parse_cyclic("3 4\nP1: 0\nP2: 0\nP3: 0\n"), ParseError);
    EXPECT_THROW(parse_cyclic("3 4 5\nP1: 0\nP1: 1\nP3: 0\n"), ParseError);
    EXPECT_THROW(parse_cyclic("3 4 5\nP1: 0\nP2: 0\n"), ParseError);
    EXPECT_THROW(parse_cyclic("3 4 5\nQ: 0\n"), ParseError);
    EXPECT_THROW(read_cyclic_file("/nonexistent/spec.txt"), ParseError);
}
