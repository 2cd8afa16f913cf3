#include <doctest.h>

#include "lfmlab/tokenize.hpp"
#include "lfmlab/util.hpp"

using namespace lfmlab;

TEST_CASE("tokenize splits on whitespace and punctuation, lowercases") {
    auto toks = tokenize("You open the drawer 6. The drawer 6 is open.");
    std::vector<std::string> want = {"you",  "open", "the", "drawer", "6",  ".", "the",
                                     "drawer", "6",  "is",  "open",   "."};
    CHECK(toks == want);
}

TEST_CASE("digit runs group into one token") {
    auto toks = tokenize("loc 12, step 345");
    std::vector<std::string> want = {"loc", "12", ",", "step", "345"};
    CHECK(toks == want);
}

TEST_CASE("mixed runs split at class boundaries") {
    auto toks = tokenize("a12b");
    std::vector<std::string> want = {"a", "12", "b"};
    CHECK(toks == want);
}

TEST_CASE("non-empty strings of separators still count tokens") {
    CHECK(count_tokens("!!!") == 3);
    CHECK(count_tokens("x") == 1);
    CHECK(count_tokens("") == 0);
}

TEST_CASE("concatenation merges at most one token at the seam") {
    Rng rng(7);
    const std::string alphabet = "ab1 .-";
    for (int trial = 0; trial < 500; ++trial) {
        std::string a, b;
        for (int i = 0; i < static_cast<int>(rng.below(12)); ++i)
            a.push_back(alphabet[rng.below(alphabet.size())]);
        for (int i = 0; i < static_cast<int>(rng.below(12)); ++i)
            b.push_back(alphabet[rng.below(alphabet.size())]);
        size_t ab = count_tokens(a + b);
        CHECK(count_tokens(a) + count_tokens(b) >= ab);
    }
}
