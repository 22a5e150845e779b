#include "doctest.h"

#include <numeric>

#include "sre/errors.hpp"
#include "sre/lang.hpp"
#include "sre/parse.hpp"
#include "sre/sample.hpp"
#include "sre/series.hpp"

#include "helpers.hpp"

using namespace sre;
using test::words_of;

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

// All words over [0, k) of length <= max_len, shortest first.
std::vector<Word> all_words(int k, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t level_start = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_start; i < level_end; ++i) {
            for (int s = 0; s < k; ++s) {
                Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        }
        level_start = level_end;
    }
    return out;
}

// Language-level shuffle with truncation, for checking the quotient rule.
std::set<Word> shuffle_langs(const std::set<Word>& a, const std::set<Word>& b, int limit) {
    std::set<Word> out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            if (static_cast<int>(x.size() + y.size()) > limit) continue;
            auto blended = shuffle_words(x, y);
            out.insert(blended.begin(), blended.end());
        }
    }
    return out;
}

} // namespace

TEST_CASE("shuffle_words matches the recursive definition") {
    Alphabet abcd = Alphabet::prefix(4);
    auto word = [&](std::string_view text) { return parse_word(abcd, text); };

    CHECK(shuffle_words(word("ab"), word("")) == std::set<Word>{word("ab")});
    CHECK(shuffle_words(word(""), word("ab")) == std::set<Word>{word("ab")});
    CHECK(shuffle_words(word("a"), word("b")) == std::set<Word>{word("ab"), word("ba")});
    CHECK(shuffle_words(word("ab"), word("cd")) ==
          std::set<Word>{word("abcd"), word("acbd"), word("acdb"), word("cabd"), word("cadb"),
                         word("cdab")});
}

TEST_CASE("shuffle_words cardinality is bounded by the binomial coefficient") {
    // exhaustive over two letters, equality on disjoint halves of a..d
    auto xs = all_words(2, 5);
    for (const auto& x : xs) {
        for (const auto& y : xs) {
            auto blended = shuffle_words(x, y);
            auto bound = binomial(static_cast<int>(x.size() + y.size()),
                                  static_cast<int>(x.size()));
            REQUIRE(blended.size() <= bound);
            for (const auto& w : blended) REQUIRE(w.size() == x.size() + y.size());

            Word shifted = y;
            for (int& s : shifted) s += 2; // disjoint letters c, d
            REQUIRE(shuffle_words(x, shifted).size() == bound);
        }
    }
}

TEST_CASE("shuffle_words is commutative and associative") {
    auto rng = substream(17, 0);
    std::uniform_int_distribution<int> len(0, 4), sym(0, 2);
    for (int it = 0; it < 200; ++it) {
        auto draw = [&] {
            Word w(static_cast<std::size_t>(len(rng)));
            for (int& s : w) s = sym(rng);
            return w;
        };
        Word x = draw(), y = draw(), z = draw();
        CHECK(shuffle_words(x, y) == shuffle_words(y, x));

        std::set<Word> left, right;
        for (const auto& w : shuffle_words(x, y)) {
            auto more = shuffle_words(w, z);
            left.insert(more.begin(), more.end());
        }
        for (const auto& w : shuffle_words(y, z)) {
            auto more = shuffle_words(x, w);
            right.insert(more.begin(), more.end());
        }
        CHECK(left == right);
    }
}

TEST_CASE("bounded_language computes truncated semantics") {
    ExprPool pool(Alphabet({"a1", "a2", "a3"}));
    Expr perm3 = parse(pool, "a1 # a2 # a3");
    BoundedLang lang = bounded_language(perm3, 3);
    CHECK(lang.words.size() == 6);
    CHECK(words_of(lang.words, pool.alphabet()) ==
          std::vector<std::string>{"a1a2a3", "a1a3a2", "a2a1a3", "a2a3a1", "a3a1a2", "a3a2a1"});

    ExprPool p1(Alphabet::prefix(1));
    CHECK(bounded_language(p1.eps(), 5).words == std::set<Word>{Word{}});
    CHECK(words_of(bounded_language(parse(p1, "a*"), 3).words, p1.alphabet()) ==
          std::vector<std::string>{"@", "a", "aa", "aaa"});
    CHECK(bounded_language(p1.empty(), 4).words.empty());

    SUBCASE("the length cap is enforced") {
        CHECK_THROWS_AS(bounded_language(parse(p1, "a*"), 13), BudgetError);
    }
}

TEST_CASE("left_quotient applies the definition") {
    Alphabet ab = Alphabet::prefix(2);
    auto word = [&](std::string_view text) { return parse_word(ab, text); };

    BoundedLang lang{2, {word("ab"), word("ba"), word("b")}};
    BoundedLang quotient = left_quotient(lang, 0);
    CHECK(quotient.limit == 1);
    CHECK(quotient.words == std::set<Word>{word("b")});

    BoundedLang just_eps{1, {Word{}}};
    CHECK(left_quotient(just_eps, 0).words.empty());
    CHECK_THROWS_AS(left_quotient(BoundedLang{0, {Word{}}}, 0), std::invalid_argument);
}

TEST_CASE("left quotient distributes over language shuffle") {
    auto rng = substream(99, 1);
    std::uniform_int_distribution<int> len(0, 3), sym(0, 1), count(1, 4);
    const int limit = 6;
    for (int it = 0; it < 100; ++it) {
        auto draw_lang = [&] {
            std::set<Word> words;
            int c = count(rng);
            for (int i = 0; i < c; ++i) {
                Word w(static_cast<std::size_t>(len(rng)));
                for (int& s : w) s = sym(rng);
                words.insert(std::move(w));
            }
            return words;
        };
        std::set<Word> l1 = draw_lang(), l2 = draw_lang();

        BoundedLang blended{limit, shuffle_langs(l1, l2, limit)};
        for (int a = 0; a < 2; ++a) {
            std::set<Word> lhs = left_quotient(blended, a).words;

            std::set<Word> q1 = left_quotient(BoundedLang{limit, l1}, a).words;
            std::set<Word> q2 = left_quotient(BoundedLang{limit, l2}, a).words;
            std::set<Word> rhs = shuffle_langs(q1, l2, limit - 1);
            auto other = shuffle_langs(l1, q2, limit - 1);
            rhs.insert(other.begin(), other.end());
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("member_bruteforce") {
    ExprPool pool(Alphabet::prefix(2));
    auto word = [&](std::string_view text) { return parse_word(pool.alphabet(), text); };

    CHECK(member_bruteforce(parse(pool, "a # b"), word("ba")));
    CHECK_FALSE(member_bruteforce(parse(pool, "a . b"), word("ba")));
    CHECK(member_bruteforce(parse(pool, "(a # b)*"), word("abba")));
    CHECK_FALSE(member_bruteforce(parse(pool, "(a # b)*"), word("aab")));
    CHECK(member_bruteforce(parse(pool, "@"), Word{}));
    CHECK_THROWS_AS(member_bruteforce(parse(pool, "a*"), Word(13, 0)), BudgetError);
}

TEST_CASE("a nullable shuffle operand only enlarges the language") {
    ExprPool pool(Alphabet::prefix(2));
    CoeffTable table = coefficients(2, 8);
    int checked = 0;
    for (int it = 0; checked < 60; ++it) {
        auto rng = substream(4242, static_cast<std::uint64_t>(it));
        std::uniform_int_distribution<int> size(1, 8);
        Expr alpha = sample_uniform(pool, table, size(rng), rng);
        Expr beta = sample_uniform(pool, table, size(rng), rng);
        if (!beta.nullable()) continue;
        ++checked;
        BoundedLang small = bounded_language(alpha, 6);
        BoundedLang big = bounded_language(pool.make_shuffle(alpha, beta), 6);
        for (const auto& w : small.words) REQUIRE(big.words.count(w) == 1);
    }
}
