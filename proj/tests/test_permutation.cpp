// Symmetric-group tests: the fixed composition convention, word evaluation,
// reduced words, the last-strand factorization, and the descending-run
// normal form, mostly exhaustively over S_4.

#include "hecke/permutation.hpp"

#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

using namespace hecke;

// ============================================================================
// Construction and the composition convention
// ============================================================================

TEST_CASE("identity, adjacent, transposition, one-line round-trip") {
    Permutation id = Permutation::identity(3);
    CHECK(id.is_identity());
    CHECK(id.to_string() == "[1,2,3]");

    Permutation s1 = Permutation::adjacent(3, 1);
    CHECK(s1.to_string() == "[2,1,3]");
    CHECK(s1(1) == 2);
    CHECK(s1(2) == 1);
    CHECK(s1.fixes(3));

    Permutation t13 = Permutation::transposition(3, 1, 3);
    CHECK(t13.to_string() == "[3,2,1]");
    CHECK(Permutation::transposition(4, 2, 4) ==
          Permutation::from_one_line({1, 4, 3, 2}));

    Permutation w = Permutation::from_one_line({2, 3, 1});
    CHECK(w.one_line() == std::vector<int>{2, 3, 1});
    CHECK(compose(w, w.inverse()).is_identity());
    CHECK(compose(w.inverse(), w).is_identity());
}

TEST_CASE("compose applies the left factor first") {
    // v = s_1, w = s_2 in S_3: compose(v, w)(x) = w(v(x)).
    Permutation v = Permutation::adjacent(3, 1);
    Permutation w = Permutation::adjacent(3, 2);
    Permutation vw = compose(v, w);
    // 1 -v-> 2 -w-> 3.
    CHECK(vw(1) == 3);
    CHECK(vw(2) == 1);
    CHECK(vw(3) == 2);
    // Property: word concatenation matches compose of evaluations.
    CHECK(evaluate_word(3, {1, 2}) == vw);
}

TEST_CASE("evaluate_word: Coxeter relations hold") {
    // Property: s_i s_i == 1.
    CHECK(evaluate_word(4, {2, 2}).is_identity());
    // Property: braid s_i s_{i+1} s_i == s_{i+1} s_i s_{i+1}.
    CHECK(evaluate_word(4, {1, 2, 1}) == evaluate_word(4, {2, 1, 2}));
    // Property: distant letters commute.
    CHECK(evaluate_word(4, {1, 3}) == evaluate_word(4, {3, 1}));
}

// ============================================================================
// Length and reduced words
// ============================================================================

TEST_CASE("length is the inversion count; reduced words evaluate back") {
    CHECK(length(Permutation::identity(4)) == 0);
    CHECK(length(Permutation::from_one_line({4, 3, 2, 1})) == 6);
    for (const Permutation& w : all_permutations(4)) {
        std::vector<int> word = reduced_word(w);
        // Property: |reduced_word(w)| == length(w) and it evaluates to w.
        CHECK(static_cast<int>(word.size()) == length(w));
        CHECK(evaluate_word(4, word) == w);
    }
}

TEST_CASE("all_permutations: count, order, uniqueness") {
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_permutations(n);
        int fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(static_cast<int>(perms.size()) == fact);
        CHECK(perms.front().is_identity());
        std::set<std::vector<int>> seen;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            seen.insert(perms[i].one_line());
            if (i > 0) CHECK(perms[i - 1].one_line() < perms[i].one_line());
        }
        CHECK(static_cast<int>(seen.size()) == fact);
    }
}

// ============================================================================
// Last-strand factorization
// ============================================================================

TEST_CASE("last_strand_factor: w = w' * (s_{N-1}...s_i), w' fixes N") {
    const int N = 4;
    for (const Permutation& w : all_permutations(N)) {
        auto [head, i] = last_strand_factor(w);
        CHECK(head.fixes(N));
        CHECK(i == w(N));
        std::vector<int> tail;
        for (int l = N - 1; l >= i; --l) tail.push_back(l);
        // Property: head * tail == w (letters applied left to right).
        CHECK(compose(head, evaluate_word(N, tail)) == w);
        if (w.fixes(N)) {
            CHECK(i == N);
            CHECK(head == w);
        }
    }
}

TEST_CASE("last_strand_factor at an explicit strand") {
    // w fixes 4; factor at strand 3.
    Permutation w = Permutation::from_one_line({3, 1, 2, 4});
    auto [head, i] = last_strand_factor(w, 3);
    CHECK(i == w(3));
    CHECK(head.fixes(3));
    CHECK(head.fixes(4));
    std::vector<int> tail;
    for (int l = 2; l >= i; --l) tail.push_back(l);
    CHECK(compose(head, evaluate_word(4, tail)) == w);
}

// ============================================================================
// Descending-run normal form
// ============================================================================

TEST_CASE("jones_normal_form: reduced, increasing tops, evaluates back") {
    const int N = 4;
    for (const Permutation& w : all_permutations(N)) {
        auto runs = jones_normal_form(w);
        std::vector<int> word;
        int prev_top = 0;
        for (auto [top, bottom] : runs) {
            CHECK(top >= bottom);
            CHECK(bottom >= 1);
            // Property: run tops strictly increase left to right.
            CHECK(top > prev_top);
            prev_top = top;
            for (int l = top; l >= bottom; --l) word.push_back(l);
        }
        CHECK(evaluate_word(N, word) == w);
        // Property: the concatenated word is reduced.
        CHECK(static_cast<int>(word.size()) == length(w));
    }
}
