// Permutations of {1..n} in one-line notation, with the composition
// convention fixed once for the whole library: compose(v, w) applies v
// first, i.e. compose(v, w)(x) = w(v(x)). A word s_{i_1} s_{i_2} ... s_{i_r}
// evaluates by applying its letters left to right under this convention, so
// concatenation of words matches compose of their evaluations.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hecke {

class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(int n);  // identity

    static Permutation identity(int n) { return Permutation(n); }
    // Adjacent transposition s_i = (i, i+1), 1 <= i <= n-1.
    static Permutation adjacent(int n, int i);
    // Transposition (a, b).
    static Permutation transposition(int n, int a, int b);
    static Permutation from_one_line(std::vector<int> images);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int x) const { return img_[x - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return img_; }
    bool is_identity() const;
    bool fixes(int x) const { return img_[x - 1] == x; }
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    std::string to_string() const;  // e.g. "[2,1,3]"

  private:
    std::vector<int> img_;
};

// Apply v first, then w.
Permutation compose(const Permutation& v, const Permutation& w);

// Coxeter length = number of inversions.
int length(const Permutation& w);

// Evaluates a word of adjacent-transposition letters (values i meaning s_i),
// applying letters left to right.
Permutation evaluate_word(int n, const std::vector<int>& letters);

// A reduced word for w (letters applied left to right evaluate to w, and the
// word length equals the Coxeter length). Computed from the descending-run
// normal form below.
std::vector<int> reduced_word(const Permutation& w);

// Factors w in S_N as w = w' · (s_{N-1} s_{N-2} ... s_i) where w' fixes N
// and i = w(N). When w fixes N the tail is empty and i = N is returned.
// The two-argument form factors at an explicit strand N <= n (w must fix
// every strand above N).
std::pair<Permutation, int> last_strand_factor(const Permutation& w);
std::pair<Permutation, int> last_strand_factor(const Permutation& w, int N);

// Descending-run normal form: w is the concatenation, left to right, of runs
// s_top s_{top-1} ... s_bottom with strictly increasing tops. Returned as
// (top, bottom) pairs; the empty list is the identity. The concatenated word
// is reduced.
std::vector<std::pair<int, int>> jones_normal_form(const Permutation& w);

// All n! permutations of {1..n} in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace hecke
