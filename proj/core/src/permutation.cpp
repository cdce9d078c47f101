#include "hecke/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hecke {

Permutation::Permutation(int n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::adjacent(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("adjacent transposition index");
    Permutation p(n);
    std::swap(p.img_[i - 1], p.img_[i]);
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("transposition");
    Permutation p(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
    Permutation p;
    p.img_ = std::move(images);
    std::vector<bool> seen(p.img_.size(), false);
    for (int v : p.img_) {
        if (v < 1 || v > p.n() || seen[v - 1])
            throw std::invalid_argument("not a permutation");
        seen[v - 1] = true;
    }
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.img_.resize(img_.size());
    for (int i = 1; i <= n(); ++i) p.img_[img_[i - 1] - 1] = i;
    return p;
}

std::string Permutation::to_string() const {
    std::string s = "[";
    for (int i = 0; i < n(); ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i]);
    }
    return s + "]";
}

Permutation compose(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw std::invalid_argument("size mismatch in compose");
    std::vector<int> img(v.n());
    for (int x = 1; x <= v.n(); ++x) img[x - 1] = w(v(x));
    return Permutation::from_one_line(std::move(img));
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

Permutation evaluate_word(int n, const std::vector<int>& letters) {
    Permutation acc(n);
    for (int i : letters) acc = compose(acc, Permutation::adjacent(n, i));
    return acc;
}

std::pair<Permutation, int> last_strand_factor(const Permutation& w, int N) {
    for (int x = N + 1; x <= w.n(); ++x)
        if (!w.fixes(x)) throw std::invalid_argument("strand above N not fixed");
    const int i = w(N);
    if (i == N) return {w, N};
    // Undo the cycle s_{N-1} ... s_i (which sends N to i and shifts
    // [i, N-1] up by one) on the right.
    std::vector<int> tail;
    for (int j = N - 1; j >= i; --j) tail.push_back(j);
    Permutation cyc = evaluate_word(w.n(), tail);
    Permutation wp = compose(w, cyc.inverse());
    if (!wp.fixes(N)) throw std::logic_error("last_strand_factor invariant");
    return {wp, i};
}

std::pair<Permutation, int> last_strand_factor(const Permutation& w) {
    return last_strand_factor(w, w.n());
}

std::vector<std::pair<int, int>> jones_normal_form(const Permutation& w) {
    std::vector<std::pair<int, int>> runs;
    Permutation cur = w;
    for (int N = w.n(); N >= 2; --N) {
        auto [wp, i] = last_strand_factor(cur, N);
        if (i < N) runs.emplace_back(N - 1, i);
        cur = wp;  // fixes N; the loop now factors at strand N-1
    }
    std::reverse(runs.begin(), runs.end());  // increasing run-tops
    return runs;
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> word;
    for (auto [top, bottom] : jones_normal_form(w))
        for (int i = top; i >= bottom; --i) word.push_back(i);
    return word;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace hecke
