#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "kronmot/bigrational.hpp"

namespace kronmot {

/// Word over {N, E} with n letters N and mprime*n letters E such that every
/// prefix has #E <= mprime * #N.
class BallotPath {
public:
    BallotPath(int mprime, std::string word);

    int mprime() const noexcept { return mprime_; }
    int n() const noexcept { return n_; }
    const std::string& word() const noexcept { return word_; }

    friend bool operator==(const BallotPath&, const BallotPath&) = default;
    /// By mprime, then lexicographic with N < E (the reverse of ASCII order).
    friend std::strong_ordering operator<=>(const BallotPath& a, const BallotPath& b) {
        if (auto c = a.mprime_ <=> b.mprime_; c != 0) return c;
        return std::lexicographical_compare_three_way(a.word_.begin(), a.word_.end(), b.word_.begin(), b.word_.end(),
                                                      [](char x, char y) { return rank(x) <=> rank(y); });
    }

private:
    static int rank(char c) noexcept { return c == 'N' ? 0 : 1; }

    int mprime_;
    int n_ = 0;
    std::string word_;
};

inline constexpr std::size_t default_path_cap = 10000;

/// C((mprime+1) n, n) / (mprime n + 1).
BigInt fuss_catalan(int mprime, int n);

/// All mprime-ballot paths of size n in lexicographic order (N < E).
/// Throws ResourceLimit when their number exceeds cap.
std::vector<BallotPath> generate_paths(int mprime, int n, std::size_t cap = default_path_cap);

/// Rotations at each valley EN: the E moves past the shortest balanced factor
/// starting at the N. Every result is lexicographically smaller than p.
std::vector<BallotPath> covers(const BallotPath& p);

/// Covering digraph on generate_paths(mprime, n).
struct TamariPoset {
    std::vector<BallotPath> elements;
    std::vector<std::vector<std::size_t>> covers;  // element -> elements covering it
};

TamariPoset build_poset(int mprime, int n, std::size_t cap = default_path_cap);

/// Number of pairs p <= q, by reachability over the covering digraph.
BigInt interval_count_bruteforce(const TamariPoset& poset);
BigInt interval_count_bruteforce(int mprime, int n, std::size_t cap = default_path_cap);

/// (m-1)/(n((m-2)n+1)) C((m-1)^2 n + m-2, n-1) with m = mprime + 2.
BigInt interval_count_formula(int mprime, int n);

} // namespace kronmot
