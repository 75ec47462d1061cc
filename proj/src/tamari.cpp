#include "kronmot/tamari.hpp"

#include <map>

#include "kronmot/error.hpp"
#include "kronmot/eulerchar.hpp"

namespace kronmot {

BallotPath::BallotPath(int mprime, std::string word) : mprime_(mprime), word_(std::move(word)) {
    if (mprime < 1) throw Error(ErrorKind::InvalidArgument, "ballot paths need mprime >= 1");
    long north = 0, east = 0;
    for (char c : word_) {
        if (c == 'N') ++north;
        else if (c == 'E') ++east;
        else throw Error(ErrorKind::InvalidArgument, "ballot path letters are N and E");
        if (east > mprime * north) throw Error(ErrorKind::InvalidArgument, "prefix condition violated in " + word_);
    }
    if (north < 1 || east != mprime * north) throw Error(ErrorKind::InvalidArgument, "unbalanced ballot path " + word_);
    n_ = static_cast<int>(north);
}

BigInt fuss_catalan(int mprime, int n) {
    if (mprime < 1 || n < 0) throw Error(ErrorKind::InvalidArgument, "fuss_catalan arguments");
    const long N = n, M = mprime;
    BigInt c = binomial((M + 1) * N, N);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(M * N + 1));
    return c;
}

std::vector<BallotPath> generate_paths(int mprime, int n, std::size_t cap) {
    if (mprime < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "generate_paths needs mprime >= 1 and n >= 1");
    if (fuss_catalan(mprime, n) > BigInt(std::to_string(cap)))
        throw Error(ErrorKind::ResourceLimit, "more than " + std::to_string(cap) + " ballot paths");
    std::vector<BallotPath> out;
    std::string word;
    const int len = (mprime + 1) * n;
    word.reserve(static_cast<std::size_t>(len));
    // Depth-first with N tried before E yields lexicographic order.
    auto rec = [&](auto&& self, int north, int east) -> void {
        if (north == n && east == mprime * n) {
            out.emplace_back(mprime, word);
            return;
        }
        if (north < n) {
            word.push_back('N');
            self(self, north + 1, east);
            word.pop_back();
        }
        if (east < mprime * north) {
            word.push_back('E');
            self(self, north, east + 1);
            word.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<BallotPath> covers(const BallotPath& p) {
    const std::string& w = p.word();
    const int mp = p.mprime();
    std::vector<BallotPath> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != 'E' || w[i + 1] != 'N') continue;
        // Shortest factor w[i+1..q] with mprime * #N == #E.
        long balance = 0;
        std::size_t q = i + 1;
        for (; q < w.size(); ++q) {
            balance += w[q] == 'N' ? mp : -1;
            if (balance == 0) break;
        }
        std::string next = w.substr(0, i) + w.substr(i + 1, q - i) + 'E' + w.substr(q + 1);
        out.emplace_back(mp, std::move(next));
    }
    return out;
}

TamariPoset build_poset(int mprime, int n, std::size_t cap) {
    TamariPoset poset;
    poset.elements = generate_paths(mprime, n, cap);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < poset.elements.size(); ++i) index.emplace(poset.elements[i].word(), i);
    poset.covers.resize(poset.elements.size());
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
        for (const auto& c : covers(poset.elements[i])) poset.covers[i].push_back(index.at(c.word()));
    return poset;
}

BigInt interval_count_bruteforce(const TamariPoset& poset) {
    const std::size_t n = poset.elements.size();
    std::vector<std::size_t> stamp(n, n);  // visited marker: stamp[x] == source
    std::vector<std::size_t> stack;
    BigInt total = 0;
    for (std::size_t s = 0; s < n; ++s) {
        unsigned long reached = 0;
        stack.assign(1, s);
        stamp[s] = s;
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            ++reached;
            for (std::size_t y : poset.covers[x])
                if (stamp[y] != s) {
                    stamp[y] = s;
                    stack.push_back(y);
                }
        }
        total += reached;
    }
    return total;
}

BigInt interval_count_bruteforce(int mprime, int n, std::size_t cap) {
    return interval_count_bruteforce(build_poset(mprime, n, cap));
}

BigInt interval_count_formula(int mprime, int n) {
    if (mprime < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "interval_count_formula needs mprime >= 1 and n >= 1");
    return chi_moduli_closed(mprime + 2, n);
}

} // namespace kronmot
