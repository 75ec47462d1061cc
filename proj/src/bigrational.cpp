#include "kronmot/bigrational.hpp"

#include <cctype>
#include <string>

namespace kronmot {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

BigRational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    BigRational r;
    r.get_num() = BigInt(std::string(num), 10);
    r.get_den() = BigInt(std::string(den), 10);
    if (r.get_den() == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-') r.get_num() = -r.get_num();
    r.canonicalize();
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace kronmot
