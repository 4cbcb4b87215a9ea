#include "ruzsakit/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "ruzsakit/errors.hpp"

namespace ruzsakit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw SchemaError("not a rational of the form p/q: \"" + std::string(text) + "\"");
    Rational q;
    q.get_num() = BigInt(std::string(num));
    q.get_den() = BigInt(std::string(den));
    if (q.get_den() == 0)
        throw SchemaError("zero denominator: \"" + std::string(text) + "\"");
    if (text.front() == '-') q.get_num() = -q.get_num();
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

double log_in(double x, LogBase base) {
    return base == LogBase::two ? std::log2(x) : std::log(x);
}

double log_in(const BigInt& z, LogBase base) {
    if (z <= 0) return -std::numeric_limits<double>::infinity();
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    const double l2 = std::log2(mant) + static_cast<double>(exp2);
    return base == LogBase::two ? l2 : l2 * std::numbers::ln2;
}

BigInt pow(const BigInt& a, std::uint64_t e) {
    BigInt r;
    if (e > std::numeric_limits<unsigned long>::max())
        throw std::overflow_error("exponent too large");
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational pow(const Rational& a, std::uint64_t e) {
    Rational r;
    r.get_num() = pow(a.get_num(), e);
    r.get_den() = pow(a.get_den(), e);
    r.canonicalize();
    return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::uint64_t to_u64(const BigInt& z) {
    if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64)
        throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, z.get_mpz_t());
    return out;
}

}  // namespace ruzsakit
