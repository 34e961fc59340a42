#include "sgm/scalar.hpp"

#include <cctype>

#include "sgm/errors.hpp"

namespace sgm {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

BigInt parse_bigint(const std::string& s) {
    if (!is_integer_literal(s)) throw ParseError("not an integer: '" + s + "'");
    if (s[0] == '+') return BigInt(s.substr(1));
    return BigInt(s);
}

long long pow_mod(long long base, long long e, long long p) {
    long long result = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

Gf3 Gf3::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in GF(3)");
    return *this;
}

std::string Gf3::to_string() const { return std::to_string(to_int()); }

Gf3 Gf3::parse(const std::string& text) {
    if (!is_integer_literal(text)) throw ParseError("bad GF(3) entry: '" + text + "'");
    BigInt v = parse_bigint(text) % 3;
    return Gf3(static_cast<int>(v));
}

Dyadic::Dyadic(long long x) : num_(x), exp_(0) { canonicalize(); }

Dyadic::Dyadic(BigInt numerator, long long exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    canonicalize();
}

void Dyadic::canonicalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    BigInt magnitude = abs(num_);
    auto shift = boost::multiprecision::lsb(magnitude);
    if (shift > 0) {
        num_ >>= shift;  // arithmetic shift is exact because the low bits are zero
        exp_ += static_cast<long long>(shift);
    }
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long long e = std::min(a.exp_, b.exp_);
    BigInt n = (a.num_ << static_cast<unsigned>(a.exp_ - e)) +
               (b.num_ << static_cast<unsigned>(b.exp_ - e));
    return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

Dyadic operator/(const Dyadic& a, const Dyadic& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero dyadic");
    if (a.is_zero()) return Dyadic();
    if (a.num_ % b.num_ != 0) {
        throw NonDyadicDivision(a.to_string() + " / " + b.to_string() +
                                " is not a dyadic rational");
    }
    return Dyadic(a.num_ / b.num_, a.exp_ - b.exp_);
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

long long Dyadic::mod_p(long long p) const {
    BigInt r = num_ % p;
    if (r < 0) r += p;
    long long n = static_cast<long long>(r);
    long long scale = exp_ >= 0 ? pow_mod(2, exp_, p) : pow_mod((p + 1) / 2, -exp_, p);
    return n * scale % p;
}

std::string Dyadic::to_string() const {
    if (exp_ >= 0) return BigInt(num_ << static_cast<unsigned>(exp_)).str();
    return num_.str() + "/2^" + std::to_string(-exp_);
}

Dyadic Dyadic::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Dyadic(parse_bigint(text), 0);
    BigInt numerator = parse_bigint(text.substr(0, slash));
    std::string den = text.substr(slash + 1);
    if (den.rfind("2^", 0) == 0) {
        std::string power = den.substr(2);
        if (!is_integer_literal(power) || power[0] == '-') {
            throw ParseError("bad dyadic exponent in '" + text + "'");
        }
        return Dyadic(std::move(numerator), -std::stoll(power));
    }
    BigInt d = parse_bigint(den);
    if (d <= 0 || (d & (d - 1)) != 0) {
        throw ParseError("denominator is not a power of two in '" + text + "'");
    }
    long long k = static_cast<long long>(boost::multiprecision::lsb(d));
    return Dyadic(std::move(numerator), -k);
}

}  // namespace sgm
