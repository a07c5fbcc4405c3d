#include "icp/scalar.hpp"

#include <charconv>
#include <ostream>

namespace icp {

namespace {

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::uint64_t parse_u64(std::string_view s, std::string_view context)
{
    s = trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ScalarParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p)
{
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

} // namespace

Field Field::prime(std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
        throw std::invalid_argument("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
    return Field{p};
}

Field Field::parse(std::string_view text)
{
    text = trim(text);
    if (text == "Q") return rationals();
    if (text.starts_with("GF:")) return prime(parse_u64(text.substr(3), text));
    if (text.starts_with("GF(") && text.ends_with(")"))
        return prime(parse_u64(text.substr(3, text.size() - 4), text));
    throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected Q, GF(p) or GF:p)");
}

std::string Field::name() const
{
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field field, long value) : field_(field)
{
    if (field_.is_rational()) {
        q_ = value;
    } else {
        r_ = reduce(mpz_class(value), field_.characteristic());
    }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field)
{
    if (field_.is_rational()) {
        q_ = value;
        q_.canonicalize();
        return;
    }
    const std::uint64_t p = field_.characteristic();
    std::uint64_t den = reduce(value.get_den(), p);
    if (den == 0)
        throw ScalarParseError("denominator of " + value.get_str() + " vanishes in " + field_.name());
    r_ = mulmod(reduce(value.get_num(), p), powmod(den, p - 2, p), p);
}

Scalar Scalar::parse(std::string_view text, Field field)
{
    const std::string_view s = trim(text);
    if (auto pos = s.find("mod"); pos != std::string_view::npos) {
        std::uint64_t p = parse_u64(s.substr(pos + 3), s);
        if (field.is_rational() || field.characteristic() != p)
            throw FieldMismatch("scalar '" + std::string(s) + "' does not belong to " + field.name());
        std::uint64_t r = parse_u64(s.substr(0, pos), s);
        if (r >= p) throw ScalarParseError("residue out of range in '" + std::string(s) + "'");
        Scalar out = zero(field);
        out.r_ = r;
        return out;
    }
    if (s.empty()) throw ScalarParseError("empty scalar");
    for (char c : s)
        if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9')))
            throw ScalarParseError("bad scalar '" + std::string(s) + "'");
    mpq_class q;
    std::string str(s);
    if (str.front() == '+') str.erase(0, 1);
    if (q.set_str(str, 10) != 0 || q.get_den() == 0)
        throw ScalarParseError("bad scalar '" + std::string(s) + "'");
    q.canonicalize();
    return Scalar(field, q);
}

bool Scalar::is_zero() const
{
    return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const
{
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

std::string Scalar::to_string() const
{
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    Scalar out = *this;
    if (field_.is_rational()) {
        out.q_ = 1 / q_;
    } else {
        const std::uint64_t p = field_.characteristic();
        out.r_ = powmod(r_, p - 2, p);
    }
    return out;
}

void Scalar::require_same_field(const Scalar& other) const
{
    if (!(field_ == other.field_))
        throw FieldMismatch("cannot combine " + field_.name() + " and " + other.field_.name() + " scalars");
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        q_ += rhs.q_;
    } else {
        r_ += rhs.r_;
        if (r_ >= field_.characteristic()) r_ -= field_.characteristic();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        q_ -= rhs.q_;
    } else {
        r_ = r_ >= rhs.r_ ? r_ - rhs.r_ : r_ + field_.characteristic() - rhs.r_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    require_same_field(rhs);
    if (field_.is_rational()) {
        q_ *= rhs.q_;
    } else {
        r_ = mulmod(r_, rhs.r_, field_.characteristic());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b)
{
    require_same_field(a);
    require_same_field(b);
    if (field_.is_rational()) {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
        q_ += tmp;
    } else {
        r_ = (r_ + mulmod(a.r_, b.r_, field_.characteristic())) % field_.characteristic();
    }
}

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    if (field_.is_rational()) {
        out.q_ = -q_;
    } else if (r_ != 0) {
        out.r_ = field_.characteristic() - r_;
    }
    return out;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.require_same_field(b);
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

} // namespace icp
