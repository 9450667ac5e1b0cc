#ifndef LOOPALG_SCALAR_HPP
#define LOOPALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <variant>

namespace loopalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class RingTag { Integers, Rationals, GF2 };

std::string to_string(RingTag tag);
RingTag ring_tag_from_string(const std::string& s);

struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact coefficient: an integer, a reduced rational, or a bit.
/// The ring tag is fixed per algebra; mixing tags throws RingMismatch.
class Scalar {
public:
    static Scalar zero(RingTag tag);
    static Scalar one(RingTag tag);
    /// n regarded as an element of the ring (reduced mod 2 for GF2).
    static Scalar from_int(RingTag tag, const BigInt& n);
    static Scalar integer(BigInt n) { return Scalar(std::move(n)); }
    static Scalar rational(BigRat q) { return Scalar(std::move(q)); }
    static Scalar gf2(int bit) { return Scalar(static_cast<unsigned char>(bit & 1)); }

    RingTag tag() const;
    bool is_zero() const;
    bool is_one() const;

    const BigInt& as_integer() const { return std::get<BigInt>(value_); }
    const BigRat& as_rational() const { return std::get<BigRat>(value_); }
    int as_bit() const { return std::get<unsigned char>(value_); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator-(const Scalar& o) const { return *this + (-o); }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws NonInvertible outside the unit group.
    Scalar inv() const;

    std::string str() const;

private:
    explicit Scalar(BigInt n) : value_(std::move(n)) {}
    explicit Scalar(BigRat q) : value_(std::move(q)) {}
    explicit Scalar(unsigned char b) : value_(b) {}

    std::variant<BigInt, BigRat, unsigned char> value_;
};

}  // namespace loopalg

#endif
