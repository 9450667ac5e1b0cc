#include "loopalg/scalar.hpp"

namespace loopalg {

std::string to_string(RingTag tag) {
    switch (tag) {
        case RingTag::Integers: return "Z";
        case RingTag::Rationals: return "Q";
        case RingTag::GF2: return "F2";
    }
    return "?";
}

RingTag ring_tag_from_string(const std::string& s) {
    if (s == "Z") return RingTag::Integers;
    if (s == "Q") return RingTag::Rationals;
    if (s == "F2") return RingTag::GF2;
    throw std::invalid_argument("unknown ring tag: " + s);
}

Scalar Scalar::zero(RingTag tag) { return from_int(tag, 0); }
Scalar Scalar::one(RingTag tag) { return from_int(tag, 1); }

Scalar Scalar::from_int(RingTag tag, const BigInt& n) {
    switch (tag) {
        case RingTag::Integers: return Scalar(n);
        case RingTag::Rationals: return Scalar(BigRat(n));
        case RingTag::GF2: return Scalar(static_cast<unsigned char>(n % 2 != 0 ? 1 : 0));
    }
    throw std::invalid_argument("bad ring tag");
}

RingTag Scalar::tag() const {
    switch (value_.index()) {
        case 0: return RingTag::Integers;
        case 1: return RingTag::Rationals;
        default: return RingTag::GF2;
    }
}

bool Scalar::is_zero() const {
    switch (value_.index()) {
        case 0: return as_integer() == 0;
        case 1: return as_rational() == 0;
        default: return as_bit() == 0;
    }
}

bool Scalar::is_one() const {
    switch (value_.index()) {
        case 0: return as_integer() == 1;
        case 1: return as_rational() == 1;
        default: return as_bit() == 1;
    }
}

namespace {
void require_same_tag(const Scalar& a, const Scalar& b) {
    if (a.tag() != b.tag())
        throw RingMismatch("scalar ring mismatch: " + to_string(a.tag()) + " vs " + to_string(b.tag()));
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_tag(*this, o);
    switch (value_.index()) {
        case 0: return Scalar(BigInt(as_integer() + o.as_integer()));
        case 1: return Scalar(BigRat(as_rational() + o.as_rational()));
        default: return Scalar(static_cast<unsigned char>(as_bit() ^ o.as_bit()));
    }
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_tag(*this, o);
    switch (value_.index()) {
        case 0: return Scalar(BigInt(as_integer() * o.as_integer()));
        case 1: return Scalar(BigRat(as_rational() * o.as_rational()));
        default: return Scalar(static_cast<unsigned char>(as_bit() & o.as_bit()));
    }
}

Scalar Scalar::operator-() const {
    switch (value_.index()) {
        case 0: return Scalar(BigInt(-as_integer()));
        case 1: return Scalar(BigRat(-as_rational()));
        default: return *this;
    }
}

bool Scalar::operator==(const Scalar& o) const {
    if (tag() != o.tag()) return false;
    return value_ == o.value_;
}

Scalar Scalar::inv() const {
    switch (value_.index()) {
        case 0:
            if (as_integer() == 1 || as_integer() == -1) return *this;
            throw NonInvertible(str() + " is not invertible in Z");
        case 1:
            if (as_rational() == 0) throw NonInvertible("0 is not invertible in Q");
            return Scalar(BigRat(1 / as_rational()));
        default:
            if (as_bit() == 0) throw NonInvertible("0 is not invertible in F2");
            return *this;
    }
}

std::string Scalar::str() const {
    switch (value_.index()) {
        case 0: return as_integer().str();
        case 1: {
            const BigRat& q = as_rational();
            if (denominator(q) == 1) return numerator(q).str();
            return numerator(q).str() + "/" + denominator(q).str();
        }
        default: return as_bit() ? "1" : "0";
    }
}

}  // namespace loopalg
