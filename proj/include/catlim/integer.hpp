#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>

namespace catlim {

/// Arbitrary-precision integer scalar used throughout the library.
///
/// Thin value wrapper around boost::multiprecision::cpp_int with a closed
/// constructor set, so that Eigen's scalar-promotion machinery sees a plain
/// non-convertible type (cpp_int's greedy templated constructors clash with
/// Eigen expression types under Boost 1.74).
class Int {
public:
    Int() = default;
    Int(int x) : v_(x) {}
    Int(long x) : v_(x) {}
    Int(long long x) : v_(x) {}
    explicit Int(const std::string& decimal) : v_(decimal) {}

    friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
    friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
    friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
    /// Truncated division, C++ semantics.
    friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
    friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
    Int operator-() const { return Int(-v_); }

    Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
    Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
    Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }
    Int& operator/=(const Int& o) { v_ /= o.v_; return *this; }
    Int& operator%=(const Int& o) { v_ %= o.v_; return *this; }

    friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }

    friend Int abs(const Int& a) { return Int(boost::multiprecision::abs(a.v_)); }
    friend Int gcd(const Int& a, const Int& b) { return Int(boost::multiprecision::gcd(a.v_, b.v_)); }
    friend void swap(Int& a, Int& b) noexcept { a.v_.swap(b.v_); }

    std::string str() const { return v_.str(); }
    /// Narrows to long long; only call on values known to fit (e.g. after a fits check).
    long long to_ll() const { return v_.convert_to<long long>(); }
    bool fits_ll() const {
        using ll = std::numeric_limits<long long>;
        return v_ >= ll::min() && v_ <= ll::max();
    }

    friend std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_; }

private:
    explicit Int(boost::multiprecision::cpp_int v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_int v_;
};

}  // namespace catlim

namespace Eigen {

template <>
struct NumTraits<catlim::Int> : GenericNumTraits<catlim::Int> {
    using Real = catlim::Int;
    using NonInteger = catlim::Int;
    using Nested = catlim::Int;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50
    };
    static inline Real epsilon() { return catlim::Int(0); }
    static inline Real dummy_precision() { return catlim::Int(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
