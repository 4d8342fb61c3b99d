#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace degencount {

/// Exact signed integer used for every count in the library.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt & v) { return v.str(); }

/// Thrown by the 64-bit fast paths when an intermediate value no longer fits.
struct CountOverflow : std::overflow_error {
    CountOverflow() : std::overflow_error("64-bit count overflow") {}
};

/// Unsigned 64-bit count with checked arithmetic. Counting kernels are
/// templated on the count type; they run with this first and rerun with
/// BigInt when it throws.
struct CheckedU64 {
    std::uint64_t v = 0;

    CheckedU64() = default;
    CheckedU64(std::uint64_t x) : v(x) {}

    CheckedU64 & operator+=(CheckedU64 o)
    {
        if (__builtin_add_overflow(v, o.v, &v))
            throw CountOverflow{};
        return *this;
    }
    CheckedU64 & operator*=(CheckedU64 o)
    {
        if (__builtin_mul_overflow(v, o.v, &v))
            throw CountOverflow{};
        return *this;
    }
    friend CheckedU64 operator+(CheckedU64 a, CheckedU64 b) { return a += b; }
    friend CheckedU64 operator*(CheckedU64 a, CheckedU64 b) { return a *= b; }
    friend bool operator==(CheckedU64 a, CheckedU64 b) { return a.v == b.v; }

    bool is_zero() const { return v == 0; }
    BigInt to_big() const { return BigInt(v); }
};

inline bool is_zero(const BigInt & v) { return v.is_zero(); }
inline bool is_zero(CheckedU64 v) { return v.is_zero(); }
inline BigInt to_big(const BigInt & v) { return v; }
inline BigInt to_big(CheckedU64 v) { return v.to_big(); }

/// Runs `fn.template operator()<CheckedU64>()` and, if it overflows, reruns
/// it with BigInt. Both instantiations must return something convertible by
/// to_big().
template <typename Fn>
BigInt with_count_promotion(Fn && fn)
{
    try {
        return to_big(fn.template operator()<CheckedU64>());
    }
    catch (const CountOverflow &) {
        return fn.template operator()<BigInt>();
    }
}

} // namespace degencount
