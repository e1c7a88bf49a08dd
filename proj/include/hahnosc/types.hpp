#ifndef HAHNOSC_TYPES_HPP
#define HAHNOSC_TYPES_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace hahnosc {

// Exact half-integer arithmetic. The value is stored as twice itself, so
// labels like j = 65/2 and m = -3/2 add and compare without rounding.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(long long t) { return HalfInt(t); }
    static constexpr HalfInt whole(long long n) { return HalfInt(2 * n); }

    constexpr long long twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    // Lossless for |twice| < 2^52.
    constexpr double value() const { return static_cast<double>(twice_) / 2.0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

private:
    constexpr explicit HalfInt(long long t) : twice_(t) {}
    long long twice_ = 0;
};

// Parity of an integer-valued HalfInt such as j + m. Pre: v.is_integer().
constexpr bool is_even_integer(HalfInt v) { return (v.twice() / 2) % 2 == 0; }

// Representation label (j, alpha) of the deformed u(2) module V_j.
// Validated at construction: 2j must be odd and positive, alpha > -1.
struct RepParams {
    HalfInt j;
    double alpha;

    RepParams(HalfInt j_, double alpha_) : j(j_), alpha(alpha_) {
        if (j.is_integer() || j.twice() <= 0)
            throw std::invalid_argument("RepParams: 2j must be odd and positive, got 2j=" +
                                        std::to_string(j.twice()));
        if (!(alpha > -1.0))
            throw std::invalid_argument("RepParams: alpha must exceed -1, got " +
                                        std::to_string(alpha));
    }

    static RepParams from_two_j(long long two_j, double alpha) {
        return RepParams(HalfInt::from_twice(two_j), alpha);
    }

    // Dimension 2j+1 of V_j.
    int dim() const { return static_cast<int>(j.twice() + 1); }
};

} // namespace hahnosc

#endif
