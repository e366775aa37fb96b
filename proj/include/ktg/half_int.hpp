#pragma once

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

namespace ktg {

// Half-integer stored as its double. Colors are non-negative half-integers;
// states of a color a run over -a, -a+1, ..., a in the same parity class.
class HalfInt {
public:
    constexpr HalfInt() : doubled_(0) {}
    static constexpr HalfInt from_doubled(int d) { HalfInt h; h.doubled_ = d; return h; }
    static constexpr HalfInt whole(int n) { return from_doubled(2 * n); }

    constexpr int doubled() const { return doubled_; }
    constexpr bool is_whole() const { return doubled_ % 2 == 0; }
    constexpr bool is_negative() const { return doubled_ < 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ + b.doubled_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.doubled_ - b.doubled_); }
    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string str() const {
        if (doubled_ % 2 == 0) return std::to_string(doubled_ / 2);
        return std::to_string(doubled_) + "/2";
    }

private:
    int doubled_;
};

// Triangle inequalities plus integrality of a+b+c.
inline bool admissible(HalfInt a, HalfInt b, HalfInt c) {
    const int da = a.doubled(), db = b.doubled(), dc = c.doubled();
    if (da < 0 || db < 0 || dc < 0) return false;
    if ((da + db + dc) % 2 != 0) return false;
    return da + db >= dc && db + dc >= da && dc + da >= db;
}

// True when u is a weight-basis index of the color-a module.
inline bool valid_state(HalfInt a, HalfInt u) {
    return std::abs(u.doubled()) <= a.doubled() && (a.doubled() - u.doubled()) % 2 == 0;
}

inline std::vector<HalfInt> states_of(HalfInt a) {
    std::vector<HalfInt> out;
    out.reserve(a.doubled() + 1);
    for (int d = -a.doubled(); d <= a.doubled(); d += 2) out.push_back(HalfInt::from_doubled(d));
    return out;
}

}  // namespace ktg
