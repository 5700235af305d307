#pragma once

#include <optional>

namespace sbg {

enum class Sign : int { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
    return static_cast<int>(a) * static_cast<int>(b) > 0 ? Sign::plus : Sign::minus;
}

constexpr Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

constexpr std::optional<Sign> sign_from_char(char c) {
    if (c == '+') return Sign::plus;
    if (c == '-') return Sign::minus;
    return std::nullopt;
}

} // namespace sbg
