#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hh {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

inline Color flip(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

inline char color_char(Color c) { return c == Color::Red ? 'r' : 'b'; }

inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

inline Color parse_color(const std::string& s) {
  if (s == "r" || s == "red") return Color::Red;
  if (s == "b" || s == "blue") return Color::Blue;
  throw std::invalid_argument("unknown color: " + s);
}

}  // namespace hh
