#pragma once

#include <charconv>
#include <string>

namespace gradv {

// Locale-independent float formatting with 17 significant digits, the
// precision used by every text writer so that identical inputs produce
// byte-identical files.
inline std::string format_double(double v) {
  char buf[40];
  auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace gradv
