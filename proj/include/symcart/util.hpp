// Error type and a few small helpers shared by all headers.

#ifndef SYMCART_UTIL_HPP_
#define SYMCART_UTIL_HPP_

#include <sstream>
#include <stdexcept>
#include <string>

namespace symcart {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
    : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

template<typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

template<typename... Args>
[[noreturn]] void fail(const Args&... args) {
  throw Error(cat(args...));
}

} // namespace symcart

#endif
