#pragma once

#include <stdexcept>
#include <string>

namespace hamiltonia {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed cycle text, group files, group references or claim ids.
struct parse_error : error {
  using error::error;
};

// A configured size guard (order, element table, lattice, degree) was hit.
struct cap_error : error {
  using error::error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }
[[noreturn]] inline void fail_parse(const std::string& msg) { throw parse_error(msg); }
[[noreturn]] inline void fail_cap(const std::string& msg) { throw cap_error(msg); }

}  // namespace hamiltonia
