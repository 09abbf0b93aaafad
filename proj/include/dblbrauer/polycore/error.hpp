#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dblbrauer {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text; position is a 0-based byte offset.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class field_mismatch : public error {
 public:
  field_mismatch() : error("coefficient fields do not match") {}
};

class not_divisible : public error {
 public:
  not_divisible() : error("exact division left a nonzero remainder") {}
};

class domain_error : public error {
 public:
  using error::error;
};

class unsupported : public error {
 public:
  using error::error;
};

// A randomized search (chart, basis change, sample point) ran out of attempts.
class retry_exhausted : public error {
 public:
  using error::error;
};

}  // namespace dblbrauer
