#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace roughdm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values built over different carriers were combined.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (non-reflexive relation,
/// non-equivalence, element outside a family, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed a configured size limit.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::size_t cap, std::size_t requested)
      : Error(cap_name + " cap exceeded: requested " + std::to_string(requested) +
              ", limit " + std::to_string(cap)),
        cap_name_(std::move(cap_name)),
        cap_(cap),
        requested_(requested) {}

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t cap() const noexcept { return cap_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  std::size_t cap_;
  std::size_t requested_;
};

}  // namespace roughdm
