#pragma once

#include <stdexcept>
#include <string>

namespace ratcert {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed JSON, unsupported conductor, unknown names.
class input_error : public error {
 public:
  explicit input_error(const std::string& what) : error(what) {}
};

/// A computation needed a cyclotomic field beyond the supported bound.
class conductor_limit_error : public input_error {
 public:
  explicit conductor_limit_error(const std::string& what) : input_error(what) {}
};

/// A closure walked past its element budget without terminating.
class closure_limit_error : public error {
 public:
  closure_limit_error(const std::string& what, long partial)
      : error(what), partial_count(partial) {}
  long partial_count;
};

/// An internal invariant failed: the input defeated the engine, not the user.
class engine_bug_error : public error {
 public:
  explicit engine_bug_error(const std::string& what) : error(what) {}
};

}  // namespace ratcert
