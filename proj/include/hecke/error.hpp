#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace hecke {

enum class ErrorKind { division_by_zero, pole, domain, parse };

struct Error {
  ErrorKind kind;
  std::string message;
};

/// Raised when a Result holding an Error is unwrapped, and by checked
/// operators that have no way to return an error value.
class MathError : public std::runtime_error {
 public:
  explicit MathError(Error e)
      : std::runtime_error(e.message), error_(std::move(e)) {}
  const Error& error() const noexcept { return error_; }

 private:
  Error error_;
};

/// A broken internal contract: a convention mismatch or an implementation
/// bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}
  Result(Error err) : v_(std::move(err)) {}

  bool has_value() const noexcept { return std::holds_alternative<T>(v_); }
  explicit operator bool() const noexcept { return has_value(); }

  const T& value() const& {
    if (auto* e = std::get_if<Error>(&v_)) throw MathError(*e);
    return std::get<T>(v_);
  }
  T&& value() && {
    if (auto* e = std::get_if<Error>(&v_)) throw MathError(*e);
    return std::get<T>(std::move(v_));
  }
  const Error& error() const { return std::get<Error>(v_); }

 private:
  std::variant<T, Error> v_;
};

}  // namespace hecke
