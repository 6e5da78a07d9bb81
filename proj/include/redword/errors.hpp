#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace redword {

  // Base class of every error thrown by this library. The code is a short
  // stable identifier that the JSON service forwards verbatim.
  class error : public std::runtime_error {
   public:
    error(std::string code, std::string const& message)
        : std::runtime_error(message), _code(std::move(code)) {}

    std::string const& code() const noexcept {
      return _code;
    }

   private:
    std::string _code;
  };

  // Precondition violated (bad index, wrong kind of permutation, ...).
  class domain_error : public error {
   public:
    explicit domain_error(std::string const& message)
        : error("domain_error", message) {}
    domain_error(std::string code, std::string const& message)
        : error(std::move(code), message) {}
  };

  // A reduced word was required.
  class not_reduced_error : public domain_error {
   public:
    explicit not_reduced_error(std::string const& message)
        : domain_error("not_reduced", message) {}
  };

  class not_found_error : public error {
   public:
    explicit not_found_error(std::string const& message)
        : error("not_found", message) {}
  };

  // Malformed text input; `column` is the 1-based character offset of the
  // offending token.
  class parse_error : public error {
   public:
    parse_error(std::string const& message, std::size_t column)
        : error("parse_error", message), _column(column) {}

    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _column;
  };

  // An algorithmic invariant failed. Never expected; reported loudly.
  class internal_error : public error {
   public:
    explicit internal_error(std::string const& message)
        : error("internal_error", message) {}
  };

}  // namespace redword
