#ifndef SGCONJ_ERRORS_HPP
#define SGCONJ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sgconj {

enum class ErrorCode { DomainError, FormatError, SizeCap, Unsupported };

class SgError : public std::runtime_error {
 public:
  SgError(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  const char* code_name() const noexcept {
    switch (code_) {
      case ErrorCode::DomainError: return "domain_error";
      case ErrorCode::FormatError: return "format_error";
      case ErrorCode::SizeCap: return "size_cap";
      case ErrorCode::Unsupported: return "unsupported";
    }
    return "unknown";
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw SgError(ErrorCode::DomainError, msg);
}
[[noreturn]] inline void throw_format(const std::string& msg) {
  throw SgError(ErrorCode::FormatError, msg);
}
[[noreturn]] inline void throw_size_cap(const std::string& msg) {
  throw SgError(ErrorCode::SizeCap, msg);
}
[[noreturn]] inline void throw_unsupported(const std::string& msg) {
  throw SgError(ErrorCode::Unsupported, msg);
}

}  // namespace sgconj

#endif
