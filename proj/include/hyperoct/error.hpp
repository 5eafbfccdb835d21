#pragma once

#include <stdexcept>
#include <string>

namespace hyperoct {

enum class errc {
  invalid_input,
  hypothesis_rejected,
  limit_exceeded,
  internal,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline void require(bool ok, const std::string& what, errc kind = errc::invalid_input) {
  if (!ok) fail(kind, what);
}

}  // namespace hyperoct
