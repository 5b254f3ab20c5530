#ifndef CMA_ERROR_HPP
#define CMA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cma {

/// Error with a stable machine-readable code, surfaced as JSON by the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

inline Error division_by_zero() { return Error("DivisionByZero", "division by zero"); }
inline Error field_mismatch() { return Error("FieldMismatch", "operands belong to different fields"); }

} // namespace cma

#endif
