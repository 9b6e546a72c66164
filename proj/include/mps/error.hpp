#ifndef MPS_ERROR_HPP
#define MPS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mps {

// Base for all library errors. The `code` is a stable machine-readable tag;
// `what()` carries the human-readable detail.
class Error : public std::runtime_error {
  std::string code_;

 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }
};

inline Error division_by_zero(const std::string& m = "division by zero") {
  return Error("DivisionByZero", m);
}
inline Error field_mismatch(const std::string& m) { return Error("FieldMismatch", m); }
inline Error ring_mismatch(const std::string& m) { return Error("RingMismatch", m); }
inline Error length_mismatch(const std::string& m) { return Error("LengthMismatch", m); }
inline Error syntax_error(size_t pos, const std::string& m) {
  return Error("SyntaxError", "at position " + std::to_string(pos) + ": " + m);
}
inline Error unknown_variable(size_t pos, const std::string& name) {
  return Error("UnknownVariable", "'" + name + "' at position " + std::to_string(pos));
}

}  // namespace mps

#endif
