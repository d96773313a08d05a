#ifndef RIGDIST_ERRORS_HPP
#define RIGDIST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigdist {

// Failure kinds surfaced by the library. Law violations are not errors;
// they are reported as data (see lawcheck.hpp).
enum class Errc {
  parse,                // malformed text/JSON, unknown rig name, bad version
  rig_mismatch,         // operands built over different rigs
  carrier_mismatch,     // value not contained in the declared carrier
  untagged_element,     // biproduct split on a key that is not L/R tagged
  unpaired_element,     // marginal/moment on a key that is not a pair
  key_not_coefficient,  // key expected to be a coefficient-valued atom
  map_incomplete,       // a table lacks an entry for a required key
  not_invertible,       // no multiplicative inverse in this rig
  not_probability,      // operation requires total = one
  cap_exceeded,         // enumeration would exceed the configured cap
  overflow,             // checked 64-bit arithmetic overflowed
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rigdist

#endif
