#pragma once

#include <stdexcept>
#include <string>

namespace gradedreg {

enum class errc {
  invalid_field,
  parse_error,
  non_homogeneous_input,
  degree_cap_exceeded,
  invalid_graph,
  window_exceeded,
  bad_piece_index,
  mixed_degrees,
  unsound_window,
  not_standard_graded,
  order_mismatch,
  not_well_defined,
  char_zero,
  not_artinian,
  unknown_suite,
  invalid_input,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_field: return "InvalidField";
    case errc::parse_error: return "ParseError";
    case errc::non_homogeneous_input: return "NonHomogeneousInput";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case errc::invalid_graph: return "InvalidGraph";
    case errc::window_exceeded: return "WindowExceeded";
    case errc::bad_piece_index: return "BadPieceIndex";
    case errc::mixed_degrees: return "MixedDegrees";
    case errc::unsound_window: return "UnsoundWindow";
    case errc::not_standard_graded: return "NotStandardGraded";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::not_well_defined: return "NotWellDefined";
    case errc::char_zero: return "CharZero";
    case errc::not_artinian: return "NotArtinian";
    case errc::unknown_suite: return "UnknownSuite";
    case errc::invalid_input: return "InvalidInput";
  }
  return "Unknown";
}

/// Window-type failures (exit status 3 in the CLI); everything else is an input error.
inline bool is_window_error(errc code) {
  return code == errc::window_exceeded || code == errc::unsound_window ||
         code == errc::degree_cap_exceeded;
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what) {}

  errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

}  // namespace gradedreg
