#pragma once

#include <stdexcept>
#include <string>

namespace oneplanar {

/// Machine-readable failure codes shared across the library.
enum class Errc {
  MalformedRotation,
  EdgeAbsent,
  BadParameter,
  NotQuadrangulation,
  NotThreeConnected,
  CrossingEdgeChosen,
  FaceNotIncident,
  DecompositionFailure,
  NonIntegerSum,
  ParseError,
  LayoutDegenerate,
  InvalidDrawing,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedRotation: return "MalformedRotation";
    case Errc::EdgeAbsent: return "EdgeAbsent";
    case Errc::BadParameter: return "BadParameter";
    case Errc::NotQuadrangulation: return "NotQuadrangulation";
    case Errc::NotThreeConnected: return "NotThreeConnected";
    case Errc::CrossingEdgeChosen: return "CrossingEdgeChosen";
    case Errc::FaceNotIncident: return "FaceNotIncident";
    case Errc::DecompositionFailure: return "DecompositionFailure";
    case Errc::NonIntegerSum: return "NonIntegerSum";
    case Errc::ParseError: return "ParseError";
    case Errc::LayoutDegenerate: return "LayoutDegenerate";
    case Errc::InvalidDrawing: return "InvalidDrawing";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace oneplanar
