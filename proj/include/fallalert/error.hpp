#pragma once

#include <stdexcept>
#include <string>

namespace fallalert {

enum class Errc {
  schema,            // missing/unknown column or file header problem
  parse,             // a cell or token failed to parse
  validation,        // a value violates a declared invariant
  empty_dataset,     // no data rows at all
  degenerate_input,  // input has no usable structure (e.g. all values equal)
  precondition,      // caller violated an operation precondition
  frame,             // wire message framing is broken
  version,           // wire/file format version not recognized
  io,                // filesystem failure
  net,               // socket failure
  config             // bad run configuration
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::schema: return "schema";
    case Errc::parse: return "parse";
    case Errc::validation: return "validation";
    case Errc::empty_dataset: return "empty_dataset";
    case Errc::degenerate_input: return "degenerate_input";
    case Errc::precondition: return "precondition";
    case Errc::frame: return "frame";
    case Errc::version: return "version";
    case Errc::io: return "io";
    case Errc::net: return "net";
    case Errc::config: return "config";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace fallalert
