#pragma once

#include <stdexcept>
#include <string>

namespace coronoid {

enum class Errc {
  empty_system,
  duplicate_cells,
  not_a_coronoid,
  not_a_benzenoid,
  degenerate_coronoid,
  no_hexagon_found,
  embedding_conflict,
  verification_failed,
  bad_map,
  bad_patch,
  bad_cycle,
  bad_iteration_vector,
  kekule_less,
  cap_exceeded,
  too_large,
  bad_input,
};

const char* errc_name(Errc c);

// Domain error. Carries a stable machine-readable code so callers (in
// particular the CLI) can map failures without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace coronoid
