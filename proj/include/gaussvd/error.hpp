#ifndef GAUSSVD_ERROR_HPP
#define GAUSSVD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gaussvd {

enum class Errc {
  invalid_argument,
  precondition,
  parse,
  boundary_ambiguity,
  degenerate,
  hypothesis,
  infeasible,
  theorem_satisfied,
  internal,
};

const char* errc_name(Errc code);

// Single exception type for the library; the code drives CLI exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace gaussvd

#endif  // GAUSSVD_ERROR_HPP
