#pragma once
// Error taxonomy shared by all modules.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbraid {

enum class Errc {
  syntax,              // malformed word or group spec text
  missing_image,       // substitution hit a generator without an image
  unsupported,         // requested family/parameters outside supported range
  level,               // conjugator level not below target level
  not_invertible,      // endomorphism is not an automorphism of the free group
  resource_limit,      // order / iteration bound exceeded
  rewrite_failure,     // word not in the kernel, cannot be rewritten
  trivial_input,       // witness requested for the identity
  exhausted,           // no witness found up to the class bound
  search_failure,      // factorization search exceeded its bound
  precondition_failed, // structural precondition (e.g. action nontrivial on H1)
  internal,            // broken invariant; always a bug
};

class Error : public std::runtime_error {
public:
  Error(Errc code, std::string msg, std::size_t pos = npos)
      : std::runtime_error(std::move(msg)), code_(code), pos_(pos) {}

  Errc code() const { return code_; }

  // Byte offset into the offending input, or npos when not applicable.
  std::size_t pos() const { return pos_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  Errc code_;
  std::size_t pos_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg,
                              std::size_t pos = Error::npos) {
  throw Error(code, msg, pos);
}

} // namespace nbraid
