#ifndef FTFA_ERRORS_HPP_
#define FTFA_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace ftfa {

// Domain error with a stable machine-readable code (surfaced by the CLI as
// {"code": ...} with exit status 2).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Always-on invariant check for conditions the algorithms guarantee; a
// failure here is a bug, reported as a catchable error instead of UB.
#define FTFA_CHECK(cond, msg)                                      \
  do {                                                             \
    if (!(cond)) throw ::ftfa::Error("INTERNAL_INVARIANT", (msg)); \
  } while (0)

namespace errc {
inline constexpr const char* index_out_of_range = "INDEX_OUT_OF_RANGE";
inline constexpr const char* arity_mismatch = "ARITY_MISMATCH";
inline constexpr const char* ambient_mismatch = "AMBIENT_MISMATCH";
inline constexpr const char* k_mismatch = "K_MISMATCH";
inline constexpr const char* bad_index = "BAD_INDEX";
inline constexpr const char* empty_vertex = "EMPTY_VERTEX";
inline constexpr const char* k_too_large = "K_TOO_LARGE";
inline constexpr const char* not_strongly_complementary = "NOT_STRONGLY_COMPLEMENTARY";
inline constexpr const char* index_cap_exceeded = "INDEX_CAP_EXCEEDED";
inline constexpr const char* not_finitely_generated = "NOT_FINITELY_GENERATED";
inline constexpr const char* bounds_too_large = "BOUNDS_TOO_LARGE";
inline constexpr const char* not_howson = "NOT_HOWSON";
inline constexpr const char* bad_input = "BAD_INPUT";
}  // namespace errc

}  // namespace ftfa

#endif
