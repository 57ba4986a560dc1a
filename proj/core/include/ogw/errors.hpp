#ifndef OGW_ERRORS_HPP
#define OGW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ogw {

// Bad input: a precondition or type invariant failed on user-supplied data.
class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A property the theory guarantees failed to hold. Reaching this means a bug
// in the library or a genuine counterexample; the CLI maps it to exit code 2.
class internal_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw validation_error(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
  if (!cond) throw internal_error("internal invariant violated: " + msg);
}

}  // namespace ogw

#endif
