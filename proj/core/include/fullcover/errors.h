#ifndef FULLCOVER_ERRORS_H_
#define FULLCOVER_ERRORS_H_

#include <stdexcept>
#include <string>

namespace fullcover {

// A requested instance is larger than the configured bound.
class SizeBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed object contradicts a mathematical identity the library relies
// on (an odd cocycle entry, an s2-factor submodule missing im alpha_{2,k}).
// Never expected to fire; callers surface it loudly.
class ExpectationViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fullcover

#endif  // FULLCOVER_ERRORS_H_
