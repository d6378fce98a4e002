#ifndef RINGLAB_ERRORS_HPP
#define RINGLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ringlab {

// Thrown when a query is exact but the ring family cannot answer it
// (infinite ring without a closed form, or a configured bound exceeded).
// The CLI maps this to exit code 3.
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: bad descriptor values, mismatched rings, violated
// operation preconditions. CLI exit code 2.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// An element payload that is not a canonical element of the ring it was
// handed to.
class representation_error : public usage_error {
 public:
  explicit representation_error(const std::string& what) : usage_error(what) {}
};

// Source-located syntax or semantic error from the expression parser.
struct SourceSpan {
  int begin = 0;  // byte offset, inclusive
  int end = 0;    // byte offset, exclusive
};

class parse_error : public usage_error {
 public:
  parse_error(const std::string& what, SourceSpan span)
      : usage_error(what), span_(span) {}
  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

// Invariant violation inside the library itself; never expected.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ringlab

#endif  // RINGLAB_ERRORS_HPP
