#ifndef PS_ERRORS_HPP
#define PS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ps {

// An argument violated an operation's contract (bad index, mismatched
// degrees, ill-formed family, ...).
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed. Carries the 1-based line number; 0 means
// the stream as a whole is at fault (unreadable, missing header).
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// An enumeration or expansion hit its configured cap instead of hanging.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ps

#endif  // PS_ERRORS_HPP
