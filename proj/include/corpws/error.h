#ifndef CORPWS_ERROR_H_
#define CORPWS_ERROR_H_

#include <stdexcept>
#include <string>

namespace corpws {

// Base of every error the library throws. `kind()` is a stable name used by
// the CLI and the HTTP service when reporting failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define CORPWS_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& message) : Error(message) {}        \
    const char* kind() const noexcept override { return #Name; }         \
  }

CORPWS_DEFINE_ERROR(ParseError);
CORPWS_DEFINE_ERROR(UnknownTag);
CORPWS_DEFINE_ERROR(MetadataError);
CORPWS_DEFINE_ERROR(NoMaterial);
CORPWS_DEFINE_ERROR(AlignmentError);
CORPWS_DEFINE_ERROR(InvalidArgument);
CORPWS_DEFINE_ERROR(IoError);

#undef CORPWS_DEFINE_ERROR

}  // namespace corpws

#endif  // CORPWS_ERROR_H_
