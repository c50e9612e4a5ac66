#pragma once

#include <stdexcept>
#include <string>

namespace osdom {

/// Base of every error the toolkit raises on bad input or blown caps.
/// kind() is the stable machine-readable name the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define OSDOM_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

OSDOM_DEFINE_ERROR(CycleError);
OSDOM_DEFINE_ERROR(IndexError);
OSDOM_DEFINE_ERROR(ParamError);
OSDOM_DEFINE_ERROR(NotBipartiteError);
OSDOM_DEFINE_ERROR(SizeCapError);
OSDOM_DEFINE_ERROR(IsolatedVertexError);
OSDOM_DEFINE_ERROR(ClassError);
OSDOM_DEFINE_ERROR(ShapeError);
OSDOM_DEFINE_ERROR(HeightError);
OSDOM_DEFINE_ERROR(CoverageError);
OSDOM_DEFINE_ERROR(FormatError);
OSDOM_DEFINE_ERROR(ArityError);
OSDOM_DEFINE_ERROR(ValidationError);
OSDOM_DEFINE_ERROR(BudgetExceeded);
OSDOM_DEFINE_ERROR(NotHellyError);
OSDOM_DEFINE_ERROR(UnknownSuite);

#undef OSDOM_DEFINE_ERROR

}  // namespace osdom
