#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

/// Base class for all domain errors. `name()` is the stable invariant
/// identifier used in CLI diagnostics and tests.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& what) : Error("DegenerateInput", what) {}
};

struct UnboundedPolytope : Error {
  explicit UnboundedPolytope(const std::string& what) : Error("UnboundedPolytope", what) {}
};

struct PointOutside : Error {
  explicit PointOutside(const std::string& what) : Error("PointOutside", what) {}
};

struct ZeroDirection : Error {
  explicit ZeroDirection(const std::string& what) : Error("ZeroDirection", what) {}
};

struct WrongDimension : Error {
  explicit WrongDimension(const std::string& what) : Error("WrongDimension", what) {}
};

struct InvalidVertex : Error {
  explicit InvalidVertex(const std::string& what) : Error("InvalidVertex", what) {}
};

struct InvalidNeighborhood : Error {
  explicit InvalidNeighborhood(const std::string& what) : Error("InvalidNeighborhood", what) {}
};

struct InsufficientSamples : Error {
  explicit InsufficientSamples(const std::string& what) : Error("InsufficientSamples", what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

struct NumericalFailure : Error {
  explicit NumericalFailure(const std::string& what) : Error("NumericalFailure", what) {}
};

}  // namespace hilbert
