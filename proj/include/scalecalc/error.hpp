#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scalecalc {

/// Base class of every error raised by the numerical modules.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument value (exponent out of range, empty grid, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A width is not an integer multiple of the grid step, or a stencil does not fit.
class GridError : public Error {
 public:
  using Error::Error;
};

/// The problem is singular at the requested data (zero initial value, vanishing coefficient).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A least-squares fit is degenerate.
class FitError : public Error {
 public:
  using Error::Error;
};

/// An affine system whose vertical scalings do not contract.
class ContractionError : public Error {
 public:
  using Error::Error;
};

/// |psi| fell below the configured floor at a grid node.
class NodeError : public Error {
 public:
  NodeError(std::size_t x_index, std::size_t t_index, const std::string& what)
      : Error(what), x_index_(x_index), t_index_(t_index) {}
  std::size_t x_index() const { return x_index_; }
  std::size_t t_index() const { return t_index_; }

 private:
  std::size_t x_index_;
  std::size_t t_index_;
};

}  // namespace scalecalc
