#pragma once

#include <stdexcept>
#include <string>

namespace dtls {

/// Base class of every error raised by the simulator.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Both control and probe amplitudes vanish, or the control vanishes where
/// the perturbative treatment needs it.
class DegenerateField : public Error {
 public:
  using Error::Error;
};

/// |r| = 1: the standing-wave control has true nodes.
class NodeError : public Error {
 public:
  explicit NodeError(const std::string& what, double y = -1.0)
      : Error(what), y_(y) {}
  /// Position (units of L) where the node was met, or -1 if not known.
  double y() const noexcept { return y_; }

 private:
  double y_;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, int iterations, double residual)
      : Error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

class SingularSystem : public Error {
 public:
  SingularSystem(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

class SingularLiouvillian : public Error {
 public:
  using Error::Error;
};

class IntegrationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace dtls
