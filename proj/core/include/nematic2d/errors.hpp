#pragma once

#include <stdexcept>
#include <string>

namespace nematic2d {

/// Config file problem: carries the 1-based line number when known (0 otherwise).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Advective CFL guard tripped; carries a suggested stable time step.
class CflError : public std::runtime_error {
 public:
  CflError(const std::string& what, double advisory_dt)
      : std::runtime_error(what), advisory_dt_(advisory_dt) {}
  double advisory_dt() const { return advisory_dt_; }

 private:
  double advisory_dt_;
};

/// Non-finite value detected during time stepping.
class NumericalAbort : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nematic2d
