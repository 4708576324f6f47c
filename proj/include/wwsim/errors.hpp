#pragma once

#include <stdexcept>
#include <string>

namespace wwsim {

/// Input outside the domain of a formula (no first minimum, invalid geometry, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Quadrature refinement budget exhausted.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double x_m, double previous, double last)
      : std::runtime_error(what), x_m_(x_m), previous_(previous), last_(last) {}
  double x_m() const noexcept { return x_m_; }
  double previous_estimate() const noexcept { return previous_; }
  double last_estimate() const noexcept { return last_; }

 private:
  double x_m_;
  double previous_;
  double last_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path)
      : std::runtime_error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace wwsim
