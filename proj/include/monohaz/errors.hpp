#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace monohaz {

// User/data problems (bad files, bad flags, invalid domains). CLI exit code 1.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, long line)
    : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

private:
  long line_;
};

class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numeric failures (non-convergence, degenerate linear algebra, unstable
// resampling). CLI exit code 2.
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class convergence_error : public numeric_error {
public:
  convergence_error(const std::string& what, Eigen::VectorXd last_iterate)
    : numeric_error(what), last_iterate_(std::move(last_iterate)) {}
  const Eigen::VectorXd& last_iterate() const { return last_iterate_; }

private:
  Eigen::VectorXd last_iterate_;
};

class separation_error : public convergence_error {
public:
  using convergence_error::convergence_error;
};

class bootstrap_instability_error : public numeric_error {
public:
  bootstrap_instability_error(const std::string& what, int failures, int total)
    : numeric_error(what), failures_(failures), total_(total) {}
  int failures() const { return failures_; }
  int total() const { return total_; }

private:
  int failures_;
  int total_;
};

}  // namespace monohaz
