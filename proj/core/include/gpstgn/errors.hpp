#pragma once

#include <stdexcept>
#include <string>

namespace gpstgn {

// Contract violations on tensor/matrix dimensions.
class shape_error : public std::runtime_error {
 public:
  explicit shape_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files, unknown ids, bad CSV cells.
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

class split_error : public data_error {
 public:
  explicit split_error(const std::string& msg) : data_error(msg) {}
};

// Numerical failures: non-finite values, degenerate pruning.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

class prune_degenerate_error : public numeric_error {
 public:
  explicit prune_degenerate_error(const std::string& msg) : numeric_error(msg) {}
};

class training_error : public numeric_error {
 public:
  explicit training_error(const std::string& msg) : numeric_error(msg) {}
};

class transfer_error : public std::runtime_error {
 public:
  explicit transfer_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gpstgn
