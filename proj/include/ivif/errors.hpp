#pragma once

#include <stdexcept>
#include <string>

namespace ivif {

/// Common base for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic left the exactly representable range.
class overflow_error : public error {
 public:
  explicit overflow_error(const std::string& what) : error(what) {}
};

/// Constraint kinds a candidate membership structure can violate.
enum class violation {
  out_of_unit,        // a bound falls outside [0,1]
  interval_inverted,  // lower bound exceeds upper bound
  capacity_exceeded,  // mu_hi + nu_hi exceeds 1
};

/// Rejected input: the four bounds do not form a valid element.
/// `field()` names the offending component ("mu", "nu", "mu+nu", ...).
class validation_error : public error {
 public:
  validation_error(violation kind, std::string field, const std::string& what)
      : error(what), kind_(kind), field_(std::move(field)) {}
  violation kind() const noexcept { return kind_; }
  const std::string& field() const noexcept { return field_; }

 private:
  violation kind_;
  std::string field_;
};

/// Malformed textual input (CSV cell, fraction literal, JSON shape).
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error(what) {}
};

/// No element realizes the requested statistics; `condition()` names the
/// violated feasibility inequality.
class infeasible_error : public error {
 public:
  infeasible_error(std::string condition, const std::string& what)
      : error(what), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// Two alternatives share a label.
class duplicate_label_error : public error {
 public:
  duplicate_label_error(std::string label, const std::string& what)
      : error(what), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// An operation that needs at least one element received none.
class empty_family_error : public error {
 public:
  explicit empty_family_error(const std::string& what) : error(what) {}
};

}  // namespace ivif
