#include "ivif/ivifn.hpp"

#include <ostream>
#include <sstream>

namespace ivif {

namespace {

void check_unit(const rational& value, const char* field) {
  if (value < rational(0) || value > rational(1))
    throw validation_error(violation::out_of_unit, field,
                           std::string(field) + " = " + value.to_string() +
                               " is outside [0,1]");
}

}  // namespace

ivifn::ivifn(rational mu_lo, rational mu_hi, rational nu_lo, rational nu_hi)
    : mu_lo_(mu_lo), mu_hi_(mu_hi), nu_lo_(nu_lo), nu_hi_(nu_hi) {
  check_unit(mu_lo_, "mu_lo");
  check_unit(mu_hi_, "mu_hi");
  check_unit(nu_lo_, "nu_lo");
  check_unit(nu_hi_, "nu_hi");
  if (mu_lo_ > mu_hi_)
    throw validation_error(violation::interval_inverted, "mu",
                           "mu_lo = " + mu_lo_.to_string() + " exceeds mu_hi = " +
                               mu_hi_.to_string());
  if (nu_lo_ > nu_hi_)
    throw validation_error(violation::interval_inverted, "nu",
                           "nu_lo = " + nu_lo_.to_string() + " exceeds nu_hi = " +
                               nu_hi_.to_string());
  if (mu_hi_ + nu_hi_ > rational(1))
    throw validation_error(violation::capacity_exceeded, "mu+nu",
                           "mu_hi + nu_hi = " + (mu_hi_ + nu_hi_).to_string() +
                               " exceeds 1");
}

std::string ivifn::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ivifn& v) {
  return os << "<[" << v.mu_lo_ << "," << v.mu_hi_ << "],[" << v.nu_lo_ << ","
            << v.nu_hi_ << "]>";
}

ivifn make_ivifn(rational mu_lo, rational mu_hi, rational nu_lo, rational nu_hi) {
  return ivifn(mu_lo, mu_hi, nu_lo, nu_hi);
}

stat_vector stats(const ivifn& v) {
  const rational half(1, 2);
  rational mu_mid = (v.mu_lo() + v.mu_hi()) * half;
  rational nu_mid = (v.nu_lo() + v.nu_hi()) * half;
  rational mu_w = v.mu_hi() - v.mu_lo();
  rational nu_w = v.nu_hi() - v.nu_lo();
  stat_vector sv;
  sv.s = mu_mid - nu_mid;
  sv.h = mu_mid + nu_mid;
  sv.e1 = rational(1) - sv.h;
  sv.e2 = (mu_w + nu_w) * half;
  sv.e3 = mu_w;
  sv.t = mu_w - nu_w;
  sv.g = mu_w + nu_w;
  sv.pi_lo = rational(1) - v.mu_hi() - v.nu_hi();
  sv.pi_hi = rational(1) - v.mu_lo() - v.nu_lo();
  return sv;
}

ivifn bottom() { return ivifn(rational(0), rational(0), rational(1), rational(1)); }
ivifn top() { return ivifn(rational(1), rational(1), rational(0), rational(0)); }

}  // namespace ivif
