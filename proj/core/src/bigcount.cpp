#include "catalan/bigcount.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace catalan {

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

BigCount bigcount_from_decimal(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("bigcount_from_decimal: empty input");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("bigcount_from_decimal: not a nonnegative decimal: " +
                                  std::string(text));
    }
  }
  BigCount out;
  if (mpz_set_str(out.get_mpz_t(), std::string(text).c_str(), 10) != 0) {
    throw std::invalid_argument("bigcount_from_decimal: parse failure: " + std::string(text));
  }
  return out;
}

double log_value(const BigCount& value) {
  if (value <= 0) {
    throw std::domain_error("log_value: argument must be positive");
  }
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace catalan
