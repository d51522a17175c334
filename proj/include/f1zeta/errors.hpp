#ifndef F1ZETA_ERRORS_HPP
#define F1ZETA_ERRORS_HPP

#include <stdexcept>

namespace f1zeta {

// Evaluation hit a pole, or a truncated product met a singular factor with a
// negative exponent. Maps to exit code 3 in the CLI.
class pole_error : public std::runtime_error {
  public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace f1zeta

#endif
