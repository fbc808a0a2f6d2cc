#pragma once

#include <stdexcept>
#include <string>

namespace orbicurve {

/// Two independent computations that must agree did not. Always a bug in this
/// library, never a user error.
class InternalInconsistency : public std::logic_error {
public:
    InternalInconsistency(const std::string& module, const std::string& what)
        : std::logic_error(module + ": " + what), module_(module)
    {}
    [[nodiscard]] const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

} // namespace orbicurve
