#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maprad {

// Domain failure with a stable machine-readable code plus structured
// key/value details (witnesses, offending indices, ...). The CLI turns
// these into error JSON; library callers can switch on code().
class DomainError : public std::runtime_error {
public:
    using Info = std::vector<std::pair<std::string, std::string>>;

    DomainError(std::string code, const std::string& message, Info info = {})
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          info_(std::move(info)) {}

    const std::string& code() const noexcept { return code_; }
    const Info& info() const noexcept { return info_; }

private:
    std::string code_;
    Info info_;
};

} // namespace maprad
