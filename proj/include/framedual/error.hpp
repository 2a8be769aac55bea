#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace framedual {

// All library failures carry a stable machine-readable code ("NotHermitian",
// "NotAFrame", "ParseError", ...) next to the human-readable message. The CLI
// maps codes to structured report entries; tests match on them.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace framedual
