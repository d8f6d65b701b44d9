#pragma once

#include <stdexcept>
#include <string>

namespace sodd {

// Base for every error raised by the library. `kind` names the failure class
// (InvalidStep, PartialColoring, ...) so callers and the CLI can map it.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline void require(bool ok, const char* kind, const std::string& what) {
    if (!ok) throw Error(kind, what);
}

}  // namespace sodd
