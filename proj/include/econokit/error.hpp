#pragma once

#include <stdexcept>
#include <string>

namespace econokit {

// Data or numeric failure raised by library operations. The CLI maps this
// (and any other std::exception) to exit code 1; usage errors exit with 2.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace econokit
