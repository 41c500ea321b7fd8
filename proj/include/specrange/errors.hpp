#pragma once

#include <stdexcept>
#include <string>

namespace specrange {

// Error taxonomy shared by the library and the CLI exit codes:
// validation_error -> 1, io_error -> 2, numerical_error -> 3.

class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace specrange
