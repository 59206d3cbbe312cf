#pragma once

#include <stdexcept>
#include <string>

namespace privehd {

// Error categories map onto the CLI exit codes (2 io, 3 config, 4 contract).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_error : std::runtime_error {
    explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : io_error {
    parse_error(const std::string& what, std::size_t line)
        : io_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

} // namespace privehd
