#pragma once

#include <stdexcept>
#include <string>

namespace sbg {

// Precondition violations and invalid inputs. Operations never partially
// mutate: they either return a fresh value or throw.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Parser failures; carries the 1-based line number of the offending line.
class parse_error : public error {
public:
    parse_error(int line, const std::string& what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace sbg
