#ifndef GFKIT_ERRORS_HPP
#define GFKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gfkit
{

// Invalid arguments and out-of-range queries are reported with the standard
// std::invalid_argument / std::out_of_range. The classes below cover the
// algebraic failure modes that have no standard counterpart.

class not_invertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class unsupported_radicand : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class not_divisible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class division_by_zero : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class non_integral : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Raised when an automaton has an edge whose weight has a nonzero constant term.
class convergence_error : public std::runtime_error
{
public:
    convergence_error(const std::string &msg, std::size_t source, std::size_t target)
        : std::runtime_error(msg), m_source(source), m_target(target)
    {
    }

    std::size_t source() const noexcept { return m_source; }
    std::size_t target() const noexcept { return m_target; }

private:
    std::size_t m_source;
    std::size_t m_target;
};

class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string &msg, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), m_line(line)
    {
    }

    std::size_t line() const noexcept { return m_line; }

private:
    std::size_t m_line;
};

} // namespace gfkit

#endif
