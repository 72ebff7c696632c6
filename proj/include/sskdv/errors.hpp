#pragma once

#include <stdexcept>
#include <string>

namespace sskdv
{

// Invalid construction parameters (bad spec, bad grid, malformed input).
class config_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation outside the domain of an expression, e.g. t = 0 with negative powers of t^{1/3}.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// A tau body (or Yablonskii-Vorob'ev factor) vanishes at the evaluation point.
class singularity_error : public std::runtime_error
{
public:
    singularity_error(const std::string &factor, const std::string &msg)
        : std::runtime_error(msg), m_factor(factor)
    {
    }

    const std::string &factor() const noexcept
    {
        return m_factor;
    }

private:
    std::string m_factor;
};

} // namespace sskdv
