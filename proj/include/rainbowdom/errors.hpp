#ifndef RAINBOWDOM_ERRORS_HPP
#define RAINBOWDOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rainbowdom {

// Malformed textual input (graph or assignment files). Carries a free-form
// position hint ("edges[3]", "line 2") so CLI users can find the offending field.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

// A caller violated a documented precondition (e.g. handed an assignment that
// does not verify to an operation that requires a valid one).
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rainbowdom

#endif
