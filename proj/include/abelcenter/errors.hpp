#pragma once

#include <stdexcept>
#include <string>

namespace abelcenter {

/* Violation of a documented operation precondition. Reported distinctly so
 * the CLI can map it to an input error rather than a negative verdict. */
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace abelcenter
