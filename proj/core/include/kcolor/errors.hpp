#ifndef KCOLOR_ERRORS_HPP
#define KCOLOR_ERRORS_HPP

#include <stdexcept>

namespace kcolor {

// Malformed input text (graph files, coloring JSON, rational literals).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace kcolor

#endif
