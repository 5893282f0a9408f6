/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RECONF_ERRORS_HH
#define RECONF_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace reconf
{
    /// Bad arguments: out-of-range vertices, overlapping sets, malformed files.
    class InvalidInput : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A configured cap (nodes, states, search steps) would be exceeded.
    class ResourceLimit : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// An operation's structural precondition does not hold for its input,
    /// e.g. a k-TS step that cannot be split into single slides.
    class PreconditionViolation : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    class ParseError : public InvalidInput
    {
        public:
            ParseError(int line, const std::string & message) :
                InvalidInput("line " + std::to_string(line) + ": " + message),
                _line(line)
            {
            }

            auto line() const -> int
            {
                return _line;
            }

        private:
            int _line;
    };
}

#endif
