#ifndef QUATLIN_ERRORS_HPP
#define QUATLIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quatlin {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ZeroQuaternion : public Error {
public:
    explicit ZeroQuaternion(const std::string& where)
        : Error(where + ": zero quaternion has no inverse") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name) : Error("unknown name '" + name + "'") {}
};

class NotAnAutomorphism : public Error {
public:
    using Error::Error;
};

// Raised when a result that must verify exactly does not; always a defect.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

} // namespace quatlin

#endif
