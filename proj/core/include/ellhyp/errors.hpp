#pragma once

#include <stdexcept>
#include <string>

namespace ellhyp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

// A denominator factor vanished or came within the guard of zero.
class PoleError : public Error {
public:
    PoleError(const std::string& what, int i = -1, int j = -1)
        : Error(what), i_(i), j_(j) {}
    int i() const { return i_; }
    int j() const { return j_; }

private:
    int i_, j_;
};

class ConstraintError : public Error {
public:
    ConstraintError(const std::string& what, std::string constraint)
        : Error(what), constraint_(std::move(constraint)) {}
    const std::string& constraint() const { return constraint_; }

private:
    std::string constraint_;
};

class AdmissibilityError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ellhyp
