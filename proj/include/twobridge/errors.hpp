#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

// Base class for all named failures. what() always starts with the error
// name so the CLI can report it verbatim.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotCoprime : public Error {
public:
    NotCoprime(long long p, long long q, long long g)
        : Error("NotCoprime: gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                ") = " + std::to_string(g)) {}
};

class NotOdd : public Error {
public:
    NotOdd(const std::string& which, long long value)
        : Error("NotOdd: " + which + " = " + std::to_string(value) + " must be odd") {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& detail) : Error("OutOfRange: " + detail) {}
};

class NoConvergence : public Error {
public:
    NoConvergence(int iterations, double worst_residual)
        : Error("NoConvergence: iteration budget " + std::to_string(iterations) +
                " exhausted, worst residual " + std::to_string(worst_residual)) {}
};

class InvalidRoot : public Error {
public:
    explicit InvalidRoot(double residual)
        : Error("InvalidRoot: polynomial residual " + std::to_string(residual) +
                " exceeds tolerance") {}
};

}  // namespace twobridge
