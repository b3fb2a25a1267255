#pragma once

#include <stdexcept>
#include <string>

namespace tangle3 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroVector : public Error {
public:
    using Error::Error;
};

class BadDimension : public Error {
public:
    using Error::Error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

class NoRoot : public Error {
public:
    using Error::Error;
};

class NotIsometry : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Raised when a three-qubit state has weight outside span{GHZ, W, W~}.
class OutOfSpan : public Error {
public:
    explicit OutOfSpan(double leakage)
        : Error("state leaks out of span{GHZ, W, W~}: leakage " + std::to_string(leakage)),
          leakage_(leakage) {}

    double leakage() const noexcept { return leakage_; }

private:
    double leakage_;
};

}  // namespace tangle3
