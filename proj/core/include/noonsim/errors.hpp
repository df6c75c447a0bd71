// errors.hpp
// Exception types thrown by the noonsim library. The CLI maps these onto
// its exit codes (see sweep.hpp).

#pragma once

#include <stdexcept>
#include <string>

namespace noonsim {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- linear algebra ---
class NonHermitianInput : public Error { public: using Error::Error; };
class NoConvergence : public Error { public: using Error::Error; };
class DimensionMismatch : public Error { public: using Error::Error; };

// --- state construction ---
class InvalidN : public Error { public: using Error::Error; };
class NotNormalized : public Error { public: using Error::Error; };
class ValidationFailed : public Error { public: using Error::Error; };

// --- time evolution ---
class NegativeTime : public Error { public: using Error::Error; };
class StepTooLarge : public Error { public: using Error::Error; };

// --- interferometry / grids ---
class EmptyGrid : public Error { public: using Error::Error; };
class UndersampledPhase : public Error { public: using Error::Error; };
class InvalidVCrit : public Error { public: using Error::Error; };
class InvalidRate : public Error { public: using Error::Error; };

// Generic precondition violation not covered by a dedicated type.
class InvalidArgument : public Error { public: using Error::Error; };

// State-file syntax error; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + reason : reason),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace noonsim
