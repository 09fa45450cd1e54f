#pragma once

#include <stdexcept>
#include <string>

namespace sfq {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotDivisible : public Error {
  public:
    explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

class ZeroDenominator : public Error {
  public:
    explicit ZeroDenominator(const std::string& msg) : Error(msg) {}
};

class PoleAtZero : public Error {
  public:
    explicit PoleAtZero(const std::string& msg) : Error(msg) {}
};

class LengthExceedsK : public Error {
  public:
    explicit LengthExceedsK(const std::string& msg) : Error(msg) {}
};

class NotContained : public Error {
  public:
    explicit NotContained(const std::string& msg) : Error(msg) {}
};

class PoleInCoefficient : public Error {
  public:
    explicit PoleInCoefficient(const std::string& msg) : Error(msg) {}
};

class NotSymmetric : public Error {
  public:
    explicit NotSymmetric(const std::string& msg) : Error(msg) {}
};

class DegreeExceedsAlphabet : public Error {
  public:
    explicit DegreeExceedsAlphabet(const std::string& msg) : Error(msg) {}
};

class AlphabetTooSmall : public Error {
  public:
    explicit AlphabetTooSmall(const std::string& msg) : Error(msg) {}
};

class CapExceeded : public Error {
  public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

class InverseNotPolynomial : public Error {
  public:
    explicit InverseNotPolynomial(const std::string& msg) : Error(msg) {}
};

class PolynomialityViolation : public Error {
  public:
    explicit PolynomialityViolation(const std::string& msg) : Error(msg) {}
};

class SingularGram : public Error {
  public:
    explicit SingularGram(const std::string& msg) : Error(msg) {}
};

class NotDivisibleByVandermonde : public Error {
  public:
    explicit NotDivisibleByVandermonde(const std::string& msg) : Error(msg) {}
};

/// Parse failure; carries the byte offset of the offending character.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

}  // namespace sfq
