#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace malcev {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Asked for the minimum of an empty collection of group elements.
class EmptySupport : public Error {
public:
    EmptySupport() : Error("EmptySupport: minimum of an empty set of words") {}
};

// Division by the zero series / zero field element.
class ZeroInversion : public Error {
public:
    ZeroInversion() : Error("ZeroInversion: cannot invert zero") {}
};

// d() applied to the zero series.
class ZeroHasNoSupport : public Error {
public:
    ZeroHasNoSupport() : Error("ZeroHasNoSupport: d is undefined at zero") {}
};

// An approximation carries no terms below its guarantee, so the requested
// datum (leading word, coset, ...) is not determined by it.
class GuaranteeTooCoarse : public Error {
public:
    explicit GuaranteeTooCoarse(const std::string& what)
        : Error("GuaranteeTooCoarse: " + what) {}
};

// A set of permutations that is not closed under the group operations.
class NotASubgroup : public Error {
public:
    explicit NotASubgroup(const std::string& what)
        : Error("NotASubgroup: " + what) {}
};

// A closure certificate whose levels do not validate.
class MalformedCertificate : public Error {
public:
    explicit MalformedCertificate(const std::string& what)
        : Error("MalformedCertificate: " + what) {}
};

// Order comparison still undecided at the configured degree cap.  The first
// differing coefficient of two distinct words appears at degree <= the
// length of their quotient, so hitting the cap on reduced inputs indicates
// an implementation bug rather than a hard instance.
class OrderUndecided : public Error {
public:
    explicit OrderUndecided(unsigned cap)
        : Error("OrderUndecided: words still compare equal at degree cap " +
                std::to_string(cap)),
          cap_(cap) {}
    unsigned cap() const { return cap_; }

private:
    unsigned cap_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("ParseError at position " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace malcev
