#pragma once

#include <stdexcept>
#include <string>

namespace qhk {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by zero") : Error(w) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w = "operands lie in different number fields") : Error(w) {}
};

/// A decision (non-vanishing, leading term, pivot choice) is hidden behind a
/// truncation window and cannot be certified.
struct UndecidableAtTruncation : Error {
    explicit UndecidableAtTruncation(const std::string& w) : Error(w) {}
};

struct DivergenceCertificate : Error {
    explicit DivergenceCertificate(const std::string& w) : Error(w) {}
};

struct NotNormalizable : Error {
    std::string generator_a, generator_b;
    NotNormalizable(const std::string& w, std::string a = "", std::string b = "")
        : Error(w), generator_a(std::move(a)), generator_b(std::move(b)) {}
};

struct MissingCorrelator : Error {
    explicit MissingCorrelator(const std::string& w) : Error(w) {}
};

struct MissingExponential : Error {
    explicit MissingExponential(const std::string& w) : Error(w) {}
};

struct NonZeroConstantInWrongDegree : Error {
    explicit NonZeroConstantInWrongDegree(const std::string& w) : Error(w) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& w) : Error(w) {}
};

struct NotASurface : Error {
    explicit NotASurface(const std::string& w = "frame does not describe a surface") : Error(w) {}
};

struct NotNef : Error {
    explicit NotNef(const std::string& w = "frame does not declare a nef canonical class") : Error(w) {}
};

/// The characteristic polynomial does not split over the supplied field; the
/// message names the residual factor.
struct SplitFailure : Error {
    std::string residual;
    explicit SplitFailure(const std::string& w, std::string res = "") : Error(w), residual(std::move(res)) {}
};

struct NotASimpleRoot : Error {
    explicit NotASimpleRoot(const std::string& w) : Error(w) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w) : Error(w) {}
};

struct NonPolynomialParameter : Error {
    explicit NonPolynomialParameter(const std::string& w) : Error(w) {}
};

struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& w = "zero polynomial") : Error(w) {}
};

struct VanishesOnQ : Error {
    explicit VanishesOnQ(const std::string& w) : Error(w) {}
};

struct InconsistentLedger : Error {
    explicit InconsistentLedger(const std::string& w) : Error(w) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& w) : Error(w) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

/// Internal consistency failure (a certified bound or invariant was violated).
struct LogicError : Error {
    explicit LogicError(const std::string& w) : Error(w) {}
};

}  // namespace qhk
