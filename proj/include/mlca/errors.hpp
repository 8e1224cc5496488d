#pragma once

#include <fmt/format.h>

#include <stdexcept>
#include <string>

namespace mlca {

// Base of every error thrown by the library. The CLI maps DataError
// subclasses to exit code 2 and IoError to exit code 3.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;

    template <typename... Args>
    explicit Error(fmt::format_string<Args...> f, Args&&... args)
    : std::runtime_error(fmt::format(f, std::forward<Args>(args)...))
    {
    }
};

class DataError : public Error
{
public:
    using Error::Error;
};

class IoError : public Error
{
public:
    using Error::Error;
};

class ParseError : public DataError
{
public:
    ParseError(std::string file, std::size_t line, const std::string& what)
    : DataError(fmt::format("{}:{}: {}", file, line, what))
    , _file(std::move(file))
    , _line(line)
    {
    }

    const std::string& file() const noexcept { return _file; }
    std::size_t line() const noexcept { return _line; }

private:
    std::string _file;
    std::size_t _line;
};

// Two producers for one product, missing reference product, bad sign conventions.
class IntegrityError : public DataError
{
public:
    using DataError::DataError;
};

class DanglingReferenceError : public DataError
{
public:
    DanglingReferenceError(const std::string& context, std::string ref)
    : DataError(fmt::format("{}: unknown reference '{}'", context, ref))
    , _ref(std::move(ref))
    {
    }

    const std::string& reference() const noexcept { return _ref; }

private:
    std::string _ref;
};

class UnresolvableDemandError : public DataError
{
public:
    using DataError::DataError;
};

class SingularSystemError : public DataError
{
public:
    SingularSystemError(std::string product, const std::string& what)
    : DataError(what)
    , _product(std::move(product))
    {
    }

    const std::string& product() const noexcept { return _product; }

private:
    std::string _product;
};

class UnknownIndicatorError : public DataError
{
public:
    using DataError::DataError;
};

// Nonpositive mileage, zero traffic, zero stations and similar.
class DomainError : public DataError
{
public:
    using DataError::DataError;
};

class ConfigurationError : public DataError
{
public:
    using DataError::DataError;
};

class InvalidScenarioError : public DataError
{
public:
    using DataError::DataError;
};

class AssessmentError : public DataError
{
public:
    using DataError::DataError;
};

class NormalizationError : public DataError
{
public:
    using DataError::DataError;
};

} // namespace mlca
