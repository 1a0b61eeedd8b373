#pragma once

#include <stdexcept>
#include <string>

namespace imprim {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Group closure or an enumeration passed its configured bound.
class ExceedsBound : public Error
{
public:
    using Error::Error;
};

/// A generator fails to map some block of a partition onto a block.
class NotInvariant : public Error
{
public:
    using Error::Error;
};

/// A generator is not an automorphism of the graph or design it acts on.
class NotAutomorphism : public Error
{
public:
    using Error::Error;
};

/// A parameter took different values on different representatives.
class RepresentativeDependent : public Error
{
public:
    using Error::Error;
};

class EmptyTrace : public Error
{
public:
    using Error::Error;
};

class OverlappingTraces : public Error
{
public:
    using Error::Error;
};

class NotSelfPaired : public Error
{
public:
    using Error::Error;
};

class NotRegular : public Error
{
public:
    using Error::Error;
};

/// Input is larger than an exhaustive search is allowed to handle.
class TooLarge : public Error
{
public:
    using Error::Error;
};

/// Caller violated a documented precondition (bad prime, mismatched p, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// Malformed JSON record; the message starts with the offending field path.
class SchemaError : public Error
{
public:
    SchemaError(const std::string & path, const std::string & what) :
        Error(path + ": " + what),
        path_(path)
    {
    }

    const std::string & path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace imprim
