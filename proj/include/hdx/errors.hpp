#pragma once

#include <stdexcept>
#include <string>

namespace hdx {

/** Base class for all errors raised by the toolkit. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** A face or cochain was used at a dimension where it is not defined. */
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/** An argument value lies outside the operation's domain (negative weight,
 *  repeated vertex, probability outside [0,1], ...). */
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/** The same top face was supplied twice. */
class DuplicateFaceError : public Error {
public:
    explicit DuplicateFaceError(const std::string& what) : Error(what) {}
};

/** A face referenced by name is not present in the complex. */
class MissingFaceError : public Error {
public:
    explicit MissingFaceError(const std::string& what) : Error(what) {}
};

/** A randomized construction exhausted its retry budget. */
class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& what) : Error(what) {}
};

/** Malformed input file or unwritable output path. */
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/** An internal consistency check failed; indicates a bug, not bad input. */
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace hdx
