#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Syntactically invalid input text.
class MalformedInput : public Error {
public:
    using Error::Error;
};

/// Edge list that does not describe a tree (wrong count, cycle, disconnected, ...).
class NotATree : public Error {
public:
    using Error::Error;
};

class VertexOutOfRange : public Error {
public:
    using Error::Error;
};

class KOutOfRange : public Error {
public:
    using Error::Error;
};

class NotAnEdge : public Error {
public:
    using Error::Error;
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class UnknownCheck : public Error {
public:
    using Error::Error;
};

class EntryOutOfRange : public Error {
public:
    using Error::Error;
};

}  // namespace steiner
