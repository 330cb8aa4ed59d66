#pragma once

#include <stdexcept>

namespace fibercone {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidIdeal : public Error { public: using Error::Error; };
class Overflow : public Error { public: using Error::Error; };
class NotApplicable : public Error { public: using Error::Error; };
class NotNormalized : public Error { public: using Error::Error; };
class NotASubideal : public Error { public: using Error::Error; };
class IndexError : public Error { public: using Error::Error; };
class BoundTooSmall : public Error { public: using Error::Error; };
class InvalidSpec : public Error { public: using Error::Error; };
class NotInSemigroup : public Error { public: using Error::Error; };
class InfiniteApery : public Error { public: using Error::Error; };
class InvalidPrime : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

/// A mathematical self-check failed. This is a bug in the library (or a
/// falsified theorem), never a data error; the CLI maps it to exit code 2.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace fibercone
