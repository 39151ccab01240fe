#pragma once

#include <stdexcept>
#include <string>

namespace idealcore {

// Error taxonomy, kept deliberately small.  Every failure mode the engine
// can certify maps onto one of these; the CLI turns them into exit codes.
//
//   InputError      malformed input / precondition violation by the caller
//   ShapeError      well-formed input outside the supported shape of an
//                   operation (e.g. multiplicity of a non-m-primary ideal)
//   ResourceError   an explicit cap was exceeded (pair cap, saturation cap,
//                   t-max, sampling attempts); the message names the cap
//   HypothesisError the hypothesis classifier reported a violation and the
//                   caller did not force the computation
//   InternalError   a broken internal invariant; always a bug

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    using Error::Error;
};

class HypothesisError : public Error {
public:
    using Error::Error;
};

class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace idealcore
