#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

enum class Errc {
    NotSymmetric,
    OddOrPositiveDiagonal,
    PositiveOffDiagonal,
    UnknownIndex,
    UnknownFormat,
    NonDominantWeight,
    ShapeMismatch,
    IrrationalSpectrum,
    InternalInvariant,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace gkm
