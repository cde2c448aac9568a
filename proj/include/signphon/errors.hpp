#pragma once

#include <stdexcept>

namespace signphon {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedJson : Error { using Error::Error; };
struct NoPersonDetected : Error { using Error::Error; };
struct DegenerateShoulders : Error { using Error::Error; };
struct NoValidFrame : Error { using Error::Error; };
struct EmptyFrame : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };
struct EmptyPhoneme : Error { using Error::Error; };
struct TooFewPoints : Error { using Error::Error; };
struct InvalidScript : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace signphon
