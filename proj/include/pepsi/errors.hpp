#pragma once

#include <stdexcept>
#include <string>

namespace pepsi {

enum class Err {
    EmptyLabel,
    KeywordTooLong,
    TooManyKeywords,
    MalformedKeyFile,
    VersionMismatch,
    GroupMembershipFailed,
    PayloadTooLarge,
    AuthenticationFailed,
    MalformedReport,
    MalformedSubscription,
    LedgerWriteFailed,
    ConfigInvalid,
    IoError,
};

class Error : public std::runtime_error {
  public:
    Error(Err code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Err code() const { return code_; }

  private:
    Err code_;
};

}  // namespace pepsi
