#pragma once

#include <stdexcept>
#include <string>

namespace textrl {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownEnvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Stepping a finished episode or submitting a label outside the current
// enumeration. Masked decoding must make these impossible, so hitting one
// signals a harness bug.
struct EpisodeError : std::logic_error {
  using std::logic_error::logic_error;
};

struct LabelPoolExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RemoteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace textrl
