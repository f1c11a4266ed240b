#pragma once

#include <stdexcept>
#include <string>

namespace cutlab {

// Config / input validation failures. CLI maps these to exit code 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamOutOfRange : ConfigError {
  using ConfigError::ConfigError;
};

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Runtime failures. CLI maps these to exit code 2.
struct NonFiniteState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteGradient : NonFiniteState {
  using NonFiniteState::NonFiniteState;
};

struct NonDivisibleTimestep : ConfigError {
  using ConfigError::ConfigError;
};

struct EmptyOverlap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRangeGrid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyProfile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonMonotonicTime : ParseError {
  using ParseError::ParseError;
};

struct NonFiniteValue : ParseError {
  using ParseError::ParseError;
};

struct NoCalibratedItems : ConfigError {
  using ConfigError::ConfigError;
};

struct EpisodeFinished : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyBatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyBuffer : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoEpisodes : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParam : ConfigError {
  using ConfigError::ConfigError;
};

struct MissingPolicy : ConfigError {
  using ConfigError::ConfigError;
};

struct MissingHeldOutItem : ConfigError {
  using ConfigError::ConfigError;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cutlab
