#pragma once

#include <stdexcept>
#include <string>

namespace spoilkit {

enum class ErrorKind {
  // configuration / CLI
  ConfigError,
  // data and manifests
  DuplicateId,
  UnknownLabel,
  MissingFile,
  DecodeError,
  InsufficientClassSamples,
  MixedTargets,
  TooFewRuns,
  NoBundles,
  IoError,
  // scoring
  MissingAttribute,
  InvalidCategory,
  // models
  UnknownArchitecture,
  WeightsUnavailable,
  InvalidClassCount,
  ShapeMismatch,
  DimensionMismatch,
  // training
  DivergenceDetected,
  EmptyFold,
  DegenerateFeatures,
  InsufficientSamples,
  TooFewDescriptors,
  SingleClassInput,
  // evaluation
  LengthMismatch,
  EmptyMatrix,
  AbsentClass,
  TooFewReports,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::MissingFile: return "MissingFile";
    case ErrorKind::DecodeError: return "DecodeError";
    case ErrorKind::InsufficientClassSamples: return "InsufficientClassSamples";
    case ErrorKind::MixedTargets: return "MixedTargets";
    case ErrorKind::TooFewRuns: return "TooFewRuns";
    case ErrorKind::NoBundles: return "NoBundles";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::MissingAttribute: return "MissingAttribute";
    case ErrorKind::InvalidCategory: return "InvalidCategory";
    case ErrorKind::UnknownArchitecture: return "UnknownArchitecture";
    case ErrorKind::WeightsUnavailable: return "WeightsUnavailable";
    case ErrorKind::InvalidClassCount: return "InvalidClassCount";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivergenceDetected: return "DivergenceDetected";
    case ErrorKind::EmptyFold: return "EmptyFold";
    case ErrorKind::DegenerateFeatures: return "DegenerateFeatures";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::TooFewDescriptors: return "TooFewDescriptors";
    case ErrorKind::SingleClassInput: return "SingleClassInput";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EmptyMatrix: return "EmptyMatrix";
    case ErrorKind::AbsentClass: return "AbsentClass";
    case ErrorKind::TooFewReports: return "TooFewReports";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit codes used by the CLI: 0 success, 2 config, 3 data, 4 training.
inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ConfigError:
      return 2;
    case ErrorKind::DivergenceDetected:
    case ErrorKind::EmptyFold:
    case ErrorKind::DegenerateFeatures:
    case ErrorKind::InsufficientSamples:
    case ErrorKind::TooFewDescriptors:
    case ErrorKind::SingleClassInput:
    case ErrorKind::WeightsUnavailable:
      return 4;
    default:
      return 3;
  }
}

}  // namespace spoilkit
