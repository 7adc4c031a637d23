#pragma once

#include <stdexcept>
#include <string>

namespace eulerglyph {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An image that was expected to contain ink has no foreground pixel.
class EmptyGlyphError : public Error {
 public:
  using Error::Error;
};

/// A crop box reaches outside its source image.
class OutOfBoundsError : public Error {
 public:
  using Error::Error;
};

/// A glyph is too narrow or too short to be divided into zones.
class ZoneTooThinError : public Error {
 public:
  using Error::Error;
};

class EmptyTrainingSetError : public Error {
 public:
  using Error::Error;
};

/// k exceeds the number of stored training samples.
class KTooLargeError : public Error {
 public:
  using Error::Error;
};

/// k must be a positive odd integer; even and non-positive values are rejected.
class EvenKError : public Error {
 public:
  using Error::Error;
};

/// Malformed model file. Carries the 1-based line number of the offending line.
class FormatError : public Error {
 public:
  FormatError(const std::string& msg, int line)
      : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Model file declares a format version this build does not understand.
class VersionMismatchError : public Error {
 public:
  using Error::Error;
};

/// Malformed corpus manifest or a manifest entry whose image file is missing.
class ManifestError : public Error {
 public:
  using Error::Error;
};

/// Unsupported or corrupt image file.
class ImageFormatError : public Error {
 public:
  using Error::Error;
};

/// A split requests more samples of some class than the corpus provides.
class InsufficientSamplesError : public Error {
 public:
  using Error::Error;
};

/// A synthetic class topology cannot be drawn within the configured canvas.
class SpecUnrealizableError : public Error {
 public:
  using Error::Error;
};

}  // namespace eulerglyph
