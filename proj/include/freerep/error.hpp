#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace freerep {

enum class ErrorKind {
  NotAGroup,
  CapExceeded,
  Cancelled,
  NotNormal,
  NotConjugationClosed,
  BadSize,
  BadParams,
  DivisionByZero,
  NotUnit,
  NotQuaternionGroup,
  NotCycloidal,
  NotSylowCyclic,
  ParentMismatch,
  NotAPartition,
  BadConductor,
  NotCyclic,
  NotFaithful,
  NoQuaternionLabels,
  NotCoprime,
  NotFreelyRepresentable,
  ParseError,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Cancelled: return "Cancelled";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotConjugationClosed: return "NotConjugationClosed";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::NotQuaternionGroup: return "NotQuaternionGroup";
    case ErrorKind::NotCycloidal: return "NotCycloidal";
    case ErrorKind::NotSylowCyclic: return "NotSylowCyclic";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::BadConductor: return "BadConductor";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::NotFaithful: return "NotFaithful";
    case ErrorKind::NoQuaternionLabels: return "NoQuaternionLabels";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotFreelyRepresentable: return "NotFreelyRepresentable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// Raised by the group-spec parser; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& detail)
      : Error(ErrorKind::ParseError, detail + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Size limits shared by the enumeration algorithms.
struct Limits {
  std::size_t group_order = 4096;           // largest Cayley table we build
  std::size_t subgroup_enumeration = 2000;  // all_subgroups
  std::size_t norm_relation = 256;          // find_norm_relation
  std::size_t full_associativity = 512;     // above this, sampled check
  std::size_t full_rep_check = 128;         // above this, sampled homomorphism check
  std::uint64_t seed = 0x5eed;
};

/// Cooperative cancellation: a flag plus an optional wall-clock deadline.
class CancelToken {
 public:
  CancelToken() = default;
  explicit CancelToken(std::chrono::steady_clock::duration budget)
      : deadline_(std::chrono::steady_clock::now() + budget) {}

  void cancel() noexcept { flag_.store(true, std::memory_order_relaxed); }

  bool cancelled() const noexcept {
    if (flag_.load(std::memory_order_relaxed)) return true;
    return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
  }

  void check(const char* where) const {
    if (cancelled()) throw Error(ErrorKind::Cancelled, std::string("interrupted in ") + where);
  }

 private:
  std::atomic<bool> flag_{false};
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

inline void poll(const CancelToken* token, const char* where) {
  if (token) token->check(where);
}

}  // namespace freerep
