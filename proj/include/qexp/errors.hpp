#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qexp {

/// Malformed input. Carries the byte offset (markup) or 1-based line number
/// (line formats) where parsing stopped.
class ParseError : public std::runtime_error {
  public:
    enum class Location { ByteOffset, Line };

    ParseError(const std::string& what, Location kind, std::size_t position)
        : std::runtime_error(what), m_kind(kind), m_position(position)
    {}

    [[nodiscard]] Location location_kind() const noexcept { return m_kind; }
    [[nodiscard]] std::size_t position() const noexcept { return m_position; }

  private:
    Location m_kind;
    std::size_t m_position;
};

class DuplicateIdError : public std::runtime_error {
  public:
    explicit DuplicateIdError(const std::string& id)
        : std::runtime_error("duplicate id: " + id), m_id(id)
    {}

    [[nodiscard]] const std::string& id() const noexcept { return m_id; }

  private:
    std::string m_id;
};

/// Violated precondition on an argument (empty query, bad threshold, ...).
class InvalidArgument : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// File-level I/O failures; the message names the path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qexp
