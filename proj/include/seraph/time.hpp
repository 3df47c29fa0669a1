#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace seraph {

/// Strictly positive span of time, millisecond resolution.
struct Duration {
  std::int64_t ms = 0;

  auto operator<=>(const Duration &) const = default;
};

/// A point on the (event-time) timeline, epoch milliseconds UTC.
struct TimeInstant {
  std::int64_t ms = 0;

  auto operator<=>(const TimeInstant &) const = default;
};

inline TimeInstant operator+(TimeInstant t, Duration d) { return TimeInstant{t.ms + d.ms}; }
inline TimeInstant operator-(TimeInstant t, Duration d) { return TimeInstant{t.ms - d.ms}; }

/// ISO-8601 datetime with an explicit offset (or Z) to epoch milliseconds.
/// Rejects offset-free datetimes.
TimeInstant parse_datetime(std::string_view text);

/// ISO-8601 UTC with millisecond precision, e.g. "2021-03-01T09:28:00.000Z".
std::string format_datetime(TimeInstant t);

/// ISO-8601 duration, PnDTnHnMnS subset with integer designators.
/// Calendar designators (years, months, weeks) and zero durations are rejected.
Duration parse_duration(std::string_view text);

/// Canonical PnDTnHnMnS form, e.g. "PT4H", "P1DT2H".
std::string format_duration(Duration d);

}  // namespace seraph
