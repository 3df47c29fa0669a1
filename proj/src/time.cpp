#include "seraph/time.hpp"

#include <cctype>
#include <cstdio>

#include "seraph/error.hpp"

namespace seraph {

namespace {

constexpr std::int64_t kMsPerSecond = 1000;
constexpr std::int64_t kMsPerMinute = 60 * kMsPerSecond;
constexpr std::int64_t kMsPerHour = 60 * kMsPerMinute;
constexpr std::int64_t kMsPerDay = 24 * kMsPerHour;

[[noreturn]] void bad_datetime(std::string_view text, const char *why) {
  throw DataError("invalid ISO-8601 datetime '" + std::string(text) + "': " + why);
}

[[noreturn]] void bad_duration(std::string_view text, const char *why) {
  throw DataError("invalid ISO-8601 duration '" + std::string(text) + "': " + why);
}

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t &y, unsigned &m, unsigned &d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

bool is_leap(std::int64_t y) { return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0); }

unsigned days_in_month(std::int64_t y, unsigned m) {
  static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  // Fixed-width unsigned decimal field.
  bool number(unsigned width, std::int64_t &out) {
    if (pos + width > s.size()) return false;
    std::int64_t v = 0;
    for (unsigned i = 0; i < width; ++i) {
      char c = s[pos + i];
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
      v = v * 10 + (c - '0');
    }
    pos += width;
    out = v;
    return true;
  }
};

}  // namespace

TimeInstant parse_datetime(std::string_view text) {
  Cursor c{text};
  std::int64_t year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  bool negative_year = c.eat('-');
  if (!c.number(4, year)) bad_datetime(text, "expected 4-digit year");
  if (negative_year) year = -year;
  if (!c.eat('-') || !c.number(2, month)) bad_datetime(text, "expected month");
  if (!c.eat('-') || !c.number(2, day)) bad_datetime(text, "expected day");
  if (!c.eat('T')) bad_datetime(text, "expected 'T' separator");
  if (!c.number(2, hour)) bad_datetime(text, "expected hour");
  if (!c.eat(':') || !c.number(2, minute)) bad_datetime(text, "expected minute");
  if (!c.eat(':') || !c.number(2, second)) bad_datetime(text, "expected second");

  if (month < 1 || month > 12) bad_datetime(text, "month out of range");
  if (day < 1 || day > days_in_month(year, static_cast<unsigned>(month)))
    bad_datetime(text, "day out of range");
  if (hour > 23 || minute > 59 || second > 59) bad_datetime(text, "time out of range");

  std::int64_t millis = 0;
  if (c.eat('.')) {
    // Fractional seconds; keep millisecond precision, ignore finer digits.
    unsigned digits = 0;
    std::int64_t frac = 0;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      if (digits < 3) frac = frac * 10 + (c.peek() - '0');
      ++digits;
      ++c.pos;
    }
    if (digits == 0) bad_datetime(text, "empty fractional seconds");
    while (digits < 3) {
      frac *= 10;
      ++digits;
    }
    millis = frac;
  }

  std::int64_t offset_ms = 0;
  if (c.eat('Z')) {
    // UTC
  } else if (c.peek() == '+' || c.peek() == '-') {
    const std::int64_t sign = c.peek() == '+' ? 1 : -1;
    ++c.pos;
    std::int64_t oh = 0, om = 0;
    if (!c.number(2, oh)) bad_datetime(text, "expected offset hours");
    if (c.eat(':')) {
      if (!c.number(2, om)) bad_datetime(text, "expected offset minutes");
    } else if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      if (!c.number(2, om)) bad_datetime(text, "expected offset minutes");
    }
    if (oh > 23 || om > 59) bad_datetime(text, "offset out of range");
    offset_ms = sign * (oh * kMsPerHour + om * kMsPerMinute);
  } else {
    bad_datetime(text, "missing UTC offset (use 'Z' or '+hh:mm')");
  }
  if (!c.done()) bad_datetime(text, "trailing characters");

  const std::int64_t days = days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
  const std::int64_t local_ms =
      days * kMsPerDay + hour * kMsPerHour + minute * kMsPerMinute + second * kMsPerSecond + millis;
  return TimeInstant{local_ms - offset_ms};
}

std::string format_datetime(TimeInstant t) {
  std::int64_t days = t.ms / kMsPerDay;
  std::int64_t rem = t.ms % kMsPerDay;
  if (rem < 0) {
    rem += kMsPerDay;
    --days;
  }
  std::int64_t year;
  unsigned month, day;
  civil_from_days(days, year, month, day);
  const auto hour = rem / kMsPerHour;
  const auto minute = (rem % kMsPerHour) / kMsPerMinute;
  const auto second = (rem % kMsPerMinute) / kMsPerSecond;
  const auto millis = rem % kMsPerSecond;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lld.%03lldZ",
                static_cast<long long>(year), month, day, static_cast<long long>(hour),
                static_cast<long long>(minute), static_cast<long long>(second),
                static_cast<long long>(millis));
  return buf;
}

Duration parse_duration(std::string_view text) {
  Cursor c{text};
  if (!c.eat('P')) bad_duration(text, "expected 'P'");
  bool in_time = false;
  bool any_field = false;
  std::int64_t total = 0;
  while (!c.done()) {
    if (!in_time && c.eat('T')) {
      in_time = true;
      continue;
    }
    std::int64_t v = 0;
    bool got_digit = false;
    while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      v = v * 10 + (c.peek() - '0');
      ++c.pos;
      got_digit = true;
    }
    if (!got_digit) bad_duration(text, "expected integer before designator");
    if (c.done()) bad_duration(text, "missing designator");
    const char designator = c.peek();
    ++c.pos;
    if (!in_time) {
      switch (designator) {
        case 'D': total += v * kMsPerDay; break;
        case 'W':
        case 'Y':
          bad_duration(text, "calendar designators are not supported");
        case 'M':
          bad_duration(text, "calendar months are not supported");
        default:
          bad_duration(text, "unknown date designator");
      }
    } else {
      switch (designator) {
        case 'H': total += v * kMsPerHour; break;
        case 'M': total += v * kMsPerMinute; break;
        case 'S': total += v * kMsPerSecond; break;
        default:
          bad_duration(text, "unknown time designator");
      }
    }
    any_field = true;
  }
  if (!any_field) bad_duration(text, "no components");
  if (total <= 0) bad_duration(text, "duration must be positive");
  return Duration{total};
}

std::string format_duration(Duration d) {
  std::int64_t ms = d.ms;
  const auto days = ms / kMsPerDay;
  ms %= kMsPerDay;
  const auto hours = ms / kMsPerHour;
  ms %= kMsPerHour;
  const auto minutes = ms / kMsPerMinute;
  ms %= kMsPerMinute;
  const auto seconds = ms / kMsPerSecond;
  ms %= kMsPerSecond;

  std::string out = "P";
  if (days > 0) out += std::to_string(days) + "D";
  std::string time_part;
  if (hours > 0) time_part += std::to_string(hours) + "H";
  if (minutes > 0) time_part += std::to_string(minutes) + "M";
  if (seconds > 0 || ms > 0) {
    // Sub-second durations have no ISO integer designator; fall back to
    // fractional seconds so the value still round-trips.
    if (ms > 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%lld.%03lld", static_cast<long long>(seconds),
                    static_cast<long long>(ms));
      std::string s(buf);
      while (s.back() == '0') s.pop_back();
      time_part += s + "S";
    } else {
      time_part += std::to_string(seconds) + "S";
    }
  }
  if (!time_part.empty()) out += "T" + time_part;
  if (out == "P") out = "PT0S";
  return out;
}

}  // namespace seraph
