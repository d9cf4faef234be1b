#include "mogbench/sim_time.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "mogbench/error.hpp"

namespace mogbench {

std::string format_seconds(SimTime t) {
  const std::int64_t us = t.micros();
  const std::int64_t abs_us = us < 0 ? -us : us;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%06lld", us < 0 ? "-" : "",
                static_cast<long long>(abs_us / 1000000),
                static_cast<long long>(abs_us % 1000000));
  return buf;
}

SimTime parse_seconds_exact(const std::string& text) {
  const char* p = text.c_str();
  bool negative = false;
  if (*p == '-') {
    negative = true;
    ++p;
  }
  if (!std::isdigit(static_cast<unsigned char>(*p)))
    fail(ErrorCode::ingest_error, "malformed time value '" + text + "'");

  std::int64_t whole = 0;
  while (std::isdigit(static_cast<unsigned char>(*p))) whole = whole * 10 + (*p++ - '0');

  std::int64_t frac = 0;
  if (*p == '.') {
    ++p;
    int digits = 0;
    while (std::isdigit(static_cast<unsigned char>(*p))) {
      if (++digits > 6)
        fail(ErrorCode::ingest_error, "time value '" + text + "' exceeds microsecond resolution");
      frac = frac * 10 + (*p++ - '0');
    }
    while (digits++ < 6) frac *= 10;
  }
  if (*p != '\0') fail(ErrorCode::ingest_error, "malformed time value '" + text + "'");

  const std::int64_t us = whole * 1000000 + frac;
  return SimTime::from_micros(negative ? -us : us);
}

}  // namespace mogbench
