#include "cli/config.hpp"

#include <charconv>
#include <cstdlib>

#include "zdg/error.hpp"

namespace zdg::cli {

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  if (s == "dot") return Format::Dot;
  return std::nullopt;
}

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "text";
    case Format::Dot: return "dot";
  }
  return "?";
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::int64_t v = parse_int(raw);
  if (v <= 0) throw InvalidArgument(std::string(name) + " must be positive");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Range parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  const Range r{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (r.lo > r.hi) throw InvalidArgument("empty range '" + std::string(text) + "'");
  return r;
}

void RunConfig::validate() const {
  for (const auto& [name, r] : {std::pair{"m", m_range}, std::pair{"n", n_range}}) {
    if (r.lo > r.hi) throw InvalidArgument(std::string(name) + " range is empty");
    if (r.lo < 2) throw InvalidArgument(std::string(name) + " must be >= 2");
  }
  if (limits.size_cap == 0 || limits.dense_cap == 0)
    throw InvalidArgument("caps must be positive");
  if (limits.dense_cap > limits.size_cap)
    throw InvalidArgument("dense cap must not exceed size cap");
}

Limits default_limits() {
  Limits limits;
  if (auto v = env_u64("ZDG_SIZE_CAP")) limits.size_cap = *v;
  if (auto v = env_u64("ZDG_DENSE_CAP")) limits.dense_cap = *v;
  if (limits.dense_cap > limits.size_cap) limits.dense_cap = limits.size_cap;
  return limits;
}

}  // namespace zdg::cli
