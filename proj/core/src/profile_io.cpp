#include "rankagg/profile_io.hpp"

#include <sstream>
#include <vector>

#include "rankagg/errors.hpp"

namespace rankagg {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Profile parse_profile(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<ProfileEntry> entries;
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n >> m) || n < 1 || m < 1)
        throw ParseError(lineno, "expected header \"n m\" with n, m >= 1");
      std::string extra;
      if (fields >> extra) throw ParseError(lineno, "trailing data after header");
      continue;
    }
    long long mult;
    if (!(fields >> mult)) throw ParseError(lineno, "expected a multiplicity");
    if (mult < 1) throw ParseError(lineno, "zero or negative multiplicity");
    std::vector<int> order(n);
    std::vector<char> used(n, 0);
    for (long long p = 0; p < n; ++p) {
      long long e;
      if (!(fields >> e)) throw ParseError(lineno, "permutation line too short");
      if (e < 0 || e >= n) throw ParseError(lineno, "element out of range");
      if (used[e]) throw ParseError(lineno, "element repeated");
      used[e] = 1;
      order[p] = static_cast<int>(e);
    }
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, "permutation line too long");
    entries.push_back({Permutation::from_order(std::move(order)), mult});
    seen += mult;
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (entries.empty()) throw ParseError(lineno, "profile has no rankings");
  if (seen != m) throw ParseError(lineno, "multiplicity sum mismatch");
  return Profile(static_cast<int>(n), std::move(entries));
}

std::string serialize_profile(const Profile& profile) {
  std::ostringstream out;
  out << profile.size() << ' ' << profile.voters() << '\n';
  for (const auto& entry : profile.entries()) {
    out << entry.count;
    for (int e : entry.ranking.order()) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

}  // namespace rankagg
