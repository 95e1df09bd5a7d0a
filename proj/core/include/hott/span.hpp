#pragma once

#include <memory>
#include <string>

namespace hott {

// Source location, 1-based. `file` is shared between all nodes of a parse.
struct Span {
  std::shared_ptr<const std::string> file;
  int line = 0, col = 0;
  int endLine = 0, endCol = 0;

  bool known() const { return line > 0; }
  const std::string& fileName() const {
    static const std::string unknown = "<unknown>";
    return file ? *file : unknown;
  }
};

inline Span mergeSpans(const Span& a, const Span& b) {
  if (!a.known()) return b;
  if (!b.known()) return a;
  Span s = a;
  s.endLine = b.endLine;
  s.endCol = b.endCol;
  return s;
}

}  // namespace hott
