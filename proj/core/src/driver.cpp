#include "hott/driver.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hott/parser.hpp"
#include "hott/printer.hpp"
#include "hott/schema.hpp"
#include "hott/typecheck.hpp"

namespace fs = std::filesystem;

namespace hott {
namespace {

struct Diagnostic {
  std::string file;
  int line = 1, col = 1;
  std::string message;

  bool operator<(const Diagnostic& o) const {
    if (file != o.file) return file < o.file;
    if (line != o.line) return line < o.line;
    if (col != o.col) return col < o.col;
    return message < o.message;
  }

  std::string render() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(col) +
           ": error: " + message;
  }
};

Diagnostic fromSpan(const Span& s, const std::string& msg) {
  Diagnostic d;
  d.file = s.known() ? s.fileName() : "<unknown>";
  d.line = s.line;
  d.col = s.col;
  d.message = msg;
  return d;
}

struct FileNode {
  std::string displayPath;  // as given / resolved, used in diagnostics
  ParsedFile parsed;
  std::vector<std::string> deps;  // canonical paths
};

struct Loader {
  std::string stdlibDir;
  std::map<std::string, FileNode> nodes;  // canonical path -> node
  std::vector<std::string> order;         // topological, deterministic
  std::vector<Diagnostic> diagnostics;
  bool ioError = false;

  enum class Mark { None, OnStack, Done };
  std::map<std::string, Mark> marks;

  // Resolves an import string against the importing file's directory, then
  // the stdlib root. Returns empty on failure.
  std::string resolveImport(const std::string& spec,
                            const std::string& importer) {
    std::string rel = spec;
    if (rel.size() < 5 || rel.substr(rel.size() - 5) != ".hott")
      rel += ".hott";
    std::error_code ec;
    fs::path local = fs::path(importer).parent_path() / rel;
    if (fs::exists(local, ec)) return fs::weakly_canonical(local, ec).string();
    if (!stdlibDir.empty()) {
      fs::path inLib = fs::path(stdlibDir) / rel;
      if (fs::exists(inLib, ec))
        return fs::weakly_canonical(inLib, ec).string();
    }
    return {};
  }

  // DFS load + topological sort with cycle detection.
  bool visit(const std::string& path, const Span& importSpan) {
    std::error_code ec;
    if (!fs::exists(path, ec)) {
      diagnostics.push_back(
          fromSpan(importSpan, "cannot open file '" + path + "'"));
      ioError = true;
      return false;
    }
    std::string canon = fs::weakly_canonical(path, ec).string();
    Mark& m = marks[canon];
    if (m == Mark::Done) return true;
    if (m == Mark::OnStack) {
      diagnostics.push_back(
          fromSpan(importSpan, "import cycle involving '" + path + "'"));
      ioError = true;
      return false;
    }
    m = Mark::OnStack;

    std::ifstream in(canon, std::ios::binary);
    if (!in) {
      diagnostics.push_back(
          fromSpan(importSpan, "cannot read file '" + path + "'"));
      ioError = true;
      marks[canon] = Mark::Done;
      return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    FileNode node;
    node.displayPath = path;
    node.parsed = parseFile(buf.str(), path);
    for (const auto& [spec, span] : node.parsed.imports) {
      std::string dep = resolveImport(spec, canon);
      if (dep.empty()) {
        diagnostics.push_back(
            fromSpan(span, "cannot resolve import '" + spec + "'"));
        ioError = true;
        continue;
      }
      node.deps.push_back(dep);
      visit(dep, span);
    }
    nodes[canon] = std::move(node);
    order.push_back(canon);
    marks[canon] = Mark::Done;
    return true;
  }
};

void checkItems(GlobalEnv& env, const FileNode& node,
                std::vector<Diagnostic>& diagnostics) {
  for (const auto& e : node.parsed.errors)
    diagnostics.push_back(fromSpan(e.span, e.what()));
  for (const Item& item : node.parsed.items) {
    try {
      switch (item.kind) {
        case Item::Kind::Def:
        case Item::Kind::Axiom:
        case Item::Kind::Postulate: {
          Declaration d;
          d.name = item.name;
          d.kind = item.kind == Item::Kind::Def      ? DeclKind::Definition
                   : item.kind == Item::Kind::Axiom ? DeclKind::Axiom
                                                    : DeclKind::Postulate;
          d.type = item.type;
          d.body = item.body;
          d.marker = item.marker;
          d.span = item.span;
          checkDeclaration(env, std::move(d));
          break;
        }
        case Item::Kind::WSusp: {
          WSuspSignature sig{item.name, item.b,      item.c, item.a,
                             item.f,    item.g,      item.levels, item.span};
          elaborateWSusp(env, sig);
          break;
        }
        case Item::Kind::Trunc: {
          TruncSignature sig{item.name, item.a, item.levels, item.span};
          elaborateTrunc(env, sig);
          break;
        }
      }
    } catch (const TypeError& e) {
      Span s = e.span.known() ? e.span : item.span;
      diagnostics.push_back(fromSpan(s, e.what()));
    }
  }
}

}  // namespace

int runCheck(const std::vector<std::string>& paths, const DriverOptions& opts,
             std::ostream& out, GlobalEnv* envOut) {
  Loader loader;
  loader.stdlibDir = opts.stdlibDir;
  Span cliSpan;  // unknown location for top-level path errors
  for (const auto& p : paths) loader.visit(p, cliSpan);

  std::vector<Diagnostic> diagnostics = std::move(loader.diagnostics);
  GlobalEnv env;
  size_t fileCount = 0;
  if (!loader.ioError) {
    for (const auto& canon : loader.order) {
      checkItems(env, loader.nodes[canon], diagnostics);
      ++fileCount;
    }
  }

  std::stable_sort(diagnostics.begin(), diagnostics.end());
  for (const auto& d : diagnostics) out << d.render() << "\n";

  int exitCode = loader.ioError ? 2 : diagnostics.empty() ? 0 : 1;

  if (opts.dumpElaborated && exitCode == 0) {
    for (const auto& d : env.declarations()) {
      out << printDeclaration(d);
      if (d.kind == DeclKind::Generated)
        out << "  -- generated by " << d.marker;
      out << "\n";
    }
  }
  if (opts.summary && exitCode != 2)
    out << "checked " << env.size() << " declarations in " << fileCount
        << " files\n";

  if (envOut) *envOut = std::move(env);
  return exitCode;
}

}  // namespace hott
