#include "textrl/envs/autoexplore/sandbox.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "textrl/core/errors.hpp"
#include "textrl/core/hash.hpp"

namespace textrl::envs {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

fs::path unique_scratch_dir(const fs::path& scratch_root) {
  static std::atomic<std::uint64_t> counter{0};
  static const std::uint64_t stamp = std::random_device{}();
  fs::create_directories(scratch_root);
  for (;;) {
    std::ostringstream name;
    name << "sb_" << std::hex << stamp << "_" << counter.fetch_add(1);
    fs::path candidate = fs::absolute(scratch_root / name.str()).lexically_normal();
    if (!fs::exists(candidate)) {
      fs::create_directory(candidate);
      return candidate;
    }
  }
}

void copy_tree(const fs::path& from, const fs::path& to) {
  fs::copy(from, to, fs::copy_options::recursive | fs::copy_options::copy_symlinks);
}

// After lexically_normal, any surviving ".." in a relative path sits at the
// front, so containment reduces to checking the first component.
bool contained(const fs::path& normalized_rel) {
  return normalized_rel.empty() || *normalized_rel.begin() != "..";
}

std::string head_or_tail(const std::string& content, int lines, bool head) {
  std::vector<std::string> all;
  std::string cur;
  for (char c : content) {
    if (c == '\n') {
      all.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) all.push_back(cur);
  const int n = static_cast<int>(all.size());
  const int take = std::min(std::max(lines, 0), n);
  std::string out;
  const int begin = head ? 0 : n - take;
  for (int i = begin; i < begin + take; ++i) {
    out += all[i];
    out += '\n';
  }
  return out;
}

}  // namespace

fs::path default_scratch_root() {
  if (const char* env = std::getenv("TEXTRL_SCRATCH")) return fs::path(env);
  return fs::temp_directory_path() / "textrl_scratch";
}

Sandbox::Sandbox(const fs::path& source_repo, const fs::path& scratch_root) {
  if (!fs::exists(source_repo) || !fs::is_directory(source_repo))
    throw IoError("sandbox source is not a readable directory: " + source_repo.string());
  root_ = unique_scratch_dir(scratch_root);
  copy_tree(source_repo, root_);
  for (const auto& entry : fs::recursive_directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    const std::string rel = entry.path().lexically_relative(root_).generic_string();
    baseline_[rel] = fnv1a(read_file(entry.path()));
  }
}

Sandbox::~Sandbox() {
  std::error_code ec;
  if (!root_.empty()) fs::remove_all(root_, ec);
}

std::unique_ptr<Sandbox> Sandbox::clone(const fs::path& scratch_root) const {
  auto copy = std::unique_ptr<Sandbox>(new Sandbox());
  copy->root_ = unique_scratch_dir(scratch_root);
  copy_tree(root_, copy->root_);
  copy->cwd_ = cwd_;
  copy->baseline_ = baseline_;
  return copy;
}

std::optional<fs::path> Sandbox::resolve(const std::string& arg) const {
  fs::path p(arg);
  fs::path combined;
  if (p.is_absolute()) {
    // Absolute arguments are only legal when they spell out a location
    // under the sandbox root.
    fs::path norm = p.lexically_normal();
    fs::path rel = norm.lexically_relative(root_);
    if (rel.empty() || *rel.begin() == "..") return std::nullopt;
    combined = rel;
  } else {
    combined = fs::path(cwd_) / p;
  }
  fs::path norm = combined.lexically_normal();
  if (norm.empty()) norm = ".";
  if (!contained(norm)) return std::nullopt;
  return norm;
}

CommandResult Sandbox::exec(const std::string& command) {
  CommandResult r;
  auto tokens = split_ws(command);
  if (tokens.empty()) {
    r.status = CommandResult::Status::kBadUsage;
    r.err = "empty command";
    return r;
  }
  const std::string verb = tokens[0];
  auto escape = [&](const std::string& arg) {
    r.status = CommandResult::Status::kSandboxEscape;
    r.err = verb + ": path escapes the sandbox: " + arg;
    return r;
  };
  auto missing = [&](const std::string& arg) {
    r.status = CommandResult::Status::kMissingFile;
    r.err = verb + ": no such file or directory: " + arg;
    return r;
  };
  auto usage = [&](const std::string& msg) {
    r.status = CommandResult::Status::kBadUsage;
    r.err = verb + ": " + msg;
    return r;
  };

  if (verb == "cd") {
    if (tokens.size() != 2) return usage("expected one argument");
    auto rel = resolve(tokens[1]);
    if (!rel) return escape(tokens[1]);
    if (!fs::is_directory(root_ / *rel)) return missing(tokens[1]);
    cwd_ = rel->generic_string();
    return r;
  }
  if (verb == "ls") {
    if (tokens.size() > 2) return usage("expected at most one argument");
    fs::path rel = fs::path(cwd_);
    if (tokens.size() == 2) {
      auto resolved = resolve(tokens[1]);
      if (!resolved) return escape(tokens[1]);
      rel = *resolved;
    }
    if (!fs::is_directory(root_ / rel)) return missing(rel.generic_string());
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(root_ / rel)) {
      std::string name = entry.path().filename().string();
      if (entry.is_directory()) name += '/';
      names.push_back(std::move(name));
    }
    std::sort(names.begin(), names.end());
    for (const auto& n : names) {
      r.out += n;
      r.out += '\n';
    }
    return r;
  }
  if (verb == "cat" || verb == "head" || verb == "tail") {
    int lines = 10;
    std::size_t file_idx = 1;
    if (verb != "cat" && tokens.size() >= 3 && tokens[1] == "-n") {
      try {
        lines = std::stoi(tokens[2]);
      } catch (...) {
        return usage("bad line count");
      }
      file_idx = 3;
    }
    if (tokens.size() != file_idx + 1) return usage("expected a file argument");
    auto rel = resolve(tokens[file_idx]);
    if (!rel) return escape(tokens[file_idx]);
    const fs::path full = root_ / *rel;
    if (!fs::is_regular_file(full)) return missing(tokens[file_idx]);
    const std::string content = read_file(full);
    if (verb == "cat")
      r.out = content;
    else
      r.out = head_or_tail(content, lines, verb == "head");
    return r;
  }
  if (verb == "echo") {
    std::vector<std::string> words(tokens.begin() + 1, tokens.end());
    std::string target;
    auto gt = std::find(words.begin(), words.end(), ">");
    if (gt != words.end()) {
      if (gt + 1 == words.end() || gt + 2 != words.end())
        return usage("expected exactly one file after >");
      target = *(gt + 1);
      words.erase(gt, words.end());
    }
    std::string text;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i) text += ' ';
      text += words[i];
    }
    text += '\n';
    if (target.empty()) {
      r.out = text;
      return r;
    }
    auto rel = resolve(target);
    if (!rel) return escape(target);
    const fs::path full = root_ / *rel;
    if (!fs::is_directory(full.parent_path())) return missing(target);
    std::ofstream out(full, std::ios::binary | std::ios::trunc);
    if (!out) return missing(target);
    out << text;
    return r;
  }
  if (verb == "id") {
    if (tokens.size() != 2) return usage("expected one file argument");
    auto rel = resolve(tokens[1]);
    if (!rel) return escape(tokens[1]);
    if (!fs::is_regular_file(root_ / *rel)) return missing(tokens[1]);
    r.identified_file = rel->generic_string();
    r.out = "identified " + *r.identified_file + "\n";
    return r;
  }
  r.status = CommandResult::Status::kUnknownVerb;
  r.err = "unknown verb: " + verb;
  return r;
}

std::vector<std::pair<std::string, std::string>> Sandbox::changed_files() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& entry : fs::recursive_directory_iterator(root_)) {
    if (!entry.is_regular_file()) continue;
    const std::string rel = entry.path().lexically_relative(root_).generic_string();
    const std::string content = read_file(entry.path());
    auto it = baseline_.find(rel);
    if (it == baseline_.end() || it->second != fnv1a(content))
      out.emplace_back(rel, content);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Sandbox::list_cwd() const {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(root_ / cwd_)) {
    std::string name = entry.path().filename().string();
    if (entry.is_directory()) name += '/';
    names.push_back(std::move(name));
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace textrl::envs
