#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace textrl::envs {

struct CommandResult {
  enum class Status { kOk, kSandboxEscape, kUnknownVerb, kMissingFile, kBadUsage };
  Status status = Status::kOk;
  std::string out;
  std::string err;
  std::optional<std::string> identified_file;  // terminal event emitted by `id`

  bool ok() const { return status == Status::kOk; }
};

// An isolated copy of a source repository. Whitelisted commands execute
// against the copy; the source tree is never touched. Every path argument
// is normalized and containment-checked against the sandbox root, so no
// command sequence can read or write outside it.
class Sandbox {
 public:
  // Copies `source_repo` into a unique directory under `scratch_root`.
  Sandbox(const std::filesystem::path& source_repo,
          const std::filesystem::path& scratch_root);
  ~Sandbox();

  Sandbox(const Sandbox&) = delete;
  Sandbox& operator=(const Sandbox&) = delete;

  const std::filesystem::path& root() const { return root_; }

  // Relative to the sandbox root; "." at the root.
  const std::string& cwd() const { return cwd_; }
  void reset_cwd() { cwd_ = "."; }

  // Verbs: cd, ls, cat, head, tail, echo (with `>` redirection), id.
  CommandResult exec(const std::string& command);

  // Files whose content differs from the copy made at creation (includes
  // files created since), as (relative path, current content), sorted.
  std::vector<std::pair<std::string, std::string>> changed_files() const;

  // Sorted entries of the current directory; directories carry a trailing
  // slash.
  std::vector<std::string> list_cwd() const;

  // Fresh scratch copy of the *current* sandbox contents, preserving cwd
  // and the creation-time baseline used by changed_files().
  std::unique_ptr<Sandbox> clone(const std::filesystem::path& scratch_root) const;

 private:
  Sandbox() = default;

  // Resolves `arg` against cwd, lexically normalizes it, and rejects any
  // result outside the root. Returns the path relative to root.
  std::optional<std::filesystem::path> resolve(const std::string& arg) const;

  std::filesystem::path root_;
  std::string cwd_ = ".";
  std::map<std::string, std::uint64_t> baseline_;  // rel path -> content hash
};

// Reads sandbox scratch root from the TEXTRL_SCRATCH environment variable,
// falling back to the system temp directory.
std::filesystem::path default_scratch_root();

}  // namespace textrl::envs
