#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace textrl::envs {

struct RepoSpec {
  int depth = 1;
  int branching = 2;
  int files_per_dir = 2;
  std::uint64_t seed = 0;
};

struct PlantedFile {
  std::string rel_path;  // relative to the repo root
  std::string token;     // unique keyword written into the file
};

struct GeneratedRepo {
  std::filesystem::path root;
  std::vector<PlantedFile> targets;
};

// Writes a deterministic directory tree under `dest`: every directory down
// to `depth` holds `files_per_dir` markdown files, each carrying a unique
// keyword. Same spec -> byte-identical tree.
GeneratedRepo gen_synthetic_repo(const RepoSpec& spec,
                                 const std::filesystem::path& dest);

struct QueryLabel {
  std::string repo;                    // repository name n
  std::string question;                // q
  std::string answer;                  // a
  std::string file;                    // target f, relative path
  std::vector<std::string> commands;   // shortest command path c*
};

// One label per planted file in a repo produced by gen_synthetic_repo. The
// command path is found by breadth-first search over {cd child, cd .., id f}
// from the repo root, so it is minimal.
std::vector<QueryLabel> gen_labels(const std::filesystem::path& repo_root);

// JSONL round-trip with fields {repo, question, answer, file, commands}.
void save_labels(const std::vector<QueryLabel>& labels,
                 const std::filesystem::path& path);
std::vector<QueryLabel> load_labels(const std::filesystem::path& path);

}  // namespace textrl::envs
