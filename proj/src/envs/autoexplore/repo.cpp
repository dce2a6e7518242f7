#include "textrl/envs/autoexplore/repo.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "textrl/core/errors.hpp"
#include "textrl/core/rng.hpp"

namespace textrl::envs {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string fresh_token(Rng& rng, std::set<std::string>& used) {
  static const char* hex = "0123456789abcdef";
  for (;;) {
    std::string t = "kw_";
    for (int i = 0; i < 6; ++i) t += hex[rng.uniform_int(16)];
    if (used.insert(t).second) return t;
  }
}

void write_note(const fs::path& path, const std::string& stem,
                const std::string& token) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << "# " << stem << "\n"
      << "This note describes " << token << ".\n"
      << "The keyword for this file is " << token << ".\n";
}

void gen_dir(const fs::path& dir, const std::string& rel, int depth_left,
             const RepoSpec& spec, Rng& rng, std::set<std::string>& used,
             std::vector<PlantedFile>& targets) {
  fs::create_directories(dir);
  for (int i = 0; i < spec.files_per_dir; ++i) {
    const std::string stem = "notes_" + std::to_string(i);
    const std::string token = fresh_token(rng, used);
    write_note(dir / (stem + ".md"), stem, token);
    const std::string rel_file = rel.empty() ? stem + ".md" : rel + "/" + stem + ".md";
    targets.push_back({rel_file, token});
  }
  if (depth_left == 0) return;
  for (int b = 0; b < spec.branching; ++b) {
    const std::string name = "sub_" + std::to_string(b);
    const std::string child_rel = rel.empty() ? name : rel + "/" + name;
    gen_dir(dir / name, child_rel, depth_left - 1, spec, rng, used, targets);
  }
}

}  // namespace

GeneratedRepo gen_synthetic_repo(const RepoSpec& spec, const fs::path& dest) {
  if (spec.depth < 0 || spec.branching < 1 || spec.files_per_dir < 0)
    throw std::invalid_argument("gen_synthetic_repo: bad spec");
  GeneratedRepo repo;
  repo.root = dest;
  Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ull);
  std::set<std::string> used;
  gen_dir(dest, "", spec.depth, spec, rng, used, repo.targets);
  return repo;
}

std::vector<QueryLabel> gen_labels(const fs::path& repo_root) {
  // Recover planted keywords from file contents.
  std::vector<PlantedFile> planted;
  for (const auto& entry : fs::recursive_directory_iterator(repo_root)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::string line;
    std::string token;
    static const std::string kMarker = "The keyword for this file is ";
    while (std::getline(in, line)) {
      auto pos = line.find(kMarker);
      if (pos != std::string::npos) {
        token = line.substr(pos + kMarker.size());
        if (!token.empty() && token.back() == '.') token.pop_back();
        break;
      }
    }
    if (token.empty()) continue;
    planted.push_back({entry.path().lexically_relative(repo_root).generic_string(), token});
  }
  std::sort(planted.begin(), planted.end(),
            [](const PlantedFile& a, const PlantedFile& b) { return a.rel_path < b.rel_path; });

  // Breadth-first search over directories with moves {cd child, cd ..},
  // rooted at ".". Parent links recover the minimal command path.
  std::map<std::string, std::string> parent_dir;   // dir -> predecessor
  std::map<std::string, std::string> parent_move;  // dir -> command used
  std::deque<std::string> frontier{"."};
  parent_dir["."] = ".";
  while (!frontier.empty()) {
    const std::string cur = frontier.front();
    frontier.pop_front();
    const fs::path cur_abs = repo_root / cur;
    std::vector<std::string> moves;
    for (const auto& entry : fs::directory_iterator(cur_abs))
      if (entry.is_directory())
        moves.push_back("cd " + entry.path().filename().string());
    if (cur != ".") moves.push_back("cd ..");
    std::sort(moves.begin(), moves.end());
    for (const auto& mv : moves) {
      const std::string arg = mv.substr(3);
      fs::path next = (fs::path(cur) / arg).lexically_normal();
      std::string key = next.generic_string();
      if (key.empty()) key = ".";
      if (parent_dir.count(key)) continue;
      parent_dir[key] = cur;
      parent_move[key] = mv;
      frontier.push_back(key);
    }
  }

  const std::string repo_name = repo_root.filename().string();
  std::vector<QueryLabel> labels;
  int idx = 0;
  for (const auto& pf : planted) {
    fs::path rel(pf.rel_path);
    std::string dir = rel.parent_path().generic_string();
    if (dir.empty()) dir = ".";
    std::vector<std::string> commands;
    for (std::string at = dir; at != "."; at = parent_dir.at(at))
      commands.push_back(parent_move.at(at));
    std::reverse(commands.begin(), commands.end());
    commands.push_back("id " + rel.filename().string());

    QueryLabel q;
    q.repo = repo_name;
    q.question = (idx % 2 == 0)
                     ? "Which file contains the keyword " + pf.token + "?"
                     : "Which file describes " + pf.token + "?";
    q.answer = pf.rel_path;
    q.file = pf.rel_path;
    q.commands = std::move(commands);
    labels.push_back(std::move(q));
    ++idx;
  }
  return labels;
}

void save_labels(const std::vector<QueryLabel>& labels, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& q : labels) {
    json j{{"repo", q.repo},
           {"question", q.question},
           {"answer", q.answer},
           {"file", q.file},
           {"commands", q.commands}};
    out << j.dump() << "\n";
  }
}

std::vector<QueryLabel> load_labels(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::vector<QueryLabel> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    QueryLabel q;
    q.repo = j.at("repo").get<std::string>();
    q.question = j.at("question").get<std::string>();
    q.answer = j.at("answer").get<std::string>();
    q.file = j.at("file").get<std::string>();
    q.commands = j.at("commands").get<std::vector<std::string>>();
    labels.push_back(std::move(q));
  }
  return labels;
}

}  // namespace textrl::envs
