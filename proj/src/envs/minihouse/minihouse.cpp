#include "textrl/envs/minihouse/minihouse.hpp"

#include <algorithm>

#include "textrl/core/errors.hpp"
#include "textrl/core/rng.hpp"
#include "textrl/mdp/enumerate.hpp"
#include "textrl/mdp/prompt_budget.hpp"

namespace textrl::envs {

namespace {

struct RecepType {
  const char* name;
  bool openable;
  int max_count;
};

// Openable receptacle types first so seeded layouts always include the
// fridge and microwave used by most tasks.
const RecepType kRecepTypes[] = {
    {"fridge", true, 1},     {"microwave", true, 1}, {"cabinet", true, 12},
    {"drawer", true, 6},     {"countertop", false, 3}, {"shelf", false, 3},
    {"sinkbasin", false, 1}, {"garbagecan", false, 1},
};

const char* kObjectTypes[] = {"tomato", "egg",  "mug",   "pot",  "apple",
                              "bread",  "cup",  "plate", "knife", "spoon"};

}  // namespace

MiniHouseEnv::MiniHouseEnv(MiniHouseConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.min_receptacles < 4) throw ConfigError("minihouse: need at least 4 receptacles");
}

int MiniHouseEnv::receptacle_index(const std::string& name) const {
  for (std::size_t i = 0; i < receptacles_.size(); ++i)
    if (receptacles_[i].name == name) return static_cast<int>(i);
  return -1;
}

StepResult MiniHouseEnv::reset(std::uint64_t seed) {
  const std::uint64_t layout_seed =
      cfg_.layout_count > 0 ? seed % cfg_.layout_count : seed;
  Rng rng(layout_seed * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull);

  receptacles_.clear();
  contents_.clear();
  holding_.reset();
  agent_at_ = -1;

  const int n_recep = cfg_.min_receptacles +
                      rng.uniform_int(cfg_.max_receptacles - cfg_.min_receptacles + 1);
  // Fridge and microwave always exist; the rest are drawn by type.
  std::vector<std::pair<std::string, bool>> drawn;  // (name, openable)
  drawn.emplace_back("fridge 1", true);
  drawn.emplace_back("microwave 1", true);
  std::vector<int> counts(std::size(kRecepTypes), 0);
  counts[0] = counts[1] = 1;
  while (static_cast<int>(drawn.size()) < n_recep) {
    const int t = rng.uniform_int(static_cast<int>(std::size(kRecepTypes)));
    if (counts[t] >= kRecepTypes[t].max_count) continue;
    counts[t] += 1;
    drawn.emplace_back(std::string(kRecepTypes[t].name) + " " + std::to_string(counts[t]),
                       kRecepTypes[t].openable);
  }
  // Stable presentation order with seeded arrival locations.
  std::sort(drawn.begin(), drawn.end());
  for (const auto& [name, openable] : drawn) {
    Receptacle r;
    r.name = name;
    r.openable = openable;
    r.open = false;
    r.loc = 1 + rng.uniform_int(40);
    receptacles_.push_back(std::move(r));
  }

  // Objects. Instance numbering is per type.
  const int n_obj = cfg_.min_objects +
                    rng.uniform_int(cfg_.max_objects - cfg_.min_objects + 1);
  std::map<std::string, int> type_counts;
  std::vector<std::string> instances;
  for (int i = 0; i < n_obj; ++i) {
    const std::string type = kObjectTypes[rng.uniform_int(static_cast<int>(std::size(kObjectTypes)))];
    const int k = ++type_counts[type];
    instances.push_back(type + " " + std::to_string(k));
  }
  for (const auto& inst : instances) {
    const int at = rng.uniform_int(static_cast<int>(receptacles_.size()));
    contents_[at].push_back(inst);
  }

  // Task: move one object type into an openable receptacle it is not
  // already in. The task object is re-homed into a *closed* openable
  // receptacle so solving needs the full open-take-go-put chain.
  const std::string& task_instance = instances[rng.uniform_int(static_cast<int>(instances.size()))];
  task_object_ = task_instance.substr(0, task_instance.find(' '));
  std::vector<int> openable_idx;
  for (std::size_t i = 0; i < receptacles_.size(); ++i)
    if (receptacles_[i].openable) openable_idx.push_back(static_cast<int>(i));
  const int src = openable_idx[rng.uniform_int(static_cast<int>(openable_idx.size()))];
  int dst = src;
  while (dst == src) dst = openable_idx[rng.uniform_int(static_cast<int>(openable_idx.size()))];
  // Move every instance of the task type into src.
  for (auto& [idx, objs] : contents_) {
    if (idx == src) continue;
    auto it = objs.begin();
    while (it != objs.end()) {
      if (it->rfind(task_object_ + " ", 0) == 0) {
        contents_[src].push_back(*it);
        it = objs.erase(it);
      } else {
        ++it;
      }
    }
  }
  std::sort(contents_[src].begin(), contents_[src].end());
  task_receptacle_ = receptacles_[dst].name;

  std::string room = "You are in the middle of a room. Looking quickly around you, you see";
  for (std::size_t i = 0; i < receptacles_.size(); ++i) {
    room += (i + 1 == receptacles_.size() && receptacles_.size() > 1) ? ", and a " : (i ? ", a " : " a ");
    room += receptacles_[i].name;
  }
  room += ".";
  initial_observation_ = room;

  history_.clear();
  episode_ = EpisodeState{};
  refresh_view();
  return {prompt_, actions_, 0.0, false};
}

std::vector<std::string> MiniHouseEnv::applicable_actions() const {
  std::vector<std::string> actions;
  for (std::size_t i = 0; i < receptacles_.size(); ++i)
    if (static_cast<int>(i) != agent_at_)
      actions.push_back("go to " + receptacles_[i].name);
  if (agent_at_ >= 0) {
    const auto& here = receptacles_[agent_at_];
    if (here.openable && !here.open) actions.push_back("open " + here.name);
    if (here.openable && here.open) actions.push_back("close " + here.name);
    if (!holding_ && contents_visible(here)) {
      auto it = contents_.find(agent_at_);
      if (it != contents_.end())
        for (const auto& obj : it->second)
          actions.push_back("take " + obj + " from " + here.name);
    }
    if (holding_ && contents_visible(here))
      actions.push_back("put " + *holding_ + " in/on " + here.name);
  }
  std::sort(actions.begin(), actions.end());
  return actions;
}

std::string MiniHouseEnv::contents_phrase(int idx) const {
  auto it = contents_.find(idx);
  if (it == contents_.end() || it->second.empty()) return "nothing";
  std::string out;
  const auto& objs = it->second;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    if (i) out += (i + 1 == objs.size()) ? ", and a " : ", a ";
    else out += "a ";
    out += objs[i];
  }
  return out;
}

std::string MiniHouseEnv::apply(const std::string& action) {
  if (action.rfind("go to ", 0) == 0) {
    const std::string name = action.substr(6);
    const int idx = receptacle_index(name);
    agent_at_ = idx;
    const auto& r = receptacles_[idx];
    std::string obs = "You arrive at loc " + std::to_string(r.loc) + ". ";
    if (r.openable && !r.open) {
      obs += "The " + r.name + " is closed.";
    } else if (r.openable && r.open) {
      obs += "The " + r.name + " is open. In it, you see " + contents_phrase(idx) + ".";
    } else {
      obs += "On the " + r.name + ", you see " + contents_phrase(idx) + ".";
    }
    return obs;
  }
  if (action.rfind("open ", 0) == 0) {
    const int idx = receptacle_index(action.substr(5));
    receptacles_[idx].open = true;
    return "You open the " + receptacles_[idx].name + ". The " + receptacles_[idx].name +
           " is open. In it, you see " + contents_phrase(idx) + ".";
  }
  if (action.rfind("close ", 0) == 0) {
    const int idx = receptacle_index(action.substr(6));
    receptacles_[idx].open = false;
    return "You close the " + receptacles_[idx].name + ".";
  }
  if (action.rfind("take ", 0) == 0) {
    const auto from = action.find(" from ");
    const std::string obj = action.substr(5, from - 5);
    const int idx = receptacle_index(action.substr(from + 6));
    auto& objs = contents_[idx];
    objs.erase(std::find(objs.begin(), objs.end(), obj));
    holding_ = obj;
    return "You pick up the " + obj + " from the " + receptacles_[idx].name + ".";
  }
  if (action.rfind("put ", 0) == 0) {
    const auto inon = action.find(" in/on ");
    const std::string obj = action.substr(4, inon - 4);
    const int idx = receptacle_index(action.substr(inon + 7));
    contents_[idx].push_back(obj);
    std::sort(contents_[idx].begin(), contents_[idx].end());
    holding_.reset();
    return "You put the " + obj + " in/on the " + receptacles_[idx].name + ".";
  }
  throw EpisodeError("minihouse: inapplicable action " + action);
}

bool MiniHouseEnv::task_done() const {
  const int idx = receptacle_index(task_receptacle_);
  auto it = contents_.find(idx);
  if (it == contents_.end()) return false;
  for (const auto& obj : it->second)
    if (obj.rfind(task_object_ + " ", 0) == 0) return true;
  return false;
}

StepResult MiniHouseEnv::step(const std::string& label) {
  if (episode_.done) throw EpisodeError("minihouse: step on a done episode");
  const int idx = actions_.index_of_label(label);
  if (idx < 0) throw EpisodeError("minihouse: label not in current action set: " + label);
  const std::string action = actions_.actions[idx];

  episode_.step_index += 1;
  double reward = cfg_.step_cost;
  const std::string obs = apply(action);
  history_.emplace_back(action, obs);

  if (task_done()) {
    episode_.done = true;
    episode_.success = true;
    reward += cfg_.success_bonus;
  } else if (episode_.step_index >= cfg_.horizon) {
    episode_.done = true;
    episode_.success = false;
  }
  episode_.reward_so_far += reward;
  refresh_view();
  return {prompt_, actions_, reward, episode_.done};
}

void MiniHouseEnv::refresh_view() {
  PromptView view;
  view.task = "put a " + task_object_ + " in " +
              task_receptacle_.substr(0, task_receptacle_.find(' '));
  view.observation = initial_observation_;
  view.history = history_;
  if (!history_.empty()) view.last_result = history_.back().second;

  const int start = std::max(0, static_cast<int>(history_.size()) - cfg_.history_max);
  auto render = [&](int drop) {
    std::string text = initial_observation_ + "\n";
    text += "Your task is to: " + view.task + ".\n";
    const std::size_t begin = static_cast<std::size_t>(start + drop);
    if (begin < history_.size()) {
      text += "Here is the previous path:\n";
      for (std::size_t i = begin; i < history_.size(); ++i) {
        text += "--- Step: " + std::to_string(i) + " ---\n";
        text += "Action: " + history_[i].first + "\n";
        text += "Observation: " + history_[i].second + "\n";
      }
    }
    return text;
  };
  view.text = render_with_budget(cfg_.prompt_budget,
                                 static_cast<int>(history_.size()) - start, render);
  prompt_ = std::move(view);
  actions_ = episode_.done ? EnumeratedActions{}
                           : enumerate_actions(applicable_actions());
}

PromptView MiniHouseEnv::render_prompt() const { return prompt_; }

std::unique_ptr<TextEnv> MiniHouseEnv::clone() const {
  return std::make_unique<MiniHouseEnv>(*this);
}

std::vector<std::string> MiniHouseEnv::object_multiset() const {
  std::vector<std::string> all;
  for (const auto& [idx, objs] : contents_)
    all.insert(all.end(), objs.begin(), objs.end());
  if (holding_) all.push_back(*holding_);
  std::sort(all.begin(), all.end());
  return all;
}

std::optional<std::string> MiniHouseEnv::optimal_action() const {
  if (episode_.done) return std::nullopt;
  // Canonical plan: go to the source, open it, take the object, go to the
  // target, open it, put the object.
  const int dst = receptacle_index(task_receptacle_);
  if (holding_ && holding_->rfind(task_object_ + " ", 0) == 0) {
    if (agent_at_ != dst) return "go to " + task_receptacle_;
    const auto& r = receptacles_[dst];
    if (r.openable && !r.open) return "open " + r.name;
    return "put " + *holding_ + " in/on " + r.name;
  }
  // Locate an instance of the task object.
  int src = -1;
  std::string instance;
  for (const auto& [idx, objs] : contents_) {
    for (const auto& obj : objs) {
      if (obj.rfind(task_object_ + " ", 0) == 0) {
        src = idx;
        instance = obj;
        break;
      }
    }
    if (src >= 0) break;
  }
  if (src < 0) return std::nullopt;
  if (agent_at_ != src) return "go to " + receptacles_[src].name;
  const auto& r = receptacles_[src];
  if (r.openable && !r.open) return "open " + r.name;
  if (holding_) return "put " + *holding_ + " in/on " + r.name;  // free the hand
  return "take " + instance + " from " + r.name;
}

std::string MiniHouseEnv::situation_text() const {
  if (holding_ && holding_->rfind(task_object_ + " ", 0) == 0)
    return "You are holding the " + *holding_ + " and the target is the " +
           task_receptacle_ + ".";
  for (const auto& [idx, objs] : contents_)
    for (const auto& obj : objs)
      if (obj.rfind(task_object_ + " ", 0) == 0)
        return "The " + obj + " is inside the " + receptacles_[idx].name + ".";
  return "The " + task_object_ + " is missing.";
}

std::string MiniHouseEnv::negative_reason(const std::string& last_action) const {
  return "The last action " + last_action +
         " does not bring the " + task_object_ + " closer to the " +
         task_receptacle_ + ".";
}

}  // namespace textrl::envs
