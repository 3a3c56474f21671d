#include "mcs/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mcs {

int User::capability_index(int item) const {
  auto it = std::lower_bound(capability.begin(), capability.end(), item);
  if (it == capability.end() || *it != item) return -1;
  return static_cast<int>(it - capability.begin());
}

double User::cost_of(int item) const {
  int idx = capability_index(item);
  if (idx < 0) {
    throw ValidationError("cost requested for item " + std::to_string(item) +
                          " outside the capability set");
  }
  return costs[static_cast<std::size_t>(idx)];
}

int Instance::num_pairs() const {
  int n = 0;
  for (const User& u : users) n += static_cast<int>(u.capability.size());
  return n;
}

namespace {

bool sorted_unique_in_range(const std::vector<int>& ids, int limit) {
  for (std::size_t t = 0; t < ids.size(); ++t) {
    if (ids[t] < 0 || ids[t] >= limit) return false;
    if (t > 0 && ids[t] <= ids[t - 1]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.num_items < 0) out.push_back("num_items is negative");
  for (int i = 0; i < inst.num_users(); ++i) {
    const User& u = inst.users[static_cast<std::size_t>(i)];
    std::string who = "user " + std::to_string(i);
    if (!sorted_unique_in_range(u.capability, inst.num_items)) {
      out.push_back(who + ": capability must be sorted, duplicate-free item "
                          "indices in [0, num_items)");
    }
    if (u.costs.size() != u.capability.size()) {
      out.push_back(who + ": costs must have one entry per capability item");
    } else {
      for (std::size_t t = 0; t < u.costs.size(); ++t) {
        if (!(u.costs[t] >= 0.0) || !std::isfinite(u.costs[t])) {
          out.push_back(who + ": cost for item " +
                        std::to_string(u.capability[t]) +
                        " must be finite and nonnegative");
        }
      }
    }
    if (!(u.budget >= 0.0) || !std::isfinite(u.budget)) {
      out.push_back(who + ": budget must be finite and nonnegative");
    }
  }
  for (int j = 0; j < inst.num_tasks(); ++j) {
    const Task& t = inst.tasks[static_cast<std::size_t>(j)];
    std::string who = "task " + std::to_string(j);
    if (t.requirement.empty()) out.push_back(who + ": requirement is empty");
    if (!sorted_unique_in_range(t.requirement, inst.num_items)) {
      out.push_back(who + ": requirement must be sorted, duplicate-free item "
                          "indices in [0, num_items)");
    }
    if (!(t.valuation > 0.0) || !std::isfinite(t.valuation)) {
      out.push_back(who + ": valuation must be finite and positive");
    }
    if (!t.item_valuations.empty()) {
      if (t.item_valuations.size() != t.requirement.size()) {
        out.push_back(who + ": item_valuations must have one entry per "
                            "required item");
      } else {
        double sum = 0.0;
        for (double v : t.item_valuations) sum += v;
        if (std::abs(sum - t.valuation) > kEps) {
          out.push_back(who + ": item_valuations sum to " +
                        std::to_string(sum) + ", expected the task valuation");
        }
      }
    }
  }
  return out;
}

void require_valid(const Instance& inst) {
  std::vector<std::string> problems = validate_instance(inst);
  if (problems.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const std::string& p : problems) msg << "\n  - " << p;
  throw ValidationError(msg.str());
}

std::vector<std::vector<int>> item_sensers(const Instance& inst) {
  std::vector<std::vector<int>> sensers(
      static_cast<std::size_t>(inst.num_items));
  for (int i = 0; i < inst.num_users(); ++i) {
    for (int k : inst.users[static_cast<std::size_t>(i)].capability) {
      sensers[static_cast<std::size_t>(k)].push_back(i);
    }
  }
  return sensers;
}

namespace {

void check_shape(const Instance& inst, const Assignment& a) {
  bool ok = a.x.size() == inst.users.size() &&
            a.y.size() == static_cast<std::size_t>(inst.num_items) &&
            a.z.size() == inst.tasks.size();
  if (ok) {
    for (const auto& row : a.x) {
      if (row.size() != static_cast<std::size_t>(inst.num_items)) ok = false;
    }
  }
  if (!ok) {
    throw ValidationError("assignment dimensions do not match the instance");
  }
}

}  // namespace

double social_welfare(const Instance& inst, const Assignment& a) {
  check_shape(inst, a);
  double value = 0.0;
  for (int j = 0; j < inst.num_tasks(); ++j) {
    if (a.z[static_cast<std::size_t>(j)]) {
      value += inst.tasks[static_cast<std::size_t>(j)].valuation;
    }
  }
  double cost = 0.0;
  for (int i = 0; i < inst.num_users(); ++i) {
    const User& u = inst.users[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < u.capability.size(); ++t) {
      if (a.x[static_cast<std::size_t>(i)]
             [static_cast<std::size_t>(u.capability[t])]) {
        cost += u.costs[t];
      }
    }
  }
  return value - cost;
}

Assignment derive_yz(const Instance& inst,
                     const std::vector<std::vector<std::uint8_t>>& x) {
  if (x.size() != inst.users.size()) {
    throw ValidationError("scheduling matrix has wrong number of users");
  }
  for (int i = 0; i < inst.num_users(); ++i) {
    const auto& row = x[static_cast<std::size_t>(i)];
    if (row.size() != static_cast<std::size_t>(inst.num_items)) {
      throw ValidationError("scheduling matrix has wrong number of items");
    }
    const User& u = inst.users[static_cast<std::size_t>(i)];
    double spent = 0.0;
    for (int k = 0; k < inst.num_items; ++k) {
      if (!row[static_cast<std::size_t>(k)]) continue;
      int idx = u.capability_index(k);
      if (idx < 0) {
        throw ValidationError("user " + std::to_string(i) +
                              " scheduled outside capability at item " +
                              std::to_string(k));
      }
      spent += u.costs[static_cast<std::size_t>(idx)];
    }
    if (spent > u.budget + kEps) {
      throw InfeasibleError("user " + std::to_string(i) +
                            " budget exceeded: scheduled cost " +
                            std::to_string(spent) + " > budget " +
                            std::to_string(u.budget));
    }
  }

  Assignment a;
  a.x = x;
  a.y.assign(static_cast<std::size_t>(inst.num_items), 0);
  for (int i = 0; i < inst.num_users(); ++i) {
    for (int k = 0; k < inst.num_items; ++k) {
      if (x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
        a.y[static_cast<std::size_t>(k)] = 1;
      }
    }
  }
  a.z.assign(inst.tasks.size(), 0);
  for (int j = 0; j < inst.num_tasks(); ++j) {
    const Task& t = inst.tasks[static_cast<std::size_t>(j)];
    bool complete = true;
    for (int k : t.requirement) {
      if (!a.y[static_cast<std::size_t>(k)]) {
        complete = false;
        break;
      }
    }
    a.z[static_cast<std::size_t>(j)] = complete ? 1 : 0;
  }
  return a;
}

std::vector<Violation> validate(const Instance& inst, const Assignment& a) {
  std::vector<Violation> out;
  bool shape_ok = a.x.size() == inst.users.size() &&
                  a.y.size() == static_cast<std::size_t>(inst.num_items) &&
                  a.z.size() == inst.tasks.size();
  for (const auto& row : a.x) {
    if (row.size() != static_cast<std::size_t>(inst.num_items)) {
      shape_ok = false;
    }
  }
  if (!shape_ok) {
    out.push_back({Violation::Kind::kShape, -1,
                   "assignment dimensions do not match the instance"});
    return out;
  }

  for (int i = 0; i < inst.num_users(); ++i) {
    const User& u = inst.users[static_cast<std::size_t>(i)];
    double spent = 0.0;
    for (int k = 0; k < inst.num_items; ++k) {
      if (!a.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
        continue;
      }
      int idx = u.capability_index(k);
      if (idx < 0) {
        out.push_back({Violation::Kind::kCapability, i,
                       "user " + std::to_string(i) +
                           " schedules item " + std::to_string(k) +
                           " outside its capability set"});
      } else {
        spent += u.costs[static_cast<std::size_t>(idx)];
      }
    }
    if (spent > u.budget + kEps) {
      out.push_back({Violation::Kind::kBudget, i,
                     "user " + std::to_string(i) + " scheduled cost " +
                         std::to_string(spent) + " exceeds budget " +
                         std::to_string(u.budget)});
    }
  }

  for (int k = 0; k < inst.num_items; ++k) {
    std::uint8_t sensed = 0;
    for (int i = 0; i < inst.num_users(); ++i) {
      if (a.x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
        sensed = 1;
        break;
      }
    }
    if (a.y[static_cast<std::size_t>(k)] != sensed) {
      out.push_back({Violation::Kind::kItemCoverage, k,
                     "item " + std::to_string(k) + " has y=" +
                         std::to_string(a.y[static_cast<std::size_t>(k)]) +
                         " but its scheduled-senser indicator is " +
                         std::to_string(sensed)});
    }
  }

  for (int j = 0; j < inst.num_tasks(); ++j) {
    const Task& t = inst.tasks[static_cast<std::size_t>(j)];
    std::uint8_t complete = 1;
    for (int k : t.requirement) {
      if (!a.y[static_cast<std::size_t>(k)]) {
        complete = 0;
        break;
      }
    }
    if (a.z[static_cast<std::size_t>(j)] != complete) {
      out.push_back({Violation::Kind::kTaskCompletion, j,
                     "task " + std::to_string(j) + " has z=" +
                         std::to_string(a.z[static_cast<std::size_t>(j)]) +
                         " but its item coverage implies " +
                         std::to_string(complete)});
    }
  }
  return out;
}

Instance remove_user(const Instance& inst, int user) {
  if (user < 0 || user >= inst.num_users()) {
    throw ValidationError("unknown user id " + std::to_string(user));
  }
  Instance out = inst;
  out.users.erase(out.users.begin() + user);
  return out;
}

Instance remove_task(const Instance& inst, int task) {
  if (task < 0 || task >= inst.num_tasks()) {
    throw ValidationError("unknown task id " + std::to_string(task));
  }
  Instance out = inst;
  out.tasks.erase(out.tasks.begin() + task);
  return out;
}

Instance keep_tasks(const Instance& inst, const std::vector<int>& task_ids) {
  Instance out;
  out.num_items = inst.num_items;
  out.users = inst.users;
  out.tasks.reserve(task_ids.size());
  for (int j : task_ids) {
    if (j < 0 || j >= inst.num_tasks()) {
      throw ValidationError("unknown task id " + std::to_string(j));
    }
    out.tasks.push_back(inst.tasks[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace mcs
