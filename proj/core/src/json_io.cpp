#include "mcs/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mcs {

namespace {

using nlohmann::json;

json scheduled_pairs(const std::vector<std::vector<std::uint8_t>>& x) {
  json pairs = json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < x[i].size(); ++k) {
      if (x[i][k]) pairs.push_back(json::array({i, k}));
    }
  }
  return pairs;
}

int parse_item_key(const std::string& key, int num_items,
                   const std::string& where) {
  std::size_t pos = 0;
  int item = -1;
  try {
    item = std::stoi(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != key.size() || item < 0 || item >= num_items) {
    throw ValidationError(where + ": key \"" + key +
                          "\" is not a valid item index");
  }
  return item;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j;
  j["num_items"] = inst.num_items;
  j["users"] = json::array();
  for (const User& u : inst.users) {
    json ju;
    ju["capability"] = u.capability;
    json costs = json::object();
    for (std::size_t t = 0; t < u.capability.size(); ++t) {
      costs[std::to_string(u.capability[t])] = u.costs[t];
    }
    ju["costs"] = std::move(costs);
    ju["budget"] = u.budget;
    j["users"].push_back(std::move(ju));
  }
  j["tasks"] = json::array();
  for (const Task& t : inst.tasks) {
    json jt;
    jt["requirement"] = t.requirement;
    jt["valuation"] = t.valuation;
    if (!t.item_valuations.empty()) {
      json vals = json::object();
      for (std::size_t s = 0; s < t.requirement.size(); ++s) {
        vals[std::to_string(t.requirement[s])] = t.item_valuations[s];
      }
      jt["item_valuations"] = std::move(vals);
    }
    j["tasks"].push_back(std::move(jt));
  }
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("instance JSON parse error: ") +
                          e.what());
  }

  Instance inst;
  try {
    inst.num_items = j.at("num_items").get<int>();
    int ui = 0;
    for (const json& ju : j.at("users")) {
      User u;
      u.capability = ju.at("capability").get<std::vector<int>>();
      const json& costs = ju.at("costs");
      u.costs.assign(u.capability.size(), 0.0);
      if (costs.size() != u.capability.size()) {
        throw ValidationError("user " + std::to_string(ui) +
                              ": costs must have exactly one entry per "
                              "capability item");
      }
      for (auto it = costs.begin(); it != costs.end(); ++it) {
        int item = parse_item_key(it.key(), inst.num_items,
                                  "user " + std::to_string(ui) + " costs");
        int idx = -1;
        for (std::size_t t = 0; t < u.capability.size(); ++t) {
          if (u.capability[t] == item) idx = static_cast<int>(t);
        }
        if (idx < 0) {
          throw ValidationError("user " + std::to_string(ui) +
                                ": cost given for item " +
                                std::to_string(item) +
                                " outside the capability set");
        }
        u.costs[static_cast<std::size_t>(idx)] = it.value().get<double>();
      }
      u.budget = ju.at("budget").get<double>();
      inst.users.push_back(std::move(u));
      ++ui;
    }
    int ti = 0;
    for (const json& jt : j.at("tasks")) {
      Task t;
      t.requirement = jt.at("requirement").get<std::vector<int>>();
      t.valuation = jt.at("valuation").get<double>();
      if (jt.contains("item_valuations")) {
        const json& vals = jt.at("item_valuations");
        t.item_valuations.assign(t.requirement.size(), 0.0);
        if (vals.size() != t.requirement.size()) {
          throw ValidationError("task " + std::to_string(ti) +
                                ": item_valuations must have exactly one "
                                "entry per required item");
        }
        for (auto it = vals.begin(); it != vals.end(); ++it) {
          int item =
              parse_item_key(it.key(), inst.num_items,
                             "task " + std::to_string(ti) +
                                 " item_valuations");
          int idx = -1;
          for (std::size_t s = 0; s < t.requirement.size(); ++s) {
            if (t.requirement[s] == item) idx = static_cast<int>(s);
          }
          if (idx < 0) {
            throw ValidationError("task " + std::to_string(ti) +
                                  ": valuation given for item " +
                                  std::to_string(item) +
                                  " outside the requirement set");
          }
          t.item_valuations[static_cast<std::size_t>(idx)] =
              it.value().get<double>();
        }
      }
      inst.tasks.push_back(std::move(t));
      ++ti;
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("instance JSON field error: ") +
                          e.what());
  }

  require_valid(inst);
  return inst;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return instance_from_json(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void save_instance_file(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write instance file: " + path);
  out << instance_to_json(inst);
}

std::string outcome_to_json(const AuctionOutcome& outcome) {
  json j;
  j["welfare"] = outcome.welfare;
  j["payments"] = outcome.payments;
  j["rewards"] = outcome.rewards;
  j["platform_budget"] = outcome.platform_budget;
  j["participants"] = outcome.participants;
  j["x"] = scheduled_pairs(outcome.assignment.x);
  j["z"] = outcome.assignment.z;
  return j.dump(2) + "\n";
}

std::string assignment_to_json(const Instance& inst, const Assignment& a) {
  json j;
  j["welfare"] = social_welfare(inst, a);
  j["x"] = scheduled_pairs(a.x);
  j["y"] = a.y;
  j["z"] = a.z;
  return j.dump(2) + "\n";
}

std::string decomposition_to_json(const Decomposition& dec) {
  json j;
  j["alpha"] = dec.alpha;
  j["beta"] = dec.beta;
  j["support"] = json::array();
  for (std::size_t l = 0; l < dec.allocations.size(); ++l) {
    json entry;
    entry["lambda"] = dec.weights[l];
    entry["x"] = scheduled_pairs(dec.allocations[l].x);
    entry["z"] = dec.allocations[l].z;
    j["support"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

}  // namespace mcs
