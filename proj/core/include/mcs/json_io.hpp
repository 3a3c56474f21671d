#pragma once

#include <string>

#include "mcs/model.hpp"
#include "mcs/randomized.hpp"
#include "mcs/vcg.hpp"

namespace mcs {

/// Instance JSON: {"num_items": K, "users": [{"capability": [...],
/// "costs": {"k": c, ...}, "budget": C}, ...], "tasks": [{"requirement":
/// [...], "valuation": v, "item_valuations": {"k": v, ...}?}, ...]} with
/// cost/valuation keys as decimal item indices. This is the contract for
/// every CLI command.
std::string instance_to_json(const Instance& inst);

/// Parses and validates an instance; throws ValidationError naming the
/// offending field (or parse position) on malformed input.
Instance instance_from_json(const std::string& text);

Instance load_instance_file(const std::string& path);
void save_instance_file(const Instance& inst, const std::string& path);

/// Outcome JSON: {"welfare": w, "payments": [...], "rewards": [...],
/// "platform_budget": b, "participants": [...], "x": [[i,k], ...],
/// "z": [...]}.
std::string outcome_to_json(const AuctionOutcome& outcome);

/// Solution JSON for the plain solver: {"welfare": w, "x": [[i,k], ...],
/// "y": [...], "z": [...]}.
std::string assignment_to_json(const Instance& inst, const Assignment& a);

/// Decomposition JSON: {"alpha": a, "beta": b, "support": [{"lambda": l,
/// "x": [[i,k], ...], "z": [...]}, ...]}.
std::string decomposition_to_json(const Decomposition& dec);

}  // namespace mcs
