#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcs {

/// Comparison tolerance used wherever a real-valued equality or inequality
/// is tested. One shared constant keeps every module consistent.
inline constexpr double kEps = 1e-9;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a structurally invalid instance, assignment, or file.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A requested computation is inconsistent with the instance (e.g. a
/// scheduling vector that violates a user budget).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An instance exceeds a hard size cap of an enumeration-based routine.
class CapError : public Error {
 public:
  using Error::Error;
};

/// A mobile user: the set of data items it can sense, the per-item sensing
/// cost, and the total sensing budget. `costs` is aligned with `capability`
/// (which is kept sorted and duplicate-free); items outside the capability
/// set are never schedulable.
struct User {
  std::vector<int> capability;
  std::vector<double> costs;
  double budget = 0.0;

  /// Position of `item` within `capability`, or -1 when the user cannot
  /// sense it.
  int capability_index(int item) const;

  /// Sensing cost for an item in the capability set; throws otherwise.
  double cost_of(int item) const;
};

/// A sensing task: the set of data items it requires and its valuation.
/// `item_valuations`, when non-empty, is aligned with `requirement` and
/// sums to `valuation`.
struct Task {
  std::vector<int> requirement;
  double valuation = 0.0;
  std::vector<double> item_valuations;
};

/// One market: K target data items, the users able to sense them, and the
/// tasks that want them. Immutable after construction; all operations on
/// instances are pure functions.
struct Instance {
  int num_items = 0;
  std::vector<User> users;
  std::vector<Task> tasks;

  int num_users() const { return static_cast<int>(users.size()); }
  int num_tasks() const { return static_cast<int>(tasks.size()); }

  /// Total number of schedulable (user, item) pairs.
  int num_pairs() const;
};

/// Reported (bid) information of all participants. Structurally identical
/// to an instance: a bid profile is the market rebuilt from reports.
using BidProfile = Instance;

/// Binary scheduling decision: x[i][k] says user i senses item k (always 0
/// outside the capability set), y[k] says item k is sensed by someone, and
/// z[j] says task j is completed.
struct Assignment {
  std::vector<std::vector<std::uint8_t>> x;
  std::vector<std::uint8_t> y;
  std::vector<std::uint8_t> z;
};

/// Relaxation of Assignment with entries in [0, 1].
struct FractionalAssignment {
  std::vector<std::vector<double>> x;
  std::vector<double> y;
  std::vector<double> z;
};

/// Checks the structural invariants of an instance (sorted duplicate-free
/// index sets, indices in range, nonnegative costs and budgets, positive
/// valuations, per-item valuations summing to the task valuation). Returns
/// one message per violation; empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

/// Throws ValidationError listing every violation of `validate_instance`.
void require_valid(const Instance& inst);

/// For every item k, the users able to sense it (ascending user ids).
std::vector<std::vector<int>> item_sensers(const Instance& inst);

/// Total valuation of completed tasks minus total sensing cost of the
/// scheduled users. Throws ValidationError if the assignment shape does not
/// match the instance.
double social_welfare(const Instance& inst, const Assignment& a);

/// Completes a scheduling matrix into a full assignment: an item is sensed
/// when at least one user senses it, and a task completes when all of its
/// required items are sensed. Throws InfeasibleError if `x` violates a user
/// budget, and ValidationError if `x` schedules outside a capability set.
Assignment derive_yz(const Instance& inst,
                     const std::vector<std::vector<std::uint8_t>>& x);

/// One violated assignment invariant.
struct Violation {
  enum class Kind {
    kShape,           // assignment dimensions do not match the instance
    kCapability,      // x schedules an item outside the user's capability
    kBudget,          // scheduled sensing cost exceeds the user budget
    kItemCoverage,    // y[k] inconsistent with the schedulers of item k
    kTaskCompletion,  // z[j] inconsistent with the coverage of its items
  };
  Kind kind;
  int index;
  std::string detail;
};

/// Reports every violated assignment invariant (budget, item-coverage
/// consistency, task-completion consistency) with the offending index.
/// An empty result means the assignment is consistent.
std::vector<Violation> validate(const Instance& inst, const Assignment& a);

/// Market with one user removed (remaining users keep their order).
Instance remove_user(const Instance& inst, int user);

/// Market with one task removed (remaining tasks keep their order).
Instance remove_task(const Instance& inst, int task);

/// Market restricted to the given tasks, in the given order.
Instance keep_tasks(const Instance& inst, const std::vector<int>& task_ids);

}  // namespace mcs
