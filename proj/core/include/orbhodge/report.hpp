#pragma once

#include <string>
#include <vector>

namespace orbhodge {

enum class Status { pass, fail, caveat };

const char *to_string(Status s);

/// One executed check. `witness` is a short deterministic description of the
/// evidence (a degree, a minor index, a sector id, a lattice point).
struct Finding {
    std::string check_id;
    Status status = Status::pass;
    std::string witness;
};

/// Outcome of a verification. Axiom violations are findings, not exceptions.
class Report {
public:
    void pass(std::string check_id, std::string witness = {});
    void fail(std::string check_id, std::string witness = {});
    void caveat(std::string check_id, std::string witness = {});
    void add(Finding f) { items_.push_back(std::move(f)); }
    /// Appends all findings of `other`, prefixing their ids with `prefix`.
    void merge(const Report &other, const std::string &prefix = {});

    const std::vector<Finding> &items() const { return items_; }
    std::vector<Finding> failures() const;
    bool passed() const;
    bool has_caveat() const;
    /// True when some finding has this exact id and failed.
    bool failed(const std::string &check_id) const;

private:
    std::vector<Finding> items_;
};

} // namespace orbhodge
