#include "orbhodge/report.hpp"

#include <algorithm>

namespace orbhodge {

const char *to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::caveat: return "caveat";
    }
    return "?";
}

void Report::pass(std::string check_id, std::string witness) {
    items_.push_back({std::move(check_id), Status::pass, std::move(witness)});
}

void Report::fail(std::string check_id, std::string witness) {
    items_.push_back({std::move(check_id), Status::fail, std::move(witness)});
}

void Report::caveat(std::string check_id, std::string witness) {
    items_.push_back({std::move(check_id), Status::caveat, std::move(witness)});
}

void Report::merge(const Report &other, const std::string &prefix) {
    for (const auto &f : other.items_) items_.push_back({prefix + f.check_id, f.status, f.witness});
}

std::vector<Finding> Report::failures() const {
    std::vector<Finding> out;
    std::copy_if(items_.begin(), items_.end(), std::back_inserter(out),
                 [](const Finding &f) { return f.status == Status::fail; });
    return out;
}

bool Report::passed() const {
    return std::none_of(items_.begin(), items_.end(), [](const Finding &f) { return f.status == Status::fail; });
}

bool Report::has_caveat() const {
    return std::any_of(items_.begin(), items_.end(), [](const Finding &f) { return f.status == Status::caveat; });
}

bool Report::failed(const std::string &check_id) const {
    return std::any_of(items_.begin(), items_.end(),
                       [&](const Finding &f) { return f.status == Status::fail && f.check_id == check_id; });
}

} // namespace orbhodge
