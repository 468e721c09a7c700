#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhowe {

enum class Status { Pass, Fail, Skip, Info };

std::string status_str(Status s);

// Replayable failure data: which state, which operator pair, what residual.
struct Witness {
    std::string state;
    std::string generator;
    std::string residual;
    std::string target;
};

struct ReportItem {
    std::string name;
    Status status = Status::Pass;
    std::optional<Witness> witness;
    std::vector<std::pair<std::string, std::string>> values;
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<ReportItem> items;

    int count(Status s) const;
    // Info items are observational and never gate the outcome.
    bool ok() const { return count(Status::Fail) == 0; }
    void add(ReportItem item) { items.push_back(std::move(item)); }
    void merge(const Report& other);
};

ReportItem pass_item(std::string name);
ReportItem fail_item(std::string name, Witness w);

} // namespace qhowe
