#include "qhowe/report.hpp"

namespace qhowe {

std::string status_str(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skip: return "skip";
        case Status::Info: return "info";
    }
    return "?";
}

int Report::count(Status s) const {
    int n = 0;
    for (const auto& it : items)
        if (it.status == s) ++n;
    return n;
}

void Report::merge(const Report& other) {
    for (const auto& it : other.items) items.push_back(it);
}

ReportItem pass_item(std::string name) { return ReportItem{std::move(name), Status::Pass, {}, {}}; }

ReportItem fail_item(std::string name, Witness w) {
    return ReportItem{std::move(name), Status::Fail, std::move(w), {}};
}

} // namespace qhowe
