#include "lawvere/law_report.hpp"

#include <sstream>

namespace lawvere {

LawCheck& LawReport::slot(std::string_view law) {
    for (auto& c : checks_) {
        if (c.law == law) return c;
    }
    checks_.push_back(LawCheck{std::string(law), 0, 0, {}});
    return checks_.back();
}

void LawReport::declare(std::string_view law) { slot(law); }

void LawReport::record(std::string_view law, bool holds,
                       const std::function<std::string()>& witness) {
    auto& c = slot(law);
    ++c.checked;
    if (!holds) {
        if (c.violations == 0 && witness) c.witness = witness();
        ++c.violations;
    }
}

void LawReport::merge(const LawReport& other, std::string_view prefix) {
    for (const auto& o : other.checks_) {
        std::string name = prefix.empty() ? o.law : std::string(prefix) + "/" + o.law;
        auto& c = slot(name);
        if (c.violations == 0 && o.violations > 0) c.witness = o.witness;
        c.checked += o.checked;
        c.violations += o.violations;
    }
}

bool LawReport::ok() const { return violations() == 0; }

std::size_t LawReport::violations() const {
    std::size_t n = 0;
    for (const auto& c : checks_) n += c.violations;
    return n;
}

const LawCheck* LawReport::find(std::string_view law) const {
    for (const auto& c : checks_) {
        if (c.law == law) return &c;
    }
    return nullptr;
}

std::string LawReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks_) {
        if (c.ok()) {
            os << "PASS " << c.law << " (" << c.checked << " checked)\n";
        } else {
            os << "FAIL " << c.law << " (" << c.violations << "/" << c.checked
               << " violated): " << c.witness << "\n";
        }
    }
    return os.str();
}

}  // namespace lawvere
