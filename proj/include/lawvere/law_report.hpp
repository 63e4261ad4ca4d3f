#pragma once

// Report-style results for law checks: every validator in the library
// records (law, checked-count, violation-count, first witness) instead of
// throwing, so callers can print all failures at once.

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lawvere {

struct LawCheck {
    std::string law;
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::string witness;  // first violation, empty when none

    bool ok() const { return violations == 0; }
};

class LawReport {
public:
    /// Records one instance of `law`. The witness callback is only invoked
    /// for the first violation of that law.
    void record(std::string_view law, bool holds,
                const std::function<std::string()>& witness = {});

    /// Adds a law with zero instances checked (keeps ordering stable in output).
    void declare(std::string_view law);

    void merge(const LawReport& other, std::string_view prefix = {});

    bool ok() const;
    std::size_t violations() const;
    const std::vector<LawCheck>& checks() const { return checks_; }
    const LawCheck* find(std::string_view law) const;

    /// One line per law: "PASS law (n checked)" / "FAIL law: witness".
    std::string summary() const;

private:
    LawCheck& slot(std::string_view law);

    std::vector<LawCheck> checks_;
};

}  // namespace lawvere
