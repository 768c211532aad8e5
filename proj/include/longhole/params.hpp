#ifndef LONGHOLE_PARAMS_HPP
#define LONGHOLE_PARAMS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace longhole {

/// Detection parameters for a fixed target length ell >= 5.
/// The derived caps are recomputed on every call so they can never go stale.
struct EllParams {
    int ell;

    explicit EllParams(int ell_) : ell(ell_) {
        if (ell < 5) throw std::invalid_argument("ell must be at least 5");
    }

    int jewel_order_cap() const { return ell + 2; }
    int short_hole_cap() const { return 2 * ell + 2; }
    int catch_cost_cap() const { return 16 * ell + 28; }
    int base_arm() const { return 2 * ell; }
};

/// Labels for guess-node expansion counters; one slot per enumeration site.
enum class Stage : int {
    PathEnum = 0,
    CycleEnum,
    ShortHole,
    Jewel,
    Pyramid,
    LongHole,
    CleanTriple,
    ExhaustiveSubset,
    RPair,
    Family,
    Inconst0,
    StageCount_,
};

inline const char* stage_name(Stage s) {
    switch (s) {
        case Stage::PathEnum: return "path_enum";
        case Stage::CycleEnum: return "cycle_enum";
        case Stage::ShortHole: return "short_hole";
        case Stage::Jewel: return "jewel";
        case Stage::Pyramid: return "pyramid";
        case Stage::LongHole: return "long_hole";
        case Stage::CleanTriple: return "clean_triple";
        case Stage::ExhaustiveSubset: return "exhaustive_subset";
        case Stage::RPair: return "r_pair";
        case Stage::Family: return "family";
        case Stage::Inconst0: return "inconst0";
        default: return "unknown";
    }
}

struct BudgetReport {
    std::uint64_t used = 0;
    std::uint64_t limit = 0;
    bool exceeded = false;
    std::map<std::string, std::uint64_t> stages;
};

struct BudgetExceeded;

/// Monotone expansion counter charged at every enumeration loop head.
/// Exceeding the limit raises BudgetExceeded; a silent "none" would be unsound.
class Budget {
public:
    static constexpr std::uint64_t kDefaultLimit = 100'000'000;

    explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

    void charge(Stage s, std::uint64_t amount = 1);

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

    BudgetReport report() const {
        BudgetReport r;
        r.used = used_;
        r.limit = limit_;
        r.exceeded = used_ > limit_;
        for (int i = 0; i < static_cast<int>(Stage::StageCount_); ++i)
            if (by_stage_[static_cast<std::size_t>(i)])
                r.stages[stage_name(static_cast<Stage>(i))] = by_stage_[static_cast<std::size_t>(i)];
        return r;
    }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::array<std::uint64_t, static_cast<std::size_t>(Stage::StageCount_)> by_stage_{};
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(BudgetReport r)
        : std::runtime_error("enumeration budget exceeded"), report(std::move(r)) {}
    BudgetReport report;
};

inline void Budget::charge(Stage s, std::uint64_t amount) {
    used_ += amount;
    by_stage_[static_cast<std::size_t>(s)] += amount;
    if (used_ > limit_) throw BudgetExceeded(report());
}

/// Detectors take Budget* and treat nullptr as unlimited.
inline void charge(Budget* b, Stage s, std::uint64_t amount = 1) {
    if (b) b->charge(s, amount);
}

}  // namespace longhole

#endif
