#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rostering {

inline constexpr int kSlotsPerWeek = 14;  // 1-7 days Mon-Sun, 8-14 nights Mon-Sun
inline constexpr int kDaysPerWeek = 7;

/// One weekly work pattern: a 14-slot on/off vector. Slot p (1-based) maps to
/// bit (14 - p), so numeric order of the mask equals lexicographic order of
/// the cover string.
class ShiftPattern {
public:
    ShiftPattern() = default;

    static ShiftPattern from_cover_string(const std::string& cover);
    static ShiftPattern from_bits(std::uint16_t bits);

    bool covers(int slot) const { return (bits_ >> (kSlotsPerWeek - slot)) & 1u; }
    int shift_count() const;
    bool pure_day() const;    // all worked slots in 1..7
    bool pure_night() const;  // all worked slots in 8..14
    std::string cover_string() const;
    std::uint16_t bits() const { return bits_; }

    auto operator<=>(const ShiftPattern&) const = default;

private:
    std::uint16_t bits_ = 0;
};

struct PatternOption {
    ShiftPattern pattern;
    int cost = 0;  // preference cost, 0 (perfect) .. 100 (unacceptable)

    bool operator==(const PatternOption&) const = default;
};

struct NurseSpec {
    int id = 0;     // 1..n
    int grade = 1;  // 1 = highest band
    std::vector<PatternOption> patterns;  // canonical: sorted by cover string, no duplicates

    bool operator==(const NurseSpec&) const = default;
};

/// 14 x g integer table indexed by (slot 1..14, grade 1..g).
class GradeTable {
public:
    GradeTable() = default;
    explicit GradeTable(int num_grades, int fill = 0)
        : num_grades_(num_grades), cells_(kSlotsPerWeek * num_grades, fill) {}

    int num_grades() const { return num_grades_; }
    int at(int slot, int grade) const { return cells_[(slot - 1) * num_grades_ + (grade - 1)]; }
    int& at(int slot, int grade) { return cells_[(slot - 1) * num_grades_ + (grade - 1)]; }
    long long sum() const;

    bool operator==(const GradeTable&) const = default;

private:
    int num_grades_ = 0;
    std::vector<int> cells_;
};

struct Instance {
    int num_grades = 1;
    GradeTable demand;             // R[slot][grade]
    std::vector<NurseSpec> nurses; // sorted by id, ids are exactly 1..n

    int num_nurses() const { return static_cast<int>(nurses.size()); }

    /// Grade-s-or-higher qualification: a nurse counts towards grade s
    /// coverage iff its band is s or above (numerically <= s).
    bool qualifies(int nurse_index, int grade) const {
        return nurses[nurse_index].grade <= grade;
    }

    void validate() const;  // throws std::runtime_error naming the offending field

    bool operator==(const Instance&) const = default;
};

/// All C(7,days) pure-day patterns plus all C(7,nights) pure-night patterns,
/// sorted lexicographically by cover string. days == nights == 0 is an error.
std::vector<ShiftPattern> enumerate_patterns(int days, int nights);

/// Parse and validate an instance from its JSON form. Nurses and patterns are
/// brought into canonical order; invalid data is rejected, never repaired.
Instance load_instance(const std::string& bytes);
Instance load_instance_file(const std::string& path);

/// Canonical serialization: fixed field order, nurses sorted by id, patterns
/// sorted by cover string. Equal instances serialize identically.
std::string save_instance(const Instance& instance);
void save_instance_file(const Instance& instance, const std::string& path);

/// FNV-1a 64 over the canonical serialization, as fixed-width hex.
std::string instance_hash(const Instance& instance);

}  // namespace rostering
